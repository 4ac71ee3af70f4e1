#pragma once
// Weight-preserving conversions between tableaux and patterns: the classic
// counting bijection for ssyt and (via the letter encoding) king tableaux,
// and the ∞-stripping correspondence for orthogonal objects.

#include "bktab/combinatorics.hpp"

#include <set>
#include <utility>

namespace bktab {

// Row k of the result records, for each tableau row i, how many letters of
// that row are among the first k alphabet letters. Accepts ssyt (m = n) and
// king (m = 2n) tableaux; throws std::invalid_argument on orthogonal kind or
// non-semistandard input.
GTPattern tableau_to_pattern(const Tableau& t);

// Inverse of tableau_to_pattern for ssyt: row i reads letter k on columns
// p(i,k-1)+1 .. p(i,k). Throws std::invalid_argument on invalid patterns.
Tableau pattern_to_tableau(const GTPattern& p);

// The same pair of maps with king tableaux on the tableau side.
KingPattern king_tableau_to_pattern(const Tableau& t);
Tableau king_pattern_to_tableau(const KingPattern& p);

// Splits an orthogonal tableau into its King co-restriction (the ∞ cells
// removed) and the set of rows that carried an ∞.
std::pair<Tableau, std::set<int>> sot_corestrict(const Tableau& t);

// Inverse: appends an ∞ to each row where shape exceeds t's shape by one
// cell. Requires a King symplectic t and shape_i - μ_i ∈ {0,1} for all i.
Tableau sot_extend(const Tableau& t, const Partition& shape);

// Circle bookkeeping on the pattern side, mirroring the two maps above.
KingPattern sop_forget(const OrthogonalPattern& p);
OrthogonalPattern sop_mark(const KingPattern& p, const Partition& shape);

// End-to-end conversions for orthogonal objects.
OrthogonalPattern sundaram_tableau_to_pattern(const Tableau& t);
Tableau sundaram_pattern_to_tableau(const OrthogonalPattern& p);

}  // namespace bktab
