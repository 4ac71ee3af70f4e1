#pragma once
// Bender-Knuth style involutions on patterns and tableaux: the classical
// type A toggle, the four-step composite with renormalization used for the
// symplectic (King) case, and its orthogonal extension that carries circles
// along.

#include "bktab/combinatorics.hpp"

namespace bktab {

// Replaces each entry of row j (1 <= j < N) by
//   min{p(i,j+1), p(i-1,j-1)} + max{p(i+1,j+1), p(i,j-1)} - p(i,j),
// where arguments that fall outside the triangle are simply omitted. Only
// row j changes. Throws on invalid patterns or j out of range.
GTPattern bk_a_pattern(const GTPattern& p, int j);

// The tableau counterpart: cells of a vertical (j, j+1)-domino are frozen;
// in every row the remaining j^a (j+1)^b block becomes j^b (j+1)^a. Valid
// for ssyt (1 <= j < n) and king (1 <= j < 2n) tableaux.
Tableau bk_a_tableau(const Tableau& t, int j);

// Renormalization step: requires every forced-zero cell except possibly
// (j+1, 2j) to vanish, then subtracts v = p(j+1, 2j) from the four entries
// (j+1,2j), (j+1,2j+1), (j,2j), (j,2j-1). Returns a valid King pattern.
KingPattern rect_pattern(const GTPattern& p, int j);

// Intermediate states of the symplectic toggle, for inspection.
struct BkCTrace {
    GTPattern step1;   // after the toggle on row 2j
    GTPattern step2;   // after the toggle on row 2j-1
    GTPattern step3;   // after the toggle on row 2j+1
    GTPattern step4;   // after the second toggle on row 2j
    int subtracted = 0;  // value removed by the renormalization
    KingPattern result;
};

// Symplectic toggle on King patterns (1 <= j <= n-1): toggles on rows 2j,
// 2j-1, 2j+1, 2j followed by rect_pattern. Changes nothing outside rows
// 2j-1, 2j, 2j+1 (checked on every application).
KingPattern bk_c_pattern(const KingPattern& p, int j);
BkCTrace bk_c_pattern_traced(const KingPattern& p, int j);

// The extra generator inverting the first weight coordinate: the type A
// toggle on row 1, which preserves the King support.
KingPattern bk_first_pattern(const KingPattern& p);

// Symplectic toggle on King tableaux: type A toggles on letter indices 2j,
// 2j-1, 2j+1, 2j, then every vertical domino with letters {j, j'} between
// tableau rows j and j+1 is relabeled to {j+1, (j+1)'} and the two rows are
// re-sorted.
Tableau bk_c_tableau(const Tableau& t, int j);

// Orthogonal toggle: j = 0 applies bk_first_pattern, j >= 1 applies
// bk_c_pattern, in both cases on the underlying King pattern with the
// circles restored afterwards (a structural error if that were ever
// incompatible with the new top row).
OrthogonalPattern bk_b(const OrthogonalPattern& p, int j);

}  // namespace bktab
