#pragma once
// Streaming enumeration of the three pattern families for a fixed shape, the
// generating functions they define, and expansion of invariant Laurent
// polynomials in those bases.

#include "bktab/combinatorics.hpp"

#include <functional>
#include <map>
#include <vector>

namespace bktab {

// Each enumerator streams its family in a fixed deterministic order:
// patterns ascend lexicographically by their rows concatenated top row
// first; orthogonal patterns are grouped by circled set, subsets ordered as
// binary counters (bit i-1 <-> position i). The visitor is invoked once per
// element; nothing is retained.
void enum_gt(int n, const Partition& shape, const std::function<void(const GTPattern&)>& visit);
void enum_king(int n, const Partition& shape, const std::function<void(const KingPattern&)>& visit);
void enum_orthogonal(int n, const Partition& shape,
                     const std::function<void(const OrthogonalPattern&)>& visit);

// Generating functions: the sum of x^{weight} over the family. schur is a
// polynomial in n variables; the other two are Laurent polynomials in n
// variables.
LaurentPolynomial schur(int n, const Partition& shape);
LaurentPolynomial symplectic(int n, const Partition& shape);
LaurentPolynomial orthogonal(int n, const Partition& shape);

enum class BasisFamily { symplectic, orthogonal };

// Greedy expansion of f as an integer combination of family polynomials:
// repeatedly reads the lexicographic leading term, whose exponent must be a
// partition (each family polynomial attains its shape as unique leading
// exponent, with coefficient 1). Throws std::domain_error when a leading
// exponent is not a partition or when the iteration budget (number of terms
// of f, plus one) is exhausted — either way f is not in the integer span.
std::map<Partition, Int> basis_expand(const LaurentPolynomial& f, BasisFamily family, int n);

// All partitions with at most max_length parts and size at most max_size.
std::vector<Partition> partitions_up_to(int max_length, int max_size);

}  // namespace bktab
