#pragma once
// Independent cross-checks for the combinatorial pipeline: symplectic and
// odd-orthogonal characters via alternant determinants, and exact-rational
// (subtraction-free) lifts of the pattern toggles.

#include "bktab/combinatorics.hpp"

#include <optional>
#include <random>
#include <vector>

namespace bktab {

using Rational = boost::multiprecision::cpp_rational;

// Symplectic character: det(x_j^{l_i+1} - x_j^{-(l_i+1)}) over the same
// determinant at shape 0, with l_i = shape_i + n - i. Computed by Leibniz
// expansion and exact division; intended for small n.
LaurentPolynomial character_c(int n, const Partition& shape);

// Odd orthogonal character: the analogous quotient of alternants in
// half-integer powers, computed in y = x^{1/2} and halved back. Every
// exponent of the quotient is even, or the computation aborts.
LaurentPolynomial character_b(int n, const Partition& shape);

// Triangular array of positive rationals laid out like a GTPattern (top row
// first) in which individual cells may be absent. Absent cells are simply
// skipped by the birational maps; this is how King-support arrays are
// represented without pinning values on the forced zeros.
class RationalPattern {
public:
    RationalPattern() = default;
    explicit RationalPattern(std::vector<std::vector<std::optional<Rational>>> rows);

    int row_count() const { return static_cast<int>(rows_.size()); }
    bool present(int i, int j) const;       // false outside the triangle too
    const Rational& at(int i, int j) const; // throws when absent
    void set(int i, int j, Rational v);     // v must be positive
    void clear(int i, int j);
    const std::vector<std::vector<std::optional<Rational>>>& rows() const { return rows_; }

    bool operator==(const RationalPattern&) const = default;

private:
    std::vector<std::vector<std::optional<Rational>>> rows_;
};

// Subtraction-free lift of the row toggle: every present cell of row j is
// replaced by
//   (x(i,j+1) + x(i-1,j-1)) / ((1/x(i+1,j+1) + 1/x(i,j-1)) * x(i,j)),
// where absent or out-of-triangle neighbours are dropped from the sums (an
// empty denominator sum counts as 1; an empty numerator is a domain error).
RationalPattern detrop_bk_a(const RationalPattern& x, int j);

// Lift of the symplectic toggle on King-support arrays (1 <= j <= n-1 for
// 2n rows): cell (j+1, 2j) is materialized with value 1, the four row
// toggles 2j, 2j-1, 2j+1, 2j are applied, and the quartet (j+1,2j),
// (j+1,2j+1), (j,2j), (j,2j-1) is divided by the value at (j+1,2j), which
// restores that cell to 1 before it is removed again.
RationalPattern detrop_bk_c(const RationalPattern& x, int j);

// Seeded random arrays with entries p/q, p,q uniform in [1,50]: a fully
// present triangle, and a King-support triangle with 2n rows.
RationalPattern random_full_pattern(int rows, std::mt19937_64& rng);
RationalPattern random_king_pattern(int n, std::mt19937_64& rng);

}  // namespace bktab
