#include "bktab/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace bktab {

namespace {

// det(x_j^{a_i} - x_j^{-a_i}) by Leibniz expansion; all a_i must be positive
// so no entry degenerates to zero.
LaurentPolynomial alternant(int n, const std::vector<int>& a) {
    LaurentPolynomial det(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                if (perm[i] > perm[k]) ++inversions;
        LaurentPolynomial term = LaurentPolynomial::constant(n, inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) {
            Monomial plus(n, 0), minus(n, 0);
            plus[perm[i]] = a[i];
            minus[perm[i]] = -a[i];
            term *= LaurentPolynomial::monomial(plus, 1) + LaurentPolynomial::monomial(minus, -1);
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

LaurentPolynomial character_c(int n, const Partition& shape) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    if (shape.length() > n) throw std::invalid_argument("shape has more parts than variables");
    if (n == 0) return LaurentPolynomial::constant(0, 1);
    std::vector<int> num(n), den(n);
    for (int i = 1; i <= n; ++i) {
        num[i - 1] = shape.part(i) + n - i + 1;
        den[i - 1] = n - i + 1;
    }
    return div_exact(alternant(n, num), alternant(n, den));
}

LaurentPolynomial character_b(int n, const Partition& shape) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    if (shape.length() > n) throw std::invalid_argument("shape has more parts than variables");
    if (n == 0) return LaurentPolynomial::constant(0, 1);
    // Work in y = x^{1/2}: the half-integer powers become odd integers.
    std::vector<int> num(n), den(n);
    for (int i = 1; i <= n; ++i) {
        num[i - 1] = 2 * (shape.part(i) + n - i) + 1;
        den[i - 1] = 2 * (n - i) + 1;
    }
    const LaurentPolynomial q = div_exact(alternant(n, num), alternant(n, den));
    LaurentPolynomial out(n);
    Monomial half(n);
    for (const auto& [exp, c] : q.terms()) {
        for (int k = 0; k < n; ++k) {
            if (exp[k] % 2 != 0)
                throw std::logic_error("orthogonal character quotient has an odd exponent");
            half[k] = exp[k] / 2;
        }
        out.add_term(half, c);
    }
    return out;
}

RationalPattern::RationalPattern(std::vector<std::vector<std::optional<Rational>>> rows)
    : rows_(std::move(rows)) {
    const int n = row_count();
    for (int k = 0; k < n; ++k) {
        if (static_cast<int>(rows_[k].size()) != n - k)
            throw std::invalid_argument("pattern rows must shrink by one from the top");
        for (const auto& cell : rows_[k])
            if (cell && *cell <= 0) throw std::invalid_argument("entries must be positive");
    }
}

bool RationalPattern::present(int i, int j) const {
    if (j < 1 || j > row_count() || i < 1 || i > j) return false;
    return rows_[row_count() - j][i - 1].has_value();
}

const Rational& RationalPattern::at(int i, int j) const {
    if (!present(i, j)) throw std::out_of_range("absent pattern entry");
    return *rows_[row_count() - j][i - 1];
}

void RationalPattern::set(int i, int j, Rational v) {
    if (j < 1 || j > row_count() || i < 1 || i > j)
        throw std::out_of_range("pattern entry index");
    if (v <= 0) throw std::invalid_argument("entries must be positive");
    rows_[row_count() - j][i - 1] = std::move(v);
}

void RationalPattern::clear(int i, int j) {
    if (j < 1 || j > row_count() || i < 1 || i > j)
        throw std::out_of_range("pattern entry index");
    rows_[row_count() - j][i - 1].reset();
}

RationalPattern detrop_bk_a(const RationalPattern& x, int j) {
    if (j < 1 || j >= x.row_count()) throw std::out_of_range("toggle row out of range");
    RationalPattern out = x;
    for (int i = 1; i <= j; ++i) {
        if (!x.present(i, j)) continue;
        Rational numerator = 0;
        bool have_numerator = false;
        if (x.present(i, j + 1)) {
            numerator += x.at(i, j + 1);
            have_numerator = true;
        }
        if (x.present(i - 1, j - 1)) {
            numerator += x.at(i - 1, j - 1);
            have_numerator = true;
        }
        if (!have_numerator) throw std::domain_error("cell has no present upward neighbour");
        Rational denominator = 0;
        bool have_denominator = false;
        if (x.present(i + 1, j + 1)) {
            denominator += 1 / x.at(i + 1, j + 1);
            have_denominator = true;
        }
        if (x.present(i, j - 1)) {
            denominator += 1 / x.at(i, j - 1);
            have_denominator = true;
        }
        if (!have_denominator) denominator = 1;
        out.set(i, j, numerator / (denominator * x.at(i, j)));
    }
    return out;
}

RationalPattern detrop_bk_c(const RationalPattern& x, int j) {
    const int rows = x.row_count();
    if (rows % 2 != 0) throw std::invalid_argument("expected an even number of rows");
    const int n = rows / 2;
    if (j < 1 || j > n - 1) throw std::out_of_range("toggle index out of range");
    for (int col = 1; col <= rows; ++col)
        for (int i = 1; i <= col; ++i)
            if (x.present(i, col) == king_forced_zero(i, col))
                throw std::invalid_argument("support must be exactly the King support");

    RationalPattern cur = x;
    cur.set(j + 1, 2 * j, 1);  // materialize the overflow cell
    cur = detrop_bk_a(cur, 2 * j);
    cur = detrop_bk_a(cur, 2 * j - 1);
    cur = detrop_bk_a(cur, 2 * j + 1);
    cur = detrop_bk_a(cur, 2 * j);

    const Rational v = cur.at(j + 1, 2 * j);
    cur.set(j + 1, 2 * j, cur.at(j + 1, 2 * j) / v);
    cur.set(j + 1, 2 * j + 1, cur.at(j + 1, 2 * j + 1) / v);
    cur.set(j, 2 * j, cur.at(j, 2 * j) / v);
    cur.set(j, 2 * j - 1, cur.at(j, 2 * j - 1) / v);
    if (cur.at(j + 1, 2 * j) != 1)
        throw std::logic_error("overflow cell did not renormalize to one");
    cur.clear(j + 1, 2 * j);
    return cur;
}

namespace {

Rational random_positive(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 50);
    return Rational(dist(rng), dist(rng));
}

}  // namespace

RationalPattern random_full_pattern(int rows, std::mt19937_64& rng) {
    std::vector<std::vector<std::optional<Rational>>> data;
    for (int k = rows; k >= 1; --k) {
        std::vector<std::optional<Rational>> row;
        for (int i = 0; i < k; ++i) row.emplace_back(random_positive(rng));
        data.push_back(std::move(row));
    }
    return RationalPattern(std::move(data));
}

RationalPattern random_king_pattern(int n, std::mt19937_64& rng) {
    std::vector<std::vector<std::optional<Rational>>> data;
    for (int col = 2 * n; col >= 1; --col) {
        std::vector<std::optional<Rational>> row;
        for (int i = 1; i <= col; ++i) {
            if (king_forced_zero(i, col))
                row.emplace_back(std::nullopt);
            else
                row.emplace_back(random_positive(rng));
        }
        data.push_back(std::move(row));
    }
    return RationalPattern(std::move(data));
}

}  // namespace bktab
