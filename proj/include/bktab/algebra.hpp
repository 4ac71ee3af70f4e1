#pragma once
// Sparse Laurent polynomials with exact (arbitrary-precision) integer
// coefficients, and the signed-permutation action on exponent vectors.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bktab {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial; entry k is the exponent of x_{k+1}.
using Monomial = std::vector<int>;

// Sparse Laurent polynomial in a fixed number of variables. Terms live in a
// map ordered lexicographically by exponent vector; zero coefficients are
// never stored, so structural equality is polynomial equality.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int nvars);

    static LaurentPolynomial constant(int nvars, const Int& c);
    static LaurentPolynomial monomial(const Monomial& exp, const Int& c = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coefficient(const Monomial& exp) const;

    // Adds c * x^exp, erasing the term if the total cancels.
    void add_term(const Monomial& exp, const Int& c);

    // Lexicographically largest term; throws std::domain_error on zero.
    std::pair<Monomial, Int> leading_term() const;

    // Sum of all coefficients, i.e. the value at x = (1,...,1).
    Int mass() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    LaurentPolynomial operator-() const;

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    bool operator==(const LaurentPolynomial& rhs) const = default;

private:
    void check_same_vars(const LaurentPolynomial& rhs) const;

    int nvars_ = 0;
    std::map<Monomial, Int> terms_;
};

// Exact division: returns q with f = q * g. Throws std::domain_error when g
// is zero or does not divide f (detected by coefficient divisibility and by
// quotient exponents escaping the box allowed by the Newton polytopes).
LaurentPolynomial div_exact(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Renders terms in descending lexicographic order, e.g. "x1 + 1 + x1^-1" or
// "2*x1^2*x2^-1 - x3".
std::string to_string(const LaurentPolynomial& f);

// Element of the group of signed permutations of the coordinates: coordinate
// i is negated when negate[i] is set, then moved to position image[i].
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> image, std::vector<bool> negate);

    static SignedPermutation identity(int n);
    // x_1 -> x_1^{-1}, all other coordinates fixed.
    static SignedPermutation flip_first(int n);
    // x_j <-> x_{j+1} (1-based j), no sign changes.
    static SignedPermutation adjacent_swap(int n, int j);

    int size() const { return static_cast<int>(image_.size()); }
    const std::vector<int>& image() const { return image_; }
    const std::vector<bool>& negate() const { return negate_; }

    Monomial apply(const Monomial& exp) const;

    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> image_;  // 0-based target positions, a permutation
    std::vector<bool> negate_;
};

// w1 ∘ w2: w2 acts first.
SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2);

// Applies w to every exponent vector of f.
LaurentPolynomial weyl_act(const SignedPermutation& w, const LaurentPolynomial& f);

// Invariance under all signed permutations (generated by the first-coordinate
// sign flip together with the adjacent transpositions).
bool is_w_invariant(const LaurentPolynomial& f);

// Invariance under coordinate permutations only.
bool is_symmetric(const LaurentPolynomial& f);

}  // namespace bktab
