#include "bktab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bktab {

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Int& c) {
    LaurentPolynomial f(nvars);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

LaurentPolynomial LaurentPolynomial::monomial(const Monomial& exp, const Int& c) {
    LaurentPolynomial f(static_cast<int>(exp.size()));
    f.add_term(exp, c);
    return f;
}

Int LaurentPolynomial::coefficient(const Monomial& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(const Monomial& exp, const Int& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<Monomial, Int> LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.rbegin();
}

Int LaurentPolynomial::mass() const {
    Int total = 0;
    for (const auto& [exp, c] : terms_) total += c;
    return total;
}

void LaurentPolynomial::check_same_vars(const LaurentPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("variable counts differ");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_same_vars(b);
    LaurentPolynomial prod(a.nvars());
    Monomial exp(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int k = 0; k < a.nvars(); ++k) exp[k] = ea[k] + eb[k];
            prod.add_term(exp, ca * cb);
        }
    }
    return prod;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial neg(nvars_);
    for (const auto& [exp, c] : terms_) neg.terms_.emplace(exp, -c);
    return neg;
}

namespace {

// Componentwise min/max of all exponent vectors of f (f nonzero).
std::pair<Monomial, Monomial> exponent_box(const LaurentPolynomial& f) {
    Monomial lo = f.terms().begin()->first;
    Monomial hi = lo;
    for (const auto& [exp, c] : f.terms()) {
        for (int k = 0; k < f.nvars(); ++k) {
            lo[k] = std::min(lo[k], exp[k]);
            hi[k] = std::max(hi[k], exp[k]);
        }
    }
    return {lo, hi};
}

}  // namespace

LaurentPolynomial div_exact(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable counts differ");
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const int nv = f.nvars();
    LaurentPolynomial q(nv);
    if (f.is_zero()) return q;

    // For exact division the Newton polytope of the quotient fits the
    // componentwise difference box of f and g; a candidate term escaping it
    // proves indivisibility (and cuts off the otherwise unbounded descent in
    // lexicographic order).
    auto [flo, fhi] = exponent_box(f);
    auto [glo, ghi] = exponent_box(g);
    Monomial lo(nv), hi(nv);
    for (int k = 0; k < nv; ++k) {
        lo[k] = flo[k] - glo[k];
        hi[k] = fhi[k] - ghi[k];
        if (lo[k] > hi[k]) throw std::domain_error("polynomials do not divide exactly");
    }

    const auto [ge, gc] = g.leading_term();
    LaurentPolynomial r = f;
    Monomial e(nv);
    while (!r.is_zero()) {
        const auto [re, rc] = r.leading_term();
        for (int k = 0; k < nv; ++k) {
            e[k] = re[k] - ge[k];
            if (e[k] < lo[k] || e[k] > hi[k])
                throw std::domain_error("polynomials do not divide exactly");
        }
        Int c = rc / gc;
        if (c * gc != rc) throw std::domain_error("polynomials do not divide exactly");
        q.add_term(e, c);
        r -= LaurentPolynomial::monomial(e, c) * g;
    }
    return q;
}

namespace {

std::string monomial_text(const Monomial& exp, const Int& coef_abs) {
    std::ostringstream out;
    bool printed = false;
    if (coef_abs != 1) {
        out << coef_abs.str();
        printed = true;
    }
    for (std::size_t k = 0; k < exp.size(); ++k) {
        if (exp[k] == 0) continue;
        if (printed) out << "*";
        out << "x" << (k + 1);
        if (exp[k] != 1) out << "^" << exp[k];
        printed = true;
    }
    if (!printed) out << "1";
    return out.str();
}

}  // namespace

std::string to_string(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending lexicographic order puts the dominant term first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const bool negative = it->second < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << monomial_text(it->first, abs(it->second));
    }
    return out.str();
}

SignedPermutation::SignedPermutation(std::vector<int> image, std::vector<bool> negate)
    : image_(std::move(image)), negate_(std::move(negate)) {
    if (image_.size() != negate_.size())
        throw std::invalid_argument("image and negation vectors differ in length");
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw std::invalid_argument("image is not a permutation");
        seen[v] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return SignedPermutation(std::move(image), std::vector<bool>(n, false));
}

SignedPermutation SignedPermutation::flip_first(int n) {
    if (n < 1) throw std::invalid_argument("flip_first needs at least one coordinate");
    SignedPermutation w = identity(n);
    w.negate_[0] = true;
    return w;
}

SignedPermutation SignedPermutation::adjacent_swap(int n, int j) {
    if (j < 1 || j >= n) throw std::invalid_argument("adjacent_swap index out of range");
    SignedPermutation w = identity(n);
    std::swap(w.image_[j - 1], w.image_[j]);
    return w;
}

Monomial SignedPermutation::apply(const Monomial& exp) const {
    if (exp.size() != image_.size())
        throw std::invalid_argument("exponent vector length does not match permutation size");
    Monomial out(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i)
        out[image_[i]] = negate_[i] ? -exp[i] : exp[i];
    return out;
}

SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("permutation sizes differ");
    const int n = w1.size();
    std::vector<int> image(n);
    std::vector<bool> negate(n);
    for (int i = 0; i < n; ++i) {
        const int mid = w2.image()[i];
        image[i] = w1.image()[mid];
        negate[i] = w2.negate()[i] != static_cast<bool>(w1.negate()[mid]);
    }
    return SignedPermutation(std::move(image), std::move(negate));
}

LaurentPolynomial weyl_act(const SignedPermutation& w, const LaurentPolynomial& f) {
    if (w.size() != f.nvars())
        throw std::invalid_argument("permutation size does not match variable count");
    LaurentPolynomial out(f.nvars());
    for (const auto& [exp, c] : f.terms()) out.add_term(w.apply(exp), c);
    return out;
}

bool is_w_invariant(const LaurentPolynomial& f) {
    const int n = f.nvars();
    if (n == 0) return true;
    if (weyl_act(SignedPermutation::flip_first(n), f) != f) return false;
    for (int j = 1; j < n; ++j)
        if (weyl_act(SignedPermutation::adjacent_swap(n, j), f) != f) return false;
    return true;
}

bool is_symmetric(const LaurentPolynomial& f) {
    const int n = f.nvars();
    for (int j = 1; j < n; ++j)
        if (weyl_act(SignedPermutation::adjacent_swap(n, j), f) != f) return false;
    return true;
}

}  // namespace bktab
