#include "bktab/enumeration.hpp"

#include <stdexcept>

namespace bktab {

namespace {

// Depth-first extension of a partial pattern by rows of decreasing length,
// each interlacing the row above; candidate rows are produced in ascending
// lexicographic order, position by position. When `king` is set, positions
// past the support are pinned to zero (and branches that cannot reach zero
// are cut).
template <typename Visit>
void descend(std::vector<std::vector<int>>& rows, bool king, const Visit& visit) {
    const int len = static_cast<int>(rows.back().size()) - 1;  // next row length
    if (len <= 0) {
        visit(rows);
        return;
    }
    // Index-based access: deeper recursion may reallocate `rows`.
    const std::size_t above = rows.size() - 1;
    rows.emplace_back(len, 0);
    const std::size_t cur = rows.size() - 1;

    auto fill = [&](auto&& self, int pos) -> void {
        if (pos > len) {
            descend(rows, king, visit);
            return;
        }
        const int lo = rows[above][pos];      // entry pos+1 of the row above
        const int hi = rows[above][pos - 1];  // entry pos of the row above
        if (king && king_forced_zero(pos, len)) {
            if (lo > 0) return;  // zero unreachable below a positive entry
            rows[cur][pos - 1] = 0;
            self(self, pos + 1);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            rows[cur][pos - 1] = v;
            self(self, pos + 1);
        }
    };
    fill(fill, 1);
    rows.pop_back();
}

std::vector<std::vector<int>> top_rows(int rows_total, const Partition& shape) {
    return {shape.padded(rows_total)};
}

}  // namespace

void enum_gt(int n, const Partition& shape, const std::function<void(const GTPattern&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative row count");
    if (shape.length() > n) throw std::invalid_argument("shape has more parts than rows");
    if (n == 0) {
        visit(GTPattern{});
        return;
    }
    auto rows = top_rows(n, shape);
    descend(rows, false, [&](const std::vector<std::vector<int>>& complete) {
        visit(GTPattern(complete));
    });
}

void enum_king(int n, const Partition& shape, const std::function<void(const KingPattern&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative pair count");
    if (shape.length() > n) throw std::invalid_argument("shape has more parts than letter pairs");
    if (n == 0) {
        visit(KingPattern{});
        return;
    }
    auto rows = top_rows(2 * n, shape);
    descend(rows, true, [&](const std::vector<std::vector<int>>& complete) {
        visit(KingPattern(GTPattern(complete)));
    });
}

void enum_orthogonal(int n, const Partition& shape,
                     const std::function<void(const OrthogonalPattern&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative pair count");
    if (shape.length() > n) throw std::invalid_argument("shape has more parts than letter pairs");
    const std::vector<int> lambda = shape.padded(n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> mu = lambda;
        std::set<int> circled;
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1ul << (i - 1))) {
                mu[i - 1] -= 1;
                circled.insert(i);
            }
            if (mu[i - 1] < 0 || (i > 1 && mu[i - 2] < mu[i - 1])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        enum_king(n, Partition(mu), [&](const KingPattern& king) {
            visit(OrthogonalPattern(king, circled));
        });
    }
}

LaurentPolynomial schur(int n, const Partition& shape) {
    LaurentPolynomial f(n);
    enum_gt(n, shape, [&](const GTPattern& p) { f.add_term(weight_pattern_a(p), 1); });
    return f;
}

LaurentPolynomial symplectic(int n, const Partition& shape) {
    LaurentPolynomial f(n);
    enum_king(n, shape, [&](const KingPattern& p) { f.add_term(weight_pattern_bc(p), 1); });
    return f;
}

LaurentPolynomial orthogonal(int n, const Partition& shape) {
    LaurentPolynomial f(n);
    enum_orthogonal(n, shape,
                    [&](const OrthogonalPattern& p) { f.add_term(weight_pattern_bc(p.king()), 1); });
    return f;
}

std::map<Partition, Int> basis_expand(const LaurentPolynomial& f, BasisFamily family, int n) {
    if (f.nvars() != n) throw std::invalid_argument("variable count does not match n");
    std::map<Partition, Int> expansion;
    LaurentPolynomial r = f;
    // Each family polynomial attains its shape as unique lexicographic
    // leading exponent with coefficient one, so peeling leading terms either
    // terminates or proves f is outside the span; the budget cuts off the
    // latter.
    std::size_t budget = f.term_count() + 1;
    while (!r.is_zero()) {
        if (budget-- == 0) throw std::domain_error("expansion budget exhausted; not in the span");
        const auto [exp, c] = r.leading_term();
        for (std::size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] < 0 || (k > 0 && exp[k - 1] < exp[k]))
                throw std::domain_error("leading exponent is not a partition; not in the span");
        }
        Partition lambda(exp);
        LaurentPolynomial basis = family == BasisFamily::symplectic ? symplectic(n, lambda)
                                                                    : orthogonal(n, lambda);
        r -= LaurentPolynomial::constant(n, c) * basis;
        expansion.emplace(lambda, c);
    }
    return expansion;
}

std::vector<Partition> partitions_up_to(int max_length, int max_size) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (static_cast<int>(stack.size()) == max_length) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            stack.push_back(part);
            out.emplace_back(stack);
            self(self, remaining - part, part);
            stack.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bktab
