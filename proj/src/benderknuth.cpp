#include "bktab/benderknuth.hpp"

#include <algorithm>
#include <stdexcept>

namespace bktab {

GTPattern bk_a_pattern(const GTPattern& p, int j) {
    if (!validate_gt(p)) throw std::invalid_argument("invalid pattern");
    if (j < 1 || j >= p.row_count()) throw std::out_of_range("toggle row out of range");
    GTPattern out = p;
    for (int i = 1; i <= j; ++i) {
        int lo = p.at(i, j + 1);
        if (i >= 2) lo = std::min(lo, p.at(i - 1, j - 1));
        int hi = p.at(i + 1, j + 1);
        if (i <= j - 1) hi = std::max(hi, p.at(i, j - 1));
        out.set(i, j, lo + hi - p.at(i, j));
    }
    return out;
}

Tableau bk_a_tableau(const Tableau& t, int j) {
    if (t.kind() == TableauKind::orthogonal)
        throw std::invalid_argument("tableau toggle expects an ssyt or king tableau");
    if (!is_semistandard(t)) throw std::invalid_argument("tableau is not semistandard");
    const int m = t.kind() == TableauKind::ssyt ? t.n() : 2 * t.n();
    if (j < 1 || j >= m) throw std::out_of_range("toggle letter out of range");

    auto rows = t.rows();
    for (int i = 1; i <= t.row_count(); ++i) {
        auto& row = rows[i - 1];
        // Free cells: a j with no j+1 directly below, a j+1 with no j
        // directly above. They occupy consecutive columns.
        std::vector<int> free_cols;
        int count_j = 0;
        for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
            const int code = row[c - 1].code;
            if (code == j) {
                const bool below = i < t.row_count() && t.shape().part(i + 1) >= c &&
                                   t.at(i + 1, c).code == j + 1;
                if (!below) {
                    free_cols.push_back(c);
                    ++count_j;
                }
            } else if (code == j + 1) {
                const bool above = i > 1 && t.at(i - 1, c).code == j;
                if (!above) free_cols.push_back(c);
            }
        }
        // Swap the multiplicities: j^a (j+1)^b becomes j^b (j+1)^a.
        const int count_j1 = static_cast<int>(free_cols.size()) - count_j;
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            row[free_cols[k] - 1] = Letter{static_cast<int>(k) < count_j1 ? j : j + 1};
    }
    return Tableau(t.kind(), t.n(), t.shape(), std::move(rows));
}

KingPattern rect_pattern(const GTPattern& p, int j) {
    const int rows = p.row_count();
    if (rows % 2 != 0) throw std::invalid_argument("expected an even number of rows");
    const int n = rows / 2;
    if (j < 1 || j > n - 1) throw std::out_of_range("toggle index out of range");
    if (!validate_gt(p)) throw std::invalid_argument("invalid pattern");
    for (int col = 1; col <= rows; ++col)
        for (int i = 1; i <= col; ++i)
            if (king_forced_zero(i, col) && !(i == j + 1 && col == 2 * j) && p.at(i, col) != 0)
                throw std::invalid_argument("unexpected nonzero entry outside the support");

    const int v = p.at(j + 1, 2 * j);
    GTPattern out = p;
    out.set(j + 1, 2 * j, p.at(j + 1, 2 * j) - v);
    out.set(j + 1, 2 * j + 1, p.at(j + 1, 2 * j + 1) - v);
    out.set(j, 2 * j, p.at(j, 2 * j) - v);
    out.set(j, 2 * j - 1, p.at(j, 2 * j - 1) - v);
    KingPattern result(std::move(out));
    if (!validate_king(result))
        throw std::logic_error("renormalization left an invalid king pattern");
    return result;
}

BkCTrace bk_c_pattern_traced(const KingPattern& p, int j) {
    if (!validate_king(p)) throw std::invalid_argument("invalid king pattern");
    const int n = p.n();
    if (j < 1 || j > n - 1) throw std::out_of_range("toggle index out of range");

    BkCTrace trace;
    trace.step1 = bk_a_pattern(p.pattern(), 2 * j);
    trace.step2 = bk_a_pattern(trace.step1, 2 * j - 1);
    trace.step3 = bk_a_pattern(trace.step2, 2 * j + 1);
    trace.step4 = bk_a_pattern(trace.step3, 2 * j);
    trace.subtracted = trace.step4.at(j + 1, 2 * j);
    trace.result = rect_pattern(trace.step4, j);

    for (int row = 1; row <= 2 * n; ++row) {
        if (row >= 2 * j - 1 && row <= 2 * j + 1) continue;
        if (trace.result.pattern().row(row) != p.pattern().row(row))
            throw std::logic_error("symplectic toggle touched a row it must not");
    }
    return trace;
}

KingPattern bk_c_pattern(const KingPattern& p, int j) {
    return bk_c_pattern_traced(p, j).result;
}

KingPattern bk_first_pattern(const KingPattern& p) {
    if (!validate_king(p)) throw std::invalid_argument("invalid king pattern");
    if (p.n() < 1) throw std::out_of_range("pattern has no rows");
    KingPattern out(bk_a_pattern(p.pattern(), 1));
    if (!validate_king(out))
        throw std::logic_error("first-row toggle left an invalid king pattern");
    return out;
}

Tableau bk_c_tableau(const Tableau& t, int j) {
    if (t.kind() != TableauKind::king || !is_king_symplectic(t))
        throw std::invalid_argument("expected a valid king tableau");
    const int n = t.n();
    if (j < 1 || j > n - 1) throw std::out_of_range("toggle index out of range");

    Tableau cur = bk_a_tableau(t, 2 * j);
    cur = bk_a_tableau(cur, 2 * j - 1);
    cur = bk_a_tableau(cur, 2 * j + 1);
    cur = bk_a_tableau(cur, 2 * j);

    auto rows = cur.rows();
    if (cur.row_count() > j) {
        auto& upper = rows[j - 1];
        auto& lower = rows[j];
        for (std::size_t c = 0; c < lower.size(); ++c) {
            const int a = upper[c].code;
            const int b = lower[c].code;
            // Vertical dominoes in letters {j, j'} move to {j+1, (j+1)'}.
            if (a >= 2 * j - 1 && a <= 2 * j && b >= 2 * j - 1 && b <= 2 * j) {
                upper[c].code += 2;
                lower[c].code += 2;
            }
        }
        std::sort(upper.begin(), upper.end());
        std::sort(lower.begin(), lower.end());
    }
    Tableau result(TableauKind::king, n, t.shape(), std::move(rows));
    if (!is_king_symplectic(result))
        throw std::logic_error("symplectic tableau toggle left an invalid tableau");
    return result;
}

OrthogonalPattern bk_b(const OrthogonalPattern& p, int j) {
    if (!validate_orthogonal(p)) throw std::invalid_argument("invalid orthogonal pattern");
    if (j < 0 || j > p.king().n() - 1) throw std::out_of_range("toggle index out of range");
    KingPattern king = j == 0 ? bk_first_pattern(p.king()) : bk_c_pattern(p.king(), j);
    OrthogonalPattern out(std::move(king), p.circled());
    if (!validate_orthogonal(out))
        throw std::logic_error("circles are incompatible with the toggled top row");
    return out;
}

}  // namespace bktab
