#include "bktab/bijections.hpp"

#include <stdexcept>

namespace bktab {

namespace {

// Shared core: rows of letter counts for the first k alphabet letters,
// k = 1..m, returned top row (k = m) first.
std::vector<std::vector<int>> counting_rows(const Tableau& t, int m) {
    std::vector<std::vector<int>> rows;
    for (int k = m; k >= 1; --k) {
        std::vector<int> row(k, 0);
        for (int i = 1; i <= std::min(k, t.row_count()); ++i) {
            int count = 0;
            for (Letter a : t.row(i))
                if (!is_inf(a) && a.code <= k) ++count;
            row[i - 1] = count;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Shared core: tableau rows as letter codes read off a valid pattern.
std::vector<std::vector<Letter>> reading_rows(const GTPattern& p) {
    const int m = p.row_count();
    std::vector<std::vector<Letter>> rows;
    for (int i = 1; i <= m; ++i) {
        if (p.at(i, m) == 0) break;  // shape rows are the nonzero top-row entries
        std::vector<Letter> row;
        for (int k = i; k <= m; ++k) {
            const int prev = k > i ? p.at(i, k - 1) : 0;
            for (int c = prev; c < p.at(i, k); ++c) row.push_back(Letter{k});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

GTPattern tableau_to_pattern(const Tableau& t) {
    if (t.kind() == TableauKind::orthogonal)
        throw std::invalid_argument("counting bijection expects an ssyt or king tableau");
    if (!is_semistandard(t)) throw std::invalid_argument("tableau is not semistandard");
    const int m = t.kind() == TableauKind::ssyt ? t.n() : 2 * t.n();
    return GTPattern(counting_rows(t, m));
}

Tableau pattern_to_tableau(const GTPattern& p) {
    if (!validate_gt(p)) throw std::invalid_argument("invalid pattern");
    auto rows = reading_rows(p);
    Partition shape(p.row_count() > 0 ? p.row(p.row_count()) : std::vector<int>{});
    return Tableau(TableauKind::ssyt, p.row_count(), std::move(shape), std::move(rows));
}

KingPattern king_tableau_to_pattern(const Tableau& t) {
    if (t.kind() != TableauKind::king)
        throw std::invalid_argument("expected a king tableau");
    return KingPattern(tableau_to_pattern(t));
}

Tableau king_pattern_to_tableau(const KingPattern& p) {
    if (!validate_king(p)) throw std::invalid_argument("invalid king pattern");
    auto rows = reading_rows(p.pattern());
    const int m = p.pattern().row_count();
    Partition shape(m > 0 ? p.pattern().row(m) : std::vector<int>{});
    return Tableau(TableauKind::king, p.n(), std::move(shape), std::move(rows));
}

std::pair<Tableau, std::set<int>> sot_corestrict(const Tableau& t) {
    if (t.kind() != TableauKind::orthogonal || !is_sundaram_orthogonal(t))
        throw std::invalid_argument("expected a valid orthogonal tableau");
    std::set<int> inf_rows;
    std::vector<int> shape;
    std::vector<std::vector<Letter>> rows;
    for (int i = 1; i <= t.row_count(); ++i) {
        const auto& r = t.row(i);
        const bool has_inf = !r.empty() && is_inf(r.back());
        if (has_inf) inf_rows.insert(i);
        shape.push_back(static_cast<int>(r.size()) - (has_inf ? 1 : 0));
        rows.emplace_back(r.begin(), r.end() - (has_inf ? 1 : 0));
    }
    while (!rows.empty() && rows.back().empty()) {
        rows.pop_back();
        shape.pop_back();
    }
    return {Tableau(TableauKind::king, t.n(), Partition(std::move(shape)), std::move(rows)),
            std::move(inf_rows)};
}

Tableau sot_extend(const Tableau& t, const Partition& shape) {
    if (t.kind() != TableauKind::king || !is_king_symplectic(t))
        throw std::invalid_argument("expected a valid king tableau");
    const Partition& mu = t.shape();
    const int len = std::max(shape.length(), mu.length());
    std::vector<std::vector<Letter>> rows;
    for (int i = 1; i <= len; ++i) {
        const int diff = shape.part(i) - mu.part(i);
        if (diff != 0 && diff != 1)
            throw std::invalid_argument("shapes must differ by at most one cell per row");
        std::vector<Letter> row =
            i <= t.row_count() ? t.row(i) : std::vector<Letter>{};
        if (diff == 1) row.push_back(inf_letter());
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(TableauKind::orthogonal, t.n(), shape, std::move(rows));
}

KingPattern sop_forget(const OrthogonalPattern& p) {
    return p.king();
}

OrthogonalPattern sop_mark(const KingPattern& p, const Partition& shape) {
    if (!validate_king(p)) throw std::invalid_argument("invalid king pattern");
    const int n = p.n();
    if (shape.length() > n)
        throw std::invalid_argument("shape has more rows than the pattern allows");
    std::set<int> circled;
    for (int i = 1; i <= n; ++i) {
        const int diff = shape.part(i) - p.pattern().at(i, 2 * n);
        if (diff != 0 && diff != 1)
            throw std::invalid_argument("shape must exceed the top row by at most one per entry");
        if (diff == 1) circled.insert(i);
    }
    return OrthogonalPattern(p, std::move(circled));
}

OrthogonalPattern sundaram_tableau_to_pattern(const Tableau& t) {
    return sop_mark(king_tableau_to_pattern(sot_corestrict(t).first), t.shape());
}

Tableau sundaram_pattern_to_tableau(const OrthogonalPattern& p) {
    if (!validate_orthogonal(p)) throw std::invalid_argument("invalid orthogonal pattern");
    return sot_extend(king_pattern_to_tableau(p.king()), shape_of_orthogonal(p));
}

}  // namespace bktab
