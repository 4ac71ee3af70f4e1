#include "bktab/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bktab {

namespace {

void check_weakly_decreasing(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition parts are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

std::vector<int> Partition::padded(int n) const {
    if (n < length()) throw std::invalid_argument("partition is longer than the requested padding");
    std::vector<int> out(parts_);
    out.resize(n, 0);
    return out;
}

bool Partition::operator<(const Partition& rhs) const {
    const int len = std::max(length(), rhs.length());
    for (int i = 1; i <= len; ++i) {
        if (part(i) != rhs.part(i)) return part(i) < rhs.part(i);
    }
    return false;
}

std::string letter_name(Letter a, TableauKind kind) {
    if (kind == TableauKind::ssyt) return std::to_string(a.code);
    if (is_inf(a)) return "inf";
    if (a.code % 2 == 1) return std::to_string((a.code + 1) / 2);
    return std::to_string(a.code / 2) + "b";
}

Letter letter_from_name(const std::string& name, TableauKind kind) {
    if (name == "inf") {
        if (kind != TableauKind::orthogonal)
            throw std::invalid_argument("letter 'inf' only exists in the orthogonal alphabet");
        return inf_letter();
    }
    const bool bar = !name.empty() && name.back() == 'b';
    const std::string digits = bar ? name.substr(0, name.size() - 1) : name;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char ch) { return std::isdigit(ch); }))
        throw std::invalid_argument("malformed letter '" + name + "'");
    const int value = std::stoi(digits);
    if (value < 1) throw std::invalid_argument("letters are numbered from 1");
    if (kind == TableauKind::ssyt) {
        if (bar) throw std::invalid_argument("ssyt letters cannot be barred");
        return Letter{value};
    }
    return bar ? barred(value) : unbarred(value);
}

namespace {

bool letter_in_alphabet(Letter a, TableauKind kind, int n) {
    if (is_inf(a)) return kind == TableauKind::orthogonal;
    if (kind == TableauKind::ssyt) return a.code >= 1 && a.code <= n;
    return a.code >= 1 && a.code <= 2 * n;
}

}  // namespace

Tableau::Tableau(TableauKind kind, int n, Partition shape, std::vector<std::vector<Letter>> rows)
    : kind_(kind), n_(n), shape_(std::move(shape)), rows_(std::move(rows)) {
    if (n < 0) throw std::invalid_argument("negative alphabet size");
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw std::invalid_argument("row count does not match shape");
    for (int i = 1; i <= shape_.length(); ++i) {
        if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i))
            throw std::invalid_argument("row length does not match shape");
        for (Letter a : rows_[i - 1]) {
            if (!letter_in_alphabet(a, kind_, n_))
                throw std::invalid_argument("letter outside the tableau alphabet");
        }
    }
}

const std::vector<Letter>& Tableau::row(int i) const {
    if (i < 1 || i > row_count()) throw std::out_of_range("tableau row index");
    return rows_[i - 1];
}

Letter Tableau::at(int i, int j) const {
    const auto& r = row(i);
    if (j < 1 || j > static_cast<int>(r.size())) throw std::out_of_range("tableau column index");
    return r[j - 1];
}

bool is_semistandard(const Tableau& t) {
    for (int i = 1; i <= t.row_count(); ++i) {
        const auto& r = t.row(i);
        for (std::size_t c = 1; c < r.size(); ++c)
            if (r[c] < r[c - 1]) return false;
        if (i > 1) {
            const auto& above = t.row(i - 1);
            for (std::size_t c = 0; c < r.size(); ++c)
                if (!(above[c] < r[c])) return false;
        }
    }
    return true;
}

bool is_king_symplectic(const Tableau& t) {
    if (t.kind() != TableauKind::king)
        throw std::invalid_argument("symplectic condition applies to king-kind tableaux");
    if (!is_semistandard(t)) return false;
    for (int i = 1; i <= t.row_count(); ++i)
        for (Letter a : t.row(i))
            if (a.code < 2 * i - 1) return false;
    return true;
}

bool is_sundaram_orthogonal(const Tableau& t) {
    if (t.kind() != TableauKind::orthogonal)
        throw std::invalid_argument("orthogonal condition applies to orthogonal-kind tableaux");
    std::vector<int> co_shape;
    std::vector<std::vector<Letter>> co_rows;
    for (int i = 1; i <= t.row_count(); ++i) {
        const auto& r = t.row(i);
        int infs = 0;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (is_inf(r[c])) {
                ++infs;
                if (c + 1 != r.size()) return false;  // ∞ must be right-most
            }
        }
        if (infs > 1) return false;
        co_shape.push_back(static_cast<int>(r.size()) - infs);
        co_rows.emplace_back(r.begin(), r.end() - infs);
    }
    for (std::size_t i = 1; i < co_shape.size(); ++i)
        if (co_shape[i - 1] < co_shape[i]) return false;  // co-restriction must keep a partition shape
    while (!co_rows.empty() && co_rows.back().empty()) {
        co_rows.pop_back();
        co_shape.pop_back();
    }
    Tableau co(TableauKind::king, t.n(), Partition(co_shape), std::move(co_rows));
    return is_king_symplectic(co);
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const int n = row_count();
    for (int k = 0; k < n; ++k)
        if (static_cast<int>(rows_[k].size()) != n - k)
            throw std::invalid_argument("pattern rows must shrink by one from the top");
}

const std::vector<int>& GTPattern::row(int j) const {
    if (j < 1 || j > row_count()) throw std::out_of_range("pattern row index");
    return rows_[row_count() - j];
}

int GTPattern::at(int i, int j) const {
    const auto& r = row(j);
    if (i < 1 || i > j) throw std::out_of_range("pattern entry index");
    return r[i - 1];
}

void GTPattern::set(int i, int j, int v) {
    if (j < 1 || j > row_count() || i < 1 || i > j)
        throw std::out_of_range("pattern entry index");
    rows_[row_count() - j][i - 1] = v;
}

bool validate_gt(const GTPattern& p) {
    const int n = p.row_count();
    for (const auto& r : p.rows())
        for (int v : r)
            if (v < 0) return false;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i)
            if (!(p.at(i, j + 1) >= p.at(i, j) && p.at(i, j) >= p.at(i + 1, j + 1)))
                return false;
    return true;
}

bool king_forced_zero(int i, int j) {
    return i > (j + 1) / 2;  // i > ceil(j/2)
}

KingPattern::KingPattern(GTPattern p) : p_(std::move(p)) {
    if (p_.row_count() % 2 != 0)
        throw std::invalid_argument("king patterns have an even number of rows");
}

bool validate_king(const KingPattern& p) {
    if (!validate_gt(p.pattern())) return false;
    for (int j = 1; j <= p.pattern().row_count(); ++j)
        for (int i = 1; i <= j; ++i)
            if (king_forced_zero(i, j) && p.pattern().at(i, j) != 0) return false;
    return true;
}

OrthogonalPattern::OrthogonalPattern(KingPattern king, std::set<int> circled)
    : king_(std::move(king)), circled_(std::move(circled)) {
    for (int i : circled_)
        if (i < 1 || i > king_.n())
            throw std::invalid_argument("circled index outside the top row");
}

bool validate_orthogonal(const OrthogonalPattern& p) {
    if (!validate_king(p.king())) return false;
    const int n = p.king().n();
    for (int i : p.circled())
        if (i < 1 || i > n) return false;
    int prev = std::numeric_limits<int>::max();
    for (int i = 1; i <= n; ++i) {
        const int cur = p.king().pattern().at(i, 2 * n) + (p.circled().count(i) ? 1 : 0);
        if (cur > prev) return false;
        prev = cur;
    }
    return true;
}

Partition shape_of_orthogonal(const OrthogonalPattern& p) {
    const int n = p.king().n();
    for (int i : p.circled())
        if (i < 1 || i > n) throw std::invalid_argument("circled position outside the top row");
    std::vector<int> shape(n);
    for (int i = 1; i <= n; ++i)
        shape[i - 1] = p.king().pattern().at(i, 2 * n) + (p.circled().count(i) ? 1 : 0);
    return Partition(std::move(shape));  // throws when not weakly decreasing
}

Monomial weight_tableau(const Tableau& t) {
    Monomial w(t.n(), 0);
    for (const auto& r : t.rows()) {
        for (Letter a : r) {
            if (is_inf(a)) continue;
            if (t.kind() == TableauKind::ssyt)
                w[a.code - 1] += 1;
            else if (a.code % 2 == 1)
                w[(a.code - 1) / 2] += 1;
            else
                w[a.code / 2 - 1] -= 1;
        }
    }
    return w;
}

Monomial weight_pattern_a(const GTPattern& p) {
    const int n = p.row_count();
    Monomial w(n, 0);
    int prev = 0;
    for (int j = 1; j <= n; ++j) {
        const auto& r = p.row(j);
        const int cur = std::accumulate(r.begin(), r.end(), 0);
        w[j - 1] = cur - prev;
        prev = cur;
    }
    return w;
}

Monomial weight_pattern_bc(const KingPattern& p) {
    const int n = p.n();
    std::vector<int> sums(2 * n + 1, 0);
    for (int j = 1; j <= 2 * n; ++j) {
        const auto& r = p.pattern().row(j);
        sums[j] = std::accumulate(r.begin(), r.end(), 0);
    }
    Monomial w(n, 0);
    for (int j = 1; j <= n; ++j)
        w[j - 1] = 2 * sums[2 * j - 1] - sums[2 * j] - sums[2 * j - 2];
    return w;
}

std::string render_tableau(const Tableau& t) {
    std::ostringstream out;
    for (int i = 1; i <= t.row_count(); ++i) {
        if (i > 1) out << "\n";
        const auto& r = t.row(i);
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c > 0) out << " ";
            out << letter_name(r[c], t.kind());
        }
    }
    return out.str();
}

namespace {

std::string render_rows(const std::vector<std::vector<int>>& rows, const std::set<int>& circled) {
    std::ostringstream out;
    const int n = static_cast<int>(rows.size());
    for (int k = 0; k < n; ++k) {
        if (k > 0) out << "\n";
        out << std::string(k, ' ');
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            if (i > 0) out << " ";
            if (k == 0 && circled.count(static_cast<int>(i) + 1))
                out << "(" << rows[k][i] << ")";
            else
                out << rows[k][i];
        }
    }
    return out.str();
}

}  // namespace

std::string render_pattern(const GTPattern& p) {
    return render_rows(p.rows(), {});
}

std::string render_pattern(const OrthogonalPattern& p) {
    return render_rows(p.king().pattern().rows(), p.circled());
}

}  // namespace bktab
