#include "bktab/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace bktab {

namespace {

const char* kind_name(TableauKind kind) {
    switch (kind) {
        case TableauKind::ssyt: return "ssyt";
        case TableauKind::king: return "king";
        case TableauKind::orthogonal: return "orthogonal";
    }
    throw std::logic_error("unknown tableau kind");
}

TableauKind kind_from_name(const std::string& name) {
    if (name == "ssyt") return TableauKind::ssyt;
    if (name == "king") return TableauKind::king;
    if (name == "orthogonal") return TableauKind::orthogonal;
    throw std::invalid_argument("unknown tableau kind '" + name + "'");
}

json rows_to_json(const std::vector<std::vector<int>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

std::vector<std::vector<int>> rows_from_json(const json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<int>>());
    return rows;
}

}  // namespace

json tableau_to_json(const Tableau& t) {
    json out;
    out["kind"] = kind_name(t.kind());
    out["n"] = t.n();
    out["shape"] = t.shape().parts();
    json rows = json::array();
    for (const auto& r : t.rows()) {
        json row = json::array();
        for (Letter a : r) row.push_back(letter_name(a, t.kind()));
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

Tableau tableau_from_json(const json& j) {
    const TableauKind kind = kind_from_name(j.at("kind").get<std::string>());
    const int n = j.at("n").get<int>();
    Partition shape(j.at("shape").get<std::vector<int>>());
    std::vector<std::vector<Letter>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Letter> row;
        for (const auto& cell : r) row.push_back(letter_from_name(cell.get<std::string>(), kind));
        rows.push_back(std::move(row));
    }
    return Tableau(kind, n, std::move(shape), std::move(rows));
}

json pattern_to_json(const GTPattern& p) {
    json out;
    out["kind"] = "gt";
    out["rows"] = rows_to_json(p.rows());
    return out;
}

json pattern_to_json(const KingPattern& p) {
    json out;
    out["kind"] = "king";
    out["rows"] = rows_to_json(p.pattern().rows());
    return out;
}

json pattern_to_json(const OrthogonalPattern& p) {
    json out;
    out["kind"] = "orthogonal";
    out["rows"] = rows_to_json(p.king().pattern().rows());
    out["circled"] = std::vector<int>(p.circled().begin(), p.circled().end());
    return out;
}

ParsedPattern pattern_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    auto rows = rows_from_json(j.at("rows"));
    if (kind == "gt") return GTPattern(std::move(rows));
    if (kind == "king") return KingPattern(GTPattern(std::move(rows)));
    if (kind == "orthogonal") {
        std::set<int> circled;
        if (j.contains("circled"))
            for (const auto& i : j.at("circled")) circled.insert(i.get<int>());
        return OrthogonalPattern(KingPattern(GTPattern(std::move(rows))), std::move(circled));
    }
    throw std::invalid_argument("unknown pattern kind '" + kind + "'");
}

json poly_to_json(const LaurentPolynomial& f) {
    json out;
    out["nvars"] = f.nvars();
    json terms = json::array();
    for (const auto& [exp, c] : f.terms()) {
        json term;
        term["exp"] = exp;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            term["coef"] = c.convert_to<long long>();
        else
            term["coef"] = c.str();
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

LaurentPolynomial poly_from_json(const json& j) {
    LaurentPolynomial f(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms")) {
        const json& coef = term.at("coef");
        Int c;
        if (coef.is_string())
            c = Int(coef.get<std::string>());
        else if (coef.is_number_unsigned())
            c = Int(coef.get<std::uint64_t>());
        else if (coef.is_number_integer())
            c = Int(coef.get<long long>());
        else
            throw std::invalid_argument("coefficient must be an integer or a decimal string");
        f.add_term(term.at("exp").get<std::vector<int>>(), c);
    }
    return f;
}

bool json_is_tableau(const json& j) {
    return j.is_object() && j.contains("shape");
}

}  // namespace bktab
