#pragma once
// Canonical JSON (de)serialization. Keys are emitted in a fixed order and
// dumps are compact, so parse -> serialize is byte-stable and suitable for
// golden files.

#include "bktab/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace bktab {

using json = nlohmann::ordered_json;

// {"kind": "ssyt"|"king"|"orthogonal", "n": n, "shape": [...],
//  "rows": [["1","2b","inf",...],...]}
json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

// {"kind": "gt"|"king"|"orthogonal", "rows": [[...],...]} with the top row
// first; orthogonal patterns add "circled": [i,...] (ascending).
json pattern_to_json(const GTPattern& p);
json pattern_to_json(const KingPattern& p);
json pattern_to_json(const OrthogonalPattern& p);

using ParsedPattern = std::variant<GTPattern, KingPattern, OrthogonalPattern>;
ParsedPattern pattern_from_json(const json& j);

// {"nvars": n, "terms": [{"exp": [...], "coef": c}, ...]} with terms in
// ascending lexicographic order of exponent. Coefficients that fit in 64
// bits are numbers; larger ones are decimal strings.
json poly_to_json(const LaurentPolynomial& f);
LaurentPolynomial poly_from_json(const json& j);

// Tableau documents carry a "shape" key; pattern documents do not.
bool json_is_tableau(const json& j);

}  // namespace bktab
