#include "doctest.h"

#include "bktab/enumeration.hpp"
#include "bktab/json_io.hpp"

#include <stdexcept>
#include <variant>

using namespace bktab;

namespace {

const Tableau kKingTab(TableauKind::king, 2, Partition{3, 2},
                       {{unbarred(1), barred(1), unbarred(2)}, {unbarred(2), barred(2)}});

}  // namespace

TEST_CASE("tableau documents have a fixed schema") {
    CHECK(tableau_to_json(kKingTab).dump() ==
          R"({"kind":"king","n":2,"shape":[3,2],"rows":[["1","1b","2"],["2","2b"]]})");
    const Tableau sot(TableauKind::orthogonal, 1, Partition{1}, {{inf_letter()}});
    CHECK(tableau_to_json(sot).dump() ==
          R"({"kind":"orthogonal","n":1,"shape":[1],"rows":[["inf"]]})");
    const Tableau ssyt(TableauKind::ssyt, 2, Partition{2}, {{Letter{1}, Letter{2}}});
    CHECK(tableau_to_json(ssyt).dump() == R"({"kind":"ssyt","n":2,"shape":[2],"rows":[["1","2"]]})");

    CHECK(tableau_from_json(tableau_to_json(kKingTab)) == kKingTab);
    CHECK(tableau_from_json(tableau_to_json(sot)) == sot);
    CHECK_THROWS_AS(tableau_from_json(json::parse(
                        R"({"kind":"weird","n":1,"shape":[],"rows":[]})")),
                    std::invalid_argument);
}

TEST_CASE("pattern documents carry their kind") {
    const GTPattern gt({{3, 2, 0}, {2, 1}, {2}});
    CHECK(pattern_to_json(gt).dump() == R"({"kind":"gt","rows":[[3,2,0],[2,1],[2]]})");

    const KingPattern king(GTPattern({{3, 2, 0, 0}, {3, 1, 0}, {2, 0}, {1}}));
    CHECK(pattern_to_json(king).dump() ==
          R"({"kind":"king","rows":[[3,2,0,0],[3,1,0],[2,0],[1]]})");

    const OrthogonalPattern orth(
        KingPattern(GTPattern({{2, 2, 0, 0}, {2, 1, 0}, {2, 0}, {1}})), {1});
    CHECK(pattern_to_json(orth).dump() ==
          R"({"kind":"orthogonal","rows":[[2,2,0,0],[2,1,0],[2,0],[1]],"circled":[1]})");

    CHECK(std::get<GTPattern>(pattern_from_json(pattern_to_json(gt))) == gt);
    CHECK(std::get<KingPattern>(pattern_from_json(pattern_to_json(king))) == king);
    CHECK(std::get<OrthogonalPattern>(pattern_from_json(pattern_to_json(orth))) == orth);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"kind":"nope","rows":[[0]]})")),
                    std::invalid_argument);
}

TEST_CASE("polynomial documents sort terms and survive big coefficients") {
    const LaurentPolynomial sp1 = symplectic(1, Partition{1});
    CHECK(poly_to_json(sp1).dump() ==
          R"({"nvars":1,"terms":[{"exp":[-1],"coef":1},{"exp":[1],"coef":1}]})");
    CHECK(poly_from_json(poly_to_json(sp1)) == sp1);

    LaurentPolynomial big(1);
    big.add_term({0}, Int("123456789012345678901234567890"));
    const json doc = poly_to_json(big);
    CHECK(doc["terms"][0]["coef"].is_string());
    CHECK(poly_from_json(doc) == big);

    LaurentPolynomial negative(2);
    negative.add_term({1, -1}, -7);
    CHECK(poly_from_json(poly_to_json(negative)) == negative);
    CHECK(poly_to_json(LaurentPolynomial(3)).dump() == R"({"nvars":3,"terms":[]})");
}

TEST_CASE("serialization is canonical and idempotent") {
    const json doc = tableau_to_json(kKingTab);
    CHECK(json::parse(doc.dump()).dump() == doc.dump());
    CHECK(tableau_to_json(tableau_from_json(doc)).dump() == doc.dump());

    CHECK(json_is_tableau(doc));
    CHECK_FALSE(json_is_tableau(pattern_to_json(GTPattern({{1}}))));
}
