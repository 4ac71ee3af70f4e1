#include "doctest.h"

#include "bktab/combinatorics.hpp"

#include <stdexcept>

using namespace bktab;

namespace {

// Letters for a type A tableau are their own codes.
std::vector<Letter> plain(std::initializer_list<int> codes) {
    std::vector<Letter> row;
    for (int c : codes) row.push_back(Letter{c});
    return row;
}

const Tableau kExampleA(TableauKind::ssyt, 4, Partition{3, 3, 2},
                        {plain({1, 1, 3}), plain({2, 3, 4}), plain({3, 4})});
// 1 2 inf / 3 3 inf / 3b 3b
const Tableau kExampleB(TableauKind::orthogonal, 3, Partition{3, 3, 2},
                        {{unbarred(1), unbarred(2), inf_letter()},
                         {unbarred(3), unbarred(3), inf_letter()},
                         {barred(3), barred(3)}});
// 1 2 2b / 3 3 3b / 3b 3b
const Tableau kExampleC(TableauKind::king, 3, Partition{3, 3, 2},
                        {{unbarred(1), unbarred(2), barred(2)},
                         {unbarred(3), unbarred(3), barred(3)},
                         {barred(3), barred(3)}});

}  // namespace

TEST_CASE("partitions normalize and validate") {
    CHECK(Partition{3, 2, 0, 0}.length() == 2);
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{3, 2}.size() == 5);
    CHECK(Partition{3, 2}.part(1) == 3);
    CHECK(Partition{3, 2}.part(5) == 0);
    CHECK(Partition{3, 2}.padded(4) == std::vector<int>{3, 2, 0, 0});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{3, 2}.padded(1)), std::invalid_argument);
    CHECK(Partition{1, 1} < Partition{2});
    CHECK(Partition{} < Partition{1});
}

TEST_CASE("letter encoding and names") {
    CHECK(unbarred(3).code == 5);
    CHECK(barred(3).code == 6);
    CHECK(unbarred(1) < barred(1));
    CHECK(barred(1) < unbarred(2));
    CHECK(unbarred(9) < inf_letter());
    CHECK(is_inf(inf_letter()));

    CHECK(letter_name(Letter{3}, TableauKind::ssyt) == "3");
    CHECK(letter_name(unbarred(2), TableauKind::king) == "2");
    CHECK(letter_name(barred(2), TableauKind::king) == "2b");
    CHECK(letter_name(inf_letter(), TableauKind::orthogonal) == "inf");
    for (const std::string name : {"1", "2b", "inf"})
        CHECK(letter_name(letter_from_name(name, TableauKind::orthogonal),
                          TableauKind::orthogonal) == name);
    CHECK_THROWS_AS(letter_from_name("0", TableauKind::ssyt), std::invalid_argument);
    CHECK_THROWS_AS(letter_from_name("2x", TableauKind::king), std::invalid_argument);
}

TEST_CASE("tableau construction rejects malformed input") {
    CHECK_THROWS_AS(Tableau(TableauKind::ssyt, 2, Partition{2}, {plain({1})}),
                    std::invalid_argument);  // row shorter than the shape
    CHECK_THROWS_AS(Tableau(TableauKind::ssyt, 2, Partition{1}, {plain({3})}),
                    std::invalid_argument);  // letter beyond the alphabet
    CHECK_THROWS_AS(Tableau(TableauKind::king, 1, Partition{1}, {{inf_letter()}}),
                    std::invalid_argument);  // inf needs the extended alphabet
    const Tableau empty(TableauKind::king, 2, Partition{}, {});
    CHECK(empty.row_count() == 0);
    CHECK(is_king_symplectic(empty));
}

TEST_CASE("semistandardness") {
    CHECK(is_semistandard(Tableau(TableauKind::ssyt, 1, Partition{1}, {plain({1})})));
    CHECK(is_semistandard(kExampleA));
    CHECK_FALSE(is_semistandard(
        Tableau(TableauKind::ssyt, 1, Partition{1, 1}, {plain({1}), plain({1})})));
    CHECK_FALSE(is_semistandard(Tableau(TableauKind::ssyt, 2, Partition{2}, {plain({2, 1})})));
}

TEST_CASE("king condition: row i letters start at i") {
    CHECK(is_king_symplectic(kExampleC));
    CHECK(is_king_symplectic(Tableau(TableauKind::king, 1, Partition{1}, {{barred(1)}})));
    CHECK_FALSE(is_king_symplectic(
        Tableau(TableauKind::king, 2, Partition{1, 1}, {{unbarred(1)}, {barred(1)}})));
    CHECK_THROWS_AS(is_king_symplectic(kExampleA), std::invalid_argument);
}

TEST_CASE("orthogonal condition: inf only rightmost, once per row") {
    CHECK(is_sundaram_orthogonal(kExampleB));
    CHECK(is_sundaram_orthogonal(
        Tableau(TableauKind::orthogonal, 1, Partition{1}, {{inf_letter()}})));
    CHECK_FALSE(is_sundaram_orthogonal(Tableau(TableauKind::orthogonal, 1, Partition{2},
                                               {{inf_letter(), unbarred(1)}})));
    CHECK_FALSE(is_sundaram_orthogonal(Tableau(TableauKind::orthogonal, 1, Partition{2},
                                               {{inf_letter(), inf_letter()}})));
    // Dropping the inf cells must leave a partition co-shape: row lengths 1,2.
    CHECK_FALSE(is_sundaram_orthogonal(Tableau(TableauKind::orthogonal, 2, Partition{2, 2},
                                               {{unbarred(1), inf_letter()},
                                                {unbarred(2), barred(2)}})));
    CHECK_THROWS_AS(is_sundaram_orthogonal(kExampleC), std::invalid_argument);
}

TEST_CASE("pattern validators") {
    CHECK(validate_gt(GTPattern({{3, 2, 0}, {2, 1}, {2}})));
    CHECK_FALSE(validate_gt(GTPattern({{1, 0}, {2}})));
    CHECK_FALSE(validate_gt(GTPattern({{1, 2}, {1}})));
    CHECK_THROWS_AS(GTPattern({{1}, {1}}), std::invalid_argument);  // bad row lengths

    CHECK(validate_king(KingPattern(GTPattern({{3, 2, 0, 0}, {3, 1, 0}, {2, 0}, {1}}))));
    // A nonzero entry on a forced-zero cell: p_{2,2}.
    CHECK_FALSE(validate_king(KingPattern(GTPattern({{1, 1, 0, 0}, {1, 1, 0}, {1, 1}, {1}}))));
    CHECK_THROWS_AS(KingPattern(GTPattern({{1, 0, 0}, {1, 0}, {1}})), std::invalid_argument);

    CHECK(king_forced_zero(2, 2));
    CHECK_FALSE(king_forced_zero(2, 3));
    CHECK(king_forced_zero(4, 5));
    // Row 3 may be nonzero in column 5: ceil(5/2) = 3, so the cell is free.
    CHECK_FALSE(king_forced_zero(3, 5));
    CHECK_FALSE(king_forced_zero(3, 6));
}

TEST_CASE("orthogonal patterns derive their shape from the circles") {
    const KingPattern king(GTPattern({{2, 2, 0, 0}, {2, 1, 0}, {2, 0}, {1}}));
    const OrthogonalPattern circled(king, {1});
    CHECK(validate_orthogonal(circled));
    CHECK(shape_of_orthogonal(circled) == Partition{3, 2});
    CHECK(shape_of_orthogonal(OrthogonalPattern(king, {})) == Partition{2, 2});
    // Circling only row 2 would derive (2,3), which is not a partition.
    CHECK_FALSE(validate_orthogonal(OrthogonalPattern(king, {2})));
    CHECK_THROWS_AS(shape_of_orthogonal(OrthogonalPattern(king, {2})), std::invalid_argument);
    CHECK_THROWS_AS(OrthogonalPattern(king, {3}), std::invalid_argument);
}

TEST_CASE("tableau weights") {
    CHECK(weight_tableau(kExampleA) == Monomial{2, 1, 3, 2});
    CHECK(weight_tableau(kExampleB) == Monomial{1, 1, 0});
    CHECK(weight_tableau(kExampleC) == Monomial{1, 0, -1});
}

TEST_CASE("pattern weights") {
    CHECK(weight_pattern_a(GTPattern({{3, 2, 0}, {2, 1}, {2}})) == Monomial{2, 1, 2});
    CHECK(weight_pattern_a(GTPattern({{4}})) == Monomial{4});
    CHECK(weight_pattern_a(GTPattern({{0, 0}, {0}})) == Monomial{0, 0});

    CHECK(weight_pattern_bc(KingPattern(GTPattern({{3, 2, 0, 0}, {3, 1, 0}, {2, 0}, {1}}))) ==
          Monomial{0, 1});
    CHECK(weight_pattern_bc(KingPattern(GTPattern({{0, 0}, {0}}))) == Monomial{0});
    CHECK(weight_pattern_bc(KingPattern(GTPattern({{1, 0}, {1}}))) == Monomial{1});
}

TEST_CASE("rendering is stable") {
    CHECK(render_tableau(Tableau(TableauKind::king, 1, Partition{2}, {{unbarred(1), barred(1)}})) ==
          "1 1b");
    const std::string gt = render_pattern(GTPattern({{2, 0}, {1}}));
    CHECK(gt.find("2 0") != std::string::npos);
    CHECK(gt.find("1") != std::string::npos);
    const OrthogonalPattern p(KingPattern(GTPattern({{1, 0}, {0}})), {1});
    CHECK(render_pattern(p).find("(1)") != std::string::npos);
}
