#pragma once
// Partitions, tableaux over three alphabets, and triangular patterns
// (Gelfand-Tsetlin, King, orthogonal) with validity predicates, weight maps
// and plain-text rendering.

#include "bktab/algebra.hpp"

#include <initializer_list>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace bktab {

// Weakly decreasing tuple of nonnegative integers; trailing zeros are
// stripped, so equality is equality of the underlying partitions regardless
// of ambient length.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // sum of the parts
    int part(int i) const;  // 1-based; 0 beyond length()
    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> padded(int n) const;  // throws if n < length()

    bool operator==(const Partition&) const = default;
    // Lexicographic with implicit zero padding; a total order usable as a
    // map key.
    bool operator<(const Partition& rhs) const;

private:
    std::vector<int> parts_;
};

// Alphabet selector. ssyt tableaux use {1 < ... < n}; king tableaux use the
// signed alphabet {1 < 1' < 2 < 2' < ... < n < n'} (primes denote barred
// letters); orthogonal tableaux extend the signed alphabet by a maximal
// letter ∞. Barred letters are encoded as even codes (i ↔ 2i-1, ī ↔ 2i) so
// that integer order on codes is alphabet order for every kind.
enum class TableauKind { ssyt, king, orthogonal };

inline constexpr int inf_code = std::numeric_limits<int>::max();

struct Letter {
    int code = 0;
    auto operator<=>(const Letter&) const = default;
};

inline Letter unbarred(int i) { return Letter{2 * i - 1}; }
inline Letter barred(int i) { return Letter{2 * i}; }
inline Letter inf_letter() { return Letter{inf_code}; }
inline bool is_inf(Letter a) { return a.code == inf_code; }

// "3" / "3b" / "inf" display names; for ssyt tableaux the code is the letter.
std::string letter_name(Letter a, TableauKind kind);
Letter letter_from_name(const std::string& name, TableauKind kind);

// Filling of a Young diagram by letters of one alphabet. Construction
// enforces only well-formedness: rows match the shape and letters lie in the
// alphabet. Semistandardness and the symplectic/orthogonal conditions are
// separate predicates.
class Tableau {
public:
    Tableau() = default;
    Tableau(TableauKind kind, int n, Partition shape, std::vector<std::vector<Letter>> rows);

    TableauKind kind() const { return kind_; }
    int n() const { return n_; }
    const Partition& shape() const { return shape_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<Letter>& row(int i) const;  // 1-based
    Letter at(int i, int j) const;                // 1-based (row, column)
    const std::vector<std::vector<Letter>>& rows() const { return rows_; }

    bool operator==(const Tableau&) const = default;

private:
    TableauKind kind_ = TableauKind::ssyt;
    int n_ = 0;
    Partition shape_;
    std::vector<std::vector<Letter>> rows_;
};

// Rows weakly increase left to right, columns strictly increase downward.
bool is_semistandard(const Tableau& t);

// Semistandard and every letter in row i is at least the i-th alphabet
// letter (code >= 2i-1). Requires a king-kind tableau.
bool is_king_symplectic(const Tableau& t);

// Every ∞ sits alone at the right end of its row, and deleting the ∞ cells
// leaves a straight-shape King symplectic tableau. Requires an
// orthogonal-kind tableau.
bool is_sundaram_orthogonal(const Tableau& t);

// Triangular array of integers: row j has j entries, stored top row (length
// N) first. Construction enforces the triangular layout only; entry values
// are checked by validate_gt.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<int>> rows);
    GTPattern(std::initializer_list<std::vector<int>> rows)
        : GTPattern(std::vector<std::vector<int>>(rows)) {}

    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int j) const;  // 1-based, length j
    int at(int i, int j) const;   // entry i of row j, 1 <= i <= j
    void set(int i, int j, int v);

    bool operator==(const GTPattern&) const = default;

private:
    std::vector<std::vector<int>> rows_;  // rows_[k] has N-k entries
};

// Nonnegative entries and interlacing: p(i,j+1) >= p(i,j) >= p(i+1,j+1).
bool validate_gt(const GTPattern& p);

// Support condition for King patterns: entry (i,j) is forced to zero when
// i > ceil(j/2).
bool king_forced_zero(int i, int j);

// GT pattern with an even number of rows whose support avoids the forced
// zeros; the wrapper enforces evenness, validate_king the rest.
class KingPattern {
public:
    KingPattern() = default;
    explicit KingPattern(GTPattern p);

    int n() const { return p_.row_count() / 2; }
    const GTPattern& pattern() const { return p_; }
    GTPattern& pattern() { return p_; }

    bool operator==(const KingPattern&) const = default;

private:
    GTPattern p_;
};

bool validate_king(const KingPattern& p);

// King pattern with a set of circled top-row positions; circling position i
// adds one cell to row i of the shape the pattern describes.
class OrthogonalPattern {
public:
    OrthogonalPattern() = default;
    OrthogonalPattern(KingPattern king, std::set<int> circled);

    const KingPattern& king() const { return king_; }
    KingPattern& king() { return king_; }
    const std::set<int>& circled() const { return circled_; }

    bool operator==(const OrthogonalPattern&) const = default;

private:
    KingPattern king_;
    std::set<int> circled_;
};

// Valid King pattern, circled ⊆ {1..n}, and the derived shape is a
// partition.
bool validate_orthogonal(const OrthogonalPattern& p);

// λ_i = top(i) + 1 for circled i, top(i) otherwise; throws
// std::invalid_argument when that tuple is not weakly decreasing.
Partition shape_of_orthogonal(const OrthogonalPattern& p);

// Exponent vector counting letters: +1 per unbarred i, -1 per barred i for
// the signed alphabets (∞ contributes nothing); +1 per letter i for ssyt.
// Length n() in all cases.
Monomial weight_tableau(const Tableau& t);

// Exponent of x_j is S_j - S_{j-1} where S_j is the sum of row j. Length =
// row count.
Monomial weight_pattern_a(const GTPattern& p);

// Exponent of x_j is 2*S_{2j-1} - S_{2j} - S_{2j-2}. Length n().
Monomial weight_pattern_bc(const KingPattern& p);

// ASCII layouts: tableaux as rows of letters, patterns as an indented
// triangle (top row first); circled entries render as "(v)".
std::string render_tableau(const Tableau& t);
std::string render_pattern(const GTPattern& p);
std::string render_pattern(const OrthogonalPattern& p);

}  // namespace bktab
