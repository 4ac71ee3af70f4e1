#pragma once
// Brute-force reference enumerators: fill the diagram cell by cell with
// every letter of the alphabet and keep the fillings the validators accept.
// Deliberately independent of the pattern-based streaming enumeration so the
// two can cross-check each other.

#include "bktab/combinatorics.hpp"
#include "bktab/oracles.hpp"

#include <vector>

namespace brute {

inline std::vector<bktab::Tableau> all_fillings(bktab::TableauKind kind, int n,
                                                const bktab::Partition& shape,
                                                const std::vector<bktab::Letter>& alphabet,
                                                bool (*keep)(const bktab::Tableau&)) {
    std::vector<bktab::Tableau> out;
    std::vector<std::vector<bktab::Letter>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i)
        rows[i].assign(shape.part(i + 1), bktab::Letter{0});

    // Odometer over all cells in row-major order.
    std::vector<std::size_t> digits;
    std::size_t cells = 0;
    for (const auto& row : rows) cells += row.size();
    digits.assign(cells, 0);
    const auto materialize = [&] {
        std::size_t k = 0;
        for (auto& row : rows)
            for (auto& cell : row) cell = alphabet[digits[k++]];
    };
    if (cells == 0) {
        const bktab::Tableau t(kind, n, shape, rows);
        if (keep(t)) out.push_back(t);
        return out;
    }
    while (true) {
        materialize();
        const bktab::Tableau t(kind, n, shape, rows);
        if (keep(t)) out.push_back(t);
        std::size_t k = 0;
        while (k < cells && digits[k] + 1 == alphabet.size()) digits[k++] = 0;
        if (k == cells) break;
        ++digits[k];
    }
    return out;
}

inline std::vector<bktab::Tableau> all_ssyt(int n, const bktab::Partition& shape) {
    std::vector<bktab::Letter> alphabet;
    for (int k = 1; k <= n; ++k) alphabet.push_back(bktab::Letter{k});
    return all_fillings(bktab::TableauKind::ssyt, n, shape, alphabet, &bktab::is_semistandard);
}

inline std::vector<bktab::Tableau> all_king(int n, const bktab::Partition& shape) {
    std::vector<bktab::Letter> alphabet;
    for (int k = 1; k <= 2 * n; ++k) alphabet.push_back(bktab::Letter{k});
    return all_fillings(bktab::TableauKind::king, n, shape, alphabet, &bktab::is_king_symplectic);
}

inline std::vector<bktab::Tableau> all_orthogonal(int n, const bktab::Partition& shape) {
    std::vector<bktab::Letter> alphabet;
    for (int k = 1; k <= 2 * n; ++k) alphabet.push_back(bktab::Letter{k});
    alphabet.push_back(bktab::inf_letter());
    return all_fillings(bktab::TableauKind::orthogonal, n, shape, alphabet,
                        &bktab::is_sundaram_orthogonal);
}

// Floor-of-log2 estimate for a positive rational, accurate to within one bit
// on each side — plenty for reading off exponents of t = 2^-k with large k.
inline double approx_log2(const bktab::Rational& q) {
    const bktab::Int num = boost::multiprecision::numerator(q);
    const bktab::Int den = boost::multiprecision::denominator(q);
    return static_cast<double>(boost::multiprecision::msb(num)) -
           static_cast<double>(boost::multiprecision::msb(den));
}

}  // namespace brute
