#pragma once
// Bounded verification sweeps over enumerated corpora. Each check walks its
// whole corpus, reports the corpus size, and stops at the first
// counterexample, which is serialized into the report.

#include "bktab/json_io.hpp"

#include <cstdint>
#include <string>

namespace bktab {

struct VerifyReport {
    std::string check;
    json params;
    long long corpus_size = 0;
    double elapsed_ms = 0.0;
    bool pass = true;
    json counterexample;  // null when pass

    json to_json() const;
};

// Every toggle applied twice returns the starting element, on patterns and
// tableaux alike, for all families with at most n letters/pairs and shapes
// of size at most max_size.
VerifyReport verify_involution(int n, int max_size);

// Each toggle transforms the weight by its signed permutation: an adjacent
// swap for the type A and symplectic toggles, the first-coordinate sign
// flip for the j = 0 generator.
VerifyReport verify_weight_action(int n, int max_size);

// symplectic/orthogonal generating functions are invariant under all signed
// permutations (up to n pairs, size max_size); schur is invariant under
// coordinate permutations (up to n+1 variables, size max_size+1).
VerifyReport verify_symmetry(int n, int max_size);

// orthogonal(λ) equals the sum of symplectic(μ) over all partitions μ with
// λ_i - μ_i ∈ {0,1}.
VerifyReport verify_sum_identity(int n, int max_size);

// Enumeration agrees with the determinant oracles, and the shape-(1) masses
// are 2n (symplectic) and 2n+1 (orthogonal).
VerifyReport verify_character(int n, int max_size);

// The rational lifts square to the identity exactly: the row toggle on
// fully present triangles with 2n rows, and the symplectic lift on
// King-support arrays, on `samples` seeded random inputs each.
VerifyReport verify_detrop(int n, int samples, std::uint64_t seed);

// After the four-step composite (before renormalization) every forced-zero
// cell except (j+1, 2j) still vanishes.
VerifyReport verify_support_obstruction(int n, int max_size);

// The symplectic toggle changes no entry outside rows 2j-1, 2j, 2j+1.
VerifyReport verify_locality(int n, int max_size);

}  // namespace bktab
