#include "bktab/verify.hpp"

#include "bktab/benderknuth.hpp"
#include "bktab/bijections.hpp"
#include "bktab/enumeration.hpp"
#include "bktab/oracles.hpp"

#include <chrono>
#include <utility>

namespace bktab {

json VerifyReport::to_json() const {
    json out;
    out["check"] = check;
    out["params"] = params;
    out["corpus_size"] = corpus_size;
    out["elapsed_ms"] = elapsed_ms;
    out["pass"] = pass;
    out["counterexample"] = counterexample;
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs `body` (which must set report.pass/counterexample on failure) over
// the standard corpus bookkeeping.
template <typename Body>
VerifyReport run_check(std::string name, json params, const Body& body) {
    VerifyReport report;
    report.check = std::move(name);
    report.params = std::move(params);
    const auto start = Clock::now();
    body(report);
    report.elapsed_ms = ms_since(start);
    return report;
}

json involution_failure(const char* family, const Partition& shape, int j, const json& element) {
    json out;
    out["family"] = family;
    out["shape"] = shape.parts();
    out["j"] = j;
    out["element"] = element;
    return out;
}

// Applies per-element checks across the three pattern families (and their
// tableau forms) for all sub-alphabets up to n and shapes up to max_size.
// Returns false to stop early.
template <typename OnGT, typename OnKing, typename OnOrth>
void sweep_families(int n, int max_size, VerifyReport& report, const OnGT& on_gt,
                    const OnKing& on_king, const OnOrth& on_orth) {
    for (int m = 1; m <= n && report.pass; ++m) {
        for (const Partition& shape : partitions_up_to(m, max_size)) {
            if (!report.pass) break;
            enum_gt(m, shape, [&](const GTPattern& p) {
                if (!report.pass) return;
                ++report.corpus_size;
                on_gt(m, shape, p);
            });
            enum_king(m, shape, [&](const KingPattern& p) {
                if (!report.pass) return;
                ++report.corpus_size;
                on_king(m, shape, p);
            });
            enum_orthogonal(m, shape, [&](const OrthogonalPattern& p) {
                if (!report.pass) return;
                ++report.corpus_size;
                on_orth(m, shape, p);
            });
        }
    }
}

}  // namespace

VerifyReport verify_involution(int n, int max_size) {
    return run_check("involution", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        sweep_families(
            n, max_size, report,
            [&](int m, const Partition& shape, const GTPattern& p) {
                const Tableau t = pattern_to_tableau(p);
                for (int j = 1; j < m; ++j) {
                    if (bk_a_pattern(bk_a_pattern(p, j), j) != p ||
                        bk_a_tableau(bk_a_tableau(t, j), j) != t) {
                        report.pass = false;
                        report.counterexample = involution_failure("gt", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            },
            [&](int m, const Partition& shape, const KingPattern& p) {
                const Tableau t = king_pattern_to_tableau(p);
                if (bk_first_pattern(bk_first_pattern(p)) != p) {
                    report.pass = false;
                    report.counterexample = involution_failure("king", shape, 0, pattern_to_json(p));
                    return;
                }
                for (int j = 1; j < m; ++j) {
                    if (bk_c_pattern(bk_c_pattern(p, j), j) != p ||
                        bk_c_tableau(bk_c_tableau(t, j), j) != t) {
                        report.pass = false;
                        report.counterexample = involution_failure("king", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            },
            [&](int m, const Partition& shape, const OrthogonalPattern& p) {
                for (int j = 0; j < m; ++j) {
                    if (bk_b(bk_b(p, j), j) != p) {
                        report.pass = false;
                        report.counterexample =
                            involution_failure("orthogonal", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            });
    });
}

VerifyReport verify_weight_action(int n, int max_size) {
    return run_check("weight-action", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        sweep_families(
            n, max_size, report,
            [&](int m, const Partition& shape, const GTPattern& p) {
                const Monomial w = weight_pattern_a(p);
                const Tableau t = pattern_to_tableau(p);
                for (int j = 1; j < m; ++j) {
                    const Monomial expect = SignedPermutation::adjacent_swap(m, j).apply(w);
                    if (weight_pattern_a(bk_a_pattern(p, j)) != expect ||
                        weight_tableau(bk_a_tableau(t, j)) != expect) {
                        report.pass = false;
                        report.counterexample = involution_failure("gt", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            },
            [&](int m, const Partition& shape, const KingPattern& p) {
                const Monomial w = weight_pattern_bc(p);
                const Tableau t = king_pattern_to_tableau(p);
                if (weight_pattern_bc(bk_first_pattern(p)) !=
                    SignedPermutation::flip_first(m).apply(w)) {
                    report.pass = false;
                    report.counterexample = involution_failure("king", shape, 0, pattern_to_json(p));
                    return;
                }
                for (int j = 1; j < m; ++j) {
                    const Monomial expect = SignedPermutation::adjacent_swap(m, j).apply(w);
                    if (weight_pattern_bc(bk_c_pattern(p, j)) != expect ||
                        weight_tableau(bk_c_tableau(t, j)) != expect) {
                        report.pass = false;
                        report.counterexample = involution_failure("king", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            },
            [&](int m, const Partition& shape, const OrthogonalPattern& p) {
                const Monomial w = weight_pattern_bc(p.king());
                for (int j = 0; j < m; ++j) {
                    const Monomial expect = (j == 0 ? SignedPermutation::flip_first(m)
                                                    : SignedPermutation::adjacent_swap(m, j))
                                                .apply(w);
                    if (weight_pattern_bc(bk_b(p, j).king()) != expect) {
                        report.pass = false;
                        report.counterexample =
                            involution_failure("orthogonal", shape, j, pattern_to_json(p));
                        return;
                    }
                }
            });
    });
}

VerifyReport verify_symmetry(int n, int max_size) {
    return run_check("symmetry", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        for (int m = 1; m <= n && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size)) {
                ++report.corpus_size;
                const char* family = nullptr;
                if (!is_w_invariant(symplectic(m, shape)))
                    family = "symplectic";
                else if (!is_w_invariant(orthogonal(m, shape)))
                    family = "orthogonal";
                if (family) {
                    report.pass = false;
                    report.counterexample = {{"family", family}, {"n", m}, {"shape", shape.parts()}};
                    break;
                }
            }
        }
        for (int m = 1; m <= n + 1 && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size + 1)) {
                ++report.corpus_size;
                if (!is_symmetric(schur(m, shape))) {
                    report.pass = false;
                    report.counterexample = {{"family", "schur"}, {"n", m}, {"shape", shape.parts()}};
                    break;
                }
            }
        }
    });
}

VerifyReport verify_sum_identity(int n, int max_size) {
    return run_check("sum-identity", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        for (int m = 1; m <= n && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size)) {
                ++report.corpus_size;
                LaurentPolynomial sum(m);
                const std::vector<int> lambda = shape.padded(m);
                for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
                    std::vector<int> mu = lambda;
                    bool ok = true;
                    for (int i = 1; i <= m; ++i) {
                        if (mask & (1ul << (i - 1))) mu[i - 1] -= 1;
                        if (mu[i - 1] < 0 || (i > 1 && mu[i - 2] < mu[i - 1])) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) sum += symplectic(m, Partition(mu));
                }
                if (orthogonal(m, shape) != sum) {
                    report.pass = false;
                    report.counterexample = {{"n", m}, {"shape", shape.parts()}};
                    break;
                }
            }
        }
    });
}

VerifyReport verify_character(int n, int max_size) {
    return run_check("character", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        for (int m = 1; m <= n && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size)) {
                ++report.corpus_size;
                const char* family = nullptr;
                if (symplectic(m, shape) != character_c(m, shape))
                    family = "symplectic";
                else if (orthogonal(m, shape) != character_b(m, shape))
                    family = "orthogonal";
                if (family) {
                    report.pass = false;
                    report.counterexample = {{"family", family}, {"n", m}, {"shape", shape.parts()}};
                    break;
                }
            }
            if (report.pass) {
                const Partition one{1};
                if (character_c(m, one).mass() != 2 * m || character_b(m, one).mass() != 2 * m + 1) {
                    report.pass = false;
                    report.counterexample = {{"family", "mass"}, {"n", m}};
                }
            }
        }
    });
}

VerifyReport verify_detrop(int n, int samples, std::uint64_t seed) {
    return run_check("detrop", {{"n", n}, {"samples", samples}, {"seed", seed}},
                     [&](VerifyReport& report) {
                         std::mt19937_64 rng(seed);
                         for (int s = 0; s < samples && report.pass; ++s) {
                             const RationalPattern full = random_full_pattern(2 * n, rng);
                             for (int j = 1; j < full.row_count(); ++j) {
                                 ++report.corpus_size;
                                 if (detrop_bk_a(detrop_bk_a(full, j), j) != full) {
                                     report.pass = false;
                                     report.counterexample = {{"map", "detrop_bk_a"}, {"sample", s}, {"j", j}};
                                     return;
                                 }
                             }
                             const RationalPattern king = random_king_pattern(n, rng);
                             for (int j = 1; j <= n - 1; ++j) {
                                 ++report.corpus_size;
                                 if (detrop_bk_c(detrop_bk_c(king, j), j) != king) {
                                     report.pass = false;
                                     report.counterexample = {{"map", "detrop_bk_c"}, {"sample", s}, {"j", j}};
                                     return;
                                 }
                             }
                         }
                     });
}

VerifyReport verify_support_obstruction(int n, int max_size) {
    return run_check("support-obstruction", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        for (int m = 2; m <= n && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size)) {
                if (!report.pass) break;
                enum_king(m, shape, [&](const KingPattern& p) {
                    if (!report.pass) return;
                    for (int j = 1; j < m; ++j) {
                        ++report.corpus_size;
                        const GTPattern& four = bk_c_pattern_traced(p, j).step4;
                        for (int col = 1; col <= 2 * m; ++col) {
                            for (int i = 1; i <= col; ++i) {
                                if (king_forced_zero(i, col) && !(i == j + 1 && col == 2 * j) &&
                                    four.at(i, col) != 0) {
                                    report.pass = false;
                                    report.counterexample =
                                        involution_failure("king", shape, j, pattern_to_json(p));
                                    return;
                                }
                            }
                        }
                    }
                });
            }
        }
    });
}

VerifyReport verify_locality(int n, int max_size) {
    return run_check("locality", {{"n", n}, {"max_size", max_size}}, [&](VerifyReport& report) {
        for (int m = 2; m <= n && report.pass; ++m) {
            for (const Partition& shape : partitions_up_to(m, max_size)) {
                if (!report.pass) break;
                enum_king(m, shape, [&](const KingPattern& p) {
                    if (!report.pass) return;
                    for (int j = 1; j < m; ++j) {
                        ++report.corpus_size;
                        const KingPattern out = bk_c_pattern(p, j);
                        for (int row = 1; row <= 2 * m; ++row) {
                            if (row >= 2 * j - 1 && row <= 2 * j + 1) continue;
                            if (out.pattern().row(row) != p.pattern().row(row)) {
                                report.pass = false;
                                report.counterexample =
                                    involution_failure("king", shape, j, pattern_to_json(p));
                                return;
                            }
                        }
                    }
                });
            }
        }
    });
}

}  // namespace bktab
