#pragma once

#include <cstdint>
#include <string>

#include "gowers/circuit.hpp"

namespace gowers::testers {

enum class GapProvenance { linear_lemma, user_supplied, exact_vs_random, character_gap };

struct TestPlan {
    std::uint32_t d = 0;       // polynomial degree under test
    double delta = 0.0;        // promise gap
    double tau = 0.0;          // acceptance threshold on p_hat
    std::uint64_t m = 0;       // sample count
    double eta = 0.0;          // failure budget
    GapProvenance provenance = GapProvenance::user_supplied;
};

// m = ceil((2 / delta^2) ln(2 / eta)), tau = 1 - delta / 2 (two-sided
// Hoeffding with the threshold at the midpoint of the promise interval).
TestPlan plan_samples(double delta, double eta);

struct Verdict {
    bool accept = false;
    double p_hat = 0.0;
    std::uint64_t m_used = 0;
    TestPlan plan;
    circuit::RunResult run;
};

// YES: degree-d phase polynomial (zero-outcome probability exactly 1).
// NO: Haar-random. Gap from Markov on the Haar expectation bound with slack
// 4; degenerates (error) when p^n <= 4.
Verdict test_degree_d_exact_vs_random(const FunctionTable& f, std::uint32_t d,
                                      double eta, std::uint64_t seed);

// YES: linear phase polynomial. NO: epsilon-far from all of them. Gap
// delta = 1 - epsilon^4 via the U^2 spectrum bound; order-2 circuit.
Verdict test_linear(const FunctionTable& f, double epsilon, double eta,
                    std::uint64_t seed);

// YES: some character correlates above eps1. NO: eps2-far from all
// characters. Needs eps1 > sqrt(eps2); gap eps1^8 - eps2^4, threshold at the
// midpoint of [eps2^4, eps1^8].
Verdict test_character_two_sided(const FunctionTable& f, double eps1, double eps2,
                                 double eta, std::uint64_t seed);

// Degree-d tester with a caller-supplied gap (the inverse-theorem delta is
// non-constructive for d >= 3). Regime guard: d <= 3 for any p, d <= 5 for
// p = 2; pass allow_any_regime to override.
Verdict test_degree_d_far(const FunctionTable& f, std::uint32_t d, double delta_user,
                          double eta, std::uint64_t seed,
                          bool allow_any_regime = false);

} // namespace gowers::testers
