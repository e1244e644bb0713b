#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gowers/statevector.hpp"

namespace gowers::circuit {

struct OracleStep {
    std::uint32_t reg;       // always the accumulator register here
    bool conjugate;          // C^|w|: conjugate at odd-weight vertices
    std::uint32_t vertex;    // which vertex of {0,1}^d this query serves
};
struct CaddStep {
    std::uint32_t src;
    std::uint32_t dst;
    int sign;                // +1 add, -1 subtract
};
struct QftStep {
    std::uint32_t reg;
    bool inverse;
};
using Step = std::variant<OracleStep, CaddStep, QftStep>;

struct CircuitPlan {
    std::uint32_t d;
    std::vector<Step> schedule;
    std::uint64_t oracle_mask;   // vertices that actually query the oracle
    std::uint32_t query_count;   // popcount(oracle_mask)
    std::uint32_t qft_count;
    std::uint32_t cadd_count;
};

// Gray-code schedule for the order-d norm circuit: register 0 accumulates
// x + w.h with one CADD toggle per vertex transition, queries U_f or its
// conjugate at every selected vertex, restores register 0, then transforms
// all d+1 registers. Full mask: 2^d queries, d+1 QFTs.
CircuitPlan build_ud_plan(std::uint32_t d);
CircuitPlan build_ud_plan(std::uint32_t d, std::uint64_t oracle_mask);

// Checks that the plan's CADD steps compose to the identity permutation.
bool cadd_schedule_restores(const CircuitPlan& plan, const GroupParams& g);

struct RunResult {
    double zero_probability = 0.0;  // |amplitude|^2 at the zero (or peak) index
    double exact_expectation = 0.0; // real part of that amplitude
    cplx amplitude{0.0, 0.0};

    std::vector<std::uint64_t> peak; // per-register outcome of the peak (shifted runs)
    double peak_probability = 0.0;

    std::uint32_t query_count = 0;
    std::uint32_t qft_count = 0;
    std::uint32_t cadd_count = 0;
    std::uint32_t prep_qft_count = 0; // state-preparation transforms (shifted runs)

    // sampling fields (populated by the sampled entry points)
    std::uint64_t m = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;
    std::uint64_t seed = 0;
};

// Zero-outcome probability equals gowers_norm_bruteforce(f, d)^(2^(d+1)).
RunResult run_ud(const FunctionTable& f, std::uint32_t d);

// As run_ud, plus m measurement samples: p_hat is the empirical zero-outcome
// frequency and [ci_lo, ci_hi] the two-sided Hoeffding interval at level eta.
RunResult run_ud_sampled(const FunctionTable& f, std::uint32_t d, std::uint64_t m,
                         std::uint64_t seed, double eta = 0.01);

// Per-vertex tables; null slots skip the oracle (constant-1 vertex). The
// modulus of the zero amplitude equals |gowers_inner_product(fs, d)|.
RunResult run_inner_product(const std::vector<const FunctionTable*>& fs,
                            std::uint32_t d);

// Two-register progression circuit: phases g(x) g(x+y) g(x+2y) accumulated
// with stacked CADDs, both registers transformed; |amplitude at zero| = |T(g)|.
RunResult run_t3_circuit(const FunctionTable& g);

// Ancilla Hadamard test around the same phase product; returns Re T(g) in
// exact_expectation, no output QFTs. sampled < 0 means exact ancilla readout.
RunResult run_t3_hadamard(const FunctionTable& g);
RunResult run_t3_hadamard_sampled(const FunctionTable& g, std::uint64_t m,
                                  std::uint64_t seed, double eta = 0.01);

// Basis preparation with fixed shifts, per-register QFTs, then the identical
// order-d schedule. The output distribution is the unshifted one translated
// to the negated shifts; peak fields record the observed maximum.
RunResult run_shifted(const FunctionTable& f, std::uint32_t d,
                      const std::vector<GroupVector>& shifts);

} // namespace gowers::circuit
