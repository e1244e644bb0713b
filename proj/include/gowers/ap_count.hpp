#pragma once

#include <cstdint>
#include <optional>

#include "gowers/circuit.hpp"
#include "gowers/harmonic.hpp"

namespace gowers::apcount {

// A subset of F_p^n given by its 0/1 indicator, with its density and the
// +-1 phase encoding g = 1 - 2*indicator used by the quantum path.
struct SetInstance {
    explicit SetInstance(FunctionTable indicator);

    FunctionTable indicator;
    double alpha; // density E[indicator]

    FunctionTable phase() const; // g(x) = 1 - 2*indicator(x), unimodular
};

// Draws each point independently with the given density.
SetInstance random_set(const GroupParams& g, double density, std::uint64_t seed);

enum class Method { exact, quantum_t3, u2_bounds };

struct ApEstimate {
    Method method;
    double t_f = 0.0;                  // estimated T(indicator)
    double count = 0.0;                // N^2 * t_f
    std::optional<std::uint64_t> count_exact;         // exact path only
    std::optional<std::uint64_t> count_nondegenerate; // exact path only

    // diagnostics
    double t_g = 0.0;          // T(phase) feeding the conversion
    double alpha = 0.0;
    double u2_indicator = 0.0; // brute-force ||indicator||_U2
    double u2_phase = 0.0;     // circuit ||phase||_U2

    // interval methods
    double t_lo = 0.0, t_hi = 0.0;
    bool lower_bound_violated = false; // the reported (weak) direction

    // sampled mode
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    double t_radius = 0.0;

    circuit::RunResult run;
};

// Exact classical count (degenerate d = 0 progressions included; the
// nondegenerate count is reported alongside).
ApEstimate estimate_exact(const SetInstance& S);

// Quantum path: Re T(g) from the Hadamard-test circuit, then the multilinear
// conversion T(f) = (1 - 6a + 12a^2 - T(g)) / 8 with the density a read
// classically. Exact readout by default; m >= 1 switches to sampling.
ApEstimate estimate_quantum_t3(const SetInstance& S);
ApEstimate estimate_quantum_t3_sampled(const SetInstance& S, std::uint64_t m,
                                       std::uint64_t seed, double eta = 0.05);

// Two-sided U^2 bracket for |T|: upper bound ||f||_U2^2 (always valid),
// lower bound ||f||_U2^5 (reported but known-weak; flagged when violated).
ApEstimate u2_bounds(const SetInstance& S);

struct QueryCostReport {
    double epsilon;
    double t_f;
    double u2;
    std::uint64_t domain_pairs; // N^2
    std::uint64_t solutions;    // M = exact count
    double gowers_term;         // 1 / (eps^2 ||f||_U2^10)
    double gowers_term_via_t;   // 1 / (eps^2 T^5)
    double grover_term;         // sqrt(N^2 / M) / eps
    bool divergent;             // T(f) = 0
};

// Plug-in comparison of the norm-estimation route against Grover-style
// counting on this instance; arithmetic only, no circuit runs.
QueryCostReport query_cost_report(const SetInstance& S, double epsilon);

} // namespace gowers::apcount
