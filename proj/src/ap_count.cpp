#include "gowers/ap_count.hpp"

#include <cmath>
#include <stdexcept>

#include "gowers/rng.hpp"

namespace gowers::apcount {

namespace {

double convert_t(double alpha, double t_g) {
    // T(1 - 2f) expands to 1 - 6a + 12a^2 - 8T(f): the three point pairs of a
    // progression are each uniform on G^2 for p >= 3, so every bilinear
    // cross-term averages to a^2.
    return (1.0 - 6.0 * alpha + 12.0 * alpha * alpha - t_g) / 8.0;
}

} // namespace

SetInstance::SetInstance(FunctionTable ind) : indicator(std::move(ind)), alpha(0.0) {
    if (indicator.params().p() < 3)
        throw std::domain_error("3-term progressions degenerate over F_2 (x + 2y = x)");
    std::uint64_t members = 0;
    for (std::uint64_t x = 0; x < indicator.size(); ++x) {
        cplx v = indicator.value(x);
        if (v.imag() != 0.0 || (v.real() != 0.0 && v.real() != 1.0))
            throw std::domain_error("indicator values must be exactly 0 or 1");
        members += v.real() == 1.0;
    }
    alpha = static_cast<double>(members) / static_cast<double>(indicator.size());
}

FunctionTable SetInstance::phase() const {
    std::vector<cplx> vals(indicator.size());
    for (std::uint64_t x = 0; x < indicator.size(); ++x)
        vals[x] = 1.0 - 2.0 * indicator.value(x).real();
    return FunctionTable(indicator.params(), std::move(vals));
}

SetInstance random_set(const GroupParams& g, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("density must lie in [0, 1]");
    CounterRng rng(seed, kStreamSet);
    std::vector<cplx> vals(g.order());
    for (auto& v : vals) v = rng.uniform() < density ? 1.0 : 0.0;
    return SetInstance(FunctionTable(g, std::move(vals)));
}

ApEstimate estimate_exact(const SetInstance& S) {
    harmonic::ApCount c = harmonic::count_3aps_exact(S.indicator);
    ApEstimate est;
    est.method = Method::exact;
    est.t_f = c.t_f;
    est.count = static_cast<double>(c.count);
    est.count_exact = c.count;
    est.count_nondegenerate = c.nondegenerate;
    est.alpha = S.alpha;
    return est;
}

ApEstimate estimate_quantum_t3(const SetInstance& S) {
    const double n2 = static_cast<double>(S.indicator.size()) *
                      static_cast<double>(S.indicator.size());
    ApEstimate est;
    est.method = Method::quantum_t3;
    est.run = circuit::run_t3_hadamard(S.phase());
    est.t_g = est.run.exact_expectation;
    est.alpha = S.alpha;
    est.t_f = convert_t(S.alpha, est.t_g);
    est.count = n2 * est.t_f;
    return est;
}

ApEstimate estimate_quantum_t3_sampled(const SetInstance& S, std::uint64_t m,
                                       std::uint64_t seed, double eta) {
    const double n2 = static_cast<double>(S.indicator.size()) *
                      static_cast<double>(S.indicator.size());
    ApEstimate est;
    est.method = Method::quantum_t3;
    est.run = circuit::run_t3_hadamard_sampled(S.phase(), m, seed, eta);
    est.t_g = est.run.exact_expectation;
    est.alpha = S.alpha;
    est.t_f = convert_t(S.alpha, est.t_g);
    est.count = n2 * est.t_f;
    est.m = m;
    est.seed = seed;
    // Hoeffding radius on the ancilla frequency, through T(g) = 2p0 - 1 and
    // the /8 in the conversion.
    est.t_radius = 2.0 * std::sqrt(std::log(2.0 / eta) / (2.0 * static_cast<double>(m))) / 8.0;
    est.t_lo = est.t_f - est.t_radius;
    est.t_hi = est.t_f + est.t_radius;
    return est;
}

ApEstimate u2_bounds(const SetInstance& S) {
    ApEstimate est;
    est.method = Method::u2_bounds;
    est.alpha = S.alpha;
    est.u2_indicator = harmonic::gowers_norm_bruteforce(S.indicator, 2);
    est.run = circuit::run_ud(S.phase(), 2);
    est.u2_phase = std::pow(est.run.zero_probability, 1.0 / 8.0);

    const double t_exact = harmonic::count_3aps_exact(S.indicator).t_f;
    est.t_f = t_exact;
    est.count = t_exact * static_cast<double>(S.indicator.size()) *
                static_cast<double>(S.indicator.size());
    est.t_hi = std::pow(est.u2_indicator, 2.0);
    est.t_lo = std::pow(est.u2_indicator, 5.0);
    est.lower_bound_violated = std::abs(t_exact) + 1e-12 < est.t_lo;
    return est;
}

QueryCostReport query_cost_report(const SetInstance& S, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    QueryCostReport r{};
    r.epsilon = epsilon;
    harmonic::ApCount c = harmonic::count_3aps_exact(S.indicator);
    r.t_f = c.t_f;
    r.solutions = c.count;
    r.domain_pairs = S.indicator.size() * S.indicator.size();
    r.u2 = harmonic::gowers_norm_bruteforce(S.indicator, 2);
    r.divergent = c.count == 0;
    const double eps2 = epsilon * epsilon;
    if (!r.divergent) {
        r.gowers_term = 1.0 / (eps2 * std::pow(r.u2, 10.0));
        r.gowers_term_via_t = 1.0 / (eps2 * std::pow(r.t_f, 5.0));
        r.grover_term =
            std::sqrt(static_cast<double>(r.domain_pairs) / static_cast<double>(c.count)) /
            epsilon;
    }
    return r;
}

} // namespace gowers::apcount
