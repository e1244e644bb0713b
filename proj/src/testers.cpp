#include "gowers/testers.hpp"

#include <cmath>
#include <stdexcept>

namespace gowers::testers {

TestPlan plan_samples(double delta, double eta) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("gap must lie in (0, 1]");
    if (!(eta > 0.0) || eta >= 1.0)
        throw std::invalid_argument("failure budget must lie in (0, 1)");
    TestPlan plan;
    plan.delta = delta;
    plan.eta = eta;
    plan.tau = 1.0 - delta / 2.0;
    plan.m = static_cast<std::uint64_t>(
        std::ceil(2.0 / (delta * delta) * std::log(2.0 / eta)));
    return plan;
}

namespace {

Verdict run_planned(const FunctionTable& f, std::uint32_t order, TestPlan plan,
                    std::uint64_t seed) {
    Verdict v;
    v.run = circuit::run_ud_sampled(f, order, plan.m, seed, plan.eta);
    v.p_hat = v.run.p_hat;
    v.m_used = v.run.m;
    v.plan = plan;
    v.accept = v.p_hat >= plan.tau;
    return v;
}

} // namespace

Verdict test_degree_d_exact_vs_random(const FunctionTable& f, std::uint32_t d,
                                      double eta, std::uint64_t seed) {
    const double pn = static_cast<double>(f.params().order());
    const double raw = 1.0 - 4.0 / pn;
    if (raw <= 0.0)
        throw std::invalid_argument(
            "gap formula degenerates: p^n <= 4 leaves no room below the YES value");
    TestPlan plan = plan_samples(std::max(0.5, raw), eta);
    plan.d = d;
    plan.provenance = GapProvenance::exact_vs_random;
    plan.tau = 1.0 - plan.delta / 2.0;
    return run_planned(f, d + 1, plan, seed);
}

Verdict test_linear(const FunctionTable& f, double epsilon, double eta,
                    std::uint64_t seed) {
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    TestPlan plan = plan_samples(1.0 - std::pow(epsilon, 4.0), eta);
    plan.d = 1;
    plan.provenance = GapProvenance::linear_lemma;
    return run_planned(f, 2, plan, seed);
}

Verdict test_character_two_sided(const FunctionTable& f, double eps1, double eps2,
                                 double eta, std::uint64_t seed) {
    if (!(eps1 > 0.0) || eps1 > 1.0 || !(eps2 > 0.0) || eps2 > 1.0)
        throw std::invalid_argument("eps1 and eps2 must lie in (0, 1]");
    if (!(eps1 > std::sqrt(eps2)))
        throw std::invalid_argument("need eps1 > sqrt(eps2) for a positive gap");
    const double yes_floor = std::pow(eps1, 8.0);
    const double no_ceiling = std::pow(eps2, 4.0);
    TestPlan plan = plan_samples(yes_floor - no_ceiling, eta);
    plan.d = 1;
    plan.provenance = GapProvenance::character_gap;
    plan.tau = (yes_floor + no_ceiling) / 2.0; // midpoint of the promise interval
    return run_planned(f, 2, plan, seed);
}

Verdict test_degree_d_far(const FunctionTable& f, std::uint32_t d, double delta_user,
                          double eta, std::uint64_t seed, bool allow_any_regime) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    const bool in_regime = d <= 3 || (f.params().p() == 2 && d <= 5);
    if (!in_regime && !allow_any_regime)
        throw std::invalid_argument(
            "no quantitative inverse theorem covers this (p, d); override to proceed");
    TestPlan plan = plan_samples(delta_user, eta);
    plan.d = d;
    plan.provenance = GapProvenance::user_supplied;
    return run_planned(f, d + 1, plan, seed);
}

} // namespace gowers::testers
