#include "gowers/circuit.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gowers::circuit {

namespace {

using qsim::RegisterLayout;
using qsim::StateVector;

struct Counters {
    std::uint32_t queries = 0;
    std::uint32_t qfts = 0;
    std::uint32_t cadds = 0;
};

// Runs a schedule; the oracle table for each vertex comes from `table_at`
// (null table = skip, counted by the plan as an unselected vertex).
template <typename TableAt>
Counters execute(StateVector& state, const CircuitPlan& plan, TableAt&& table_at) {
    Counters c;
    for (const Step& step : plan.schedule) {
        if (const auto* o = std::get_if<OracleStep>(&step)) {
            const FunctionTable* t = table_at(o->vertex);
            if (t) {
                qsim::apply_phase_oracle(state, o->reg, *t, o->conjugate);
                ++c.queries;
            }
        } else if (const auto* a = std::get_if<CaddStep>(&step)) {
            qsim::apply_cadd(state, a->src, a->dst, a->sign);
            ++c.cadds;
        } else {
            const auto& q = std::get<QftStep>(step);
            qsim::apply_qft(state, q.reg, q.inverse);
            ++c.qfts;
        }
    }
    return c;
}

double hoeffding_radius(std::uint64_t m, double eta) {
    return std::sqrt(std::log(2.0 / eta) / (2.0 * static_cast<double>(m)));
}

void fill_sampling_fields(RunResult& rr, const StateVector& state, std::uint64_t m,
                          std::uint64_t seed, double eta, std::uint64_t zero_index) {
    if (m < 1) throw std::invalid_argument("sample count must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t idx : qsim::sample(state, m, seed))
        if (idx == zero_index) ++hits;
    rr.m = m;
    rr.seed = seed;
    rr.p_hat = static_cast<double>(hits) / static_cast<double>(m);
    const double r = hoeffding_radius(m, eta);
    rr.ci_lo = std::max(0.0, rr.p_hat - r);
    rr.ci_hi = std::min(1.0, rr.p_hat + r);
}

} // namespace

CircuitPlan build_ud_plan(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("circuit order must be >= 1");
    return build_ud_plan(d, (std::uint64_t{1} << (1u << d)) - 1);
}

CircuitPlan build_ud_plan(std::uint32_t d, std::uint64_t oracle_mask) {
    if (d < 1) throw std::invalid_argument("circuit order must be >= 1");
    if (d > 20) throw std::invalid_argument("circuit order is unreasonably large");
    const std::uint64_t vertices = std::uint64_t{1} << d;

    CircuitPlan plan{d, {}, oracle_mask, 0, 0, 0};
    std::uint64_t gray = 0;
    for (std::uint64_t k = 0; k < vertices; ++k) {
        const std::uint64_t vertex = k ^ (k >> 1);
        if (k > 0) {
            const std::uint32_t bit = std::countr_zero(k);
            const bool now_set = (vertex >> bit) & 1;
            plan.schedule.push_back(
                CaddStep{bit + 1, 0, now_set ? +1 : -1});
            ++plan.cadd_count;
        }
        gray = vertex;
        if ((oracle_mask >> vertex) & 1) {
            plan.schedule.push_back(OracleStep{
                0, (std::popcount(vertex) & 1) != 0,
                static_cast<std::uint32_t>(vertex)});
            ++plan.query_count;
        }
    }
    // undo whatever Gray-code toggles are still live
    for (std::uint32_t bit = 0; bit < d; ++bit)
        if ((gray >> bit) & 1) {
            plan.schedule.push_back(CaddStep{bit + 1, 0, -1});
            ++plan.cadd_count;
        }
    for (std::uint32_t reg = 0; reg <= d; ++reg) {
        plan.schedule.push_back(QftStep{reg, false});
        ++plan.qft_count;
    }
    return plan;
}

bool cadd_schedule_restores(const CircuitPlan& plan, const GroupParams& g) {
    RegisterLayout layout(g, plan.d + 1);
    std::vector<std::uint64_t> perm(layout.base_dim);
    std::iota(perm.begin(), perm.end(), 0);
    for (const Step& step : plan.schedule) {
        const auto* a = std::get_if<CaddStep>(&step);
        if (!a) continue;
        for (std::uint64_t& idx : perm) {
            const std::uint64_t x = layout.register_value(idx, a->src);
            const std::uint64_t y = layout.register_value(idx, a->dst);
            const std::uint64_t shifted =
                a->sign > 0 ? add_indices(g, y, x)
                            : add_indices(g, y, negate_index(g, x));
            idx = layout.replace_register(idx, a->dst, shifted);
        }
    }
    for (std::uint64_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

RunResult run_ud(const FunctionTable& f, std::uint32_t d) {
    if (!f.is_unimodular())
        throw std::domain_error("norm circuit requires a unimodular table");
    const CircuitPlan plan = build_ud_plan(d);
    RegisterLayout layout(f.params(), d + 1);
    StateVector state = init_uniform(layout);
    Counters c = execute(state, plan, [&](std::uint32_t) { return &f; });

    RunResult rr;
    rr.amplitude = state.amps[0];
    rr.zero_probability = std::norm(rr.amplitude);
    rr.exact_expectation = rr.amplitude.real();
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    return rr;
}

RunResult run_ud_sampled(const FunctionTable& f, std::uint32_t d, std::uint64_t m,
                         std::uint64_t seed, double eta) {
    if (!f.is_unimodular())
        throw std::domain_error("norm circuit requires a unimodular table");
    const CircuitPlan plan = build_ud_plan(d);
    RegisterLayout layout(f.params(), d + 1);
    StateVector state = init_uniform(layout);
    Counters c = execute(state, plan, [&](std::uint32_t) { return &f; });

    RunResult rr;
    rr.amplitude = state.amps[0];
    rr.zero_probability = std::norm(rr.amplitude);
    rr.exact_expectation = rr.amplitude.real();
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    fill_sampling_fields(rr, state, m, seed, eta, 0);
    return rr;
}

RunResult run_inner_product(const std::vector<const FunctionTable*>& fs,
                            std::uint32_t d) {
    const std::uint64_t vertices = std::uint64_t{1} << d;
    if (fs.size() != vertices)
        throw std::invalid_argument("need one table slot per vertex of {0,1}^d");
    const GroupParams* gp = nullptr;
    std::uint64_t mask = 0;
    for (std::uint64_t w = 0; w < vertices; ++w) {
        if (!fs[w]) continue;
        if (!fs[w]->is_unimodular())
            throw std::domain_error("norm circuit requires unimodular tables");
        gp = &fs[w]->params();
        mask |= std::uint64_t{1} << w;
    }
    if (!gp) throw std::invalid_argument("at least one vertex must carry a table");

    const CircuitPlan plan = build_ud_plan(d, mask);
    RegisterLayout layout(*gp, d + 1);
    StateVector state = init_uniform(layout);
    Counters c = execute(state, plan, [&](std::uint32_t v) { return fs[v]; });

    RunResult rr;
    rr.amplitude = state.amps[0];
    rr.zero_probability = std::norm(rr.amplitude);
    rr.exact_expectation = rr.amplitude.real();
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    return rr;
}

namespace {

void require_t3_domain(const FunctionTable& g) {
    if (g.params().p() < 3)
        throw std::domain_error("3-term progressions degenerate over F_2 (x + 2y = x)");
    if (!g.is_unimodular())
        throw std::domain_error("phase circuit requires a unimodular table");
}

// Phases g(x) g(x+y) g(x+2y) onto the (x, y) registers; x + 2y via two
// stacked CADDs, additions undone afterwards.
template <typename Oracle>
Counters t3_phase_pass(StateVector& state, const FunctionTable& g, Oracle&& oracle) {
    Counters c;
    oracle(state, g);
    ++c.queries;
    qsim::apply_cadd(state, 1, 0, +1);
    ++c.cadds;
    oracle(state, g);
    ++c.queries;
    qsim::apply_cadd(state, 1, 0, +1);
    ++c.cadds;
    oracle(state, g);
    ++c.queries;
    qsim::apply_cadd(state, 1, 0, -1);
    qsim::apply_cadd(state, 1, 0, -1);
    c.cadds += 2;
    return c;
}

} // namespace

RunResult run_t3_circuit(const FunctionTable& g) {
    require_t3_domain(g);
    RegisterLayout layout(g.params(), 2);
    StateVector state = init_uniform(layout);
    Counters c = t3_phase_pass(state, g, [](StateVector& s, const FunctionTable& t) {
        qsim::apply_phase_oracle(s, 0, t, false);
    });
    qsim::apply_qft(state, 0, false);
    qsim::apply_qft(state, 1, false);
    c.qfts += 2;

    RunResult rr;
    rr.amplitude = state.amps[0];
    rr.zero_probability = std::norm(rr.amplitude);
    rr.exact_expectation = std::sqrt(rr.zero_probability); // |T(g)|
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    return rr;
}

RunResult run_t3_hadamard(const FunctionTable& g) {
    require_t3_domain(g);
    RegisterLayout layout(g.params(), 2, true);
    StateVector state = init_uniform(layout);
    qsim::apply_hadamard_ancilla(state);
    Counters c = t3_phase_pass(state, g, [](StateVector& s, const FunctionTable& t) {
        qsim::apply_controlled_phase_oracle(s, t, 0);
    });
    qsim::apply_hadamard_ancilla(state);

    const double p0 = qsim::ancilla_zero_probability(state);
    RunResult rr;
    rr.zero_probability = p0;
    rr.exact_expectation = 2.0 * p0 - 1.0; // Re T(g)
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    return rr;
}

RunResult run_t3_hadamard_sampled(const FunctionTable& g, std::uint64_t m,
                                  std::uint64_t seed, double eta) {
    require_t3_domain(g);
    RegisterLayout layout(g.params(), 2, true);
    StateVector state = init_uniform(layout);
    qsim::apply_hadamard_ancilla(state);
    Counters c = t3_phase_pass(state, g, [](StateVector& s, const FunctionTable& t) {
        qsim::apply_controlled_phase_oracle(s, t, 0);
    });
    qsim::apply_hadamard_ancilla(state);

    if (m < 1) throw std::invalid_argument("sample count must be >= 1");
    std::uint64_t zero_hits = 0;
    for (std::uint64_t idx : qsim::sample(state, m, seed))
        if (idx < layout.base_dim) ++zero_hits;

    RunResult rr;
    rr.m = m;
    rr.seed = seed;
    rr.p_hat = static_cast<double>(zero_hits) / static_cast<double>(m);
    const double r = hoeffding_radius(m, eta);
    rr.ci_lo = std::max(0.0, rr.p_hat - r);
    rr.ci_hi = std::min(1.0, rr.p_hat + r);
    rr.zero_probability = qsim::ancilla_zero_probability(state);
    rr.exact_expectation = 2.0 * rr.p_hat - 1.0; // sampled Re T(g)
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    return rr;
}

RunResult run_shifted(const FunctionTable& f, std::uint32_t d,
                      const std::vector<GroupVector>& shifts) {
    if (!f.is_unimodular())
        throw std::domain_error("norm circuit requires a unimodular table");
    if (shifts.size() != d + 1)
        throw std::invalid_argument("need one shift per register (d + 1 of them)");

    const CircuitPlan plan = build_ud_plan(d);
    RegisterLayout layout(f.params(), d + 1);
    StateVector state = init_basis(layout, shifts);
    for (std::uint32_t reg = 0; reg <= d; ++reg) qsim::apply_qft(state, reg, false);
    Counters c = execute(state, plan, [&](std::uint32_t) { return &f; });

    const std::vector<double> dist = qsim::distribution(state);
    std::uint64_t arg = 0;
    for (std::uint64_t i = 1; i < dist.size(); ++i)
        if (dist[i] > dist[arg]) arg = i;

    RunResult rr;
    rr.amplitude = state.amps[arg];
    rr.peak_probability = dist[arg];
    rr.zero_probability = dist[arg];
    rr.exact_expectation = std::abs(rr.amplitude);
    rr.peak.resize(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) rr.peak[k] = layout.register_value(arg, k);
    rr.query_count = c.queries;
    rr.qft_count = c.qfts;
    rr.cadd_count = c.cadds;
    rr.prep_qft_count = d + 1;
    return rr;
}

} // namespace gowers::circuit
