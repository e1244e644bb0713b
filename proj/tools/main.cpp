// Command-line front end: reproducible experiments over the library with
// JSON-line outputs. Exit codes: 0 ok/accept, 3 reject, 2 error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gowers/ap_count.hpp"
#include "gowers/circuit.hpp"
#include "gowers/harmonic.hpp"
#include "gowers/io.hpp"
#include "gowers/poly.hpp"
#include "gowers/testers.hpp"
#include "gowers/version.hpp"

namespace {

using nlohmann::json;
using namespace gowers;

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitReject = 3;

struct CommonOpts {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::string poly_text;
    std::string poly_path;
    std::string table_path;
    std::string random_spec;
    std::string out_path;
    bool pretty = false;
    std::uint64_t cap = 0; // 0 = leave as configured
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_instance = true) {
    cmd->add_option("--p", o.p, "prime modulus")->required();
    cmd->add_option("--n", o.n, "number of coordinates")->required();
    if (with_instance) {
        cmd->add_option("--poly", o.poly_text, "polynomial, e.g. \"2*x0*x1 + x2^2\"");
        cmd->add_option("--poly-file", o.poly_path, "polynomial JSON file");
        cmd->add_option("--table", o.table_path, "FunctionTable JSON file");
        cmd->add_option("--random", o.random_spec,
                        "random instance: haar:<seed> or poly:<degree>,<seed>");
    }
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_flag("--pretty", o.pretty, "indent the JSON output");
    cmd->add_option("--cap", o.cap, "override the amplitude-count cap");
}

void apply_cap(const CommonOpts& o) {
    if (const char* env = std::getenv("GOWERS_SIZE_CAP"); env && *env)
        set_size_cap(std::strtoull(env, nullptr, 10));
    if (o.cap > 0) set_size_cap(o.cap);
}

// Splits "kind:args" and the comma list in args.
std::pair<std::string, std::vector<std::string>> split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("random spec needs an explicit seed, e.g. haar:7");
    std::vector<std::string> args;
    std::string rest = spec.substr(colon + 1);
    std::size_t start = 0;
    while (true) {
        const auto comma = rest.find(',', start);
        args.push_back(rest.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return {spec.substr(0, colon), args};
}

struct ResolvedInstance {
    FunctionTable table;
    json provenance;
    std::optional<poly::PolynomialSpec> polynomial;
};

ResolvedInstance resolve_instance(const GroupParams& g, const CommonOpts& o) {
    const int given = !o.poly_text.empty() + !o.poly_path.empty() +
                      !o.table_path.empty() + !o.random_spec.empty();
    if (given != 1)
        throw std::invalid_argument(
            "give exactly one of --poly, --poly-file, --table, --random");

    if (!o.poly_text.empty()) {
        poly::PolynomialSpec P = io::parse_polynomial(g, o.poly_text);
        json prov{{"kind", "poly"}, {"poly", P.to_string()}, {"degree", P.degree()}};
        return {poly::phase_function(P), prov, std::move(P)};
    }
    if (!o.poly_path.empty()) {
        std::ifstream in(o.poly_path);
        if (!in) throw std::runtime_error("cannot open " + o.poly_path);
        json pj;
        in >> pj;
        poly::PolynomialSpec P = io::polynomial_from_json(pj);
        if (P.params() != g)
            throw std::invalid_argument("polynomial file parameters disagree with --p/--n");
        json prov{{"kind", "poly-file"},
                  {"path", o.poly_path},
                  {"poly", P.to_string()},
                  {"degree", P.degree()}};
        return {poly::phase_function(P), prov, std::move(P)};
    }
    if (!o.table_path.empty()) {
        return {io::load_table(o.table_path), json{{"kind", "table"}, {"path", o.table_path}},
                std::nullopt};
    }
    auto [kind, args] = split_spec(o.random_spec);
    if (kind == "haar") {
        if (args.size() != 1 || args[0].empty())
            throw std::invalid_argument("haar spec is haar:<seed>");
        const std::uint64_t seed = std::stoull(args[0]);
        return {poly::haar_random_function(g, seed),
                json{{"kind", "haar"}, {"seed", seed}}, std::nullopt};
    }
    if (kind == "poly") {
        if (args.size() != 2)
            throw std::invalid_argument("random polynomial spec is poly:<degree>,<seed>");
        const std::uint32_t degree = static_cast<std::uint32_t>(std::stoul(args[0]));
        const std::uint64_t seed = std::stoull(args[1]);
        poly::PolynomialSpec P = poly::random_polynomial(g, degree, seed);
        json prov{{"kind", "random-poly"},
                  {"degree", degree},
                  {"seed", seed},
                  {"poly", P.to_string()}};
        return {poly::phase_function(P), prov, std::move(P)};
    }
    throw std::invalid_argument("unknown random kind '" + kind + "'");
}

void emit(const CommonOpts& o, const std::string& command, const json& config,
          const json& result) {
    json report{{"command", command},
                {"version", kVersion},
                {"config", config},
                {"result", result}};
    const std::string text = o.pretty ? report.dump(2) : report.dump();
    if (o.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw std::runtime_error("cannot open " + o.out_path + " for writing");
        out << text << "\n";
    }
}

json config_echo(const CommonOpts& o, json extra) {
    extra["p"] = o.p;
    extra["n"] = o.n;
    if (!o.poly_text.empty()) extra["poly"] = o.poly_text;
    if (!o.poly_path.empty()) extra["poly_file"] = o.poly_path;
    if (!o.table_path.empty()) extra["table"] = o.table_path;
    if (!o.random_spec.empty()) extra["random"] = o.random_spec;
    extra["cap"] = size_cap();
    return extra;
}

// ---- norm ------------------------------------------------------------

struct NormOpts {
    CommonOpts common;
    std::uint32_t d = 2;
    bool check = false;
};

int cmd_norm(const NormOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    ResolvedInstance inst = resolve_instance(g, o.common);

    circuit::RunResult rr = circuit::run_ud(inst.table, o.d);
    const double brute = harmonic::gowers_norm_bruteforce(inst.table, o.d);
    const double circuit_norm =
        std::pow(rr.zero_probability, 1.0 / static_cast<double>(2u << o.d));
    const double brute_power = std::pow(brute, static_cast<double>(2u << o.d));
    const double diff = std::abs(rr.zero_probability - brute_power);

    json result{{"d", o.d},
                {"instance", inst.provenance},
                {"circuit", io::run_result_to_json(rr)},
                {"circuit_norm", circuit_norm},
                {"bruteforce_norm", brute},
                {"zero_probability", rr.zero_probability},
                {"bruteforce_power", brute_power},
                {"diff", diff}};
    emit(o.common, "norm", config_echo(o.common, {{"d", o.d}, {"check", o.check}}), result);
    if (o.check && diff > 1e-9) {
        std::cerr << "norm check failed: |circuit - bruteforce| = " << diff << "\n";
        return kExitError;
    }
    return kExitOk;
}

// ---- testers ----------------------------------------------------------

struct TestOpts {
    CommonOpts common;
    std::uint32_t d = 1;
    double eps = 0.5;
    double eps1 = 0.0, eps2 = 0.0;
    double delta = 0.0;
    double eta = 0.05;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool certify = false;
    bool vs_random = false;
    bool allow_any_regime = false;
};

json verdict_json(const std::string& kind, const testers::Verdict& v, json params,
                  std::optional<json> ground_truth) {
    json j{{"kind", kind},
           {"params", std::move(params)},
           {"accept", v.accept},
           {"p_hat", v.p_hat},
           {"m", v.m_used},
           {"seed", v.run.seed},
           {"zero_probability", v.run.zero_probability},
           {"query_count", v.run.query_count},
           {"qft_count", v.run.qft_count},
           {"tau", v.plan.tau},
           {"delta", v.plan.delta}};
    if (ground_truth) j["ground_truth"] = *ground_truth;
    return j;
}

std::optional<json> maybe_certify(const TestOpts& o, const FunctionTable& f,
                                  std::uint32_t degree, double eps) {
    if (!o.certify) return std::nullopt;
    poly::Farness far = poly::certify_farness(f, degree, eps);
    return json{{"far", far.far},
                {"max_correlation", far.max_correlation},
                {"witness", far.witness.to_string()},
                {"epsilon", eps},
                {"degree", degree}};
}

int cmd_test_linear(const TestOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    ResolvedInstance inst = resolve_instance(g, o.common);
    testers::Verdict v = testers::test_linear(inst.table, o.eps, o.eta, o.seed);
    json params{{"eps", o.eps}, {"eta", o.eta}, {"instance", inst.provenance}};
    emit(o.common, "test-linear",
         config_echo(o.common, {{"eps", o.eps}, {"eta", o.eta}, {"seed", o.seed}}),
         verdict_json("test-linear", v, params, maybe_certify(o, inst.table, 1, o.eps)));
    return v.accept ? kExitOk : kExitReject;
}

int cmd_test_poly(const TestOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    ResolvedInstance inst = resolve_instance(g, o.common);
    testers::Verdict v =
        o.vs_random
            ? testers::test_degree_d_exact_vs_random(inst.table, o.d, o.eta, o.seed)
            : testers::test_degree_d_far(inst.table, o.d, o.delta, o.eta, o.seed,
                                         o.allow_any_regime);
    json params{{"d", o.d},
                {"eta", o.eta},
                {"mode", o.vs_random ? "exact-vs-random" : "far"},
                {"instance", inst.provenance}};
    if (!o.vs_random) params["delta"] = o.delta;
    std::optional<json> gt;
    if (o.certify) gt = maybe_certify(o, inst.table, o.d, o.eps);
    emit(o.common, "test-poly",
         config_echo(o.common, {{"d", o.d},
                                {"delta", o.delta},
                                {"eta", o.eta},
                                {"seed", o.seed},
                                {"vs_random", o.vs_random}}),
         verdict_json("test-poly", v, params, gt));
    return v.accept ? kExitOk : kExitReject;
}

int cmd_test_char(const TestOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    ResolvedInstance inst = resolve_instance(g, o.common);
    testers::Verdict v =
        testers::test_character_two_sided(inst.table, o.eps1, o.eps2, o.eta, o.seed);
    json params{{"eps1", o.eps1},
                {"eps2", o.eps2},
                {"eta", o.eta},
                {"instance", inst.provenance}};
    std::optional<json> gt;
    if (o.certify) {
        // character sweep = degree-1 enumeration without constants
        poly::Farness far = poly::certify_farness(inst.table, 1, o.eps2);
        gt = json{{"max_character_correlation", far.max_correlation},
                  {"witness", far.witness.to_string()}};
    }
    emit(o.common, "test-char",
         config_echo(o.common,
                     {{"eps1", o.eps1}, {"eps2", o.eps2}, {"eta", o.eta}, {"seed", o.seed}}),
         verdict_json("test-char", v, params, gt));
    return v.accept ? kExitOk : kExitReject;
}

// ---- count-3ap ----------------------------------------------------------

struct CountOpts {
    CommonOpts common;
    std::string set_spec;
    std::string method = "exact";
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    bool check = false;
};

apcount::SetInstance resolve_set(const GroupParams& g, const std::string& spec) {
    if (spec.rfind("random:", 0) == 0) {
        auto [kind, args] = split_spec(spec);
        if (args.size() != 2)
            throw std::invalid_argument("random set spec is random:<density>,<seed>");
        return apcount::random_set(g, std::stod(args[0]), std::stoull(args[1]));
    }
    return apcount::SetInstance(io::load_table(spec));
}

json estimate_json(const apcount::ApEstimate& est) {
    json j{{"t_f", est.t_f}, {"count", est.count}, {"alpha", est.alpha}};
    switch (est.method) {
        case apcount::Method::exact: j["method"] = "exact"; break;
        case apcount::Method::quantum_t3: j["method"] = "quantum"; break;
        case apcount::Method::u2_bounds: j["method"] = "bounds"; break;
    }
    if (est.count_exact) {
        j["count_exact"] = *est.count_exact;
        j["count_nondegenerate"] = *est.count_nondegenerate;
    }
    if (est.method == apcount::Method::quantum_t3) {
        j["t_g"] = est.t_g;
        if (est.m > 0) {
            j["m"] = est.m;
            j["seed"] = est.seed;
            j["t_interval"] = {est.t_lo, est.t_hi};
        }
    }
    if (est.method == apcount::Method::u2_bounds) {
        j["u2_indicator"] = est.u2_indicator;
        j["u2_phase"] = est.u2_phase;
        j["t_interval"] = {est.t_lo, est.t_hi};
        j["lower_bound_violated"] = est.lower_bound_violated;
    }
    return j;
}

int cmd_count_3ap(const CountOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    apcount::SetInstance S = resolve_set(g, o.set_spec);

    apcount::ApEstimate est;
    if (o.method == "exact") {
        est = apcount::estimate_exact(S);
    } else if (o.method == "quantum") {
        est = o.m > 0 ? apcount::estimate_quantum_t3_sampled(S, o.m, o.seed)
                      : apcount::estimate_quantum_t3(S);
    } else if (o.method == "bounds") {
        est = apcount::u2_bounds(S);
    } else {
        throw std::invalid_argument("method must be exact, quantum or bounds");
    }

    json result = estimate_json(est);
    double check_residual = 0.0;
    if (o.check) {
        const apcount::ApEstimate exact = apcount::estimate_exact(S);
        check_residual = std::abs(est.t_f - exact.t_f);
        result["check_residual"] = check_residual;
        result["exact_t_f"] = exact.t_f;
    }
    emit(o.common, "count-3ap",
         config_echo(o.common, {{"set", o.set_spec},
                                {"method", o.method},
                                {"m", o.m},
                                {"seed", o.seed},
                                {"check", o.check}}),
         result);
    if (o.check && o.method == "quantum" && o.m == 0 && check_residual > 1e-9) {
        std::cerr << "count-3ap check failed: residual " << check_residual << "\n";
        return kExitError;
    }
    return kExitOk;
}

// ---- noise-demo ----------------------------------------------------------

struct NoiseOpts {
    CommonOpts common;
    std::uint32_t d = 2;
    std::string shifts;
    std::uint32_t top = 5;
};

int cmd_noise_demo(const NoiseOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);
    ResolvedInstance inst = resolve_instance(g, o.common);

    const std::vector<std::string> parts = split_spec("shifts:" + o.shifts).second;
    if (parts.size() != o.d + 1)
        throw std::invalid_argument("need d+1 comma-separated shift indices");
    std::vector<GroupVector> shifts;
    std::vector<std::uint64_t> expected_peak;
    for (const std::string& s : parts) {
        shifts.push_back(element(g, std::stoull(s)));
        expected_peak.push_back(negate_index(g, shifts.back().index));
    }

    circuit::RunResult shifted = circuit::run_shifted(inst.table, o.d, shifts);
    circuit::RunResult unshifted = circuit::run_ud(inst.table, o.d);

    // top-k outcomes of the shifted distribution
    qsim::RegisterLayout layout(g, o.d + 1);
    qsim::StateVector state = qsim::init_basis(layout, shifts);
    for (std::uint32_t reg = 0; reg <= o.d; ++reg) qsim::apply_qft(state, reg, false);
    const circuit::CircuitPlan plan = circuit::build_ud_plan(o.d);
    for (const auto& step : plan.schedule) {
        if (const auto* or_ = std::get_if<circuit::OracleStep>(&step))
            qsim::apply_phase_oracle(state, or_->reg, inst.table, or_->conjugate);
        else if (const auto* ca = std::get_if<circuit::CaddStep>(&step))
            qsim::apply_cadd(state, ca->src, ca->dst, ca->sign);
        else
            qsim::apply_qft(state, std::get<circuit::QftStep>(step).reg,
                            std::get<circuit::QftStep>(step).inverse);
    }
    std::vector<double> dist = qsim::distribution(state);
    std::vector<std::uint64_t> order(dist.size());
    for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint64_t a, std::uint64_t b) { return dist[a] > dist[b]; });

    json top = json::array();
    for (std::uint32_t i = 0; i < std::min<std::uint64_t>(o.top, order.size()); ++i) {
        std::vector<std::uint64_t> outcome(o.d + 1);
        for (std::uint32_t k = 0; k <= o.d; ++k)
            outcome[k] = layout.register_value(order[i], k);
        top.push_back({{"outcome", outcome},
                       {"probability", dist[order[i]]},
                       {"is_expected_peak", outcome == expected_peak}});
    }

    json result{{"instance", inst.provenance},
                {"shifts", o.shifts},
                {"expected_peak", expected_peak},
                {"peak", shifted.peak},
                {"peak_probability", shifted.peak_probability},
                {"unshifted_zero_probability", unshifted.zero_probability},
                {"peak_matches_expected", shifted.peak == expected_peak},
                {"top", top},
                {"query_count", shifted.query_count},
                {"qft_count", shifted.qft_count}};
    emit(o.common, "noise-demo",
         config_echo(o.common, {{"d", o.d}, {"shifts", o.shifts}, {"top", o.top}}),
         result);
    return kExitOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchOpts {
    CommonOpts common;
    std::string sweep = "d=1..3";
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchOpts& o) {
    apply_cap(o.common);
    GroupParams g(o.common.p, o.common.n);

    std::uint32_t d_lo = 1, d_hi = 3;
    if (o.sweep.rfind("d=", 0) != 0 || o.sweep.find("..") == std::string::npos)
        throw std::invalid_argument("sweep spec is d=<lo>..<hi>");
    const auto dots = o.sweep.find("..");
    d_lo = static_cast<std::uint32_t>(std::stoul(o.sweep.substr(2, dots - 2)));
    d_hi = static_cast<std::uint32_t>(std::stoul(o.sweep.substr(dots + 2)));
    if (d_lo < 1 || d_hi < d_lo) throw std::invalid_argument("bad sweep range");

    FunctionTable f = poly::haar_random_function(g, o.seed);
    std::ostringstream csv;
    json config = config_echo(o.common, {{"sweep", o.sweep}, {"seed", o.seed}});
    csv << "# gowers bench v" << kVersion << " config=" << config.dump() << "\n";
    csv << "d,amplitudes,wall_ms,queries\n";
    for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
        qsim::RegisterLayout layout(g, d + 1);
        const auto start = std::chrono::steady_clock::now();
        circuit::RunResult rr = circuit::run_ud(f, d);
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop -
                                                                                  start)
                .count();
        csv << d << "," << layout.base_dim << "," << ms << "," << rr.query_count << "\n";
    }
    if (o.common.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(o.common.out_path);
        if (!out) throw std::runtime_error("cannot open " + o.common.out_path);
        out << csv.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gowers uniformity norms: circuit simulator, reference engine, testers"};
    app.require_subcommand(1);

    NormOpts norm;
    auto* norm_cmd = app.add_subcommand("norm", "circuit vs brute-force U^d norm");
    add_common(norm_cmd, norm.common);
    norm_cmd->add_option("--d", norm.d, "Gowers order")->required();
    norm_cmd->add_flag("--check", norm.check, "fail (exit 2) on tolerance breach");

    TestOpts tl;
    auto* tl_cmd = app.add_subcommand("test-linear", "linearity tester (U^2 circuit)");
    add_common(tl_cmd, tl.common);
    tl_cmd->add_option("--eps", tl.eps, "farness parameter")->required();
    tl_cmd->add_option("--eta", tl.eta, "failure budget");
    tl_cmd->add_option("--seed", tl.seed, "measurement seed")->required();
    tl_cmd->add_flag("--certify", tl.certify, "attach exhaustive farness ground truth");

    TestOpts tp;
    auto* tp_cmd = app.add_subcommand("test-poly", "degree-d phase polynomial tester");
    add_common(tp_cmd, tp.common);
    tp_cmd->add_option("--d", tp.d, "polynomial degree")->required();
    tp_cmd->add_option("--delta", tp.delta, "promise gap (far mode)");
    tp_cmd->add_flag("--vs-random", tp.vs_random, "exact-vs-Haar-random mode");
    tp_cmd->add_option("--eta", tp.eta, "failure budget");
    tp_cmd->add_option("--seed", tp.seed, "measurement seed")->required();
    tp_cmd->add_option("--eps", tp.eps, "farness parameter for --certify");
    tp_cmd->add_flag("--allow-any-regime", tp.allow_any_regime,
                     "run outside the supported (p, d) table");
    tp_cmd->add_flag("--certify", tp.certify, "attach exhaustive farness ground truth");

    TestOpts tc;
    auto* tc_cmd = app.add_subcommand("test-char", "two-sided character correlation tester");
    add_common(tc_cmd, tc.common);
    tc_cmd->add_option("--eps1", tc.eps1, "YES-side correlation floor")->required();
    tc_cmd->add_option("--eps2", tc.eps2, "NO-side farness bound")->required();
    tc_cmd->add_option("--eta", tc.eta, "failure budget");
    tc_cmd->add_option("--seed", tc.seed, "measurement seed")->required();
    tc_cmd->add_flag("--certify", tc.certify, "attach exhaustive character sweep");

    CountOpts cnt;
    auto* cnt_cmd = app.add_subcommand("count-3ap", "3-term progression counting");
    add_common(cnt_cmd, cnt.common, /*with_instance=*/false);
    cnt_cmd->add_option("--set", cnt.set_spec,
                        "indicator table file or random:<density>,<seed>")
        ->required();
    cnt_cmd->add_option("--method", cnt.method, "exact | quantum | bounds");
    cnt_cmd->add_option("--m", cnt.m, "shots (quantum method; 0 = exact readout)");
    cnt_cmd->add_option("--seed", cnt.seed, "measurement seed for --m");
    cnt_cmd->add_flag("--check", cnt.check, "cross-check against the exact count");
    bool json_flag = false;
    cnt_cmd->add_flag("--json", json_flag, "JSON output (always on)");

    NoiseOpts nd;
    auto* nd_cmd = app.add_subcommand("noise-demo", "shifted-preparation peak relocation");
    add_common(nd_cmd, nd.common);
    nd_cmd->add_option("--d", nd.d, "Gowers order")->required();
    nd_cmd->add_option("--shifts", nd.shifts, "d+1 comma-separated shift indices")
        ->required();
    nd_cmd->add_option("--top", nd.top, "how many peaks to print");

    BenchOpts bench;
    auto* bench_cmd = app.add_subcommand("bench", "timing sweep over circuit orders");
    add_common(bench_cmd, bench.common, /*with_instance=*/false);
    bench_cmd->add_option("--sweep", bench.sweep, "d=<lo>..<hi>");
    bench_cmd->add_option("--seed", bench.seed, "haar instance seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*norm_cmd) return cmd_norm(norm);
        if (*tl_cmd) return cmd_test_linear(tl);
        if (*tp_cmd) return cmd_test_poly(tp);
        if (*tc_cmd) return cmd_test_char(tc);
        if (*cnt_cmd) return cmd_count_3ap(cnt);
        if (*nd_cmd) return cmd_noise_demo(nd);
        if (*bench_cmd) return cmd_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
