#include "gowers/io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace gowers::io {

using nlohmann::json;

json table_to_json(const FunctionTable& f) {
    json values = json::array();
    for (const cplx& v : f.values()) values.push_back({v.real(), v.imag()});
    return json{{"p", f.params().p()}, {"n", f.params().n()}, {"values", values}};
}

FunctionTable table_from_json(const json& j) {
    GroupParams g(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>());
    const auto& values = j.at("values");
    if (values.size() != g.order())
        throw std::invalid_argument("value count must equal the group order");
    std::vector<cplx> vals;
    vals.reserve(values.size());
    for (const auto& v : values)
        vals.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return FunctionTable(g, std::move(vals));
}

void save_table(const FunctionTable& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << table_to_json(f) << "\n";
}

FunctionTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return table_from_json(j);
}

json polynomial_to_json(const poly::PolynomialSpec& P) {
    json terms = json::array();
    for (const auto& [exps, coeff] : P.terms())
        terms.push_back({{"exps", exps}, {"coeff", coeff}});
    return json{{"p", P.params().p()}, {"n", P.params().n()}, {"terms", terms}};
}

poly::PolynomialSpec polynomial_from_json(const json& j) {
    GroupParams g(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>());
    poly::PolynomialSpec P(g);
    for (const auto& term : j.at("terms"))
        P.add_term(term.at("exps").get<std::vector<std::uint32_t>>(),
                   term.at("coeff").get<std::uint64_t>());
    return P;
}

namespace {

struct PolyParser {
    const GroupParams& g;
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint64_t parse_number() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("expected a number at position " +
                                        std::to_string(pos) + " in '" + text + "'");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }

    // factor := number | x<i> ['^' exp]
    void parse_factor(std::uint64_t& coeff, std::vector<std::uint32_t>& exps) {
        skip_space();
        if (pos >= text.size())
            throw std::invalid_argument("dangling term in polynomial '" + text + "'");
        char c = text[pos];
        if (c == 'x') {
            ++pos;
            std::uint64_t var = parse_number();
            if (var >= g.n())
                throw std::invalid_argument("variable x" + std::to_string(var) +
                                            " out of range for n = " +
                                            std::to_string(g.n()));
            std::uint64_t e = 1;
            if (eat('^')) e = parse_number();
            exps[var] += static_cast<std::uint32_t>(e);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = coeff * parse_number() % g.p();
        } else {
            throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                        "' in polynomial '" + text + "'");
        }
    }

    // term := factor ('*' factor)*
    void parse_term(poly::PolynomialSpec& P, bool negative) {
        std::uint64_t coeff = 1;
        std::vector<std::uint32_t> exps(g.n(), 0);
        parse_factor(coeff, exps);
        while (eat('*')) parse_factor(coeff, exps);
        if (negative) coeff = (g.p() - coeff % g.p()) % g.p();
        P.add_term(std::move(exps), coeff);
    }

    poly::PolynomialSpec parse() {
        poly::PolynomialSpec P(g);
        bool negative = eat('-');
        parse_term(P, negative);
        while (true) {
            skip_space();
            if (pos >= text.size()) break;
            if (eat('+'))
                parse_term(P, false);
            else if (eat('-'))
                parse_term(P, true);
            else
                throw std::invalid_argument("unexpected character '" +
                                            std::string(1, text[pos]) +
                                            "' in polynomial '" + text + "'");
        }
        return P;
    }
};

} // namespace

poly::PolynomialSpec parse_polynomial(const GroupParams& g, const std::string& text) {
    PolyParser parser{g, text};
    return parser.parse();
}

json plan_to_json(const circuit::CircuitPlan& plan) {
    json steps = json::array();
    for (const auto& step : plan.schedule) {
        if (const auto* o = std::get_if<circuit::OracleStep>(&step)) {
            steps.push_back({{"op", "oracle"},
                             {"reg", o->reg},
                             {"conjugate", o->conjugate},
                             {"vertex", o->vertex}});
        } else if (const auto* a = std::get_if<circuit::CaddStep>(&step)) {
            steps.push_back(
                {{"op", "cadd"}, {"src", a->src}, {"dst", a->dst}, {"sign", a->sign}});
        } else {
            const auto& q = std::get<circuit::QftStep>(step);
            steps.push_back({{"op", "qft"}, {"reg", q.reg}, {"inverse", q.inverse}});
        }
    }
    return json{{"d", plan.d},
                {"schedule", steps},
                {"query_count", plan.query_count},
                {"qft_count", plan.qft_count},
                {"cadd_count", plan.cadd_count}};
}

json run_result_to_json(const circuit::RunResult& rr) {
    json j{{"zero_probability", rr.zero_probability},
           {"exact_expectation", rr.exact_expectation},
           {"query_count", rr.query_count},
           {"qft_count", rr.qft_count},
           {"cadd_count", rr.cadd_count}};
    if (!rr.peak.empty()) {
        j["peak"] = rr.peak;
        j["peak_probability"] = rr.peak_probability;
        j["prep_qft_count"] = rr.prep_qft_count;
    }
    if (rr.m > 0) {
        j["m"] = rr.m;
        j["p_hat"] = rr.p_hat;
        j["ci"] = {rr.ci_lo, rr.ci_hi};
        j["seed"] = rr.seed;
    }
    return j;
}

} // namespace gowers::io
