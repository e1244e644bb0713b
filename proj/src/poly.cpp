#include "gowers/poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gowers/harmonic.hpp"
#include "gowers/rng.hpp"

namespace gowers::poly {

namespace {

// x^p = x, so positive exponents live in {1, .., p-1}.
std::uint32_t reduce_exponent(std::uint32_t e, std::uint32_t p) {
    if (e == 0) return 0;
    return (e - 1) % (p - 1) + 1;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r = r * base % p;
    return static_cast<std::uint32_t>(r);
}

} // namespace

PolynomialSpec::PolynomialSpec(const GroupParams& params) : params_(params) {}

void PolynomialSpec::add_term(Exponents exps, std::uint64_t coeff) {
    if (exps.size() != params_.n())
        throw std::invalid_argument("exponent vector length must equal n");
    const std::uint32_t p = params_.p();
    for (auto& e : exps) e = reduce_exponent(e, p);
    std::uint32_t c = static_cast<std::uint32_t>(coeff % p);
    if (c == 0) return;

    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second = (it->second + c) % p;
        if (it->second == 0) terms_.erase(it);
    }
    degree_ = 0;
    for (const auto& [e, cf] : terms_) {
        std::uint32_t deg = 0;
        for (std::uint32_t ei : e) deg += ei;
        degree_ = std::max(degree_, deg);
    }
}

std::uint32_t PolynomialSpec::evaluate(const GroupVector& x) const {
    if (x.params != params_) throw std::invalid_argument("mismatched group parameters");
    const std::uint32_t p = params_.p();
    std::uint64_t acc = 0;
    for (const auto& [exps, coeff] : terms_) {
        std::uint64_t term = coeff;
        for (std::uint32_t i = 0; i < params_.n(); ++i)
            term = term * pow_mod(x.coords[i], exps[i], p) % p;
        acc += term;
    }
    return static_cast<std::uint32_t>(acc % p);
}

std::uint32_t PolynomialSpec::evaluate_index(std::uint64_t x_index) const {
    return evaluate(element(params_, x_index));
}

PolynomialSpec PolynomialSpec::operator+(const PolynomialSpec& other) const {
    if (other.params_ != params_)
        throw std::invalid_argument("mismatched group parameters");
    PolynomialSpec out = *this;
    for (const auto& [exps, coeff] : other.terms_) out.add_term(exps, coeff);
    return out;
}

std::string PolynomialSpec::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::uint32_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += std::to_string(coeff);
        } else if (coeff == 1) {
            out += mono;
        } else {
            out += std::to_string(coeff) + "*" + mono;
        }
    }
    return out;
}

FunctionTable phase_function(const PolynomialSpec& P) {
    const GroupParams& g = P.params();
    if (g.order() > size_cap()) throw std::length_error("table size exceeds the size cap");
    std::vector<cplx> vals(g.order());
    for (std::uint64_t x = 0; x < g.order(); ++x)
        vals[x] = g.root(P.evaluate_index(x));
    return FunctionTable(g, std::move(vals));
}

std::vector<PolynomialSpec::Exponents> monomials_up_to_degree(const GroupParams& g,
                                                              std::uint32_t d) {
    std::vector<PolynomialSpec::Exponents> out;
    PolynomialSpec::Exponents exps(g.n(), 0);
    // exponent vectors swept as a base-p counter, digit 0 least significant
    while (true) {
        std::uint32_t deg = 0;
        for (std::uint32_t e : exps) deg += e;
        if (deg <= d) out.push_back(exps);
        std::uint32_t i = 0;
        for (; i < g.n(); ++i) {
            if (++exps[i] < g.p()) break;
            exps[i] = 0;
        }
        if (i == g.n()) break;
    }
    return out;
}

PolynomialSpec random_polynomial(const GroupParams& g, std::uint32_t d,
                                 std::uint64_t seed) {
    if (d > g.n() * (g.p() - 1))
        throw std::invalid_argument("degree exceeds n(p-1), the maximum reduced degree");
    CounterRng rng(seed, kStreamPoly);
    PolynomialSpec P(g);
    for (const auto& exps : monomials_up_to_degree(g, d))
        P.add_term(exps, rng.below(g.p()));
    return P;
}

FunctionTable haar_random_function(const GroupParams& g, std::uint64_t seed) {
    if (g.order() > size_cap()) throw std::length_error("table size exceeds the size cap");
    CounterRng rng(seed, kStreamHaar);
    std::vector<cplx> vals(g.order());
    for (auto& v : vals)
        v = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return FunctionTable(g, std::move(vals));
}

double correlation(const FunctionTable& f, const PolynomialSpec& P) {
    if (f.params() != P.params())
        throw std::invalid_argument("mismatched group parameters");
    const GroupParams& g = f.params();
    harmonic::KahanSum acc;
    for (std::uint64_t x = 0; x < g.order(); ++x)
        acc.add(f.value(x) * std::conj(g.root(P.evaluate_index(x))));
    return std::abs(acc.total()) / static_cast<double>(g.order());
}

Farness certify_farness(const FunctionTable& f, std::uint32_t d, double epsilon,
                        std::uint64_t enumeration_cap) {
    const GroupParams& g = f.params();
    const std::uint32_t p = g.p();
    const std::uint64_t n = g.order();

    std::vector<PolynomialSpec::Exponents> monos;
    for (auto& e : monomials_up_to_degree(g, d)) {
        bool constant = true;
        for (std::uint32_t ei : e) constant &= ei == 0;
        if (!constant) monos.push_back(std::move(e));
    }

    std::uint64_t assignments = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (assignments > enumeration_cap / p)
            throw std::length_error("farness enumeration exceeds the cap");
        assignments *= p;
    }

    // per-monomial value tables so each candidate costs O(N * #monomials)
    std::vector<std::vector<std::uint32_t>> mono_vals(monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        mono_vals[j].resize(n);
        PolynomialSpec m(g);
        m.add_term(monos[j], 1);
        for (std::uint64_t x = 0; x < n; ++x) mono_vals[j][x] = m.evaluate_index(x);
    }

    double best = -1.0;
    std::vector<std::uint32_t> best_coeffs(monos.size(), 0);
    std::vector<std::uint32_t> coeffs(monos.size(), 0);
    for (std::uint64_t assign = 0; assign < assignments; ++assign) {
        std::uint64_t rest = assign;
        for (std::size_t j = 0; j < monos.size(); ++j) {
            coeffs[j] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        harmonic::KahanSum acc;
        for (std::uint64_t x = 0; x < n; ++x) {
            std::uint32_t val = 0;
            for (std::size_t j = 0; j < monos.size(); ++j)
                val += coeffs[j] * mono_vals[j][x] % p;
            acc.add(f.value(x) * std::conj(g.root(val % p)));
        }
        double corr = std::abs(acc.total()) / static_cast<double>(n);
        if (corr > best) {
            best = corr;
            best_coeffs = coeffs;
        }
    }

    PolynomialSpec witness(g);
    for (std::size_t j = 0; j < monos.size(); ++j)
        if (best_coeffs[j]) witness.add_term(monos[j], best_coeffs[j]);
    return Farness{best < epsilon, best, std::move(witness)};
}

Instance make_phase_instance(PolynomialSpec P) {
    FunctionTable t = phase_function(P);
    return Instance{Instance::Kind::phase_poly, std::move(t), std::move(P), 0};
}

Instance make_haar_instance(const GroupParams& g, std::uint64_t seed) {
    return Instance{Instance::Kind::haar_random, haar_random_function(g, seed),
                    std::nullopt, seed};
}

} // namespace gowers::poly
