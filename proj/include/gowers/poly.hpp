#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gowers/table.hpp"

namespace gowers::poly {

// A classical polynomial over F_p in n variables. Exponents are kept reduced
// by x^p = x, so two specs are equal exactly when they agree as functions;
// coefficients are nonzero and live in {1, .., p-1}.
class PolynomialSpec {
  public:
    using Exponents = std::vector<std::uint32_t>; // size n, each entry < p

    explicit PolynomialSpec(const GroupParams& params);

    const GroupParams& params() const { return params_; }
    const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }
    std::uint32_t degree() const { return degree_; }

    // Adds c * prod x_i^{e_i}; exponents are Frobenius-reduced first and
    // coefficients merge mod p (cancelling terms disappear).
    void add_term(Exponents exps, std::uint64_t coeff);

    std::uint32_t evaluate(const GroupVector& x) const;
    std::uint32_t evaluate_index(std::uint64_t x_index) const;

    PolynomialSpec operator+(const PolynomialSpec& other) const;

    std::string to_string() const;

  private:
    GroupParams params_;
    std::map<Exponents, std::uint32_t> terms_;
    std::uint32_t degree_ = 0;
};

// x -> omega^{P(x)}, exact on the root-of-unity table.
FunctionTable phase_function(const PolynomialSpec& P);

// All reduced exponent vectors of total degree <= d, ordered by increasing
// base-p linear index of the exponent vector (digit 0 least significant).
std::vector<PolynomialSpec::Exponents> monomials_up_to_degree(const GroupParams& g,
                                                              std::uint32_t d);

// Uniformly random coefficient (possibly zero) for each monomial of degree
// <= d, in the order above. Requires d <= n(p-1).
PolynomialSpec random_polynomial(const GroupParams& g, std::uint32_t d,
                                 std::uint64_t seed);

// N independent points of the unit circle, angles uniform in [0, 2pi).
FunctionTable haar_random_function(const GroupParams& g, std::uint64_t seed);

// |E_x f(x) conj(omega^{P(x)})|.
double correlation(const FunctionTable& f, const PolynomialSpec& P);

struct Farness {
    bool far;                  // max_correlation < epsilon
    double max_correlation;
    PolynomialSpec witness;    // the maximizing polynomial
};

// Exhaustive sweep over all degree-<= d polynomials (constant term skipped;
// it only rotates the correlation by a unit phase). Refuses when the
// enumeration would exceed enumeration_cap assignments.
Farness certify_farness(const FunctionTable& f, std::uint32_t d, double epsilon,
                        std::uint64_t enumeration_cap = std::uint64_t{1} << 22);

// A realized test instance: how it was made plus its table.
struct Instance {
    enum class Kind { phase_poly, haar_random, custom };
    Kind kind;
    FunctionTable table;
    std::optional<PolynomialSpec> polynomial;
    std::uint64_t seed = 0;
};

Instance make_phase_instance(PolynomialSpec P);
Instance make_haar_instance(const GroupParams& g, std::uint64_t seed);

} // namespace gowers::poly
