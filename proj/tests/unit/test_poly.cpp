#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "gowers/harmonic.hpp"
#include "gowers/poly.hpp"
#include "gowers/rng.hpp"

using namespace gowers;
using namespace gowers::poly;

TEST_CASE("polynomial evaluation") {
    GroupParams g3(3, 1);
    PolynomialSpec lin(g3);
    lin.add_term({1}, 1); // x0
    CHECK(lin.evaluate(element(g3, 2)) == 2);

    GroupParams g32(3, 2);
    PolynomialSpec q(g32);
    q.add_term({1, 1}, 1); // x0*x1
    q.add_term({0, 0}, 2); // + 2
    CHECK(q.evaluate(from_coords(g32, {1, 2})) == 1); // (2 + 2) mod 3

    PolynomialSpec zero(g32);
    for (std::uint64_t x = 0; x < g32.order(); ++x)
        CHECK(zero.evaluate_index(x) == 0);
    CHECK(zero.degree() == 0);
}

TEST_CASE("frobenius reduction makes specs functional") {
    GroupParams g(3, 1);
    PolynomialSpec high(g);
    high.add_term({3}, 2); // x^3 == x over F_3
    PolynomialSpec low(g);
    low.add_term({1}, 2);
    CHECK(high.degree() == 1);
    for (std::uint64_t x = 0; x < g.order(); ++x)
        CHECK(high.evaluate_index(x) == low.evaluate_index(x));

    // merging terms cancels to nothing
    PolynomialSpec cancel(g);
    cancel.add_term({1}, 1);
    cancel.add_term({1}, 2);
    CHECK(cancel.terms().empty());
}

TEST_CASE("phase functions of low-degree polynomials have full gowers norm") {
    GroupParams g(3, 1);
    PolynomialSpec lin(g);
    lin.add_term({1}, 1);
    CHECK(harmonic::gowers_norm_bruteforce(phase_function(lin), 2) ==
          doctest::Approx(1.0).epsilon(1e-10));

    PolynomialSpec quad(g);
    quad.add_term({2}, 1); // x^2, degree 2
    FunctionTable fq = phase_function(quad);
    CHECK(harmonic::gowers_norm_bruteforce(fq, 3) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(harmonic::gowers_norm_bruteforce(fq, 2) < 1.0 - 1e-3);

    PolynomialSpec zero(g);
    FunctionTable fz = phase_function(zero);
    for (std::uint64_t x = 0; x < g.order(); ++x)
        CHECK(std::abs(fz.value(x) - cplx{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("phase function respects polynomial addition") {
    GroupParams g(5, 1);
    PolynomialSpec a(g), b(g);
    a.add_term({2}, 3);
    b.add_term({1}, 4);
    b.add_term({0}, 2);
    FunctionTable fa = phase_function(a), fb = phase_function(b);
    FunctionTable fab = phase_function(a + b);
    for (std::uint64_t x = 0; x < g.order(); ++x)
        CHECK(std::abs(fab.value(x) - fa.value(x) * fb.value(x)) <= 1e-12);
}

TEST_CASE("iterated differences of a low-degree phase are identically 1") {
    GroupParams g(5, 1);
    PolynomialSpec quad(g);
    quad.add_term({2}, 2);
    quad.add_term({1}, 1);
    FunctionTable f = phase_function(quad); // degree 2, test d = 3
    const std::uint32_t d = 3;
    CounterRng rng(13, 5);
    int tuples = 0;
    for (; tuples < 120; ++tuples) {
        std::uint64_t x = rng.below(g.order());
        std::vector<std::uint64_t> h(d);
        for (auto& hi : h) hi = rng.below(g.order());
        cplx prod{1.0, 0.0};
        for (std::uint32_t w = 0; w < (1u << d); ++w) {
            std::uint64_t pt = x;
            for (std::uint32_t i = 0; i < d; ++i)
                if ((w >> i) & 1) pt = add_indices(g, pt, h[i]);
            cplx v = f.value(pt);
            prod *= (std::popcount(w) & 1) ? std::conj(v) : v;
        }
        CHECK(std::abs(prod - cplx{1.0, 0.0}) <= 1e-10);
    }
    CHECK(tuples >= 100);
}

TEST_CASE("monomial enumeration order is the base-p counter") {
    GroupParams g(2, 2);
    auto monos = monomials_up_to_degree(g, 1);
    REQUIRE(monos.size() == 3);
    CHECK(monos[0] == PolynomialSpec::Exponents{0, 0});
    CHECK(monos[1] == PolynomialSpec::Exponents{1, 0});
    CHECK(monos[2] == PolynomialSpec::Exponents{0, 1});
}

TEST_CASE("random polynomials are reproducible and degree-capped") {
    GroupParams g(3, 2);
    PolynomialSpec a = random_polynomial(g, 2, 17);
    PolynomialSpec b = random_polynomial(g, 2, 17);
    CHECK(a.terms() == b.terms());
    CHECK(a.degree() <= 2);
    CHECK_THROWS_AS(random_polynomial(g, 5, 1), std::invalid_argument); // n(p-1) = 4
}

TEST_CASE("haar tables are reproducible, unimodular, and uniformity-small") {
    GroupParams g(2, 4);
    FunctionTable a = haar_random_function(g, 23);
    FunctionTable b = haar_random_function(g, 23);
    for (std::uint64_t x = 0; x < g.order(); ++x) CHECK(a.value(x) == b.value(x));
    CHECK(a.is_unimodular());
    CHECK_FALSE(haar_random_function(g, 24).values() == a.values());

    // E over seeds of ||f||_U2^4 stays within twice the 1/p^n baseline
    double mean = 0.0;
    const int trials = 100;
    for (int s = 0; s < trials; ++s)
        mean += harmonic::gowers_expectation(haar_random_function(g, 9000 + s), 2);
    mean /= trials;
    CHECK(mean <= 2.0 / 16.0);
}

TEST_CASE("correlation against polynomials") {
    GroupParams g(3, 2);
    PolynomialSpec P = random_polynomial(g, 2, 3);
    FunctionTable f = phase_function(P);
    CHECK(correlation(f, P) == doctest::Approx(1.0).epsilon(1e-12));

    // a character against a different linear form is orthogonal
    PolynomialSpec l1(g), l2(g);
    l1.add_term({1, 0}, 1);
    l2.add_term({0, 1}, 1);
    CHECK(correlation(phase_function(l1), l2) <= 1e-12);

    // independent direct-loop recomputation
    FunctionTable h = haar_random_function(g, 44);
    cplx acc{0.0, 0.0};
    for (std::uint64_t x = g.order(); x-- > 0;)
        acc += h.value(x) * std::conj(g.root(P.evaluate_index(x)));
    CHECK(correlation(h, P) ==
          doctest::Approx(std::abs(acc) / static_cast<double>(g.order())).epsilon(1e-12));
}

TEST_CASE("farness certification") {
    GroupParams g(2, 3);
    PolynomialSpec P(g);
    P.add_term({1, 0, 0}, 1);
    P.add_term({0, 1, 0}, 1);
    FunctionTable f = phase_function(P);

    Farness r = certify_farness(f, 1, 1.0);
    CHECK_FALSE(r.far);
    CHECK(r.max_correlation == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(correlation(f, r.witness) == doctest::Approx(1.0).epsilon(1e-12));

    // characters are their own linear witnesses
    PolynomialSpec chi(g);
    chi.add_term({0, 0, 1}, 1);
    Farness rc = certify_farness(phase_function(chi), 1, 0.5);
    CHECK_FALSE(rc.far);

    // haar instances are far with overwhelming probability; verified per seed
    int far_count = 0;
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        Farness rf = certify_farness(haar_random_function(g, seed), 1, 0.9);
        far_count += rf.far;
    }
    CHECK(far_count >= 19);

    CHECK_THROWS_AS(certify_farness(f, 1, 0.5, /*enumeration_cap=*/4), std::length_error);
}

TEST_CASE("instances carry their provenance") {
    GroupParams g(3, 1);
    PolynomialSpec P(g);
    P.add_term({1}, 2);
    Instance phase = make_phase_instance(P);
    CHECK(phase.kind == Instance::Kind::phase_poly);
    CHECK(phase.table.is_unimodular());
    REQUIRE(phase.polynomial.has_value());
    CHECK(phase.polynomial->degree() == 1);

    Instance haar = make_haar_instance(g, 5);
    CHECK(haar.kind == Instance::Kind::haar_random);
    CHECK(haar.seed == 5);
    CHECK(haar.table.is_unimodular());
}
