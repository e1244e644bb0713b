#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gowers/circuit.hpp"
#include "gowers/harmonic.hpp"
#include "gowers/poly.hpp"
#include "gowers/rng.hpp"

using namespace gowers;
using namespace gowers::circuit;

namespace {

FunctionTable character_table(const GroupParams& g, std::uint64_t gamma) {
    std::vector<cplx> vals(g.order());
    auto gv = element(g, gamma);
    for (std::uint64_t x = 0; x < g.order(); ++x)
        vals[x] = character_eval(gv, element(g, x));
    return FunctionTable(g, std::move(vals));
}

double norm_power(const FunctionTable& f, std::uint32_t d) {
    const double norm = harmonic::gowers_norm_bruteforce(f, d);
    return std::pow(norm, static_cast<double>(2u << d)); // 2^(d+1)
}

} // namespace

TEST_CASE("plan shapes and counters") {
    CircuitPlan d1 = build_ud_plan(1);
    CHECK(d1.query_count == 2);
    CHECK(d1.qft_count == 2);
    CHECK(d1.cadd_count == 2);

    CircuitPlan d2 = build_ud_plan(2);
    CHECK(d2.query_count == 4);
    CHECK(d2.qft_count == 3);

    CircuitPlan d3 = build_ud_plan(3);
    CHECK(d3.query_count == 8);
    CHECK(d3.qft_count == 4);

    CHECK_THROWS_AS(build_ud_plan(0), std::invalid_argument);
}

TEST_CASE("cadd schedules restore the accumulator") {
    for (std::uint32_t d = 1; d <= 4; ++d) {
        CircuitPlan plan = build_ud_plan(d);
        CHECK(cadd_schedule_restores(plan, GroupParams(2, 1)));
    }
    CHECK(cadd_schedule_restores(build_ud_plan(2), GroupParams(3, 1)));
    CHECK(cadd_schedule_restores(build_ud_plan(3), GroupParams(3, 1)));
    CHECK(cadd_schedule_restores(build_ud_plan(2), GroupParams(5, 1)));
}

TEST_CASE("run_ud matches the classical norm on phase polynomials") {
    GroupParams g(3, 1);
    poly::PolynomialSpec lin(g);
    lin.add_term({1}, 2);
    RunResult rr = run_ud(poly::phase_function(lin), 2);
    CHECK(rr.zero_probability == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rr.query_count == 4);
    CHECK(rr.qft_count == 3);

    FunctionTable ones(g, cplx{1.0, 0.0});
    CHECK(run_ud(ones, 2).zero_probability == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("run_ud agrees with brute force on random tables") {
    for (auto [p, n, d] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 2, 2},
                           {3, 1, 2},
                           {2, 3, 1},
                           {2, 1, 4},
                           {5, 1, 2},
                           {3, 2, 2}}) {
        GroupParams g(p, n);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            FunctionTable f = poly::haar_random_function(g, 50 + seed);
            RunResult rr = run_ud(f, d);
            CHECK(rr.zero_probability == doctest::Approx(norm_power(f, d)).epsilon(1e-9));
            CHECK(rr.query_count == (1u << d));
            CHECK(rr.qft_count == d + 1);
            CHECK(rr.zero_probability ==
                  doctest::Approx(rr.exact_expectation * rr.exact_expectation)
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("run_ud rejects bad inputs") {
    GroupParams g(3, 1);
    FunctionTable bad(g, cplx{0.5, 0.0});
    CHECK_THROWS_AS(run_ud(bad, 2), std::domain_error);

    FunctionTable f = poly::haar_random_function(g, 1);
    CHECK_THROWS_AS(run_ud_sampled(f, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("sampled runs concentrate around the exact probability") {
    GroupParams g(2, 3);
    poly::PolynomialSpec lin(g);
    lin.add_term({1, 0, 0}, 1);
    RunResult phase = run_ud_sampled(poly::phase_function(lin), 2, 200, 7);
    CHECK(phase.p_hat == 1.0); // deterministic outcome

    FunctionTable f = poly::haar_random_function(g, 61);
    RunResult rr = run_ud_sampled(f, 1, 10000, 8, 0.01);
    const double radius = std::sqrt(std::log(2.0 / 0.01) / (2.0 * 10000.0));
    CHECK(std::abs(rr.p_hat - rr.zero_probability) <= radius);
    CHECK(rr.ci_lo <= rr.zero_probability);
    CHECK(rr.ci_hi >= rr.zero_probability);
}

TEST_CASE("inner product circuit generalizes run_ud") {
    GroupParams g(3, 1);
    FunctionTable f = poly::haar_random_function(g, 70);

    std::vector<const FunctionTable*> all(4, &f);
    RunResult same = run_inner_product(all, 2);
    RunResult plain = run_ud(f, 2);
    CHECK(same.zero_probability == doctest::Approx(plain.zero_probability).epsilon(1e-12));
    CHECK(same.query_count == 4);

    FunctionTable ones(g, cplx{1.0, 0.0});
    std::vector<const FunctionTable*> allones(4, &ones);
    CHECK(run_inner_product(allones, 2).zero_probability ==
          doctest::Approx(1.0).epsilon(1e-9));

    // two opposite vertices carry f, the rest skip the oracle
    std::vector<const FunctionTable*> opposite{&f, nullptr, nullptr, &f};
    RunResult rr = run_inner_product(opposite, 2);
    CHECK(rr.query_count == 2);
    cplx expected = harmonic::gowers_inner_product(opposite, 2);
    CHECK(std::abs(rr.amplitude) == doctest::Approx(std::abs(expected)).epsilon(1e-9));
}

TEST_CASE("t3 circuits agree with the classical trilinear form") {
    GroupParams g3(3, 1);
    FunctionTable ones(g3, cplx{1.0, 0.0});
    CHECK(run_t3_circuit(ones).exact_expectation == doctest::Approx(1.0).epsilon(1e-10));

    FunctionTable chi = character_table(g3, 1);
    cplx brute = harmonic::t3(chi, chi, chi);
    CHECK(run_t3_circuit(chi).exact_expectation ==
          doctest::Approx(std::abs(brute)).epsilon(1e-10));
    CHECK(run_t3_circuit(chi).query_count == 3);
    CHECK(run_t3_circuit(chi).qft_count == 2);

    // +-1 phases over F_5: the hadamard test recovers the signed value
    GroupParams g5(5, 1);
    CounterRng rng(77, 3);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<cplx> vals(g5.order());
        for (auto& v : vals) v = rng.below(2) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
        FunctionTable gtab(g5, std::move(vals));
        RunResult rr = run_t3_hadamard(gtab);
        cplx direct = harmonic::t3(gtab, gtab, gtab);
        CHECK(rr.exact_expectation == doctest::Approx(direct.real()).epsilon(1e-9));
        CHECK(rr.qft_count == 0); // the ancilla is read directly
        CHECK(rr.query_count == 3);
    }

    GroupParams g2(2, 1);
    FunctionTable f2(g2, cplx{1.0, 0.0});
    CHECK_THROWS_AS(run_t3_circuit(f2), std::domain_error);
}

TEST_CASE("shifted preparation relocates the peak to the negated shifts") {
    GroupParams g(3, 1);
    FunctionTable f = poly::haar_random_function(g, 90);

    // zero shifts reproduce the plain run
    std::vector<GroupVector> zero{element(g, 0), element(g, 0), element(g, 0)};
    RunResult shifted0 = run_shifted(f, 2, zero);
    RunResult plain = run_ud(f, 2);
    CHECK(shifted0.peak == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(shifted0.peak_probability ==
          doctest::Approx(plain.zero_probability).epsilon(1e-12));

    std::vector<GroupVector> shifts{element(g, 1), element(g, 2), element(g, 0)};
    RunResult rr = run_shifted(f, 2, shifts);
    CHECK(rr.peak == std::vector<std::uint64_t>{2, 1, 0});
    CHECK(std::abs(rr.peak_probability - plain.zero_probability) <= 1e-12);
    CHECK(rr.query_count == 4);
    CHECK(rr.qft_count == 3);
    CHECK(rr.prep_qft_count == 3);

    // a phase polynomial keeps probability 1 under any shifts
    poly::PolynomialSpec lin(g);
    lin.add_term({1}, 1);
    RunResult one = run_shifted(poly::phase_function(lin), 2, shifts);
    CHECK(one.peak_probability == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("larger primes run through the full stack") {
    for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{7, 2},
                        {11, 2},
                        {13, 1}}) {
        GroupParams g(p, 1);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            FunctionTable f = poly::haar_random_function(g, 777 + seed);
            RunResult rr = run_ud(f, d);
            CHECK(rr.zero_probability == doctest::Approx(norm_power(f, d)).epsilon(1e-9));
        }
    }
}

TEST_CASE("shift invariance across random configurations") {
    int configs = 0;
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}}) {
        GroupParams g(p, n);
        CounterRng rng(5, 11);
        for (int trial = 0; trial < 12; ++trial) {
            FunctionTable f = poly::haar_random_function(g, 400 + trial);
            std::vector<GroupVector> shifts;
            std::vector<std::uint64_t> expect;
            for (int k = 0; k < 3; ++k) {
                std::uint64_t s = rng.below(g.order());
                shifts.push_back(element(g, s));
                expect.push_back(negate_index(g, s));
            }
            RunResult rr = run_shifted(f, 2, shifts);
            RunResult plain = run_ud(f, 2);
            CHECK(rr.peak == expect);
            CHECK(std::abs(rr.peak_probability - plain.zero_probability) <= 1e-12);
            ++configs;
        }
    }
    CHECK(configs >= 20);
}
