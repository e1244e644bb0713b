#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gowers/group.hpp"
#include "gowers/rng.hpp"

using namespace gowers;

namespace {

struct CapGuard {
    std::uint64_t saved = size_cap();
    ~CapGuard() { set_size_cap(saved); }
};

} // namespace

TEST_CASE("group addition is digit-wise mod p") {
    GroupParams g(3, 2);
    auto x = from_coords(g, {1, 2});
    auto y = from_coords(g, {2, 2});
    auto s = add(x, y);
    CHECK(s.coords == std::vector<std::uint32_t>{0, 1});

    auto zero = element(g, 0);
    CHECK(add(x, zero).index == x.index);

    GroupParams g2(2, 3);
    auto v = from_coords(g2, {1, 0, 1});
    CHECK(add(v, v).index == 0); // characteristic 2
}

TEST_CASE("negation and scalar multiplication") {
    GroupParams g5(5, 1);
    CHECK(neg(element(g5, 2)).index == 3);

    GroupParams g3(3, 1);
    CHECK(scalar_mul(2, element(g3, 2)).index == 1); // 4 mod 3

    GroupParams g2(2, 3);
    for (std::uint64_t i = 0; i < g2.order(); ++i)
        CHECK(neg(element(g2, i)).index == i); // self-inverse in char 2
}

TEST_CASE("dot products") {
    GroupParams g(3, 2);
    CHECK(dot(from_coords(g, {1, 2}), from_coords(g, {2, 1})) == 1); // 2+2 mod 3
    for (std::uint64_t i = 0; i < g.order(); ++i)
        CHECK(dot(element(g, 0), element(g, i)) == 0);

    GroupParams g2(2, 2);
    CHECK(dot(from_coords(g2, {1, 1}), from_coords(g2, {1, 1})) == 0); // 2 mod 2
}

TEST_CASE("character evaluation") {
    GroupParams g(3, 2);
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        cplx v = character_eval(element(g, 0), element(g, x));
        CHECK(std::abs(v - cplx{1.0, 0.0}) < 1e-15);
    }

    GroupParams g2(2, 3);
    for (std::uint64_t gamma = 0; gamma < g2.order(); ++gamma)
        for (std::uint64_t x = 0; x < g2.order(); ++x) {
            cplx v = character_eval(element(g2, gamma), element(g2, x));
            double expected = dot_indices(g2, gamma, x) ? -1.0 : 1.0;
            CHECK(v.real() == doctest::Approx(expected).epsilon(1e-14));
            CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
        }

    CHECK_THROWS_AS(GroupParams(4, 1), std::invalid_argument); // 4 is not prime
    CHECK_THROWS_AS(GroupParams(1, 1), std::invalid_argument);
}

TEST_CASE("roots of unity sit on the unit circle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        GroupParams g(p, 1);
        for (std::uint32_t k = 0; k < p; ++k) {
            cplx w = g.root(k);
            CHECK(std::abs(w.real() * w.real() + w.imag() * w.imag() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("enumeration order and cap") {
    GroupParams g(2, 2);
    auto all = enumerate_group(g);
    REQUIRE(all.size() == 4);
    CHECK(all[0].coords == std::vector<std::uint32_t>{0, 0});
    CHECK(all[1].coords == std::vector<std::uint32_t>{1, 0});
    CHECK(all[2].coords == std::vector<std::uint32_t>{0, 1});
    CHECK(all[3].coords == std::vector<std::uint32_t>{1, 1});

    GroupParams g3(3, 1);
    auto a3 = enumerate_group(g3);
    for (std::uint64_t i = 0; i < 3; ++i) CHECK(a3[i].index == i);

    CapGuard guard;
    set_size_cap(std::uint64_t{1} << 20);
    GroupParams big(3, 13); // 3^13 > 2^20
    CHECK_THROWS_AS(enumerate_group(big), std::length_error);
}

TEST_CASE("linear index round-trips with coordinates") {
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {3, 2}, {5, 2}}) {
        GroupParams g(p, n);
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            auto v = element(g, i);
            CHECK(from_coords(g, v.coords).index == i);
        }
        // digit-wise add agrees with the index-level fast path
        CounterRng rng(7, 1);
        for (int trial = 0; trial < 50; ++trial) {
            auto x = element(g, rng.below(g.order()));
            auto y = element(g, rng.below(g.order()));
            auto s = add(x, y);
            std::vector<std::uint32_t> expect(g.n());
            for (std::uint32_t k = 0; k < g.n(); ++k)
                expect[k] = (x.coords[k] + y.coords[k]) % g.p();
            CHECK(s.coords == expect);
            CHECK(s.index == add_indices(g, x.index, y.index));
        }
    }
}

TEST_CASE("character orthogonality and homomorphism") {
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {3, 2}, {5, 1}}) {
        GroupParams g(p, n);
        for (std::uint64_t gamma = 0; gamma < g.order(); ++gamma) {
            cplx mean{0.0, 0.0};
            auto gv = element(g, gamma);
            for (std::uint64_t x = 0; x < g.order(); ++x)
                mean += character_eval(gv, element(g, x));
            mean /= static_cast<double>(g.order());
            if (gamma == 0) {
                CHECK(std::abs(mean - cplx{1.0, 0.0}) == 0.0);
            } else {
                CHECK(std::abs(mean) <= 1e-12);
            }
        }

        CounterRng rng(11, 2);
        for (int trial = 0; trial < 40; ++trial) {
            auto gv = element(g, rng.below(g.order()));
            auto x = element(g, rng.below(g.order()));
            auto y = element(g, rng.below(g.order()));
            cplx lhs = character_eval(gv, add(x, y));
            cplx rhs = character_eval(gv, x) * character_eval(gv, y);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("mismatched parameters are rejected") {
    GroupParams a(3, 2), b(3, 1), c(5, 2);
    CHECK_THROWS_AS(add(element(a, 1), element(b, 1)), std::invalid_argument);
    CHECK_THROWS_AS(dot(element(a, 1), element(c, 1)), std::invalid_argument);
}

TEST_CASE("counter rng is reproducible and stream-separated") {
    CounterRng a(42, kStreamHaar), b(42, kStreamHaar), c(42, kStreamPoly);
    for (int i = 0; i < 16; ++i) {
        auto av = a.next();
        CHECK(av == b.next());
        CHECK(av != c.next());
    }
    CounterRng d(42, kStreamHaar);
    CHECK(d.at(3) == CounterRng(42, kStreamHaar).at(3));
}
