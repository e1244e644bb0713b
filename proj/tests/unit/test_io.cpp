#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gowers/io.hpp"
#include "gowers/poly.hpp"

using namespace gowers;
using nlohmann::json;

TEST_CASE("table serialization round-trips bit-exactly") {
    GroupParams g(3, 2);
    FunctionTable f = poly::haar_random_function(g, 55);
    json j = io::table_to_json(f);
    CHECK(j.at("p") == 3);
    CHECK(j.at("n") == 2);
    FunctionTable back = io::table_from_json(j);
    CHECK(back.values() == f.values());

    const std::string path = "/tmp/gowers_table_test.json";
    io::save_table(f, path);
    FunctionTable loaded = io::load_table(path);
    CHECK(loaded.values() == f.values());
    std::remove(path.c_str());

    json short_values = j;
    short_values["values"].erase(0);
    CHECK_THROWS_AS(io::table_from_json(short_values), std::invalid_argument);
}

TEST_CASE("polynomial serialization round-trips") {
    GroupParams g(5, 2);
    poly::PolynomialSpec P = poly::random_polynomial(g, 3, 8);
    poly::PolynomialSpec back = io::polynomial_from_json(io::polynomial_to_json(P));
    CHECK(back.terms() == P.terms());
    CHECK(back.degree() == P.degree());
}

TEST_CASE("compact polynomial strings") {
    GroupParams g(3, 3);
    poly::PolynomialSpec P = io::parse_polynomial(g, "2*x0*x1 + x2^2");
    CHECK(P.degree() == 2);
    CHECK(P.evaluate(from_coords(g, {1, 2, 0})) == 1); // 2*1*2 = 4 mod 3
    CHECK(P.evaluate(from_coords(g, {0, 0, 2})) == 1); // 2^2 = 4 mod 3

    poly::PolynomialSpec c = io::parse_polynomial(g, "2");
    CHECK(c.degree() == 0);
    CHECK(c.evaluate_index(0) == 2);

    // minus signs wrap mod p
    poly::PolynomialSpec m = io::parse_polynomial(g, "x0 - x1");
    CHECK(m.evaluate(from_coords(g, {0, 1, 0})) == 2);

    CHECK(io::parse_polynomial(g, "x0*x0").degree() ==
          io::parse_polynomial(g, "x0^2").degree());

    CHECK_THROWS_AS(io::parse_polynomial(g, "x5"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_polynomial(g, "2*"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_polynomial(g, "x0 + + x1"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_polynomial(g, "y0"), std::invalid_argument);
}

TEST_CASE("plan and run-result reports") {
    circuit::CircuitPlan plan = circuit::build_ud_plan(2);
    json pj = io::plan_to_json(plan);
    CHECK(pj.at("query_count") == 4);
    CHECK(pj.at("qft_count") == 3);
    CHECK(pj.at("schedule").size() == plan.schedule.size());
    CHECK(pj.at("schedule").at(0).at("op") == "oracle");

    GroupParams g(3, 1);
    circuit::RunResult rr =
        circuit::run_ud_sampled(poly::haar_random_function(g, 3), 1, 64, 9);
    json rj = io::run_result_to_json(rr);
    CHECK(rj.at("m") == 64);
    CHECK(rj.at("seed") == 9);
    CHECK(rj.contains("ci"));
    CHECK(rj.at("zero_probability").is_number());
}
