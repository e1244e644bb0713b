#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunOutput {
    int exit_code;
    std::string stdout_text;
};

std::string cli_path() {
    const char* env = std::getenv("GOWERS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "GOWERS_CLI must point at the built binary");
    return env;
}

RunOutput run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json parse_report(const RunOutput& r) {
    json j = json::parse(r.stdout_text);
    REQUIRE(j.contains("config"));
    REQUIRE(j.contains("version"));
    REQUIRE(j.contains("result"));
    return j;
}

} // namespace

TEST_CASE("norm subcommand cross-checks circuit against brute force") {
    RunOutput r = run_cli("norm --p 3 --n 1 --d 2 --poly x0 --check");
    CHECK(r.exit_code == 0);
    json j = parse_report(r);
    CHECK(j.at("result").at("circuit_norm").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("result").at("bruteforce_norm").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("result").at("diff").get<double>() <= 1e-9);

    RunOutput haar = run_cli("norm --p 2 --n 3 --d 1 --random haar:7 --check");
    CHECK(haar.exit_code == 0);
}

TEST_CASE("non-prime modulus exits with the error code") {
    RunOutput r = run_cli("norm --p 4 --n 1 --d 2 --poly x0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing seed in a random spec is an error") {
    RunOutput r = run_cli("norm --p 2 --n 2 --d 1 --random haar");
    CHECK(r.exit_code == 2);
}

TEST_CASE("test-linear accepts a linear phase and rejects certified-far haar") {
    RunOutput yes = run_cli("test-linear --p 5 --n 1 --poly 2*x0 --eps 0.5 --eta 0.05 --seed 3");
    CHECK(yes.exit_code == 0);
    json jy = parse_report(yes);
    CHECK(jy.at("result").at("accept").get<bool>());
    CHECK(jy.at("result").at("p_hat").get<double>() == doctest::Approx(1.0));

    // haar over F_2^3 is essentially never 0.9-close to a linear phase
    RunOutput no = run_cli("test-linear --p 2 --n 3 --random haar:3 --eps 0.9 --eta 0.05 "
                           "--seed 3 --certify");
    CHECK(no.exit_code == 3);
    json jn = parse_report(no);
    CHECK_FALSE(jn.at("result").at("accept").get<bool>());
    REQUIRE(jn.at("result").contains("ground_truth"));
    CHECK(jn.at("result").at("ground_truth").at("far").get<bool>());
}

TEST_CASE("test-char rejects an invalid promise pair") {
    RunOutput r = run_cli("test-char --p 2 --n 3 --random haar:1 --eps1 0.3 --eps2 0.25 "
                          "--eta 0.05 --seed 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("test-poly accepts a cubic phase at d = 3 over F_5") {
    RunOutput r = run_cli("test-poly --p 5 --n 1 --poly x0^3 --d 3 --delta 0.5 "
                          "--eta 0.05 --seed 11");
    CHECK(r.exit_code == 0);
    json j = parse_report(r);
    CHECK(j.at("result").at("p_hat").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("count-3ap quantum path matches the exact count") {
    RunOutput r = run_cli("count-3ap --p 3 --n 2 --set random:0.5,11 --method quantum "
                          "--check --json");
    CHECK(r.exit_code == 0);
    json j = parse_report(r);
    CHECK(j.at("result").at("check_residual").get<double>() <= 1e-9);
}

TEST_CASE("noise-demo relocates the peak to the negated shifts") {
    RunOutput r = run_cli("noise-demo --p 3 --n 1 --d 2 --shifts 1,2,0 --poly x0");
    CHECK(r.exit_code == 0);
    json j = parse_report(r);
    CHECK(j.at("result").at("peak") == json::array({2, 1, 0}));
    CHECK(j.at("result").at("peak_probability").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("result").at("peak_matches_expected").get<bool>());
}

TEST_CASE("polynomial and table files round-trip through the CLI") {
    {
        std::FILE* f = std::fopen("/tmp/gowers_cli_poly.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"p":3,"n":1,"terms":[{"exps":[1],"coeff":2}]})", f);
        std::fclose(f);
    }
    RunOutput r = run_cli("norm --p 3 --n 1 --d 2 --poly-file /tmp/gowers_cli_poly.json "
                          "--check");
    CHECK(r.exit_code == 0);
    json j = parse_report(r);
    CHECK(j.at("result").at("circuit_norm").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    std::remove("/tmp/gowers_cli_poly.json");

    {
        std::FILE* f = std::fopen("/tmp/gowers_cli_table.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"p":2,"n":1,"values":[[1.0,0.0],[-1.0,0.0]]})", f);
        std::fclose(f);
    }
    RunOutput t = run_cli("norm --p 2 --n 1 --d 1 --table /tmp/gowers_cli_table.json "
                          "--check");
    CHECK(t.exit_code == 0);
    std::remove("/tmp/gowers_cli_table.json");
}

TEST_CASE("bench emits CSV with a config header") {
    RunOutput r = run_cli("bench --p 2 --n 2 --sweep d=1..3 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("# gowers bench") == 0);
    CHECK(r.stdout_text.find("d,amplitudes,wall_ms,queries") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const std::string cmd = "test-linear --p 3 --n 2 --random haar:9 --eps 0.7 "
                            "--eta 0.1 --seed 4";
    RunOutput a = run_cli(cmd);
    RunOutput b = run_cli(cmd);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(a.exit_code == b.exit_code);
}
