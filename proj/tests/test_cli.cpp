#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("PEL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "PEL_CLI must point at the pel binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("euler subcommand emits the documented JSON") {
    auto r = run("euler --n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"n\":7,\"value\":\"17/8\"}\n");

    auto r4 = run("euler --n 4");
    CHECK(r4.exit_code == 0);
    CHECK(r4.out == "{\"n\":4,\"value\":\"0\"}\n");

    auto rx = run("euler --n 1 --x 1/2");
    CHECK(rx.exit_code == 0);
    auto j = nlohmann::json::parse(rx.out);
    CHECK(j["value"] == "0");

    // E_2(x) = x^2 - x, coefficients lowest degree first
    auto rp = run("euler --n 2 --poly");
    CHECK(rp.exit_code == 0);
    auto jp = nlohmann::json::parse(rp.out);
    CHECK(jp["value"]["coeffs"] ==
          nlohmann::json::array({"0", "-1", "1"}));
}

TEST_CASE("table format prints flat key: value lines") {
    auto r = run("euler --n 11 --format table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value: 691/4") != std::string::npos);
}

TEST_CASE("lp-eval at the worked example") {
    auto r = run("lp-eval --p 5 --precision 6 --char quad:3 --s 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == "series");
    // value = -4 mod 5^6 = 15621: digits LSF base 5 of 15621 = [1,4,4,4,4,0,...]
    long v = 0, mult = 1;
    for (const auto& d : j["value"]["digits"]) {
        v += d.get<long>() * mult;
        mult *= 5;
        if (mult > 15625)
            break;
    }
    CHECK(v % 15625 == 15621);
    CHECK(j["value"]["valuation"] == 0);
}

TEST_CASE("gen-euler value is exact cyclotomic JSON") {
    auto r = run("gen-euler --char quad:3 --n 0 --N 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["order"] == 2);
    CHECK(j["value"]["coeffs"][0] == "-2");
}

TEST_CASE("ferint emits value and trace") {
    auto r = run("ferint --p 5 --precision 5 --integrand x^3 --force-limit");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == "limit");
    CHECK(j["trace"].size() >= 3);
    // I(x^3) = E_3 = 1/4
    auto r2 = run("ferint --p 5 --precision 5 --integrand x^3");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["route"] == "closed");
    CHECK(j2["value"]["valuation"] == j["value"]["valuation"]);
    CHECK(j2["value"]["digits"][0] == j["value"]["digits"][0]);
}

TEST_CASE("zeta at a CZ_p point") {
    auto r = run("zeta --p 5 --precision 6 --s 1 --x 2/15");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    // zeta(1, x) = 1
    CHECK(j["value"]["valuation"] == 0);
    CHECK(j["value"]["digits"][0] == 1);
    for (size_t i = 1; i < j["value"]["digits"].size(); ++i)
        CHECK(j["value"]["digits"][i] == 0);
}

TEST_CASE("exit code contract") {
    // usage: unknown option / missing required / bad suite id
    CHECK(run("euler").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("verify --suite nonsense").exit_code == 2);
    CHECK(run("lp-eval --p 5 --char bogus --s 1").exit_code == 2);

    // domain: p = 2, non-embeddable character, s outside Z_p
    CHECK(run("lp-eval --p 2 --char quad:3 --s 1").exit_code == 3);
    CHECK(run("lp-eval --p 5 --char 7:1 --s 1").exit_code == 3);
    CHECK(run("lp-eval --p 5 --char quad:3 --s 1/5").exit_code == 3);
    CHECK(run("gen-euler --char quad:3 --n 2 --N 6").exit_code == 3);

    // non-convergence: cap too low for double stabilization
    CHECK(run("ferint --p 5 --precision 5 --integrand x^2 --force-limit --cap 2")
              .exit_code == 4);
}

TEST_CASE("determinism: identical invocations, identical bytes") {
    std::string cmd = "lp-eval --p 5 --precision 6 --char quad:3 --s=-1";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto v1 = run("verify --suite lemma-11.3.7 --p 5 --precision 6");
    auto v2 = run("verify --suite lemma-11.3.7 --p 5 --precision 6");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("verify subcommand small suites") {
    auto r = run("verify --suite E-0-pro --p 5 --precision 6");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    for (const auto& item : j["items"])
        CHECK(item["status"] == "pass");

    auto rt = run("verify --suite lemma-11.3.7 --p 5 --format table");
    CHECK(rt.exit_code == 0);
    CHECK(rt.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("chi-euler and h-sum run end to end") {
    auto r = run("chi-euler --p 5 --precision 6 --char quad:3 --k 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == "closed");

    auto rh = run("h-sum --p 5 --precision 6 --char quad:3 --n 1");
    CHECK(rh.exit_code == 0);

    auto ri = run("lp-interp-check --p 5 --precision 6 --char quad:3 --kmax 3");
    CHECK(ri.exit_code == 0);
    auto ji = nlohmann::json::parse(ri.out);
    CHECK(ji["passed"] == true);
}
