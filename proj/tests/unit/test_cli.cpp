#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "thetalab/cli/commands.hpp"
#include "thetalab/theta/sampling.hpp"

using namespace thetalab;
using namespace thetalab::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<const char*> args) {
  ::unsetenv(kTolEnv);
  args.insert(args.begin(), "theta_lab");
  std::ostringstream out, err;
  const int code = run(int(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("input parsing") {
  TEST_CASE("complex literals") {
    CHECK(parse_complex("0+1i") == theta::cplx(0, 1));
    CHECK(parse_complex("0.5-2i") == theta::cplx(0.5, -2));
    CHECK(parse_complex("1.5") == theta::cplx(1.5, 0));
    CHECK(parse_complex("+2i") == theta::cplx(0, 2));
    CHECK(parse_complex("-i") == theta::cplx(0, -1));
    CHECK(parse_complex(" 1e-1 + 3.25i ") == theta::cplx(0.1, 3.25));
    CHECK_THROWS_AS(parse_complex(""), InvalidInput);
    CHECK_THROWS_AS(parse_complex("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_complex("1+2j"), InvalidInput);
    CHECK_THROWS_AS(parse_complex("1+2i+3i"), InvalidInput);
  }

  TEST_CASE("period matrices") {
    auto Z = parse_period_matrix(R"({"re": [[0.1, 0.2], [0.2, 0.3]], "im": [[1.5, 0.25], [0.25, 2.0]]})");
    CHECK(Z.z11 == theta::cplx(0.1, 1.5));
    CHECK(Z.z12 == theta::cplx(0.2, 0.25));
    CHECK(Z.z22 == theta::cplx(0.3, 2.0));
    // Only the upper triangle is read.
    auto Z2 = parse_period_matrix(R"({"re": [[0, 0.2], [99, 0]], "im": [[1, 0], [-7, 1]]})");
    CHECK(Z2.z12 == theta::cplx(0.2, 0));
    CHECK_THROWS_AS(parse_period_matrix(R"({"re": [[0, 0], [0, 0]], "im": [[1, 2], [2, 1]]})"),
                    theta::NotSiegel);
    CHECK_THROWS_AS(parse_period_matrix("{"), InvalidInput);
    CHECK_THROWS_AS(parse_period_matrix(R"({"re": [[0, 0]], "im": [[1, 0], [0, 1]]})"), InvalidInput);
    CHECK_THROWS_AS(parse_period_matrix(R"({"re": [[0, "x"], [0, 0]], "im": [[1, 0], [0, 1]]})"),
                    InvalidInput);
  }

  TEST_CASE("tolerance precedence") {
    CHECK(resolve_tol(std::nullopt, nullptr) == kDefaultTol);
    CHECK(resolve_tol(std::nullopt, "") == kDefaultTol);
    CHECK(resolve_tol(std::nullopt, "1e-8") == 1e-8);
    CHECK(resolve_tol(1e-6, "1e-8") == 1e-6);
    CHECK_THROWS_AS(resolve_tol(std::nullopt, "tiny"), InvalidInput);
    CHECK_THROWS_AS(resolve_tol(-1.0, nullptr), InvalidInput);
    CHECK_THROWS_AS(resolve_tol(0.0, nullptr), InvalidInput);
  }
}

TEST_SUITE("commands") {
  TEST_CASE("klein enumerate") {
    auto r = run_cli({"klein", "--genus", "2", "--enumerate"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "total=35 isotropic=15 non-isotropic=20"));
    CHECK(contains(r.out, "hyperelliptic=20 not-hyperelliptic=15 undetermined=0"));
    auto r3 = run_cli({"klein", "--genus", "3", "--enumerate", "--format", "json"});
    CHECK(r3.code == 0);
    auto j = nlohmann::json::parse(r3.out);
    CHECK(j["overall"] == "pass");
    CHECK(j["lines"][0] == "total=651 isotropic=315 non-isotropic=336");
  }

  TEST_CASE("klein classify and complement") {
    auto r = run_cli({"klein", "--genus", "2", "--classify", "1,2", "3,4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "NotHyperelliptic"));
    auto h = run_cli({"klein", "--genus", "2", "--classify", "1,2", "1,3"});
    CHECK(contains(h.out, "<{1,2},{1,3}>: Hyperelliptic"));
    auto c = run_cli({"klein", "--genus", "2", "--complement", "1,2", "1,3"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "dimension 2"));
  }

  TEST_CASE("invalid input exits with 2") {
    CHECK(run_cli({"klein", "--genus", "2", "--classify", "1,2,3", "1,4"}).code == 2);
    CHECK(run_cli({"klein", "--genus", "2", "--classify", "1,2", "1,9"}).code == 2);
    CHECK(run_cli({"klein", "--genus", "2", "--classify", "1,2", "1,2"}).code == 2);
    CHECK(run_cli({"klein", "--genus", "5", "--enumerate"}).code == 2);
    CHECK(run_cli({"klein", "--genus", "2"}).code == 2);
    CHECK(run_cli({"product-case", "--tau1", "0-1i"}).code == 2);
    CHECK(run_cli({"product-case", "--tau1", "nonsense"}).code == 2);
    CHECK(run_cli({"verify-surface"}).code == 2);
    CHECK(run_cli({"verify-surface", "--period-matrix", "/nonexistent.json"}).code == 2);
    CHECK(run_cli({"verify-surface", "--random", "--period-matrix", "x.json"}).code == 2);
    CHECK(run_cli({"feasible-genera", "--max", "1"}).code == 2);
    CHECK(run_cli({"decompose", "--format", "xml"}).code == 2);
    CHECK(run_cli({"decompose", "--tol", "-1"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"trace-curve", "--random", "--grid", "1"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
  }

  TEST_CASE("decompose and feasible-genera") {
    auto d = run_cli({"decompose"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "J C~ = "));
    auto f = run_cli({"feasible-genera", "--max", "10"});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "2:(1,1) 3:(1,2) 4:(1,3) 5:(1,4)"));
    auto csv = run_cli({"feasible-genera", "--format", "csv"});
    CHECK(contains(csv.out, "check,status,residual,detail"));
  }

  TEST_CASE("reports are reproducible for a fixed seed") {
    RunConfig cfg;
    cfg.command = "theta_lab verify-surface --random --seed 11";
    cfg.seed = 11;
    cfg.samples = 10;
    theta::Rng rng1(11), rng2(11);
    auto a = cmd_verify_surface(cfg, theta::random_period_matrix(rng1, true));
    auto b = cmd_verify_surface(cfg, theta::random_period_matrix(rng2, true));
    for (auto f : {Format::json, Format::csv, Format::md}) CHECK(render(a, f, false) == render(b, f, false));
    CHECK(a.passed());
  }

  TEST_CASE("trace-curve writes the point cloud") {
    auto r = run_cli({"trace-curve", "--random", "--seed", "3", "--grid", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("v1_re,v1_im,v2_re,v2_im,abs_theta,grad_norm\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') > 10);
    CHECK(contains(r.err, "overall"));
  }
}
