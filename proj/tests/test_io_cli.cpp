#include <doctest.h>

#include "satogr/cli.hpp"

using namespace satogr;
using io::json;

#ifndef SATOGR_DATA_DIR
#define SATOGR_DATA_DIR "data"
#endif

namespace {

cli::Outcome run(const std::string& cmd, const std::string& file, cli::JobConfig c = {}) {
  c.command = cmd;
  c.input = std::string(SATOGR_DATA_DIR) + "/" + file;
  return cli::run_file(c);
}

}  // namespace

TEST_CASE("series literal round trip") {
  json j = json::parse(R"({"terms": [[3, "1/2"], [-1, "-4"]], "trunc": 5})");
  Series s = io::parse_series(j);
  CHECK(s.trunc() == 5);
  CHECK(s.coeff(-1) == Rational(-4));
  CHECK(io::parse_series(io::to_json(s)) == s);
  CHECK(io::parse_series(json::parse(R"([[0, 1]])")) == Series::monomial(0));
  CHECK_THROWS_AS(io::parse_series(json::parse(R"([[0, "1"], [0, "2"]])")), Error);
  CHECK_THROWS_AS(io::parse_series(json::parse(R"({"terms": [[6, "1"]], "trunc": 5})")), Error);
  CHECK_THROWS_AS(io::parse_series(json::parse(R"([[0, 1.5]])")), Error);
}

TEST_CASE("polynomial literals") {
  std::vector<std::string> p = {"a", "b"};
  Polynomial x = io::parse_polynomial(json::parse(R"([["2", {"a": 1, "b": 2}], ["-1", {}]])"), p);
  CHECK(x.coeff({{param(1), 1}, {param(2), 2}}) == Rational(2));
  CHECK(x.constant_term() == Rational(-1));
  CHECK(io::parse_polynomial("b", p) == Polynomial::variable(param(2)));
  CHECK_THROWS_AS(io::parse_polynomial(json::parse(R"([["1", {"c": 1}]])"), p), Error);
}

TEST_CASE("check reports") {
  auto r = run("check", "cusp.json");
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdict"] == "PASS");
  for (auto& c : r.report["checks"]) CHECK(c["pass"] == true);
  r = run("check", "vacuum.json");
  CHECK(r.exit_code == 0);
  r = run("check", "malformed.json");
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"]["kind"] == "ParseError");
  r = run("check", "no_such_file.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("tau reports") {
  cli::JobConfig c;
  c.weight = 6;
  auto r = run("tau", "cusp.json", c);
  CHECK(r.exit_code == 0);
  CHECK(r.report["result"]["coefficients"] == json::parse(R"([[[1], "1/1"]])"));
  CHECK(r.report["result"]["tau_bar"]["unavailable"]["kind"] == "OddParity");
  c.bar = true;
  CHECK(run("tau", "cusp.json", c).exit_code == 2);
  r = run("tau", "shifted_line.json");
  CHECK(r.exit_code == 0);
}

TEST_CASE("other commands") {
  cli::JobConfig c;
  c.maxsize = 3;
  auto h = run("hierarchy", "cusp.json", c);
  CHECK(h.exit_code == 0);
  CHECK(h.report["verdict"] == "PASS");
  CHECK(run("hierarchy", "tau_perturbed.json", c).exit_code == 1);
  c.strict = true;
  CHECK(run("hierarchy", "cusp.json", c).exit_code == 1);  // some triples need more weight
  auto o = run("orbit", "curve_2_5.json");
  CHECK(o.exit_code == 0);
  CHECK(o.report["result"]["genus_estimate"] == 2);
  CHECK(o.report["result"]["verdict"] == "stabilized");
  CHECK(run("pfaffian", "pf4.json").exit_code == 0);
  CHECK(run("pfaffian", "pf4_symbolic.json").exit_code == 0);
  CHECK(run("family-square", "prym_family.json").exit_code == 0);
  auto f = run("family-square", "line_family.json");
  CHECK(f.exit_code == 0);
  CHECK(f.report["result"]["is_square"] == false);
  CHECK(run("bilinear", "shifted_line.json").exit_code == 0);
  CHECK(run("baker", "cusp.json").exit_code == 0);
}

TEST_CASE("reports are deterministic and echo their config") {
  cli::JobConfig c;
  c.maxsize = 2;
  auto a = run("hierarchy", "cusp.json", c), b = run("hierarchy", "cusp.json", c);
  CHECK(a.report.dump() == b.report.dump());
  json cfg = a.report["config"];
  CHECK(cfg["maxsize"] == 2);
  CHECK(cfg["command"] == "hierarchy");
}
