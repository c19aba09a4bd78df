#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "satogr/krichever.hpp"
#include "satogr/pfaffian.hpp"
#include "satogr/tau.hpp"

namespace satogr::io {

using json = nlohmann::json;

// Rationals are "p/q" strings on output; integers and "p", "p/q" strings are accepted on input.
Rational parse_rational(const json& j);
json to_json(const Rational& r);

// {"terms": [[exp, "p/q"], ...], "trunc": int | null} or a bare list of terms.
Series parse_series(const json& j);
json to_json(const Series& s);

json to_json(const Partition& p);
Partition parse_partition(const json& j);

// Polynomials in named parameters: "p/q", a parameter name, or [["p/q", {"name": power}], ...].
Polynomial parse_polynomial(const json& j, const std::vector<std::string>& params, int maxdeg = kExactWeight);
PolySeries parse_poly_series(const json& j, const std::vector<std::string>& params, int maxdeg);
// Terms as [monomial, "p/q"] with parameters printed by name when given.
json to_json(const Polynomial& p, const std::vector<std::string>& params = {});
std::string monomial_name(const Monomial& m, const std::vector<std::string>& params);

json to_json(const FramePoint& U);
json to_json(const Verdict& v);

struct PointInput {
  FramePoint point;
  std::optional<int> window;
  json expect = json::object();
  std::string label;
};
// {"window", "tailJ", "generators", "flow"?, "expect"?}. `window` overrides the file.
PointInput parse_point(const json& j, std::optional<int> window = std::nullopt);

struct CurveInput {
  CurveData data;
  std::optional<int> window;
  json expect = json::object();
};
// {"ring", "module"?, "involution"?, "window"?, "expect"?}
CurveInput parse_curve(const json& j);

struct MatrixInput {
  std::vector<std::string> params;
  Matrix<Polynomial> entries;
  bool symbolic = false;
  json expect = json::object();
};
// {"matrix": [[entry, ...], ...], "params"?}
MatrixInput parse_matrix(const json& j);

struct FamilyInput {
  ParamFamily family;
  json expect = json::object();
};
// {"params", "maxdeg", and either "tailJ" + "generators" (polynomial series) or "base" + "flow_exponent"}
FamilyInput parse_family(const json& j);

struct TauInput {
  TauFunction tau;
  json expect = json::object();
};
// {"tau": [[partition, "p/q"], ...], "weight"}
TauInput parse_tau(const json& j);

json read_file(const std::string& path);

}  // namespace satogr::io
