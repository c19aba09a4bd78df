#include "satogr/io.hpp"

#include <fstream>
#include <sstream>

namespace satogr::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

json expect_of(const json& j) {
  if (!j.contains("expect")) return json::object();
  if (!j["expect"].is_object()) bad("\"expect\" must be an object");
  return j["expect"];
}

std::vector<Series> series_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list of series");
  std::vector<Series> out;
  for (auto& s : j) out.push_back(parse_series(s));
  return out;
}

}  // namespace

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("rational must be a \"p/q\" string or an integer");
}

json to_json(const Rational& r) { return r.str(); }

Series parse_series(const json& j) {
  const json* terms = &j;
  int trunc = kExactTrunc;
  if (j.is_object()) {
    terms = &field(j, "terms");
    if (j.contains("trunc") && !j["trunc"].is_null()) trunc = as_int(j["trunc"], "trunc");
  }
  if (!terms->is_array()) bad("series terms must be a list");
  std::map<int, Rational> c;
  for (auto& t : *terms) {
    if (!t.is_array() || t.size() != 2) bad("series term must be [exponent, \"p/q\"]");
    int e = as_int(t[0], "exponent");
    if (c.count(e)) bad("repeated exponent " + std::to_string(e));
    if (e >= trunc) bad("term z^" + std::to_string(e) + " at or beyond trunc");
    c.emplace(e, parse_rational(t[1]));
  }
  return Series(c, trunc);
}

json to_json(const Series& s) {
  json terms = json::array();
  for (auto& [e, x] : s.coeffs()) terms.push_back({e, x.str()});
  json out = {{"terms", terms}, {"trunc", nullptr}};
  if (!s.is_exact()) out["trunc"] = s.trunc();
  return out;
}

json to_json(const Partition& p) {
  json a = json::array();
  for (int i = 0; i < p.length(); ++i) a.push_back(p.part(i));
  return a;
}

Partition parse_partition(const json& j) {
  if (!j.is_array()) bad("partition must be a list of parts");
  std::vector<int> parts;
  for (auto& x : j) parts.push_back(as_int(x, "part"));
  try {
    return Partition(parts);
  } catch (const std::exception& e) {
    bad(std::string("bad partition: ") + e.what());
  }
}

Polynomial parse_polynomial(const json& j, const std::vector<std::string>& params, int maxdeg) {
  auto var_of = [&](const std::string& name) -> std::optional<Var> {
    for (size_t i = 0; i < params.size(); ++i)
      if (params[i] == name) return param(static_cast<int>(i) + 1);
    return std::nullopt;
  };
  if (j.is_number_integer()) return Polynomial(Rational(j.get<long>())).truncated(maxdeg);
  if (j.is_string()) {
    if (auto v = var_of(j.get<std::string>())) return Polynomial::variable(*v, maxdeg);
    return Polynomial(parse_rational(j)).truncated(maxdeg);
  }
  if (!j.is_array()) bad("polynomial must be a rational, a parameter name or a list of terms");
  Polynomial out = Polynomial(Rational(0)).truncated(maxdeg);
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_object()) bad("polynomial term must be [\"p/q\", {name: power}]");
    std::map<Var, int> pw;
    for (auto& [name, e] : t[1].items()) {
      auto v = var_of(name);
      if (!v) bad("unknown parameter \"" + name + "\"");
      int k = as_int(e, "power");
      if (k < 0) bad("negative power");
      if (k) pw[*v] += k;
    }
    Monomial m(pw.begin(), pw.end());
    out += Polynomial::monomial(m, parse_rational(t[0]), maxdeg);
  }
  return out;
}

PolySeries parse_poly_series(const json& j, const std::vector<std::string>& params, int maxdeg) {
  const json* terms = &j;
  int trunc = kExactTrunc;
  if (j.is_object()) {
    terms = &field(j, "terms");
    if (j.contains("trunc") && !j["trunc"].is_null()) trunc = as_int(j["trunc"], "trunc");
  }
  if (!terms->is_array()) bad("series terms must be a list");
  std::map<int, Polynomial> c;
  for (auto& t : *terms) {
    if (!t.is_array() || t.size() != 2) bad("series term must be [exponent, coefficient]");
    int e = as_int(t[0], "exponent");
    if (c.count(e)) bad("repeated exponent " + std::to_string(e));
    c.emplace(e, parse_polynomial(t[1], params, maxdeg));
  }
  return PolySeries(c, trunc);
}

std::string monomial_name(const Monomial& m, const std::vector<std::string>& params) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    auto [v, e] = m[i];
    if (i) os << "*";
    if (v.kind == VarKind::Param && v.index >= 1 && v.index <= static_cast<int>(params.size()))
      os << params[v.index - 1];
    else
      os << monomial_str({{v, 1}});
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

json to_json(const Polynomial& p, const std::vector<std::string>& params) {
  json terms = json::array();
  for (auto& [m, c] : p.terms()) terms.push_back({monomial_name(m, params), c.str()});
  json out = {{"terms", terms}, {"maxweight", nullptr}};
  if (!p.is_exact()) out["maxweight"] = p.maxweight();
  return out;
}

json to_json(const FramePoint& U) {
  json gens = json::array();
  for (auto& g : U.gens()) gens.push_back(to_json(g));
  return {{"generators", gens}, {"tailJ", U.tail()}, {"exact", U.exact()}, {"window", {U.window().lo, U.window().hi}}};
}

json to_json(const Verdict& v) {
  json out = {{"holds", v.holds}, {"certified", v.certified}};
  if (!v.witness.empty()) out["witness"] = v.witness;
  if (!v.value.is_zero()) out["value"] = v.value.str();
  return out;
}

PointInput parse_point(const json& j, std::optional<int> window) {
  if (!j.is_object()) bad("point file must be an object");
  PointInput in;
  if (j.contains("window")) in.window = as_int(j["window"], "window");
  if (window) in.window = window;
  Window w = Window::radius(in.window.value_or(kDefaultWindow));
  if (w.hi <= 0) bad("window must be positive");
  int tail = as_int(field(j, "tailJ"), "tailJ");
  auto gens = series_list(j.value("generators", json::array()), "generators");
  in.point = FramePoint::make(gens, tail, w);
  if (j.contains("flow")) in.point = flow(in.point, parse_series(j["flow"]));
  in.expect = expect_of(j);
  in.label = j.value("label", "");
  return in;
}

CurveInput parse_curve(const json& j) {
  if (!j.is_object()) bad("curve file must be an object");
  CurveInput in;
  in.data.ring_gens = series_list(field(j, "ring"), "ring");
  if (j.contains("module")) in.data.module_gens = series_list(j["module"], "module");
  if (j.contains("involution")) in.data.involution = SubstitutionMap(parse_series(j["involution"]));
  if (j.contains("window")) in.window = as_int(j["window"], "window");
  in.data.label = j.value("label", "");
  in.expect = expect_of(j);
  return in;
}

MatrixInput parse_matrix(const json& j) {
  MatrixInput in;
  const json& rows = j.is_array() ? j : field(j, "matrix");
  if (j.is_object() && j.contains("params")) {
    in.params = j["params"].get<std::vector<std::string>>();
    in.symbolic = true;
  }
  if (!rows.is_array()) bad("matrix must be a list of rows");
  for (auto& r : rows) {
    if (!r.is_array()) bad("matrix row must be a list");
    std::vector<Polynomial> row;
    for (auto& x : r) row.push_back(in.symbolic ? parse_polynomial(x, in.params) : Polynomial(parse_rational(x)));
    in.entries.push_back(std::move(row));
  }
  if (j.is_object()) in.expect = expect_of(j);
  return in;
}

FamilyInput parse_family(const json& j) {
  if (!j.is_object()) bad("family file must be an object");
  FamilyInput in;
  auto params = field(j, "params").get<std::vector<std::string>>();
  int maxdeg = as_int(field(j, "maxdeg"), "maxdeg");
  if (maxdeg < 0) bad("maxdeg must be nonnegative");
  if (j.contains("flow_exponent")) {
    PointInput base = parse_point(field(j, "base"));
    PolySeries a = parse_poly_series(j["flow_exponent"], params, maxdeg);
    in.family = flow_family(base.point, exp_nilpotent(a), params, maxdeg);
  } else {
    int tail = as_int(field(j, "tailJ"), "tailJ");
    FlowedFrame<Polynomial> f;
    f.tail = tail;
    f.g = PolySeries::constant(Polynomial(Rational(1)).truncated(maxdeg));
    for (auto& g : field(j, "generators")) f.gens.push_back(parse_poly_series(g, params, maxdeg));
    in.family = ParamFamily{params, f, maxdeg};
  }
  in.expect = expect_of(j);
  return in;
}

TauInput parse_tau(const json& j) {
  TauInput in;
  int W = as_int(field(j, "weight"), "weight");
  std::map<Partition, Rational> c;
  for (auto& t : field(j, "tau")) {
    if (!t.is_array() || t.size() != 2) bad("tau entry must be [partition, \"p/q\"]");
    Partition p = parse_partition(t[0]);
    if (p.weight() > W) bad("tau coefficient beyond the stated weight");
    if (c.count(p)) bad("repeated partition " + p.str());
    c.emplace(p, parse_rational(t[1]));
  }
  in.tau = TauFunction::from_coeffs(c, W);
  in.expect = expect_of(j);
  return in;
}

json read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) bad("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace satogr::io
