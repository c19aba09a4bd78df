#include "satogr/cli.hpp"

#include <functional>

#include "satogr/hierarchy.hpp"

namespace satogr::cli {

using io::json;
using io::to_json;

namespace {

class Report {
 public:
  Report(const JobConfig& c) {
    doc_["tool"] = "satogr";
    doc_["version"] = kVersion;
    doc_["command"] = c.command;
    doc_["config"] = config_json(c);
    doc_["input"] = c.input;
    doc_["checks"] = json::array();
    doc_["result"] = json::object();
  }

  // An asserted check fails the run when value != expected.
  void check(const std::string& name, const json& value, const json& expected, bool asserted, json extra = json::object()) {
    json c = extra;
    c["name"] = name;
    c["value"] = value;
    c["asserted"] = asserted;
    if (!expected.is_null()) c["expected"] = expected;
    bool pass = expected.is_null() || value == expected;
    c["pass"] = pass;
    if (asserted && !pass) ok_ = false;
    doc_["checks"].push_back(c);
  }
  // Check against an optional "expect" entry.
  void expect(const json& exp, const std::string& name, const json& value, json extra = json::object()) {
    bool has = exp.contains(name);
    check(name, value, has ? exp[name] : json(), has, std::move(extra));
  }
  void check_error(const std::string& name, const Error& e, const json& exp) {
    json c = {{"name", name}, {"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
    bool asserted = exp.contains(name);
    c["asserted"] = asserted;
    c["pass"] = false;
    if (asserted) {
      c["expected"] = exp[name];
      ok_ = false;
    }
    doc_["checks"].push_back(c);
  }
  void unsound(int n) { unsound_ += n; }
  json& result() { return doc_["result"]; }

  Outcome finish(bool strict) {
    bool pass = ok_ && !(strict && unsound_ > 0);
    doc_["unsound_skips"] = unsound_;
    doc_["verdict"] = pass ? "PASS" : "FAIL";
    return {doc_, pass ? 0 : 1};
  }

 private:
  json doc_;
  bool ok_ = true;
  int unsound_ = 0;
};

// Evaluates and records one check, turning library errors into failed checks.
void guarded(Report& r, const std::string& name, const json& exp, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    r.check_error(name, e, exp);
  }
}

Window window_of(const JobConfig& c, std::optional<int> file) {
  int r = c.window.value_or(file.value_or(kDefaultWindow));
  if (r <= 0) fail(ErrorKind::ParseError, "window radius must be positive");
  return Window::radius(r);
}

json tau_coeffs(const TauFunction& T) {
  json a = json::array();
  for (auto& [p, x] : T.coeffs) a.push_back({to_json(p), x.str()});
  return a;
}

json residual_json(const Residual& r) {
  int nonzero = 0;
  for (auto& row : r.coeffs)
    for (auto& x : row) nonzero += !x.is_zero();
  json out = {{"zero", r.zero}, {"nonzero_coefficients", nonzero}};
  if (r.witness) out["witness"] = {{"monomial", monomial_str(r.witness->first)}, {"value", r.witness->second.str()}};
  return out;
}

Outcome cmd_check(const JobConfig& c, const json& in) {
  Report r(c);
  auto p = io::parse_point(in, c.window);
  const FramePoint& U = p.point;
  const json& exp = p.expect;
  r.result()["point"] = to_json(U);
  r.result()["partition"] = to_json(U.partition());
  r.expect(exp, "index", U.index());
  r.expect(exp, "parity", U.parity());
  guarded(r, "sigma_invariant", exp, [&] {
    Verdict v = is_sigma_invariant(U, SubstitutionMap::sigma0());
    r.expect(exp, "sigma_invariant", v.holds, {{"detail", to_json(v)}});
  });
  guarded(r, "isotropic", exp, [&] {
    auto iso = is_isotropic(U, SubstitutionMap::sigma0());
    json d = to_json(iso.verdict);
    if (iso.verdict.holds) d["parity"] = iso.parity;
    r.expect(exp, "isotropic", iso.verdict.holds, {{"detail", d}});
  });
  guarded(r, "ring", exp, [&] {
    Verdict v = is_ring_point(U);
    r.expect(exp, "ring", v.holds, {{"detail", to_json(v)}});
  });
  guarded(r, "p0", exp, [&] {
    Verdict v = p0_membership(U);
    r.expect(exp, "p0", v.holds, {{"detail", to_json(v)}});
  });
  return r.finish(c.strict);
}

Outcome cmd_tau(const JobConfig& c, const json& in) {
  Report r(c);
  auto p = io::parse_point(in, c.window);
  TauFunction T = tau(p.point, c.weight);
  r.result()["weight"] = c.weight;
  r.result()["parity"] = T.parity;
  r.result()["coefficients"] = tau_coeffs(T);
  if (T.isotropic) r.result()["isotropic"] = *T.isotropic;
  try {
    TauBar b = tau_bar(T);
    r.result()["tau_bar"] = {{"lambda", b.lambda.str()}, {"root", to_json(b.root)}, {"restricted", to_json(b.restricted)}};
  } catch (const Error& e) {
    if (c.bar) throw;
    r.result()["tau_bar"] = {{"unavailable", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
  }
  if (p.expect.contains("tau")) {
    auto exp_tau = io::parse_tau({{"tau", p.expect["tau"]}, {"weight", c.weight}}).tau;
    r.check("tau", tau_coeffs(T), tau_coeffs(exp_tau), true);
  }
  return r.finish(c.strict);
}

Outcome cmd_baker(const JobConfig& c, const json& in) {
  Report r(c);
  auto p = io::parse_point(in, c.window);
  auto list = [](const BakerSeries& b) {
    json a = json::array();
    for (auto& s : b.basis) a.push_back(to_json(s));
    return a;
  };
  BakerSeries psi = baker(p.point, c.weight);
  r.result()["weight"] = c.weight;
  r.result()["basis"] = list(psi);
  guarded(r, "adjoint", p.expect, [&] {
    FramePoint A = adjoint_point(p.point);
    r.result()["adjoint_point"] = to_json(A);
    r.result()["adjoint_basis"] = list(baker_adjoint(p.point, c.weight));
  });
  return r.finish(c.strict);
}

Outcome cmd_bilinear(const JobConfig& c, const json& in) {
  Report r(c);
  auto p = io::parse_point(in, c.window);
  BilinearResult b = bilinear_residues(p.point, c.weight);
  r.result()["weight"] = c.weight;
  r.result()["first"] = residual_json(b.first);
  r.result()["second"] = residual_json(b.second);
  r.result()["frame_first"] = to_json(b.frame_first);
  r.result()["frame_second"] = to_json(b.frame_second);
  r.result()["sigma_invariant"] = to_json(b.sigma_invariant);
  r.result()["literal_checked"] = b.literal_checked;
  r.check("first_matches_frame", b.first.zero, b.frame_first.holds, true);
  r.check("second_matches_frame", b.second.zero, b.frame_second.holds, true);
  if (b.literal_checked) r.check("literal_agrees", b.literal_agrees, true, true);
  r.expect(p.expect, "first_zero", b.first.zero);
  r.expect(p.expect, "second_zero", b.second.zero);
  return r.finish(c.strict);
}

Outcome cmd_hierarchy(const JobConfig& c, const json& in) {
  Report r(c);
  TauFunction T;
  json exp;
  if (in.contains("tau")) {
    auto t = io::parse_tau(in);
    T = t.tau;
    exp = t.expect;
  } else {
    auto p = io::parse_point(in, c.window);
    T = tau(p.point, c.weight);
    exp = p.expect;
  }
  SuiteOptions opt;
  opt.maxsize[Family::GR0] = c.maxsize;
  opt.maxsize[Family::P0TRIPLE] = c.triple_maxsize.value_or(c.maxsize);
  opt.maxsize[Family::CURVE] = c.maxsize;
  if (c.gr0_mode == "printed") opt.eval.gr0 = Gr0Mode::AsPrinted;
  else if (c.gr0_mode != "reflected") fail(ErrorKind::ParseError, "unknown GR0 mode " + c.gr0_mode);
  if (c.triple_mode == "swapped") opt.eval.triple = TripleMode::SignSwapped;
  else if (c.triple_mode != "printed") fail(ErrorKind::ParseError, "unknown triple mode " + c.triple_mode);
  SuiteReport rep = constraint_suite(T, opt);
  r.result()["weight"] = T.weight;
  r.result()["parity"] = T.parity;
  json fams = json::object();
  for (auto& [f, s] : rep.summary) {
    json e = {{"evaluated", s.evaluated}, {"nonzero", s.nonzero}, {"skipped_unsound", s.skipped}, {"literal_mismatch", s.literal_mismatch}};
    if (s.first_failure) e["first_failure"] = {{"index", s.first_failure->index.str()}, {"value", s.first_failure->value.str()}};
    fams[family_name(f)] = e;
    r.unsound(s.skipped);
    r.check(std::string(family_name(f)) + "_residuals_zero", s.nonzero == 0, true, true, {{"nonzero", s.nonzero}});
    r.check(std::string(family_name(f)) + "_routes_agree", s.literal_mismatch == 0, true, true);
  }
  r.result()["families"] = fams;
  json skipped = json::array();
  for (auto& x : rep.residuals)
    if (!x.sound && skipped.size() < 20)
      skipped.push_back({{"index", x.index.str()}, {"reason", "needs tau to weight " + std::to_string(x.soundness_weight)}});
  r.result()["skipped_sample"] = skipped;
  return r.finish(c.strict);
}

Outcome cmd_orbit(const JobConfig& c, const json& in) {
  Report r(c);
  FramePoint U;
  json exp;
  if (in.contains("ring")) {
    auto cur = io::parse_curve(in);
    U = span_closure(cur.data, window_of(c, cur.window));
    exp = cur.expect;
  } else {
    auto p = io::parse_point(in, c.window);
    U = p.point;
    exp = p.expect;
  }
  OrbitProfile prof = orbit_profile(U, c.nmax, c.odd);
  r.result()["point"] = to_json(U);
  r.result()["index"] = U.index();
  r.result()["profile"] = prof.d;
  r.result()["odd_only"] = prof.odd_only;
  r.result()["verdict"] = prof.verdict();
  if (prof.stabilized) {
    r.result()["stable_from"] = prof.stable_from;
    r.result()["genus_estimate"] = *prof.genus;
  }
  json stab = json::array();
  for (auto& s : stabilizer(U, c.nmax)) stab.push_back(to_json(s));
  r.result()["stabilizer"] = stab;
  guarded(r, "ring", exp, [&] { r.expect(exp, "ring", is_ring_point(U).holds); });
  guarded(r, "quotient", exp, [&] {
    if (!is_sigma_invariant(U, SubstitutionMap::sigma0()).holds) return;
    FramePoint Q = quotient_ring(U);
    r.result()["quotient"] = to_json(Q);
  });
  r.expect(exp, "stabilized", prof.stabilized);
  if (exp.contains("genus")) r.check("genus", prof.genus ? json(*prof.genus) : json(nullptr), exp["genus"], true);
  if (exp.contains("index")) r.check("index", U.index(), exp["index"], true);
  return r.finish(c.strict);
}

Outcome cmd_pfaffian(const JobConfig& c, const json& in) {
  Report r(c);
  auto m = io::parse_matrix(in);
  Polynomial pf = pfaffian(m.entries);
  Polynomial d = det_expand(m.entries);
  Polynomial diff = pf * pf - d;
  r.result()["size"] = m.entries.size();
  if (m.symbolic) {
    r.result()["pfaffian"] = to_json(pf, m.params);
    r.result()["det"] = to_json(d, m.params);
  } else {
    r.result()["pfaffian"] = pf.constant_term().str();
    r.result()["det"] = d.constant_term().str();
  }
  r.check("pf_squared_minus_det_zero", diff.is_zero(), true, true);
  if (m.expect.contains("pfaffian")) {
    Polynomial want = io::parse_polynomial(m.expect["pfaffian"], m.params);
    r.check("pfaffian", (pf - want).is_zero(), true, true);
  }
  return r.finish(c.strict);
}

Outcome cmd_family_square(const JobConfig& c, const json& in) {
  Report r(c);
  auto f = io::parse_family(in);
  SquareResult s = section_square_check(f.family, f.family.maxdeg);
  const auto& P = f.family.params;
  r.result()["maxdeg"] = f.family.maxdeg;
  r.result()["parity"] = s.parity;
  r.result()["lambda"] = s.lambda.str();
  r.result()["section"] = to_json(s.section, P);
  r.result()["is_square"] = s.is_square;
  if (s.is_square) r.result()["root"] = to_json(s.root, P);
  if (!s.witness.empty())
    r.result()["witness"] = {{"reason", s.witness}, {"monomial", io::monomial_name(s.witness_monomial, P)}, {"value", s.witness_value.str()}};
  r.expect(f.expect, "is_square", s.is_square);
  r.expect(f.expect, "parity", s.parity);
  return r.finish(c.strict);
}

}  // namespace

json config_json(const JobConfig& c) {
  json j = {{"command", c.command}, {"input", c.input}, {"weight", c.weight}, {"maxsize", c.maxsize},
            {"nmax", c.nmax}, {"odd", c.odd}, {"strict", c.strict}, {"bar", c.bar},
            {"gr0_mode", c.gr0_mode}, {"triple_mode", c.triple_mode}};
  j["window"] = c.window ? json(*c.window) : json(nullptr);
  j["triple_maxsize"] = c.triple_maxsize ? json(*c.triple_maxsize) : json(nullptr);
  return j;
}

Outcome run(const JobConfig& c, const json& input) {
  if (c.weight < 0 || c.maxsize < 0 || c.nmax <= 0) fail(ErrorKind::ParseError, "numeric knobs must be positive");
  static const std::map<std::string, Outcome (*)(const JobConfig&, const json&)> table = {
      {"check", cmd_check},   {"tau", cmd_tau},         {"baker", cmd_baker},         {"bilinear", cmd_bilinear},
      {"hierarchy", cmd_hierarchy}, {"orbit", cmd_orbit}, {"pfaffian", cmd_pfaffian}, {"family-square", cmd_family_square}};
  auto it = table.find(c.command);
  if (it == table.end()) fail(ErrorKind::ParseError, "unknown command " + c.command);
  return it->second(c, input);
}

Outcome run_file(const JobConfig& c) {
  try {
    return run(c, io::read_file(c.input));
  } catch (const Error& e) {
    return {{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}, 2};
  } catch (const json::exception& e) {
    return {{{"error", {{"kind", "ParseError"}, {"message", e.what()}}}}, 2};
  }
}

}  // namespace satogr::cli
