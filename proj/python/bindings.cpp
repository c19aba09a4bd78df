#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satogr/cli.hpp"
#include "satogr/hierarchy.hpp"
#include "satogr/krichever.hpp"
#include "satogr/pfaffian.hpp"
#include "satogr/tau.hpp"

namespace py = pybind11;
using namespace satogr;

namespace {

py::object fraction_cls() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_py(const Rational& r) { return fraction_cls()(r.str()); }

Rational from_py(py::handle h) {
  if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h) || py::isinstance(h, fraction_cls()))
    return Rational::parse(py::str(h).cast<std::string>());
  throw py::type_error("expected int, str or fractions.Fraction");
}

Series series_from(py::handle terms, std::optional<int> trunc) {
  std::map<int, Rational> c;
  if (py::isinstance<py::dict>(terms)) {
    for (auto [k, v] : terms.cast<py::dict>()) c[k.cast<int>()] = from_py(v);
  } else {
    for (auto t : terms) {
      auto pair = t.cast<py::tuple>();
      c[pair[0].cast<int>()] = from_py(pair[1]);
    }
  }
  return Series(c, trunc.value_or(kExactTrunc));
}

py::dict terms_of(const Series& s) {
  py::dict d;
  for (auto& [e, x] : s.coeffs()) d[py::int_(e)] = to_py(x);
  return d;
}

py::dict poly_dict(const Polynomial& p) {
  py::dict d;
  for (auto& [m, c] : p.terms()) d[py::str(monomial_str(m))] = to_py(c);
  return d;
}

Partition partition_from(const std::vector<int>& parts) { return Partition(parts); }

py::tuple partition_tuple(const Partition& p) {
  py::list l;
  for (int i = 0; i < p.length(); ++i) l.append(p.part(i));
  return py::tuple(l);
}

py::dict tau_dict(const TauFunction& T) {
  py::dict d;
  for (auto& [p, x] : T.coeffs) d[partition_tuple(p)] = to_py(x);
  return d;
}

TauFunction tau_from(py::dict coeffs, int W) {
  std::map<Partition, Rational> c;
  for (auto [k, v] : coeffs) c[partition_from(k.cast<std::vector<int>>())] = from_py(v);
  return TauFunction::from_coeffs(c, W);
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["certified"] = v.certified;
  d["witness"] = v.witness;
  d["value"] = to_py(v.value);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Sato Grassmannian, tau function and curve computations";

  static py::exception<Error> exc(m, "SatogrError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
      inst.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<Series>(m, "Series")
      .def(py::init([](py::object terms, std::optional<int> trunc) { return series_from(terms, trunc); }),
           py::arg("terms"), py::arg("trunc") = py::none())
      .def_static("monomial", [](int e, py::object c) { return Series::monomial(e, from_py(c)); }, py::arg("exponent"), py::arg("coeff") = 1)
      .def("coeff", [](const Series& s, int e) { return to_py(s.coeff(e)); })
      .def("terms", &terms_of)
      .def_property_readonly("trunc", [](const Series& s) -> std::optional<int> {
        if (s.is_exact()) return std::nullopt;
        return s.trunc();
      })
      .def_property_readonly("valuation", [](const Series& s) { return s.valuation(); })
      .def("truncated", &Series::truncated)
      .def("inverse", [](const Series& s, std::optional<int> want) { return invert(s, want); }, py::arg("want") = py::none())
      .def("substitute", [](const Series& f, const Series& s, int want) { return substitute(f, SubstitutionMap(s), want); },
           py::arg("s"), py::arg("want") = kDefaultWindow)
      .def("residue", [](const Series& s) { return to_py(residue(s)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("__repr__", [](const Series& s) { return "Series(" + series_str(s) + ")"; });

  py::class_<FramePoint>(m, "Point")
      .def(py::init([](const std::vector<Series>& gens, int tail, int window) {
             return FramePoint::make(gens, tail, Window::radius(window));
           }),
           py::arg("gens"), py::arg("tail"), py::arg("window") = kDefaultWindow)
      .def_static("vacuum", [](int window) { return FramePoint::vacuum(Window::radius(window)); }, py::arg("window") = kDefaultWindow)
      .def_property_readonly("gens", &FramePoint::gens)
      .def_property_readonly("tail", &FramePoint::tail)
      .def_property_readonly("exact", &FramePoint::exact)
      .def_property_readonly("index", &FramePoint::index)
      .def_property_readonly("parity", &FramePoint::parity)
      .def_property_readonly("pivots", &FramePoint::pivots)
      .def_property_readonly("partition", [](const FramePoint& U) { return partition_tuple(U.partition()); })
      .def("contains", &FramePoint::contains)
      .def("flow", [](const FramePoint& U, const Series& g) { return flow(U, g); })
      .def("plucker", [](const FramePoint& U, const std::vector<int>& lam) { return to_py(plucker(U, partition_from(lam))); })
      .def("is_sigma_invariant", [](const FramePoint& U) { return verdict_dict(is_sigma_invariant(U, SubstitutionMap::sigma0())); })
      .def("is_isotropic", [](const FramePoint& U) {
        auto r = is_isotropic(U, SubstitutionMap::sigma0());
        py::dict d = verdict_dict(r.verdict);
        d["parity"] = r.parity;
        return d;
      })
      .def("split_even_odd", &split_even_odd)
      .def("__eq__", [](const FramePoint& a, const FramePoint& b) { return a == b; })
      .def("__repr__", [](const FramePoint& U) {
        return "Point(index=" + std::to_string(U.index()) + ", tail=" + std::to_string(U.tail()) + ", gens=" + std::to_string(U.gens().size()) + ")";
      });

  m.def("merge_even_odd", &merge_even_odd);
  m.def("tau", [](const FramePoint& U, int W) { return tau_dict(tau(U, W)); }, py::arg("point"), py::arg("weight") = 8);
  m.def("tau_bar", [](const FramePoint& U, int W) {
        TauBar b = tau_bar(tau(U, W));
        return py::make_tuple(to_py(b.lambda), poly_dict(b.root));
      }, py::arg("point"), py::arg("weight") = 8);
  m.def("schur", [](const std::vector<int>& lam, int W) { return poly_dict(schur_poly(partition_from(lam), W)); },
        py::arg("partition"), py::arg("weight") = kExactWeight);

  m.def("span_closure", [](const std::vector<Series>& ring, const std::vector<Series>& module, int window) {
        CurveData d;
        d.ring_gens = ring;
        d.module_gens = module;
        return span_closure(d, Window::radius(window));
      }, py::arg("ring"), py::arg("module") = std::vector<Series>{}, py::arg("window") = kDefaultWindow);
  m.def("is_ring_point", [](const FramePoint& U) { return verdict_dict(is_ring_point(U)); });
  m.def("p0_membership", [](const FramePoint& U) { return verdict_dict(p0_membership(U)); });
  m.def("stabilizer", &stabilizer, py::arg("point"), py::arg("n"));
  m.def("orbit_profile", [](const FramePoint& U, int nmax, bool odd) {
        OrbitProfile p = orbit_profile(U, nmax, odd);
        py::dict d;
        d["profile"] = p.d;
        d["stabilized"] = p.stabilized;
        d["genus"] = p.genus;
        d["verdict"] = p.verdict();
        return d;
      }, py::arg("point"), py::arg("nmax") = 12, py::arg("odd_only") = false);
  m.def("quotient_ring", &quotient_ring);
  m.def("normalize_involution", [](const Series& s, int order) { return normalize_involution(SubstitutionMap(s), order).image(); },
        py::arg("s"), py::arg("order") = 8);

  auto matrix_from = [](const std::vector<std::vector<py::object>>& rows) {
    Matrix<Rational> mat;
    for (auto& r : rows) {
      std::vector<Rational> row;
      for (auto& x : r) row.push_back(from_py(x));
      mat.push_back(row);
    }
    return mat;
  };
  m.def("pfaffian", [matrix_from](const std::vector<std::vector<py::object>>& rows) { return to_py(pfaffian(matrix_from(rows))); });
  m.def("det", [matrix_from](const std::vector<std::vector<py::object>>& rows) { return to_py(det(matrix_from(rows))); });

  m.def("hierarchy", [](py::dict coeffs, int W, int maxsize, std::optional<int> triple_maxsize) {
        SuiteOptions opt;
        opt.maxsize[Family::GR0] = maxsize;
        opt.maxsize[Family::P0TRIPLE] = triple_maxsize.value_or(maxsize);
        opt.maxsize[Family::CURVE] = maxsize;
        SuiteReport rep = constraint_suite(tau_from(coeffs, W), opt);
        py::dict out;
        for (auto& [f, s] : rep.summary) {
          py::dict e;
          e["evaluated"] = s.evaluated;
          e["nonzero"] = s.nonzero;
          e["skipped"] = s.skipped;
          e["literal_mismatch"] = s.literal_mismatch;
          if (s.first_failure) e["first_failure"] = py::make_tuple(s.first_failure->index.str(), to_py(s.first_failure->value));
          out[family_name(f)] = e;
        }
        return out;
      }, py::arg("tau"), py::arg("weight"), py::arg("maxsize") = 4, py::arg("triple_maxsize") = py::none());

  m.def("run_command", [](const std::string& command, const std::string& input, py::dict knobs) {
        cli::JobConfig c;
        c.command = command;
        c.input = input;
        for (auto [k, v] : knobs) {
          std::string key = k.cast<std::string>();
          if (key == "window") c.window = v.cast<int>();
          else if (key == "weight") c.weight = v.cast<int>();
          else if (key == "maxsize") c.maxsize = v.cast<int>();
          else if (key == "triple_maxsize") c.triple_maxsize = v.cast<int>();
          else if (key == "nmax") c.nmax = v.cast<int>();
          else if (key == "odd") c.odd = v.cast<bool>();
          else if (key == "strict") c.strict = v.cast<bool>();
          else throw py::key_error(key);
        }
        auto res = cli::run_file(c);
        return py::make_tuple(res.report.dump(), res.exit_code);
      }, py::arg("command"), py::arg("input"), py::arg("knobs") = py::dict());
}
