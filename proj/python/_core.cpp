#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "addspec/cli.hpp"
#include "addspec/constructions.hpp"
#include "addspec/error.hpp"
#include "addspec/gram.hpp"
#include "addspec/io.hpp"
#include "addspec/ortho_solver.hpp"

namespace py = pybind11;
using namespace addspec;

// Rational <-> fractions.Fraction. Also accepts int and "p/q" strings.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::str>(src)) {
      try {
        value = parse_rational(src.cast<std::string>());
      } catch (const Error&) {
        return false;
      }
      return true;
    }
    if (PyFloat_Check(src.ptr())) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    try {
      value = Rational(src.attr("numerator").cast<std::int64_t>(),
                       src.attr("denominator").cast<std::int64_t>());
    } catch (const py::cast_error&) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.numerator(), r.denominator()).release();
  }
};
}  // namespace pybind11::detail

namespace {

using Pair = std::pair<Rational, Rational>;

std::vector<ExponentPair> to_pairs(const std::vector<Pair>& in) {
  std::vector<ExponentPair> out;
  out.reserve(in.size());
  for (const auto& [a, b] : in) out.push_back({a, b});
  return out;
}

std::vector<Pair> from_pairs(std::span<const ExponentPair> in) {
  std::vector<Pair> out;
  out.reserve(in.size());
  for (const auto& p : in) out.emplace_back(p.a, p.b);
  return out;
}

ExponentSet to_set(const std::vector<Pair>& in) {
  ExponentSet out;
  for (const auto& [a, b] : in) out.insert({a, b});
  return out;
}

py::object to_python(const io::json& j) {
  const auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponential bases for additive measures";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "AddspecError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(),
                    (std::string(code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<IntervalUnionMeasure>(m, "Measure")
      .def(py::init([](const std::vector<std::tuple<Rational, Rational, double>>& pieces) {
             std::vector<IntervalPiece> out;
             for (const auto& [l, r, w] : pieces) out.push_back({l, r, w});
             return IntervalUnionMeasure(std::move(out));
           }),
           py::arg("pieces"))
      .def_static("unit_interval", &IntervalUnionMeasure::unit_interval, py::arg("left"))
      .def_static("uniform", &IntervalUnionMeasure::uniform, py::arg("intervals"))
      .def("pieces",
           [](const IntervalUnionMeasure& self) {
             std::vector<std::tuple<Rational, Rational, double>> out;
             for (const auto& p : self.pieces()) out.emplace_back(p.left, p.right, p.weight);
             return out;
           })
      .def("fourier_transform",
           [](const IntervalUnionMeasure& self, double l) { return fourier_transform(self, l); },
           py::arg("lam"));

  py::class_<AdditiveSpace>(m, "AdditiveSpace")
      .def_static("l_space", &AdditiveSpace::l_space)
      .def_static("plus_space", &AdditiveSpace::plus_space)
      .def_static("t_space", &AdditiveSpace::t_space)
      .def_static("symmetric", py::overload_cast<const Rational&>(&AdditiveSpace::symmetric),
                  py::arg("t"))
      .def_static("from_measure",
                  py::overload_cast<const IntervalUnionMeasure&>(&AdditiveSpace::symmetric),
                  py::arg("measure"))
      .def_static("preset", &AdditiveSpace::from_preset, py::arg("name"))
      .def_property_readonly("name", [](const AdditiveSpace& s) { return std::string(s.name()); })
      .def_property_readonly("mu", &AdditiveSpace::mu)
      .def_property_readonly("nu", &AdditiveSpace::nu)
      .def(
          "inner",
          [](const AdditiveSpace& s, const Pair& p, const Pair& q) {
            return exp_inner(s, {p.first, p.second}, {q.first, q.second});
          },
          py::arg("p"), py::arg("q"));

  m.def(
      "multiplicity", [](const std::vector<Pair>& pts) { return multiplicity(to_set(pts)).max_mult; },
      py::arg("points"));
  m.def(
      "find_zigzag_loop",
      [](const std::vector<Pair>& pts) -> std::optional<std::vector<Pair>> {
        const auto loop = find_zigzag_loop(to_set(pts));
        if (!loop) return std::nullopt;
        return from_pairs(loop->vertices());
      },
      py::arg("points"));
  m.def(
      "max_zigzag_length",
      [](const std::vector<Pair>& pts) {
        const auto z = max_zigzag_length(to_set(pts));
        py::dict out;
        out["unbounded_by_loop"] = z.unbounded_by_loop;
        out["length"] = z.length;
        out["witness"] = z.witness ? py::cast(from_pairs(z.witness->vertices())) : py::none();
        return out;
      },
      py::arg("points"));

  m.def(
      "gram_matrix",
      [](const AdditiveSpace& s, const std::vector<Pair>& pts) {
        return assemble(s, to_pairs(pts)).entries();
      },
      py::arg("space"), py::arg("points"));
  m.def(
      "extremal_eigenvalues",
      [](const AdditiveSpace& s, const std::vector<Pair>& pts) {
        const auto e = extremal_eigenvalues(assemble(s, to_pairs(pts)));
        return std::pair{e.min, e.max};
      },
      py::arg("space"), py::arg("points"));
  m.def(
      "section_certificate",
      [](const AdditiveSpace& s, const std::vector<Pair>& pts, std::vector<std::size_t> sizes) {
        return to_python(io::certificate_to_json(
            riesz_section_certificate(s, to_pairs(pts), sizes)));
      },
      py::arg("space"), py::arg("points"), py::arg("sizes"));
  m.def(
      "alternating_zigzag_norm",
      [](const AdditiveSpace& s, const std::vector<Pair>& path) {
        return alternating_zigzag_norm(s, ZigzagPath(to_pairs(path)));
      },
      py::arg("space"), py::arg("path"));

  m.def("l_space_onb", [](int N) { return from_pairs(l_space_onb(N).points()); }, py::arg("N"));
  m.def(
      "mirror_spectrum", [](int k, int N) { return from_pairs(mirror_spectrum(k, N).points()); },
      py::arg("k"), py::arg("N"));
  m.def(
      "lev_style_set", [](int q, int depth) { return from_pairs(lev_style_set(q, depth).points()); },
      py::arg("q"), py::arg("depth"));
  m.def(
      "nonoverlap_riesz_spectrum",
      [](const IntervalUnionMeasure& measure, const std::vector<Rational>& base) {
        const auto s = nonoverlap_riesz_spectrum(measure, base);
        py::dict out;
        out["tau"] = s.tau;
        out["epsilon"] = s.epsilon;
        out["pairs"] = from_pairs(s.pairs.points());
        return out;
      },
      py::arg("measure"), py::arg("base"));
  m.def("centered_lattice", &centered_lattice, py::arg("step"), py::arg("N"));
  m.def("m_tau_eigenvalues", &m_tau_eigenvalues, py::arg("tau"), py::arg("x"));

  m.def("residual", &residual, py::arg("t"), py::arg("t_prime"), py::arg("l1"), py::arg("l2"));
  m.def(
      "solve_families",
      [](const Rational& t, const Rational& tp) {
        const auto outcome = solve_families(t, tp);
        py::dict out;
        out["case"] = std::string(solved_case_name(outcome.kind));
        out["a"] = outcome.a;
        py::list families;
        for (const auto& f : outcome.families) families.append(to_python(io::family_to_json(f)));
        out["families"] = families;
        return out;
      },
      py::arg("t"), py::arg("t_prime"));
  m.def(
      "scan_residual",
      [](const Rational& t, const Rational& tp, std::tuple<double, double, double, double> box,
         int grid) {
        const auto [lo1, hi1, lo2, hi2] = box;
        // grid 2 keeps the fallback scan of unsolved cases trivial
        const auto families = solve_families(t, tp, 2).families;
        return to_python(io::scan_to_json(scan_residual(t, tp, {lo1, hi1, lo2, hi2}, grid, families)));
      },
      py::arg("t"), py::arg("t_prime"), py::arg("box"), py::arg("grid"),
      "Scan excluding the neighbourhoods of the known solution families.");
  m.def(
      "classify_spectrum_candidates",
      [](const Rational& t, double window) {
        return to_python(io::candidate_report_to_json(classify_spectrum_candidates(t, window)));
      },
      py::arg("t"), py::arg("window") = 100.0);
  m.def(
      "collinear_failure_demo",
      [](const Rational& a, int N) {
        const auto r = collinear_failure_demo(a, N, PiecewisePolynomial::constant(1.0));
        py::dict out;
        out["slope"] = r.slope;
        out["count"] = r.count;
        out["energy"] = r.energy;
        out["norm_sq"] = r.norm_sq;
        out["ratio"] = r.ratio;
        return out;
      },
      py::arg("a"), py::arg("N"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::main(args, out, err);
        return std::tuple{status, out.str(), err.str()};
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (status, stdout, stderr).");
}
