#include "qeala/cli.hpp"
#include "qeala/json_io.hpp"
#include "qeala/parse.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qeala;

namespace {

XFamily x_family_from(const std::string& spec) {
  if (spec.empty() || spec == "identity") return XFamily::identity();
  return xfamily_from_json(json::parse(spec));
}

NumericSpec numeric_spec(const std::string& q, const std::string& mu, double tol) {
  NumericSpec s;
  s.q = q.find(':') == std::string::npos ? QValue::parse_exact(q) : QValue::parse_root(q);
  s.mu = parse_rational(mu);
  s.tolerance = tol;
  return s;
}

}  // namespace

PYBIND11_MODULE(_qeala, m) {
  m.doc() = "Exact computations in gl2(C_q)~ and its free-field module";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return parse_scalar(text); }), py::arg("text") = "0")
      .def("conj", &Scalar::conj)
      .def("is_zero", &Scalar::is_zero)
      .def("mu_degree", &Scalar::mu_degree)
      .def("evaluate",
           [](const Scalar& s, const std::string& q, const std::string& mu) {
             return evaluate(s, numeric_spec(q, mu, 1e-9));
           },
           py::arg("q"), py::arg("mu"))
      .def("to_json", [](const Scalar& s) { return to_json(s).dump(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.to_string() + "')"; });

  m.def("bracket", [](const std::string& x, const std::string& y) { return bracket(parse_lie(x), parse_lie(y)).to_string(); },
        "Bracket of two Lie elements given as text, e.g. \"E12[1,0]\".");
  m.def("omega", [](const std::string& x) { return omega(parse_lie(x)).to_string(); });
  m.def("pi_apply",
        [](const std::string& x, const std::string& f, const std::string& X) {
          return pi_apply(parse_lie(x), parse_poly(f), x_family_from(X)).to_string();
        },
        py::arg("x"), py::arg("f"), py::arg("x_family") = "identity");
  m.def("form",
        [](const std::string& f, const std::string& g, const std::string& X) {
          FormContext ctx(x_family_from(X));
          return form_recursive(parse_poly(f), parse_poly(g), ctx);
        },
        py::arg("f"), py::arg("g"), py::arg("x_family") = "identity",
        "Recursive hermitian form of two polynomials given as text.");
  m.def("gram",
        [](int level, int lo, int hi, const std::string& method, const std::string& X) {
          BasisBox box;
          box.level = level;
          box.m_min = box.n_min = lo;
          box.m_max = box.n_max = hi;
          GramMatrix G = gram_matrix(box, x_family_from(X), parse_form_method(method));
          std::vector<std::vector<std::pair<int, int>>> basis;
          for (const auto& h : G.basis) {
            std::vector<std::pair<int, int>> idx;
            for (const auto& p : h.indices()) idx.emplace_back(p.m, p.n);
            basis.push_back(std::move(idx));
          }
          return std::make_pair(basis, G.entries);
        },
        py::arg("level"), py::arg("lo") = -1, py::arg("hi") = 1, py::arg("method") = "push",
        py::arg("x_family") = "identity", "Returns (basis, entries) of a level Gram matrix.");
  m.def("positivity",
        [](int level, int lo, int hi, const std::string& q, const std::string& mu, double tol) {
          BasisBox box;
          box.level = level;
          box.m_min = box.n_min = lo;
          box.m_max = box.n_max = hi;
          GramMatrix G = gram_matrix(box, XFamily::identity(), FormMethod::Push);
          PositivityResult r = check_positive_definite(G, numeric_spec(q, mu, tol));
          return std::make_pair(to_string(r.verdict), r.min_value);
        },
        py::arg("level"), py::arg("lo") = -1, py::arg("hi") = 1, py::arg("q") = "1", py::arg("mu") = "1",
        py::arg("tol") = 1e-9, "Verdict and min pivot/eigenvalue for an identity-X Gram matrix.");
  m.def("run_command",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run_command(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "Runs the CLI in-process; returns (exit_code, stdout, stderr).");
}
