// Python bindings for the umbral core: polynomial families, power sums,
// and the identity verification suite. Exact values cross the boundary as
// canonical "p/q" strings (or Rational/Polynomial wrapper objects); nothing
// is ever converted through floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/identity_suite.hpp"
#include "umbral/output.hpp"
#include "umbral/power_sums.hpp"
#include "umbral/special_sequences.hpp"

namespace py = pybind11;

namespace {

using umbral::Integer;
using umbral::Polynomial;
using umbral::Rational;

py::int_ to_py_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.get_str());
}

Rational rational_arg(const std::string& text) { return Rational::from_string(text); }

std::optional<Rational> optional_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return rational_arg(text);
}

umbral::PowerSumFamily family_arg(const std::string& name) {
    if (name == "plain") return umbral::PowerSumFamily::plain;
    if (name == "alt") return umbral::PowerSumFamily::alternating;
    if (name == "lambda") return umbral::PowerSumFamily::lambda_analogue;
    throw umbral::ParseError("unknown power-sum family '" + name + "'");
}

umbral::PowerSumAlgorithm algorithm_arg(const std::string& name) {
    if (name == "series") return umbral::PowerSumAlgorithm::series;
    if (name == "enum") return umbral::PowerSumAlgorithm::enumeration;
    throw umbral::ParseError("unknown algorithm '" + name + "'");
}

py::object json_to_py(const umbral::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object report_to_py(const umbral::VerificationReport& report) {
    return json_to_py(umbral::report_entry(report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact umbral-calculus toolkit: higher-order Bernoulli/Euler/Frobenius-Euler "
              "polynomials, multiple power sums, and identity verification";

    py::register_exception<umbral::Error>(m, "UmbralError");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const std::string& text) { return rational_arg(text); }))
        .def(py::init([](long n) { return Rational(n); }))
        .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.to_string())); });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::vector<std::string>& coeffs) {
            std::vector<Rational> values;
            values.reserve(coeffs.size());
            for (const auto& c : coeffs) values.push_back(rational_arg(c));
            return Polynomial(std::move(values));
        }))
        .def_property_readonly("degree", &Polynomial::degree)
        .def("coefficients",
             [](const Polynomial& p) {
                 std::vector<std::string> out;
                 out.reserve(p.coefficients().size());
                 for (const auto& c : p.coefficients()) out.push_back(c.to_string());
                 return out;
             })
        .def("evaluate",
             [](const Polynomial& p, const std::string& x) { return p.evaluate(rational_arg(x)); })
        .def("__str__", &Polynomial::to_pretty_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_list_string() + ")"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; });

    m.def("binomial", [](unsigned long n, long k) { return to_py_int(umbral::binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("multinomial",
          [](const std::vector<unsigned>& parts) { return to_py_int(umbral::multinomial(parts)); },
          py::arg("parts"));
    m.def("falling_factorial",
          [](long n, unsigned s) { return to_py_int(umbral::falling_factorial(n, s)); }, py::arg("n"),
          py::arg("s"));
    m.def("factorial", [](unsigned n) { return to_py_int(umbral::factorial(n)); }, py::arg("n"));
    m.def("stirling2", [](unsigned n, unsigned k) { return to_py_int(umbral::stirling2(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("bernoulli_polynomial",
          [](const std::string& alpha, unsigned n) {
              return umbral::bernoulli_polynomial(rational_arg(alpha), n);
          },
          py::arg("alpha"), py::arg("n"));
    m.def("euler_polynomial",
          [](const std::string& alpha, unsigned n) {
              return umbral::euler_polynomial(rational_arg(alpha), n);
          },
          py::arg("alpha"), py::arg("n"));
    m.def("frobenius_euler_polynomial",
          [](const std::string& alpha, unsigned n, const std::string& lam) {
              return umbral::frobenius_euler_polynomial(rational_arg(alpha), n, rational_arg(lam));
          },
          py::arg("alpha"), py::arg("n"), py::arg("lambda_"));

    m.def("power_sum",
          [](const std::string& family, unsigned k, unsigned n, unsigned m, const std::string& lam,
             const std::string& algorithm) {
              const auto table = umbral::power_sum_table(family_arg(family), k, n, m,
                                                         optional_rational(lam), algorithm_arg(algorithm));
              return table[k];
          },
          py::arg("family"), py::arg("k"), py::arg("n"), py::arg("m"), py::arg("lambda_") = "",
          py::arg("algorithm") = "series");
    m.def("power_sum_table",
          [](const std::string& family, unsigned k_max, unsigned n, unsigned m, const std::string& lam,
             const std::string& algorithm) {
              const auto table = umbral::power_sum_table(family_arg(family), k_max, n, m,
                                                         optional_rational(lam), algorithm_arg(algorithm));
              std::vector<std::string> out;
              out.reserve(table.size());
              for (const auto& v : table) out.push_back(v.to_string());
              return out;
          },
          py::arg("family"), py::arg("k_max"), py::arg("n"), py::arg("m"), py::arg("lambda_") = "",
          py::arg("algorithm") = "series");

    m.def("verify",
          [](const std::string& identity, unsigned n, unsigned m, const std::string& lam,
             const std::string& alpha) {
              const auto id = umbral::identity_from_name(identity);
              if (!id) throw umbral::ParseError("unknown identity '" + identity + "'");
              switch (*id) {
                  case umbral::IdentityId::thm3:
                      return report_to_py(umbral::verify_theorem3(n, m));
                  case umbral::IdentityId::thm4_corrected:
                      return report_to_py(umbral::verify_theorem4(n, m, false));
                  case umbral::IdentityId::thm4_printed:
                      return report_to_py(umbral::verify_theorem4(n, m, true));
                  case umbral::IdentityId::thm5:
                      return report_to_py(umbral::verify_theorem5(n, m));
                  case umbral::IdentityId::thm6:
                      return report_to_py(umbral::verify_theorem6(n, m, rational_arg(lam)));
                  case umbral::IdentityId::eq16:
                      return report_to_py(umbral::verify_eq16(n));
                  case umbral::IdentityId::eq17:
                      return report_to_py(umbral::verify_eq17(n, m));
                  default:
                      return report_to_py(umbral::verify_lemma1(
                          *id, alpha.empty() ? Rational(1) : rational_arg(alpha), m, n,
                          optional_rational(lam)));
              }
          },
          py::arg("identity"), py::arg("n"), py::arg("m") = 1, py::arg("lambda_") = "",
          py::arg("alpha") = "");

    m.def("run_sweep",
          [](const std::vector<std::string>& identities, unsigned n_max, unsigned m_max,
             const std::vector<std::string>& lambdas, const std::vector<std::string>& alphas,
             unsigned jobs) {
              umbral::SweepConfig config;
              for (const auto& name : identities) {
                  const auto id = umbral::identity_from_name(name);
                  if (!id) throw umbral::ParseError("unknown identity '" + name + "'");
                  config.identities.push_back(*id);
              }
              config.n_max = n_max;
              config.m_max = m_max;
              config.jobs = jobs;
              if (!lambdas.empty()) {
                  config.lambdas.clear();
                  for (const auto& l : lambdas) config.lambdas.push_back(rational_arg(l));
              }
              if (!alphas.empty()) {
                  config.alphas.clear();
                  for (const auto& a : alphas) config.alphas.push_back(rational_arg(a));
              }
              py::list out;
              for (const auto& report : umbral::run_sweep(config)) out.append(report_to_py(report));
              return out;
          },
          py::arg("identities"), py::arg("n_max") = 4, py::arg("m_max") = 3,
          py::arg("lambdas") = std::vector<std::string>{}, py::arg("alphas") = std::vector<std::string>{},
          py::arg("jobs") = 1);

    m.attr("__version__") = "1.0.0";
}
