// Python bindings. Rationals cross the boundary as fractions.Fraction; int,
// Fraction and "p/q" strings are accepted as input. Floats are refused.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cesaro/cli.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/normality.hpp"
#include "cesaro/telescope.hpp"

namespace py = pybind11;
using namespace cesaro;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_fraction(const BigRational& v) {
  return fraction_type()(to_string(v));
}

BigRational from_python(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw py::type_error("floats are not exact; pass an int, Fraction or \"p/q\"");
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj) || py::isinstance(obj, fraction_type()))
    return parse_rational(py::str(obj).cast<std::string>());
  throw py::type_error("expected int, Fraction or str");
}

py::list matrix_to_python(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

RationalMatrix matrix_from_python(const py::sequence& rows) {
  std::vector<std::vector<BigRational>> out;
  for (auto row : rows) {
    std::vector<BigRational> values;
    for (auto v : row.cast<py::sequence>()) values.push_back(from_python(v));
    out.push_back(std::move(values));
  }
  return RationalMatrix::from_rows(out);
}

py::dict range_to_python(const AlphaRangeReport& r) {
  py::dict d;
  py::list parts;
  for (const auto& c : r.components) parts.append(c.to_string());
  d["condition"] = r.condition;
  d["order"] = r.order;
  d["domain"] = r.domain.to_string();
  d["components"] = parts;
  d["extends_to_infinity"] = r.extends_to_infinity;
  d["text"] = r.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for generalized Cesaro operators";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<AnsatzFailure>(m, "AnsatzFailure", PyExc_RuntimeError);

  m.def(
      "entry",
      [](unsigned order, const py::object& alpha, std::size_t i, std::size_t j) {
        return to_fraction(entry(order, from_python(alpha), i, j));
      },
      py::arg("order"), py::arg("alpha"), py::arg("i"), py::arg("j"));

  m.def(
      "entries",
      [](unsigned order, const py::object& alpha, std::size_t n) {
        CesaroMatrix mat(order, from_python(alpha));
        return matrix_to_python(truncate(mat, n).values());
      },
      py::arg("order"), py::arg("alpha"), py::arg("n"), "Leading n x n section of the operator matrix.");

  m.def(
      "p_entry",
      [](unsigned order, const py::object& alpha, std::size_t n) { return to_fraction(p_entry(order, from_python(alpha), n)); },
      py::arg("order"), py::arg("alpha"), py::arg("n"));

  m.def(
      "closed_form_entry",
      [](unsigned order, const py::object& alpha, std::size_t i, std::size_t j) {
        return to_fraction(closed_form_entry(order, from_python(alpha), i, j));
      },
      py::arg("order"), py::arg("alpha"), py::arg("i"), py::arg("j"));

  m.def(
      "telescope",
      [](unsigned order) {
        auto form = solve_telescope(order);
        py::dict d;
        py::list coeffs;
        for (const auto& c : form.coefficients) coeffs.append(c.to_string());
        d["order"] = order;
        d["numerator_degree"] = form.numerator_degree();
        d["denominator_length"] = form.denominator_factors.size();
        d["escalations"] = form.escalations;
        d["coefficients"] = coeffs;
        d["identity_holds"] = telescoping_identity_holds(form);
        return d;
      },
      py::arg("order"));

  m.def(
      "corner",
      [](unsigned order, const py::object& alpha, std::optional<std::size_t> size, const std::string& source) {
        BigRational a = from_python(alpha);
        CornerChoice choice = parse_corner_choice(source);
        if (choice == CornerChoice::fixture || (choice == CornerChoice::automatic && order == 3 && !size)) {
          if (order != 3) throw DomainError("the fixed corner exists only for order 3");
          return matrix_to_python(fixture_q_order3(a).corner());
        }
        if (choice == CornerChoice::identity) return matrix_to_python(RationalMatrix::identity(size.value_or(order)));
        return matrix_to_python(solve_corner(order, a, size.value_or(order)).corner());
      },
      py::arg("order"), py::arg("alpha"), py::arg("size") = py::none(), py::arg("source") = "auto");

  m.def(
      "verify",
      [](unsigned order, const py::object& alpha, std::size_t n, const std::string& corner, unsigned jobs) {
        IdentityReport r;
        BigRational a = from_python(alpha);
        CornerChoice choice = parse_corner_choice(corner);
        {
          py::gil_scoped_release release;
          r = verify_supraposinormal(order, a, n, choice, jobs);
        }
        py::dict d;
        d["order"] = order;
        d["verified"] = r.verified();
        d["status"] = r.status();
        d["provenance"] = to_string(r.provenance);
        d["corner_size"] = r.corner_size;
        d["corner_escalated"] = r.corner_escalated;
        d["compared_entries"] = r.compared_entries;
        if (r.mismatch) {
          py::dict mm;
          mm["i"] = r.mismatch->i;
          mm["j"] = r.mismatch->j;
          mm["lhs"] = to_fraction(r.mismatch->lhs);
          mm["rhs"] = to_fraction(r.mismatch->rhs);
          d["mismatch"] = mm;
        } else {
          d["mismatch"] = py::none();
        }
        return d;
      },
      py::arg("order"), py::arg("alpha"), py::arg("n") = 40, py::arg("corner") = "auto", py::arg("jobs") = 1);

  m.def(
      "hyponormality_range",
      [](unsigned order, const std::string& domain) { return range_to_python(hyponormality_range(order, Domain::parse(domain))); },
      py::arg("order"), py::arg("domain") = "(-1,10]");

  m.def(
      "posinormal_range",
      [](unsigned order, const std::string& domain) {
        return range_to_python(posinormal_coposinormal_range(order, Domain::parse(domain)));
      },
      py::arg("order"), py::arg("domain") = "(-1,10]");

  m.def(
      "psd",
      [](const py::sequence& rows) { return std::string(to_string(psd_certificate(matrix_from_python(rows)).verdict)); },
      py::arg("matrix"), "Exact semidefiniteness verdict of a symmetric rational matrix.");

  m.def(
      "defect",
      [](unsigned order, const py::object& alpha, std::size_t section, std::size_t terms, unsigned jobs) {
        BigRational a = from_python(alpha);
        DefectReport r;
        {
          py::gil_scoped_release release;
          r = finite_section_defect(order, a, section, terms, jobs);
        }
        py::dict d;
        d["order"] = order;
        d["section"] = section;
        d["tail_terms"] = terms;
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["max_bracket_width"] = to_fraction(r.max_bracket_width);
        d["sufficient_condition_holds"] = r.sufficient_condition_holds;
        d["label"] = r.label;
        return d;
      },
      py::arg("order"), py::arg("alpha"), py::arg("section") = 8, py::arg("terms") = 100000, py::arg("jobs") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
