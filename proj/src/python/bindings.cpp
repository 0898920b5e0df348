#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ayrep/cells.hpp"
#include "ayrep/character.hpp"
#include "ayrep/cli.hpp"
#include "ayrep/error.hpp"
#include "ayrep/hyperoctahedral.hpp"
#include "ayrep/induction.hpp"
#include "ayrep/representation.hpp"
#include "ayrep/serialize.hpp"
#include "ayrep/suites.hpp"
#include "ayrep/tableau.hpp"
#include "ayrep/tops.hpp"

namespace py = pybind11;
using namespace ayrep;

namespace {

// Exact values cross into Python as fractions.Fraction.
py::object fraction(const Rational& x) {
  // Leaked on purpose: destroying a Python object after interpreter shutdown crashes.
  static const auto* Fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*Fraction)(to_fraction_string(x));
}

Permutation permutation_of(const std::vector<int>& images) { return Permutation(images); }

Permutation base_or_identity(const std::optional<std::vector<int>>& w, int n) {
  return w ? Permutation(*w) : Permutation::identity(n);
}

std::vector<std::vector<int>> images_of(const std::vector<Permutation>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<Reflection>& ts) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : ts) out.emplace_back(t.i, t.j);
  return out;
}

py::list exact_matrix(const Matrix<Rational>& m) {
  py::list rows;
  for (int r = 0; r < m.rows(); ++r) {
    py::list row;
    for (int c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

std::vector<std::vector<double>> float_matrix(const Matrix<double>& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m(r, c));
  return rows;
}

// Character as {class label: value}, in class order.
py::dict character_dict(const Representation& rep) {
  const auto classes = conjugacy_classes(rep.type, rep.n);
  const Character chi = character(rep, classes);
  py::dict out;
  for (std::size_t k = 0; k < classes.size(); ++k) out[py::str(classes.labels[k])] = fraction(chi.values[k]);
  return out;
}

py::object json_loads(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact representations of the symmetric and hyperoctahedral groups on cells";

  // Later registrations are tried first, so the subclass goes second.
  const auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<GenericityError>(m, "GenericityError", error.ptr());

  py::class_<Cell>(m, "Cell")
      .def_property_readonly("members", [](const Cell& K) { return images_of(K.members); })
      .def_property_readonly("interior", [](const Cell& K) { return pairs_of(K.interior); })
      .def_property_readonly("boundary", [](const Cell& K) { return pairs_of(K.boundary); })
      .def("__len__", &Cell::size)
      .def("is_convex", [](const Cell& K) { return is_convex(K.members); })
      .def("to_dot", [](const Cell& K) { return to_dot(K); });

  py::class_<Representation>(m, "Representation")
      .def_readonly("n", &Representation::n)
      .def_readonly("generators", &Representation::generators)
      .def_readonly("basis_labels", &Representation::basis_labels)
      .def_property_readonly("dimension", &Representation::dimension)
      .def_property_readonly("type", [](const Representation& r) { return r.type == CoxeterType::A ? "A" : "B"; })
      .def("matrix", [](const Representation& r, int s) { return exact_matrix(r.matrix_for(s)); }, py::arg("generator"))
      .def("verify_coxeter", [](const Representation& r) { return verify_coxeter(r).ok; })
      .def("verify_axiom_B", [](const Representation& r) { return verify_axiom_B(r).ok; })
      .def("character", &character_dict)
      .def("is_irreducible", [](const Representation& r) { return is_irreducible(r); })
      .def("to_json", [](const Representation& r) { return json_loads(to_json(r)); })
      .def("to_dot", [](const Representation& r) { return to_dot(r); });

  py::class_<FloatRepresentation>(m, "FloatRepresentation")
      .def_readonly("n", &FloatRepresentation::n)
      .def_readonly("generators", &FloatRepresentation::generators)
      .def_readonly("basis_labels", &FloatRepresentation::basis_labels)
      .def_property_readonly("dimension", &FloatRepresentation::dimension)
      .def("matrix", [](const FloatRepresentation& r, int s) { return float_matrix(r.matrix_for(s)); },
           py::arg("generator"))
      .def(
          "verify_coxeter", [](const FloatRepresentation& r, double tol) { return verify_coxeter(r, tol).ok; },
          py::arg("tolerance") = 1e-9);

  m.def(
      "descent_cell",
      [](const std::vector<long long>& f, std::optional<std::vector<int>> w) {
        return descent_cell(Functional(f), base_or_identity(w, static_cast<int>(f.size())));
      },
      py::arg("f"), py::arg("w") = py::none(), "The cell K^f_w of permutations sharing w's descents in A_f.");
  m.def(
      "is_generic",
      [](const std::vector<long long>& f) {
        const Functional F(f);
        return is_generic(F, descent_cell(F, Permutation::identity(F.size())));
      },
      py::arg("f"));
  m.def(
      "is_generic_integer", [](const std::vector<long long>& f) { return is_generic_integer(Functional(f)); },
      py::arg("f"));
  m.def(
      "is_minimal_ay_cell",
      [](const std::vector<std::vector<int>>& K) {
        std::vector<Permutation> members;
        for (const auto& w : K) members.push_back(permutation_of(w));
        return is_minimal_ay_cell(members);
      },
      py::arg("members"));

  m.def(
      "build_from_functional",
      [](const std::vector<long long>& f, std::optional<std::vector<int>> w, const std::string& normalization,
         std::optional<std::vector<int>> generators) {
        return build_from_functional(Functional(f), base_or_identity(w, static_cast<int>(f.size())),
                                     parse_normalization(normalization), std::move(generators));
      },
      py::arg("f"), py::arg("w") = py::none(), py::arg("normalization") = "seminormal",
      py::arg("generators") = py::none());
  m.def(
      "build_orthogonal",
      [](const std::vector<long long>& f, std::optional<std::vector<int>> w) {
        return build_from_functional_orthogonal(Functional(f), base_or_identity(w, static_cast<int>(f.size())));
      },
      py::arg("f"), py::arg("w") = py::none());
  m.def(
      "young_seminormal", [](const std::string& shape) { return build_seminormal_skew(SkewShape::parse(shape)); },
      py::arg("shape"), "Young's seminormal form on the standard tableaux of a skew shape such as \"3,2/1\".");
  m.def(
      "young_orthogonal", [](const std::string& shape) { return build_orthogonal_skew(SkewShape::parse(shape)); },
      py::arg("shape"));

  m.def(
      "standard_tableaux",
      [](const std::string& shape) {
        std::vector<std::string> out;
        for (const auto& T : enumerate_standard(SkewShape::parse(shape))) out.push_back(T.str());
        return out;
      },
      py::arg("shape"));
  m.def(
      "content_vector", [](const std::string& tableau) { return content_vector(Tableau::parse(tableau)); },
      py::arg("tableau"));
  m.def(
      "tableau_from_content", [](const std::vector<long long>& c) { return tableau_from_content(c).str(); },
      py::arg("content"));
  m.def(
      "mn_character",
      [](const std::string& shape, const std::vector<int>& cycle_type) {
        return mn_character(SkewShape::parse(shape), Partition(cycle_type));
      },
      py::arg("shape"), py::arg("cycle_type"));

  m.def(
      "induce",
      [](int n, const std::vector<int>& J, const std::vector<std::vector<int>>& shapes) {
        std::vector<Partition> parts(shapes.begin(), shapes.end());
        return induce(block_specht(n, J, parts));
      },
      py::arg("n"), py::arg("J"), py::arg("shapes"),
      "Induces the representation of <J> given by one straight shape per block.");
  m.def(
      "extend_to_bn",
      [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        const BipartiteTableau PQ = row_pair(Partition(lambda), Partition(mu));
        return extend_to_bn(PQ.P, PQ.Q);
      },
      py::arg("lambda_"), py::arg("mu"));
  m.def(
      "top_elements", [](int n) { return json_loads(to_json(top_elements(n))); }, py::arg("n"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, int n, std::uint64_t seed, int samples) {
        SweepOptions options;
        options.n = n;
        options.seed = seed;
        options.samples = samples;
        const SuiteResult r = run_suite(name, options);
        py::dict out;
        out["name"] = r.name;
        out["checks"] = r.checks;
        out["failures"] = r.failures;
        out["notes"] = r.notes;
        out["ok"] = r.ok();
        return out;
      },
      py::arg("name"), py::arg("n"), py::arg("seed") = 1, py::arg("samples") = 3);

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "ayrep");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
