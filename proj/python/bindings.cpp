#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "syzygy/cli.hpp"
#include "syzygy/decompose.hpp"
#include "syzygy/homology.hpp"
#include "syzygy/io.hpp"
#include "syzygy/orders.hpp"
#include "syzygy/repetition.hpp"

namespace py = pybind11;
using namespace syzygy;

namespace {

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw py::value_error("side must be 'left' or 'right'");
}

std::size_t vertex(const Algebra& a, const std::string& label) {
  auto v = a.presentation().quiver().find_vertex(label);
  if (!v) throw py::key_error("unknown vertex " + label);
  return *v;
}

py::dict dim_dict(const DimResult& d) {
  py::dict out;
  switch (d.kind) {
    case DimResult::Kind::finite:
      out["value"] = d.value;
      out["certificate"] = "exhaustion";
      break;
    case DimResult::Kind::infinite:
      out["value"] = py::float_(std::numeric_limits<double>::infinity());
      out["certificate"] = "recurrence-cycle";
      break;
    case DimResult::Kind::unknown:
      out["value"] = py::none();
      out["certificate"] = "budget";
      break;
  }
  out["description"] = d.describe();
  return out;
}

std::vector<std::vector<std::size_t>> summand_dims(const RepModule& m) {
  std::vector<std::vector<std::size_t>> out;
  if (m.is_zero()) return out;
  for (const RepModule& s : indecomposable_summands(m)) out.push_back(s.dims());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Syzygies, repetition indices and finitistic dimension bounds over exact rationals";

  py::register_exception<Error>(m, "SyzygyError");

  py::class_<Algebra>(m, "Algebra")
      .def_static(
          "parse", [](const std::string& text) { return build_parsed(parse_algebra(text)); }, py::arg("text"),
          "Algebra from the quiver/relations text format.")
      .def_static(
          "from_order", [](const std::string& text) { return presentation_from_valued_quiver(parse_order(text)); },
          py::arg("text"), "Satellite algebra of a tiled order given by exponents or a valued quiver.")
      .def_property_readonly("dim", [](const Algebra& a) { return a.presentation().dim(); })
      .def_property_readonly("vertices", [](const Algebra& a) { return a.presentation().quiver().vertices(); })
      .def_property_readonly("arrows",
                             [](const Algebra& a) {
                               std::vector<std::string> names;
                               const Quiver& q = a.presentation().quiver();
                               for (std::size_t i = 0; i < q.arrow_count(); ++i) names.push_back(q.arrow(i).name);
                               return names;
                             })
      .def("projective",
           [](const Algebra& a, const std::string& v, const std::string& side) {
             return projective(a, vertex(a, v), parse_side(side));
           },
           py::arg("vertex"), py::arg("side") = "left")
      .def("simple",
           [](const Algebra& a, const std::string& v, const std::string& side) {
             return simple(a, vertex(a, v), parse_side(side));
           },
           py::arg("vertex"), py::arg("side") = "left")
      .def("injective",
           [](const Algebra& a, const std::string& v, const std::string& side) {
             return injective(a, vertex(a, v), parse_side(side));
           },
           py::arg("vertex"), py::arg("side") = "left")
      .def("top", [](const Algebra& a, const std::string& side) { return semisimple_top(a, parse_side(side)); },
           py::arg("side") = "left")
      .def("module", [](const Algebra& a, const std::string& text) { return parse_module(text, a); }, py::arg("text"),
           "Module from `module <side> <form>;` statements.");

  py::class_<RepModule>(m, "Module")
      .def_property_readonly("dims", &RepModule::dims)
      .def_property_readonly("dim", &RepModule::total_dim)
      .def_property_readonly("side", [](const RepModule& x) { return std::string(to_string(x.side())); })
      .def("syzygy", [](const RepModule& x) { return syzygy::syzygy(x); })
      .def("summand_dims", &summand_dims, "Dimension vectors of the indecomposable summands.")
      .def("is_isomorphic", [](const RepModule& x, const RepModule& y) { return is_isomorphic(x, y).isomorphic; })
      .def("top_dims", [](const RepModule& x) { return top_dims(x); })
      .def("socle_dims", [](const RepModule& x) { return socle_dims(x); })
      .def("__add__", [](const RepModule& x, const RepModule& y) { return direct_sum({x, y}); })
      .def("__repr__", [](const RepModule& x) {
        std::string d;
        for (std::size_t k : x.dims()) d += (d.empty() ? "" : ",") + std::to_string(k);
        return "<Module " + std::string(to_string(x.side())) + " dims=(" + d + ")>";
      });

  m.def(
      "pdim",
      [](const RepModule& x, std::size_t budget) {
        SyzygyEngine e(x.algebra(), x.side());
        return dim_dict(pdim(e, x, budget));
      },
      py::arg("module"), py::arg("budget") = 24);

  m.def(
      "syzygy_dims",
      [](const RepModule& x, std::size_t degrees) {
        SyzygyEngine e(x.algebra(), x.side());
        ResolutionTrace t = resolve(e, x, degrees);
        std::vector<std::vector<std::vector<std::size_t>>> out;
        for (const ResolutionDegree& d : t.degrees) {
          std::vector<std::vector<std::size_t>> parts;
          for (const auto& [id, k] : d.summands)
            for (mpz_class i = 0; i < k; ++i) parts.push_back(e.registry().info(id).dims);
          out.push_back(parts);
        }
        return out;
      },
      py::arg("module"), py::arg("degrees"), "Summand dimension vectors of Omega^0 .. Omega^degrees.");

  m.def(
      "repetition_index",
      [](const RepModule& x, std::size_t budget) {
        SyzygyEngine e(x.algebra(), x.side());
        SyzygyCatalog c = build_catalog(e, x, budget);
        py::dict out;
        RepetitionIndex r = repetition_index(c);
        out["closed"] = c.closed;
        out["classes"] = c.classes.size();
        out["value"] = r.kind == RepetitionIndex::Kind::finite ? py::object(py::int_(r.value)) : py::none();
        out["syzygy_type"] = syzygy_type(c).value;
        out["syzygy_type_certified"] = syzygy_type(c).certified;
        return out;
      },
      py::arg("module"), py::arg("budget") = 24);

  m.def(
      "findim",
      [](const Algebra& a, const std::string& side, std::size_t budget) {
        Workspace ws(a);
        FindimReport r = findim_bounds(ws, parse_side(side), budget);
        py::dict out;
        out["lower"] = r.lower;
        out["lower_witness"] = r.lower_witness;
        out["upper"] = r.upper ? py::object(py::int_(r.upper->value)) : py::none();
        out["upper_certificate"] = r.upper ? r.upper->certificate : std::string();
        out["exact"] = r.exact();
        return out;
      },
      py::arg("algebra"), py::arg("side") = "left", py::arg("budget") = 24);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        CommandResult r = run_command(args);
        if (r.exit_code == exit_error) throw Error(r.error);
        return py::make_tuple(r.exit_code, r.report.dump());
      },
      py::arg("args"), "Run a command-line subcommand; returns (exit code, JSON report text).");
}
