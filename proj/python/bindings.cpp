#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "vtri/alexander.hpp"
#include "vtri/coloring.hpp"
#include "vtri/diagram.hpp"
#include "vtri/enumerate.hpp"
#include "vtri/error.hpp"
#include "vtri/knot_table.hpp"
#include "vtri/modular.hpp"
#include "vtri/tensor_io.hpp"
#include "vtri/tribracket.hpp"

namespace py = pybind11;
using namespace vtri;

namespace {

Diagram pick_diagram(const std::optional<std::string>& gauss, const std::optional<std::string>& diagram) {
  if (gauss.has_value() == diagram.has_value()) throw ValidationError("give exactly one of gauss= or diagram=");
  return gauss ? realize(parse_gauss(*gauss)) : parse_diagram(*diagram);
}

RoleConvention pick_convention(const std::optional<std::string>& name) {
  return name ? parse_role_convention(*name) : kRoleConvention;
}

VirtualTribracket from_file(const TensorFile& f) {
  if (!f.virtual_table) throw ParseError("tensor file has no virtual table");
  return VirtualTribracket(f.classical, *f.virtual_table);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  (void)parse_error;

  py::class_<VirtualTribracket>(m, "VirtualTribracket")
      .def_property_readonly("order", &VirtualTribracket::order)
      .def_property_readonly("is_verified", &VirtualTribracket::is_verified)
      .def("verified", &VirtualTribracket::verified)
      .def("classical", [](const VirtualTribracket& v, int a, int b, int c) { return v.classical()(a, b, c); })
      .def("virtual", [](const VirtualTribracket& v, int a, int b, int c) { return v.virtual_table()(a, b, c); })
      .def("to_text", &format_tensor)
      .def("__eq__", [](const VirtualTribracket& l, const VirtualTribracket& r) { return l == r; })
      .def("__repr__", [](const VirtualTribracket& v) {
        return "<VirtualTribracket order=" + std::to_string(v.order()) + (v.is_verified() ? " verified>" : ">");
      });

  m.def("read_tensor", [](const std::string& path) { return from_file(read_tensor_file(path)); }, py::arg("path"));
  m.def("parse_tensor", [](const std::string& text) { return from_file(parse_tensor(text)); }, py::arg("text"));

  m.def(
      "verify",
      [](const VirtualTribracket& v) {
        auto r = verify(v);
        return py::make_tuple(r.verified(), describe(r));
      },
      py::arg("structure"));

  m.def("virtual_alexander", py::overload_cast<int, int, int, int>(&virtual_alexander), py::arg("modulus"),
        py::arg("x"), py::arg("y"), py::arg("v"));

  m.def(
      "count",
      [](const VirtualTribracket& v, std::optional<std::string> gauss, std::optional<std::string> diagram,
         std::optional<std::string> convention) {
        Diagram d = pick_diagram(gauss, diagram);
        py::gil_scoped_release release;
        return count_colorings(d, v, {false, pick_convention(convention)}).count;
      },
      py::arg("structure"), py::kw_only(), py::arg("gauss") = py::none(), py::arg("diagram") = py::none(),
      py::arg("convention") = py::none());

  m.def(
      "count_alexander",
      [](int modulus, int x, int y, int v, std::optional<std::string> gauss, std::optional<std::string> diagram,
         std::optional<std::string> convention) {
        Diagram d = pick_diagram(gauss, diagram);
        return count_alexander(d, {modulus, x, y, v}, pick_convention(convention)).count;
      },
      py::arg("modulus"), py::arg("x"), py::arg("y"), py::arg("v"), py::kw_only(), py::arg("gauss") = py::none(),
      py::arg("diagram") = py::none(), py::arg("convention") = py::none());

  m.def(
      "enumerate",
      [](int order, std::optional<std::uint64_t> limit, unsigned jobs) {
        EnumerateOptions o;
        o.limit = limit;
        o.jobs = jobs;
        py::gil_scoped_release release;
        return enumerate_virtual_tribrackets(order, o);
      },
      py::arg("order"), py::arg("limit") = py::none(), py::arg("jobs") = 1);

  m.def(
      "kernel_size",
      [](int modulus, int cols, std::vector<std::vector<int>> rows) {
        return kernel_size(ModularSystem::from_rows(modulus, cols, std::move(rows)));
      },
      py::arg("modulus"), py::arg("cols"), py::arg("rows"));

  m.def(
      "batch",
      [](const std::string& table_path, const std::vector<std::pair<std::string, VirtualTribracket>>& structures,
         unsigned jobs) {
        auto table = load_table(table_path);
        std::vector<NamedStructure> named;
        for (const auto& [name, v] : structures) named.push_back({name, v});
        std::vector<InvariantRow> rows;
        {
          py::gil_scoped_release release;
          rows = batch_invariants(table, named, {jobs, kRoleConvention});
        }
        py::list out;
        for (const auto& r : rows) out.append(py::make_tuple(r.structure, r.knot, r.count, r.error));
        return out;
      },
      py::arg("table"), py::arg("structures"), py::arg("jobs") = 1);
}
