#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supchar/engine.hpp"

namespace py = pybind11;
using namespace supchar;

namespace {

SearchOptions options(const std::string& mode, unsigned threads) {
  if (threads == 0) throw ArgumentError("threads must be at least 1");
  return SearchOptions{parse_mode(mode), threads};
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supercharacter theories from character tables";

  auto base = py::register_exception<Error>(m, "SupcharError", PyExc_RuntimeError);
  py::register_exception<InvalidTable>(m, "InvalidTable", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_readonly("name", &CharacterTable::name)
      .def_readonly("order", &CharacterTable::order)
      .def_readonly("class_sizes", &CharacterTable::class_sizes)
      .def_property_readonly("num_classes", &CharacterTable::num_classes)
      .def_property_readonly("root_order", &CharacterTable::root_order)
      .def("to_json", &serialize_table)
      .def("__repr__", [](const CharacterTable& t) {
        return "<CharacterTable " + t.name + " with " + std::to_string(t.num_classes()) + " classes>";
      });

  m.def("cyclic_table", &cyclic_table, py::arg("m"));
  m.def("dihedral_table", &dihedral_table, py::arg("m"), "Dihedral group of order 2m.");
  m.def("frobenius_table", &frobenius_pq_table, py::arg("p"), py::arg("q"));
  m.def("load_table", [](const std::string& text) { return load_table(text); }, py::arg("text"));
  m.def("load_table_file", &load_table_file, py::arg("path"));
  m.def("validate_table", [](const CharacterTable& t) {
    std::vector<std::string> out;
    for (const auto& v : validate_table(t)) out.push_back(v.to_string());
    return out;
  });

  m.def(
      "_find_supertheories_json",
      [](const CharacterTable& t, const std::string& mode, unsigned threads) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = find_supertheories(t, options(mode, threads));
        }
        return result_to_json(t, r, mode).dump();
      },
      py::arg("table"), py::arg("mode") = "main", py::arg("threads") = 1u);
  m.def(
      "count_supertheories",
      [](const CharacterTable& t, const std::string& mode, unsigned threads) {
        py::gil_scoped_release release;
        return count_supertheories(t, options(mode, threads));
      },
      py::arg("table"), py::arg("mode") = "main", py::arg("threads") = 1u);
  m.def(
      "bad_part_count",
      [](const CharacterTable& t, unsigned threads) {
        py::gil_scoped_release release;
        return find_bad_parts(t, threads).count();
      },
      py::arg("table"), py::arg("threads") = 1u);
  m.def("_alpha", [](const CharacterTable& t) {
    const auto a = alpha_ratio(t);
    return py::make_tuple(to_py(a.get_num()), to_py(a.get_den()));
  });
  m.def("bell_number", [](int n) { return to_py(bell_number(n)); }, py::arg("m"));
  m.def("_verify_json", [](const CharacterTable& t, const std::string& doc) {
    std::vector<bool> out;
    for (const auto& th : theories_from_json(t, nlohmann::json::parse(doc))) out.push_back(verify_theory(t, th));
    return out;
  });
}
