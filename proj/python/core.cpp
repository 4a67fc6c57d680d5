#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropitheta/reports.hpp"

namespace py = pybind11;
using namespace tropitheta;

namespace {

py::tuple wrap(const Report& r) {
  py::dict files;
  for (const auto& [name, content] : r.files) files[py::str(name)] = content;
  return py::make_tuple(r.body.dump(), files, r.status);
}

ReportOptions options(const std::string& mode, long resolution, long window) { return {mode, resolution, window}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-level entry points; see the tropitheta package for the Python API";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(kind_name(e.kind()), e.what(), exit_code(e.kind()));
      PyErr_SetObject(error.ptr(), args.ptr());
    } catch (const nlohmann::json::exception& e) {
      py::object args = py::make_tuple(kind_name(ErrorKind::Schema), e.what(), 1);
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("type_report", [](const std::string& in) { return wrap(type_report(parse_json(in))); });
  m.def("theta_report", [](const std::string& in) { return wrap(theta_report(parse_json(in))); });
  m.def("embed_report", [](const std::string& in) { return wrap(embed_report(parse_json(in))); });
  m.def("certify_report", [](const std::string& in, const std::string& mode, long resolution) {
    return wrap(certify_report(parse_json(in), options(mode, resolution, 6)));
  });
  m.def("voronoi_report", [](const std::string& in) { return wrap(voronoi_report(parse_json(in))); });
  m.def("lift_report", [](const std::string& in, long window) {
    return wrap(lift_report(parse_json(in), options("exact", 20, window)));
  });
  m.def("example_report", [](long d, const std::string& varpi, const std::string& mode, long resolution) {
    return wrap(example_report(d, parse_rational(varpi), options(mode, resolution, 6)));
  });
}
