#include <map>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bridgeland/api.hpp"
#include "bridgeland/error.hpp"

namespace py = pybind11;

namespace {

// Documents arrive as JSON text; the result goes back as JSON text with the
// non-JSON payload and summary alongside.
py::dict run(const std::string& command, const std::map<std::string, std::string>& options,
             const std::map<std::string, std::string>& documents) {
  bridgeland::Request request;
  request.options = options;
  for (const auto& [name, text] : documents) {
    try {
      request.documents[name] = bridgeland::Json::parse(text);
    } catch (const bridgeland::Json::parse_error& e) {
      throw bridgeland::ValidationError("document '" + name + "': " + e.what());
    }
  }
  bridgeland::Response response;
  {
    py::gil_scoped_release release;
    response = bridgeland::run_command(command, request);
  }
  py::dict out;
  out["json"] = response.json.dump();
  out["text"] = response.text;
  out["summary"] = response.summary;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact stability computations on K3 lattices";

  py::register_exception<bridgeland::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<bridgeland::ComputationError>(m, "ComputationError", PyExc_RuntimeError);

  m.def("run", &run, py::arg("command"), py::arg("options") = std::map<std::string, std::string>{},
        py::arg("documents") = std::map<std::string, std::string>{});
  m.def("command_names", &bridgeland::command_names);
  m.def("command_options", &bridgeland::command_options, py::arg("command"));
  m.def("is_document_option", &bridgeland::is_document_option, py::arg("option"));
}
