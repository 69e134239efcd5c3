#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bridgeland/api.hpp"
#include "bridgeland/error.hpp"
#include "bridgeland/manifest.hpp"

namespace {

using namespace bridgeland;

constexpr int kValidation = 1;
constexpr int kComputation = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + out);
  file << payload;
}

const std::map<std::string, std::string> kDescriptions = {
    {"pairing", "Mukai pairing and Euler form of two classes"},
    {"charge", "exact central charge of a class"},
    {"phase-compare", "compare the phases of two charges"},
    {"heart", "position of a slope profile relative to the tilted heart"},
    {"hn", "HN and JH filtrations in a presented category"},
    {"support", "kernel of Z, root-norm constant and Q_Z round trip"},
    {"walls", "potential walls for v in a (b, t) slice"},
    {"chambers", "walls crossed along a vertical path"},
    {"plot", "SVG of a walls document"},
    {"nef", "Omega class, its square and the moduli dimension"},
    {"classify-wall", "roots, isotropic classes and decompositions on a wall"},
    {"lagrangian", "isotropic classes orthogonal to v"},
    {"gieseker", "Gieseker order and large-volume threshold"},
};

const std::vector<std::string> kBoundOptions = {"bound", "grid", "budget", "max-m", "box", "count"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact numerics for Bridgeland stability conditions on surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(library_version()));

  std::map<std::string, std::map<std::string, std::string>> values;
  std::string out;
  for (const std::string& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, kDescriptions.count(name) ? kDescriptions.at(name) : "");
    for (const std::string& opt : command_options(name)) {
      const std::string help = is_document_option(opt) ? "JSON file" : "";
      sub->add_option("--" + opt, values[name][opt], help)->allow_extra_args(false);
    }
    sub->add_option("--out", out, "output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kValidation;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    Request req;
    RunManifest manifest;
    manifest.command.assign(argv, argv + argc);
    for (const std::string& opt : command_options(command)) {
      if (chosen->get_option("--" + opt)->count() == 0) continue;
      const std::string& value = values[command][opt];
      if (is_document_option(opt)) {
        const std::string text = slurp(value);
        manifest.input_hashes[opt] = "fnv1a64:" + fnv1a64_hex(text);
        req.documents[opt] = parse_json_text(text, value);
      } else {
        req.options[opt] = value;
      }
    }
    for (const std::string& b : kBoundOptions) {
      if (const auto it = req.options.find(b); it != req.options.end()) manifest.bounds[b] = it->second;
    }
    if (const auto it = req.options.find("seed"); it != req.options.end()) manifest.seed = it->second;
    manifest.timestamp = manifest_timestamp();

    const Response res = run_command(command, req);
    if (command == "plot") {
      std::string svg = res.text;
      const std::size_t eol = svg.find('\n');
      // "--" may not appear inside an XML comment; \u002d keeps the JSON valid.
      std::string meta = manifest.to_json().dump();
      for (std::size_t at = meta.find("--"); at != std::string::npos; at = meta.find("--", at)) {
        meta.replace(at + 1, 1, "\\u002d");
      }
      svg.insert(eol + 1, "<!-- manifest " + meta + " -->\n");
      emit(out, svg);
    } else {
      Json doc = res.json;
      doc["manifest"] = manifest.to_json();
      emit(out, doc.dump(2) + "\n");
    }
    if (!res.summary.empty()) std::cerr << command << ": " << res.summary << "\n";
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << command << ": invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << command << ": budget exceeded: " << e.what() << "\n";
    return kComputation;
  } catch (const ComputationError& e) {
    std::cerr << command << ": computation failed: " << e.what() << "\n";
    return kComputation;
  }
}
