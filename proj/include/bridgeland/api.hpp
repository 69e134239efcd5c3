#pragma once

#include <map>
#include <string>
#include <vector>

#include "bridgeland/json_io.hpp"

namespace bridgeland {

// One subcommand invocation. Option names are flag names without dashes;
// documents hold parsed JSON inputs (lattice, category, charge, walls).
struct Request {
  std::map<std::string, std::string> options;
  std::map<std::string, Json> documents;
};

struct Response {
  Json json;          // result object
  std::string text;   // non-JSON payload (SVG for plot)
  std::string summary;  // one line for humans
};

const std::vector<std::string>& command_names();

// Option names each command reads, and the subset that are JSON documents.
const std::vector<std::string>& command_options(const std::string& command);
bool is_document_option(const std::string& option);

// Throws ValidationError for bad input and ComputationError (BudgetExceeded
// included) when the computation cannot finish.
Response run_command(const std::string& command, const Request& request);

}  // namespace bridgeland
