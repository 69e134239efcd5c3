#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bridgeland/json_io.hpp"

namespace bridgeland {

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

const char* library_version();

struct RunManifest {
  std::vector<std::string> command;
  std::map<std::string, std::string> input_hashes;  // input name -> "fnv1a64:<hex>"
  std::map<std::string, std::string> bounds;
  std::string seed;
  std::string timestamp;

  Json to_json() const;
};

// Timestamp from SOURCE_DATE_EPOCH when set, else the current UTC time, as
// ISO 8601.
std::string manifest_timestamp();

}  // namespace bridgeland
