#include "bridgeland/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>

#ifndef BRIDGELAND_VERSION
#define BRIDGELAND_VERSION "0.0.0"
#endif

namespace bridgeland {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

const char* library_version() { return BRIDGELAND_VERSION; }

Json RunManifest::to_json() const {
  Json out;
  out["command"] = command;
  out["inputs"] = input_hashes;
  out["bounds"] = bounds;
  out["seed"] = seed;
  out["version"] = library_version();
  out["timestamp"] = timestamp;
  return out;
}

std::string manifest_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != nullptr && *end == '\0') now = static_cast<std::time_t>(value);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace bridgeland
