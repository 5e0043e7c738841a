#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rulesql/explorer.h"

namespace rulesql {

std::string_view Version();

std::string Sha256Hex(std::string_view bytes);
std::string Sha256File(const std::filesystem::path& path);

struct InputFingerprint {
  std::string role;  // "tables", "data", "labels"
  std::string path;
  std::string sha256;
};

// Sidecar describing how an output file was produced. created_at is the only
// field that differs between otherwise identical runs.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<InputFingerprint> inputs;
  std::string output;
  std::string created_at;
};

nlohmann::ordered_json SearchConfigToJson(const SearchConfig& cfg);
InputFingerprint Fingerprint(std::string role, const std::filesystem::path& path);
nlohmann::ordered_json ManifestToJson(const RunManifest& m);

// Writes "<output>.manifest.json" and returns its path.
std::filesystem::path WriteManifestSidecar(const RunManifest& m, const std::filesystem::path& output);

// UTC, ISO-8601.
std::string UtcTimestamp();

}  // namespace rulesql
