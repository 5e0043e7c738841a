#include "rulesql/manifest.h"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <memory>

#include "rulesql/errors.h"

#ifndef RULESQL_VERSION
#define RULESQL_VERSION "0.0.0"
#endif

namespace rulesql {

std::string_view Version() { return RULESQL_VERSION; }

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open '" + path.string() + "'", 0);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Sha256Hex(bytes);
}

nlohmann::ordered_json SearchConfigToJson(const SearchConfig& cfg) {
  nlohmann::ordered_json j;
  j["max_conds"] = cfg.max_conds;
  j["budget"] = cfg.budget;
  j["enabled_rules"] = cfg.enabled_rules.ids();
  j["pruning"] = cfg.pruning;
  j["keep_all_survivors"] = cfg.keep_all_survivors;
  return j;
}

InputFingerprint Fingerprint(std::string role, const std::filesystem::path& path) {
  return {std::move(role), path.string(), Sha256File(path)};
}

nlohmann::ordered_json ManifestToJson(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "rulesql";
  j["version"] = std::string(Version());
  j["command"] = m.command;
  j["config"] = m.config;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  for (const InputFingerprint& f : m.inputs) {
    inputs.push_back({{"role", f.role}, {"path", f.path}, {"sha256", f.sha256}});
  }
  j["inputs"] = std::move(inputs);
  j["output"] = m.output;
  j["created_at"] = m.created_at;
  return j;
}

std::filesystem::path WriteManifestSidecar(const RunManifest& m, const std::filesystem::path& output) {
  std::filesystem::path sidecar = output;
  sidecar += ".manifest.json";
  std::ofstream out(sidecar);
  if (!out) throw Error("cannot write '" + sidecar.string() + "'");
  out << ManifestToJson(m).dump(2) << '\n';
  return sidecar;
}

std::string UtcTimestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rulesql
