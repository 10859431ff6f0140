#include "splinter/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splinter/error.hpp"
#include "splinter/report.hpp"

namespace splinter::scen {

namespace fs = std::filesystem;

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(uint64_t v) {
  std::ostringstream os;
  for (int shift = 60; shift >= 0; shift -= 4) os << "0123456789abcdef"[(v >> shift) & 0xf];
  return os.str();
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    if (const char* env = std::getenv("SPLINTER_CACHE_DIR"); env && *env) {
      dir_ = env;
    } else if (const char* home = std::getenv("HOME"); home && *home) {
      dir_ = std::string(home) + "/.cache/splinter";
    } else {
      dir_ = fs::temp_directory_path().string() + "/splinter-cache";
    }
  }
}

std::string Cache::key_for(const std::string& scenario, const std::string& canonical_params) {
  std::string material = std::string(kToolVersion) + "\n" + scenario + "\n" + canonical_params;
  return scenario + "-" + hex64(fnv1a64(material));
}

std::optional<std::string> Cache::get(const std::string& key) const {
  fs::path file = fs::path(dir_) / (key + ".report");
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::stringstream rest;
  rest << in.rdbuf();
  std::string bytes = rest.str();
  std::string expected = "splinter-cache-v1 " + hex64(fnv1a64(bytes));
  if (header != expected) {
    // Corrupt entry: discard so the caller recomputes.
    std::error_code ec;
    fs::remove(file, ec);
    return std::nullopt;
  }
  return bytes;
}

void Cache::put(const std::string& key, const std::string& bytes) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(Errc::Validation, "cache directory is not writable: " + dir_);
  fs::path file = fs::path(dir_) / (key + ".report");
  fs::path tmp = fs::path(dir_) / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::Validation, "cache directory is not writable: " + dir_);
    out << "splinter-cache-v1 " << hex64(fnv1a64(bytes)) << "\n" << bytes;
  }
  fs::rename(tmp, file, ec);
  if (ec) fail(Errc::Internal, "atomic rename failed in cache directory");
}

void Cache::clear() const {
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() == ".report" || entry.path().extension() == ".tmp") {
      std::error_code rec;
      fs::remove(entry.path(), rec);
    }
  }
}

}  // namespace splinter::scen
