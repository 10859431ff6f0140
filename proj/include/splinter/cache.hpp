#pragma once

#include <optional>
#include <string>

namespace splinter::scen {

/// On-disk report cache.  Entries are keyed by a content hash of the tool
/// version, scenario name and canonicalized parameters; files carry their own
/// content hash and corrupt entries are discarded on read.  Writes go through
/// a temporary file and an atomic rename.
class Cache {
public:
  // Empty dir selects the environment variable SPLINTER_CACHE_DIR, falling
  // back to a per-user default.
  explicit Cache(std::string dir = "");

  const std::string& dir() const { return dir_; }

  static std::string key_for(const std::string& scenario, const std::string& canonical_params);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& bytes) const;
  void clear() const;

private:
  std::string dir_;
};

uint64_t fnv1a64(const std::string& data);

}  // namespace splinter::scen
