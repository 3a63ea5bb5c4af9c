#ifndef RSBF_CACHE_HPP
#define RSBF_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rsbf/hash.hpp"

namespace rsbf::cache {

struct CachedResult {
  int exit_code = 0;
  std::string output;

  friend bool operator==(const CachedResult&, const CachedResult&) = default;
};

/// On-disk store of rendered command output, one file per key.
///
/// Entry layout: a header of "name value" lines (magic, key, exit code, payload
/// length, payload checksum), a blank line, then the payload bytes. Entries
/// whose key, length or checksum do not validate are treated as absent.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// --cache-dir, else $RSBF_CACHE_DIR, else $XDG_CACHE_HOME/rsbf, else
  /// $HOME/.cache/rsbf, else <tmp>/rsbf-cache.
  static std::filesystem::path resolve_dir(const std::string& flag_value);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<CachedResult> load(const std::string& key) const;

  /// Writes to a temporary file in the cache directory and renames it over
  /// the entry. Failures are swallowed: the cache is an accelerator only.
  void store(const std::string& key, const CachedResult& value) const;

  /// Removes every entry; returns how many were removed.
  std::size_t clear() const;

  std::filesystem::path entry_path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rsbf::cache

#endif  // RSBF_CACHE_HPP
