#pragma once

#include "saxl/characters.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace saxl {

/// A cache file failed its digest or could not be parsed. Distinct from
/// computation failures so callers can report it separately.
class CorruptCacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view bytes);

/// ctab-v1 text:
///   ctab-v1 N=<N> count=<p(N)>
///   <p(N) partition labels, canonical order>
///   <p(N) rows of p(N) space-separated integers>
///   sha256=<hex digest of all preceding bytes>
std::string serialize_ctab(const CharacterTable& table);

/// Throws CorruptCacheError on digest mismatch or malformed content.
CharacterTable parse_ctab(std::string_view bytes);

std::filesystem::path ctab_path(const std::filesystem::path& dir,
                                std::uint32_t n);

/// Writes to a temporary sibling, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view bytes);

/// Complete character tables by degree: memory first, then the on-disk
/// cache (when a directory is configured), then a fresh build that is
/// written back. Safe to share between threads.
class TableStore {
 public:
  enum class Source { memory, disk, built };

  struct Options {
    std::optional<std::filesystem::path> cache_dir;
    unsigned jobs = 1;
  };

  TableStore() = default;
  explicit TableStore(Options options) : options_(std::move(options)) {}

  const CharacterTable& table(std::uint32_t n);

  /// Where the most recent table() call found its table.
  Source last_source() const;
  unsigned jobs() const noexcept { return options_.jobs; }
  const Options& options() const noexcept { return options_; }

 private:
  Options options_;
  mutable std::mutex mutex_;
  std::map<std::uint32_t, std::unique_ptr<CharacterTable>> tables_;
  Source last_ = Source::built;
};

}  // namespace saxl
