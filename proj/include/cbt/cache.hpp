#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "cbt/canonical.hpp"
#include "cbt/fock.hpp"

namespace cbt {

// Persistent store of computed G(mu), one JSON record per line after a
// versioned header:
//   {"format":"cbt-gcb-cache","version":1}
//   {"k":2,"l":2,"mode":"fast","mu":[2],"g":[{"la":[2],"p":{"0":1}}, ...]}
// Records are appended and flushed one at a time. Lookups return candidates
// only; Session re-validates them before use.
class GcbCache {
 public:
  static constexpr int kVersion = 1;

  // Loads path if it exists (an unreadable header throws), else creates it.
  explicit GcbCache(std::string path);

  std::optional<FockVector> lookup(const Context& ctx, Mode mode, const Partition& mu) const;
  void store(const Context& ctx, Mode mode, const Partition& mu, const FockVector& g);

  const std::string& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }
  // Lines skipped on load because they did not parse.
  std::size_t skipped() const { return skipped_; }

 private:
  using Key = std::tuple<int, int, Mode, Partition>;
  std::string path_;
  std::map<Key, FockVector> entries_;
  std::size_t skipped_ = 0;
};

// Serialise a single record line (no trailing newline).
std::string cache_record(const Context& ctx, Mode mode, const Partition& mu, const FockVector& g);

}  // namespace cbt
