#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "kprimes/lfunc.hpp"

namespace kprimes {

/// Zero lists keyed by primitive character, optionally backed by a directory of
/// `zeta.zeros` / `q<q1>_chi<vec>.zeros` files. Lookups are thread-safe.
class ZeroStore {
 public:
  ZeroStore() = default;
  explicit ZeroStore(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return dir_; }

  /// The list for `key` with height >= `height`, loading it from disk on first use;
  /// nullptr if unavailable.
  const ZeroList* find(const ZeroKey& key, double height = 0.0) const;
  /// As find, but throws DependencyError naming the key.
  const ZeroList& at(const ZeroKey& key, double height = 0.0) const;

  /// Inserts (replacing) a list; writes it to the directory when one is set and `persist`.
  void put(ZeroList zeros, bool persist = true);

  /// Keys of every primitive character of squarefree conductor <= max_q.
  static std::vector<ZeroKey> required_keys(std::int64_t max_q);
  /// Required keys with no list of sufficient height.
  std::vector<ZeroKey> missing(std::int64_t max_q, double height) const;

  /// Computes every missing list for squarefree conductors <= max_q up to `height`.
  /// Returns the keys computed.
  std::vector<ZeroKey> ensure(std::int64_t max_q, double height, const ZeroSearchOptions& options = {},
                              unsigned threads = 1);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  mutable std::map<ZeroKey, ZeroList> lists_;
};

}  // namespace kprimes
