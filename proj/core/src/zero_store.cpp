#include "kprimes/zero_store.hpp"

#include "kprimes/arithmetic.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/zero_io.hpp"
#include "parallel.hpp"

namespace kprimes {

ZeroStore::ZeroStore(std::filesystem::path directory) : dir_(std::move(directory)) {}

const ZeroList* ZeroStore::find(const ZeroKey& key, double height) const {
  std::lock_guard lock(mutex_);
  auto it = lists_.find(key);
  if (it == lists_.end() && !dir_.empty()) {
    const auto path = dir_ / key.filename();
    if (std::filesystem::exists(path)) {
      ZeroList loaded = import_zeros(path);
      if (loaded.key != key) {
        throw ValidationError(path.string() + " holds zeros for " + loaded.key.describe() +
                              ", expected " + key.describe());
      }
      it = lists_.emplace(key, std::move(loaded)).first;
    }
  }
  if (it == lists_.end() || it->second.height < height) return nullptr;
  return &it->second;
}

const ZeroList& ZeroStore::at(const ZeroKey& key, double height) const {
  if (const ZeroList* z = find(key, height)) return *z;
  throw DependencyError("missing zeros for " + key.describe() + " up to height " + format_ordinate(height));
}

void ZeroStore::put(ZeroList zeros, bool persist) {
  if (persist && !dir_.empty()) {
    std::filesystem::create_directories(dir_);
    export_zeros(zeros, dir_ / zeros.key.filename());
  }
  std::lock_guard lock(mutex_);
  const ZeroKey key = zeros.key;
  lists_.insert_or_assign(key, std::move(zeros));
}

std::vector<ZeroKey> ZeroStore::required_keys(std::int64_t max_q) {
  std::vector<ZeroKey> keys;
  for (std::int64_t q = 1; q <= max_q; ++q) {
    if (!is_squarefree(q)) continue;
    for (const auto& chi : characters_mod(q)) {
      if (chi.is_primitive()) keys.push_back(ZeroKey::of(chi));
    }
  }
  return keys;
}

std::vector<ZeroKey> ZeroStore::missing(std::int64_t max_q, double height) const {
  std::vector<ZeroKey> out;
  for (auto& key : required_keys(max_q)) {
    if (!find(key, height)) out.push_back(std::move(key));
  }
  return out;
}

std::vector<ZeroKey> ZeroStore::ensure(std::int64_t max_q, double height, const ZeroSearchOptions& options,
                                       unsigned threads) {
  const std::vector<ZeroKey> todo = missing(max_q, height);
  std::vector<ZeroList> results(todo.size());
  detail::parallel_for(todo.size(), threads,
                       [&](std::size_t i) { results[i] = l_zeros(todo[i].character(), height, options); });
  for (auto& r : results) put(std::move(r));
  return todo;
}

}  // namespace kprimes
