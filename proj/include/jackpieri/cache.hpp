#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace jackpieri {

/// Map from key to immutable shared value. Lookups take a shared lock;
/// values are computed outside any lock, so a computation may recurse into
/// the same cache. Racing inserts of equal values keep the first.
template <class K, class V, class Cmp = std::less<K>>
class ConcurrentCache {
 public:
  template <class Fn>
  std::shared_ptr<const V> get_or_compute(const K& key, Fn&& compute) const {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(compute());
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  mutable std::map<K, std::shared_ptr<const V>, Cmp> map_;
};

}  // namespace jackpieri
