#pragma once

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sr {

// Concurrent-read, atomic-insert memo table. Values are immutable once
// inserted; references stay valid because the map is node based.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
 public:
  template <class Fn>
  const Value& get_or_compute(const Key& key, Fn&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    // Computed outside the lock: recursive callers re-enter the table.
    Value v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

  const Value* find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  void insert(const Key& key, Value v) {
    std::unique_lock lock(mu_);
    map_.try_emplace(key, std::move(v));
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::shared_lock lock(mu_);
    return {map_.begin(), map_.end()};
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, Value, Hash> map_;
};

struct ArrayHash {
  template <class A>
  std::size_t operator()(const A& a) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : a) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace sr
