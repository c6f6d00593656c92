#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <type_traits>
#include <unordered_map>

namespace kronstab {

/// Reader/writer-locked memo table. Concurrent callers may compute the same
/// key twice; the first stored value wins and every caller sees a correct
/// value either way.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class F>
  Value get_or_compute(const Key& key, F&& compute) {
    if (auto hit = find(key)) return *hit;
    Value value = compute();
    return insert(key, std::move(value));
  }

  /// Like get_or_compute, but returns a reference into the table. Entries
  /// are never erased except by clear(), so the reference stays valid.
  template <class F>
  const Value& get_or_compute_ref(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    return insert(key, std::move(value));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

/// Hash for tuples of hashable values.
struct TupleHash {
  template <class... Ts>
  std::size_t operator()(const std::tuple<Ts...>& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    std::apply([&](const auto&... xs) { ((h = (h ^ std::hash<std::decay_t<decltype(xs)>>{}(xs)) * 0x100000001b3ULL), ...); }, t);
    return h;
  }
};

}  // namespace kronstab
