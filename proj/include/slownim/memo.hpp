#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slownim/error.hpp"

namespace slownim {

inline constexpr std::size_t default_memo_limit = 10'000'000;

/// Reads SLOWNIM_MEMO_LIMIT, falling back to default_memo_limit.
inline std::size_t memo_limit_from_environment() {
  const char* raw = std::getenv("SLOWNIM_MEMO_LIMIT");
  if (raw == nullptr || *raw == '\0') return default_memo_limit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    throw usage_error(std::string("SLOWNIM_MEMO_LIMIT must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(v);
}

/// Write-once cache with a hard entry limit. Not synchronized: use one per thread.
template <class Key, class Value, class Hash>
class memo_table {
 public:
  explicit memo_table(std::size_t limit = default_memo_limit) : limit_(limit) {}

  const Value* find(const Key& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  const Value& insert(const Key& key, Value value) {
    if (map_.size() >= limit_) {
      throw resource_limit_error("memo table limit of " + std::to_string(limit_) +
                                 " entries exceeded (raise SLOWNIM_MEMO_LIMIT)");
    }
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::unordered_map<Key, Value, Hash> map_;
  std::size_t limit_;
};

/// Evaluates a function defined by recursion over an acyclic successor
/// relation, bottom-up, with an explicit stack.
///
/// `children(key)` returns the keys the value of `key` depends on.
/// `combine(key, values)` gets the children's values in the same order.
template <class Key, class Value, class Hash, class Children, class Combine>
const Value& evaluate_dag(memo_table<Key, Value, Hash>& memo, const Key& root, Children&& children,
                          Combine&& combine) {
  if (const Value* hit = memo.find(root)) return *hit;

  struct frame {
    Key key;
    std::vector<Key> deps;
    std::size_t next = 0;
  };
  std::vector<frame> stack;
  stack.push_back(frame{root, children(root), 0});

  while (true) {
    frame& top = stack.back();
    while (top.next < top.deps.size() && memo.find(top.deps[top.next]) != nullptr) ++top.next;
    if (top.next < top.deps.size()) {
      Key dep = top.deps[top.next];
      std::vector<Key> deps = children(dep);
      stack.push_back(frame{std::move(dep), std::move(deps), 0});
      continue;
    }
    std::vector<Value> values;
    values.reserve(top.deps.size());
    for (const Key& d : top.deps) values.push_back(*memo.find(d));
    const Value& stored = memo.insert(top.key, combine(top.key, values));
    if (stack.size() == 1) return stored;
    stack.pop_back();
  }
}

}  // namespace slownim
