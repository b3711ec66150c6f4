#pragma once

#include <cstddef>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/position.hpp"

namespace slownim {

/// Calls f(position) for every non-decreasing n-tuple with entries in
/// [0, bound], in lexicographic order.
template <pile_integer Int, class F>
void for_each_sorted_tuple(std::size_t n, const Int& bound, F&& f) {
  if (n == 0) throw usage_error("grid dimension must be positive");
  if (bound < 0) throw usage_error("grid bound must be nonnegative");
  std::vector<Int> cur(n, Int(0));
  while (true) {
    f(basic_position<Int>(already_sorted, cur));
    // Advance like an odometer that keeps the tuple non-decreasing.
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound) --i;
    if (i == 0) return;
    cur[i - 1] += 1;
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[i - 1];
  }
}

template <pile_integer Int>
std::vector<basic_position<Int>> sorted_grid(std::size_t n, const Int& bound) {
  std::vector<basic_position<Int>> out;
  for_each_sorted_tuple<Int>(n, bound, [&](const basic_position<Int>& x) { out.push_back(x); });
  return out;
}

/// Every sorted z with z ⪯ x (x itself included), in lexicographic order.
template <pile_integer Int, class F>
void for_each_dominated(const basic_position<Int>& x, F&& f) {
  const std::size_t n = x.size();
  std::vector<Int> cur(n, Int(0));
  while (true) {
    f(basic_position<Int>(already_sorted, cur));
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == x[i - 1]) --i;
    if (i == 0) return;
    cur[i - 1] += 1;
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[i - 1];
  }
}

/// Sorted positions one stone below x: for each distinct positive value,
/// decrement its first occurrence. Every z ≺ x is reachable through a chain
/// of these steps.
template <pile_integer Int>
std::vector<std::vector<Int>> down_neighbors(const std::vector<Int>& x) {
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0 || (i > 0 && x[i - 1] == x[i])) continue;
    std::vector<Int> y = x;
    y[i] -= 1;
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace slownim
