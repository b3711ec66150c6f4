#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/position.hpp"

namespace slownim {

// The M-rule for NIM(k+1,k); k is always x.size() - 1 here.

/// e(x): the largest index holding the smallest even pile, or the last index
/// when every pile is odd.
template <pile_integer Int>
std::size_t e_index(const basic_position<Int>& x) {
  std::size_t best = x.size() - 1;
  const Int* smallest = nullptr;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_even(x[i])) continue;
    if (smallest == nullptr || x[i] < *smallest) {
      smallest = &x[i];
      best = i;
    } else if (x[i] == *smallest) {
      best = i;
    }
  }
  return best;
}

template <pile_integer Int>
bool is_terminal_keep_one(const basic_position<Int>& x) {
  return x.size() < 2 || x[1] == 0;
}

/// x - m^(e(x)): keep pile e(x), take one stone from every other pile.
/// The result is already sorted.
template <pile_integer Int>
basic_position<Int> m_move(const basic_position<Int>& x) {
  if (x.size() < 2) throw usage_error("the M-rule needs at least two piles");
  if (is_terminal_keep_one(x)) throw usage_error("no M-move from terminal position " + format(x));
  const std::size_t keep = e_index(x);
  std::vector<Int> next = x.vector();
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (i != keep) next[i] -= 1;
  }
  return basic_position<Int>(already_sorted, std::move(next));
}

template <pile_integer Int>
struct m_rule_playout {
  basic_position<Int> start;
  std::vector<std::size_t> keeps;          // kept index per step
  std::vector<basic_position<Int>> trace;  // start, then each position reached
  Int length = 0;                          // 𝓜(x)
};

/// Plays M-moves from x until a terminal position. The playout has 𝓜(x)
/// steps, which can be astronomically many for large piles; `max_steps`
/// turns that into a resource_limit_error.
template <pile_integer Int>
m_rule_playout<Int> m_count(const basic_position<Int>& x,
                            std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
  if (x.size() < 2) throw usage_error("the M-rule needs at least two piles");
  m_rule_playout<Int> out{x, {}, {x}, Int(0)};
  basic_position<Int> cur = x;
  while (!is_terminal_keep_one(cur)) {
    if (out.keeps.size() >= max_steps) {
      throw resource_limit_error("M-rule playout longer than " + std::to_string(max_steps) + " steps");
    }
    out.keeps.push_back(e_index(cur));
    cur = m_move(cur);
    out.trace.push_back(cur);
    out.length += 1;
  }
  return out;
}

}  // namespace slownim
