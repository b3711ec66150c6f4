#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/game.hpp"
#include "slownim/m_rule.hpp"
#include "slownim/oracle.hpp"
#include "slownim/position.hpp"

namespace slownim {

// Polynomial-time remoteness for NIM(k+1,k).
//
// R(x) = m for exceptional x, otherwise R(x) = B(x). B is recovered from
// E(x), the best even basic position under x, by comparing E at x and at
// the M-move successor x'. E is a max over "split" shapes: the witness z has
// z_0 = 2s, z_i = the even one of {x_i - 1, x_i} for 0 < i < split, and
// z_i = b for i >= split. Each split reduces to a one-variable integer
// program in q = b/2, solved in O(1) from prefix sums, so E costs O(n)
// arithmetic operations on numbers of O(log |x|) bits.

namespace detail {

template <pile_integer Int>
void require_keep_one(const basic_position<Int>& x, std::size_t k) {
  if (k == 0 || x.size() != k + 1) {
    throw usage_error("expected NIM(k+1,k): got " + std::to_string(x.size()) + " piles with k = " +
                      std::to_string(k));
  }
}

template <pile_integer Int>
Int even_part(const Int& v) {
  return Int(v / 2) * 2;
}

/// Largest feasible q for a split, given prefix = sum of even parts of
/// x_1..x_{split-1}. Constraints (with 2s = 2q(split-1) - prefix):
///   0 <= 2s <= x_0, 2s <= b, even parts of x_1..x_{split-1} <= b,
///   b <= x_split (when split < n).
template <pile_integer Int>
std::optional<Int> split_max_half(const basic_position<Int>& x, std::size_t split, const Int& prefix) {
  const std::size_t n = x.size();
  if (split == 1) return Int(x[1] / 2);
  const Int half_prefix = prefix / 2;
  Int q = floor_div<Int>(Int(even_part(x[0]) + prefix), from_size<Int>(2 * (split - 1)));
  if (split < n) q = std::min(q, Int(x[split] / 2));
  if (split >= 3) q = std::min(q, floor_div<Int>(half_prefix, from_size<Int>(split - 2)));
  const Int lo = std::max(ceil_div<Int>(half_prefix, from_size<Int>(split - 1)), Int(x[split - 1] / 2));
  if (q < lo) return std::nullopt;
  return q;
}

template <pile_integer Int>
std::vector<Int> split_witness(const basic_position<Int>& x, std::size_t split, const Int& b,
                               const Int& prefix) {
  std::vector<Int> z(x.size());
  z[0] = b * from_size<Int>(split - 1) - prefix;
  for (std::size_t i = 1; i < split; ++i) z[i] = even_part(x[i]);
  for (std::size_t i = split; i < x.size(); ++i) z[i] = b;
  return z;
}

template <pile_integer Int>
void validate_witness(const basic_position<Int>& x, std::size_t k, const std::vector<Int>& z,
                      const Int& b) {
  const std::span<const Int> view(z);
  const auto got = is_basic<Int>(view, k);
  if (!got || *got != b || !bounded_by<Int>(view, x)) {
    throw invariant_violation("split witness for " + format(x) + " is not a dominated basic position");
  }
}

}  // namespace detail

/// Exceptional positions: all piles odd, |x| = k*m + k - 1 for an even
/// m > 0, and max(x) < m. Returns m.
template <pile_integer Int>
std::optional<Int> is_exceptional(const basic_position<Int>& x, std::size_t k) {
  detail::require_keep_one(x, k);
  const Int kk = from_size<Int>(k);
  const Int shifted = x.norm() - kk + 1;
  if (shifted <= 0 || Int(shifted % kk) != 0) return std::nullopt;
  const Int m = shifted / kk;
  if (!is_even(m) || !(x.max() < m) || !x.all_odd()) return std::nullopt;
  return m;
}

/// The best even value for one split (0-based; piles at index >= split are
/// pinned to b, split in [1, k+1]), or nullopt when no basic position of
/// that shape fits under x.
template <pile_integer Int>
std::optional<Int> b_t(const basic_position<Int>& x, std::size_t k, std::size_t split) {
  detail::require_keep_one(x, k);
  if (split < 1 || split > x.size()) {
    throw usage_error("split index " + std::to_string(split) + " outside [1, " +
                      std::to_string(x.size()) + "]");
  }
  Int prefix = 0;
  for (std::size_t i = 1; i < split; ++i) prefix += detail::even_part(x[i]);
  const auto q = detail::split_max_half(x, split, prefix);
  if (!q) return std::nullopt;
  const Int b = *q * 2;
  detail::validate_witness(x, k, detail::split_witness(x, split, b, prefix), b);
  return b;
}

template <pile_integer Int>
struct even_support {
  Int value;                  // E(x)
  std::size_t split;          // first split reaching it
  std::vector<Int> witness;   // basic, dominated by x, b = value
};

/// E(x) = max over splits of b_t. Never empty: split 1 always fits.
template <pile_integer Int>
even_support<Int> e_value(const basic_position<Int>& x, std::size_t k) {
  detail::require_keep_one(x, k);
  const std::size_t n = x.size();
  std::optional<Int> best;
  std::size_t best_split = 1;
  Int best_prefix = 0;
  Int prefix = 0;
  for (std::size_t split = 1; split <= n; ++split) {
    if (split >= 2) prefix += detail::even_part(x[split - 1]);
    if (auto q = detail::split_max_half(x, split, prefix); q && (!best || *best < *q)) {
      best = *q;
      best_split = split;
      best_prefix = prefix;
    }
  }
  const Int b = *best * 2;
  std::vector<Int> z = detail::split_witness(x, best_split, b, best_prefix);
  detail::validate_witness(x, k, z, b);
  return even_support<Int>{b, best_split, std::move(z)};
}

/// B(x) for a non-exceptional x, from E at x and at its M-move successor.
template <pile_integer Int>
Int b_fast(const basic_position<Int>& x, std::size_t k) {
  detail::require_keep_one(x, k);
  if (is_terminal_keep_one(x)) return 0;
  if (is_exceptional(x, k)) {
    throw usage_error("b_fast needs a non-exceptional position, got " + format(x));
  }
  const Int here = e_value(x, k).value;
  const Int next = e_value(m_move(x), k).value;
  if (next + 1 < here) return here;
  if (here < next + 1) return next + 1;
  throw invariant_violation("E(x) = E(x') + 1 at " + format(x));
}

enum class analysis_branch { terminal, trivial, exceptional, e_rule };

inline std::string_view branch_name(analysis_branch b) {
  switch (b) {
    case analysis_branch::terminal: return "terminal";
    case analysis_branch::trivial: return "trivial";
    case analysis_branch::exceptional: return "exceptional";
    case analysis_branch::e_rule: return "E-rule";
  }
  return "?";
}

template <pile_integer Int>
struct analysis_result {
  Int remoteness;
  std::optional<std::size_t> best_keep;  // 0-based; empty iff terminal
  analysis_branch branch;
  std::optional<Int> exceptional_m;
  std::optional<even_support<Int>> support;  // E(x) on the E-rule branch

  bool is_p_position() const { return is_even(remoteness); }
};

/// Remoteness, P/N status and an optimal move for NIM(k+1,k).
template <pile_integer Int>
analysis_result<Int> remoteness_fast(const basic_position<Int>& x, std::size_t k) {
  detail::require_keep_one(x, k);
  if (is_terminal_keep_one(x)) {
    return {Int(0), std::nullopt, analysis_branch::terminal, std::nullopt, std::nullopt};
  }
  const std::size_t keep = e_index(x);
  if (k == 1) return {x.norm(), keep, analysis_branch::trivial, std::nullopt, std::nullopt};
  if (auto m = is_exceptional(x, k)) {
    return {*m, keep, analysis_branch::exceptional, m, std::nullopt};
  }
  even_support<Int> here = e_value(x, k);
  const Int next = e_value(m_move(x), k).value;
  Int r;
  if (next + 1 < here.value) {
    r = here.value;
  } else if (here.value < next + 1) {
    r = next + 1;
  } else {
    throw invariant_violation("E(x) = E(x') + 1 at " + format(x));
  }
  return {std::move(r), keep, analysis_branch::e_rule, std::nullopt, std::move(here)};
}

/// The M-move as a move object. It always lowers the remoteness by one.
template <pile_integer Int>
move best_move(const basic_position<Int>& x, std::size_t k) {
  detail::require_keep_one(x, k);
  if (is_terminal_keep_one(x)) throw usage_error("no move from terminal position " + format(x));
  return move{{e_index(x)}};
}

}  // namespace slownim
