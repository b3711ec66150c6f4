#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/fast.hpp"
#include "slownim/grid.hpp"
#include "slownim/position.hpp"

// Closed-form P/N tables for NIM(4,3), published as computer-confirmed but
// unproven. Nothing else in the library may depend on this header: it exists
// so the tables can be checked against the solver.

namespace slownim {

enum class game_status { P, N };

inline char status_char(game_status s) { return s == game_status::P ? 'P' : 'N'; }

struct nim43_verdict {
  game_status status;
  int residue;            // |x| mod 3, selects the case
  std::string_view rule;  // which bullet fired
  std::optional<int> p;
  std::optional<int> q;
};

namespace detail {

template <pile_integer Int>
bool is_one_of(const Int& v, std::initializer_list<int> values) {
  for (int c : values) {
    if (v == c) return true;
  }
  return false;
}

/// [v = 12j for some integer j >= 0]
template <pile_integer Int>
int twelve_multiple(const Int& v) {
  return (!(v < 0) && Int(v % 12) == 0) ? 1 : 0;
}

inline game_status p_if(bool cond) { return cond ? game_status::P : game_status::N; }

}  // namespace detail

/// Evaluates the NIM(4,3) tables on x sorted as x1 <= x2 <= x3 <= x4.
template <pile_integer Int>
nim43_verdict nim43_status(const basic_position<Int>& x) {
  using detail::is_one_of;
  using detail::p_if;
  using detail::twelve_multiple;
  if (x.size() != 4) throw usage_error("the NIM(4,3) tables need exactly four piles");

  const Int& x1 = x[0];
  const Int& x2 = x[1];
  const Int& x3 = x[2];
  const Int& x4 = x[3];
  const Int gap = x3 - x2 - x1;
  const Int s12 = x1 + x2;
  const Int s13 = x1 + x3 - x2;
  const Int tail = x1 + x2 + x3 - 2 * x4;
  const int residue = static_cast<int>(mod_floor<Int>(x.norm(), Int(3)));
  const bool odd1 = is_odd(x1);
  const bool odd2 = is_odd(x2);
  const int s12_mod4 = static_cast<int>(mod_floor<Int>(s12, Int(4)));
  const int s13_mod4 = static_cast<int>(mod_floor<Int>(s13, Int(4)));

  if (residue == 0) {
    if (odd1 && odd2) return {game_status::N, 0, "case0/both-odd", {}, {}};
    if (!(gap < 0)) return {p_if(is_even(s12)), 0, "case0/gap>=0", {}, {}};
    if (gap == -1) return {p_if(is_odd(s12)), 0, "case0/gap=-1", {}, {}};
    if (is_even(s13)) return {p_if(is_even(s12)), 0, "case0/x1+x3-x2-even", {}, {}};
    const int p = s13_mod4 == 3 ? 1 : 0;
    const int q = twelve_multiple<Int>(Int(tail - 3));
    return {p_if(is_even(Int(x2 + p + q))), 0, "case0/x2+p+q", p, q};
  }

  if (residue == 1) {
    if (odd1 && odd2) return {game_status::N, 1, "case1/both-odd", {}, {}};
    if (!(gap < 0) || is_even(gap) || gap == -3) {
      return {p_if(is_even(s12)), 1, "case1/gap>=0-or-even-or=-3", {}, {}};
    }
    if (gap == -1 || gap == -5) return {p_if(is_odd(s12)), 1, "case1/gap=-1-or=-5", {}, {}};
    const int p = s13_mod4 == 1 ? 1 : 0;
    const int q = twelve_multiple<Int>(Int(tail - 7));
    return {p_if(is_odd(Int(x2 + p + q))), 1, "case1/x2+p+q", p, q};
  }

  if (odd1 && odd2) {
    if (!(gap < 0) || is_one_of(gap, {-1, -3, -4, -7})) {
      return {game_status::N, 2, "case2/odd-odd/listed-gap", {}, {}};
    }
    const int c = 2 + 3 * s12_mod4;
    const int p = twelve_multiple<Int>(Int(tail - c));
    return {p_if(p % 2 == 1), 2, "case2/odd-odd/p", p, {}};
  }

  if (odd1) {
    if (!(gap < 0) || is_one_of(gap, {-2, -3, -6})) {
      return {game_status::N, 2, "case2/odd-even/listed-gap", {}, {}};
    }
    if (gap == -1) return {game_status::P, 2, "case2/odd-even/gap=-1", {}, {}};
    const int p = s13_mod4 == 1 ? 1 : 0;
    const int c = is_odd(s12) ? 5 : (8 - 3 * s12_mod4);
    const int q = twelve_multiple<Int>(Int(tail - c));
    return {p_if((p + q) % 2 == 1), 2, "case2/odd-even/p+q", p, q};
  }

  if (!(gap < 0) || is_one_of(gap, {-2, -3, -6})) {
    return {p_if(is_even(x2)), 2, "case2/even/listed-gap", {}, {}};
  }
  if (gap == -1) return {p_if(is_odd(x2)), 2, "case2/even/gap=-1", {}, {}};
  const int p = s13_mod4 == 3 ? 1 : 0;
  const int c = is_odd(s12) ? 5 : (2 + 3 * s12_mod4);
  const int q = twelve_multiple<Int>(Int(tail - c));
  return {p_if(is_even(Int(x2 + p + q))), 2, "case2/even/p+q+x2", p, q};
}

template <pile_integer Int>
struct nim43_mismatch {
  basic_position<Int> x;
  nim43_verdict verdict;
  Int remoteness;  // from the solver
};

template <pile_integer Int>
struct nim43_report {
  std::size_t checked = 0;
  std::vector<nim43_mismatch<Int>> mismatches;
};

/// Compares the tables with remoteness parity on every sorted 4-tuple with
/// entries <= bound.
template <pile_integer Int>
nim43_report<Int> nim43_consistency(const Int& bound) {
  nim43_report<Int> report;
  for_each_sorted_tuple<Int>(4, bound, [&](const basic_position<Int>& x) {
    ++report.checked;
    const nim43_verdict v = nim43_status(x);
    const Int r = remoteness_fast(x, 3).remoteness;
    const game_status solved = is_even(r) ? game_status::P : game_status::N;
    if (v.status != solved) report.mismatches.push_back({x, v, r});
  });
  return report;
}

}  // namespace slownim
