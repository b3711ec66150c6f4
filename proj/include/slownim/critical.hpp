#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/oracle.hpp"
#include "slownim/position.hpp"

namespace slownim {

/// Which clause of the m-critical characterization for NIM(k+1,k) matched.
///   A: |x| = k*m, max <= m, all even (m even) or exactly one even (m odd).
///   B: |x| = k*m + k - 1, max < m, m even, all odd (the exceptional family).
enum class critical_branch { A, B };

inline std::string_view branch_label(critical_branch b) { return b == critical_branch::A ? "A" : "B"; }

template <pile_integer Int>
std::optional<critical_branch> is_m_critical(const basic_position<Int>& x, std::size_t k, const Int& m) {
  if (k == 0 || x.size() != k + 1) throw usage_error("the characterization covers NIM(k+1,k) only");
  if (m < 0) return std::nullopt;
  const Int kk = from_size<Int>(k);
  const Int sum = x.norm();
  if (sum == kk * m && !(m < x.max())) {
    if (is_even(m) ? x.all_even() : x.even_count() == 1) return critical_branch::A;
  }
  if (sum == kk * m + kk - 1 && x.max() < m && is_even(m) && x.all_odd()) return critical_branch::B;
  return std::nullopt;
}

template <pile_integer Int>
struct critical_entry {
  basic_position<Int> x;
  std::optional<critical_branch> branch;  // empty for n != k+1

  friend bool operator==(const critical_entry&, const critical_entry&) = default;
};

template <pile_integer Int>
struct critical_report {
  Int m;
  std::vector<critical_entry<Int>> entries;   // sorted by position
  std::vector<basic_position<Int>> violations;  // conjecture checks only

  std::vector<basic_position<Int>> positions() const {
    std::vector<basic_position<Int>> out;
    for (const auto& e : entries) out.push_back(e.x);
    return out;
  }
};

namespace detail {

// Emits non-decreasing tuples of `slots` values drawn from the grid
// {first, first+step, ...} up to `last` that sum to `remaining`. When
// `one_off` is set, exactly one value must come from the other-parity grid
// {0, 2, ...} / {1, 3, ...}; that is how m-odd case A is generated.
template <pile_integer Int>
class bounded_partitions {
 public:
  bounded_partitions(std::size_t n, Int last, std::size_t limit, std::vector<basic_position<Int>>& out)
      : n_(n), last_(std::move(last)), limit_(limit), out_(out) {}

  // All parts share the parity of `first`.
  void same_parity(const Int& first, const Int& sum) {
    std::vector<Int> cur;
    uniform(cur, first, sum);
  }

  // Exactly one even part, the rest odd.
  void one_even(const Int& sum) {
    std::vector<Int> cur;
    mixed(cur, Int(0), sum, false);
  }

 private:
  void emit(const std::vector<Int>& cur) {
    if (out_.size() >= limit_) {
      throw resource_limit_error("critical enumeration exceeds " + std::to_string(limit_) + " positions");
    }
    out_.push_back(basic_position<Int>(cur));
  }

  void uniform(std::vector<Int>& cur, const Int& lo, const Int& remaining) {
    const std::size_t slots = n_ - cur.size();
    if (slots == 0) {
      if (remaining == 0) emit(cur);
      return;
    }
    const Int s = from_size<Int>(slots);
    for (Int v = lo; !(last_ < v); v += 2) {
      if (remaining < v * s) break;
      if (Int(v + last_ * (s - 1)) < remaining) continue;
      cur.push_back(v);
      uniform(cur, v, Int(remaining - v));
      cur.pop_back();
    }
  }

  // lo: smallest admissible next value (any parity). Values are taken in
  // non-decreasing order; `have_even` tracks whether the even part is placed.
  void mixed(std::vector<Int>& cur, const Int& lo, const Int& remaining, bool have_even) {
    const std::size_t slots = n_ - cur.size();
    if (slots == 0) {
      if (remaining == 0 && have_even) emit(cur);
      return;
    }
    const Int s = from_size<Int>(slots);
    for (Int v = lo; !(last_ < v); v += 1) {
      if (remaining < v * s) break;
      if (Int(v + last_ * (s - 1)) < remaining) continue;
      const bool even = is_even(v);
      if (even && have_even) continue;
      if (!even && !have_even && slots == 1) continue;
      cur.push_back(v);
      mixed(cur, v, Int(remaining - v), have_even || even);
      cur.pop_back();
    }
  }

  std::size_t n_;
  Int last_;
  std::size_t limit_;
  std::vector<basic_position<Int>>& out_;
};

}  // namespace detail

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

/// Every m-critical position of NIM(k+1,k), generated from the closed form
/// (no game search). Sorted by position.
template <pile_integer Int>
critical_report<Int> enumerate_critical(std::size_t k, const Int& m,
                                        std::size_t limit = default_enumeration_limit) {
  if (k == 0) throw usage_error("k must be positive");
  if (m < 0) throw usage_error("m must be nonnegative");
  const std::size_t n = k + 1;
  const Int kk = from_size<Int>(k);
  std::vector<basic_position<Int>> a_case;
  std::vector<basic_position<Int>> b_case;
  {
    detail::bounded_partitions<Int> gen(n, m, limit, a_case);
    if (is_even(m)) gen.same_parity(Int(0), Int(kk * m));
    else gen.one_even(Int(kk * m));
  }
  if (is_even(m) && m > 0) {
    detail::bounded_partitions<Int> gen(n, Int(m - 1), limit, b_case);
    gen.same_parity(Int(1), Int(kk * m + kk - 1));
  }
  if (a_case.size() + b_case.size() > limit) {
    throw resource_limit_error("critical enumeration exceeds " + std::to_string(limit) + " positions");
  }
  critical_report<Int> report{m, {}, {}};
  for (auto& x : a_case) report.entries.push_back({std::move(x), critical_branch::A});
  for (auto& x : b_case) report.entries.push_back({std::move(x), critical_branch::B});
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& l, const auto& r) { return l.x < r.x; });
  return report;
}

/// Tests the bounds km <= |x| < k(m+1) and max(x) <= m on every m-critical
/// position the oracle finds within `bound`. Violations are findings to
/// report, not errors.
template <pile_integer Int>
critical_report<Int> check_conjecture(basic_oracle<Int>& oracle, const Int& m, const Int& bound) {
  const game_spec& spec = oracle.spec();
  const Int kk = from_size<Int>(spec.k);
  critical_report<Int> report{m, {}, {}};
  for (basic_position<Int>& x : oracle.critical(m, bound)) {
    const Int sum = x.norm();
    if (sum < kk * m || !(sum < kk * (m + 1)) || m < x.max()) report.violations.push_back(x);
    std::optional<critical_branch> branch;
    if (spec.keeps_one()) branch = is_m_critical(x, spec.k, m);
    report.entries.push_back({std::move(x), branch});
  }
  return report;
}

template <pile_integer Int>
critical_report<Int> check_conjecture(const game_spec& spec, const Int& m, const Int& bound) {
  basic_oracle<Int> oracle(spec);
  return check_conjecture(oracle, m, bound);
}

}  // namespace slownim
