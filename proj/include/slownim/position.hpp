#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/natural.hpp"

namespace slownim {

struct sorted_t {
  explicit sorted_t() = default;
};
/// Tag for constructors whose caller guarantees non-decreasing input.
inline constexpr sorted_t already_sorted{};

/// A game position in canonical form: pile sizes sorted non-decreasingly.
///
/// All game logic for NIM(n,k) works on this form; symmetric positions
/// collapse to one value. Indices used by moves refer to the sorted order.
template <pile_integer Int>
class basic_position {
 public:
  using value_type = Int;
  using const_iterator = typename std::vector<Int>::const_iterator;

  /// Sorts `raw`. Throws usage_error if it is empty or has a negative entry.
  explicit basic_position(std::vector<Int> raw) : coords_(std::move(raw)) {
    if (coords_.empty()) throw usage_error("position must have at least one pile");
    for (const Int& c : coords_) {
      if (c < 0) throw usage_error("pile sizes must be nonnegative");
    }
    std::sort(coords_.begin(), coords_.end());
  }

  basic_position(std::initializer_list<Int> raw) : basic_position(std::vector<Int>(raw)) {}

  basic_position(sorted_t, std::vector<Int> sorted) : coords_(std::move(sorted)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const_iterator begin() const noexcept { return coords_.begin(); }
  const_iterator end() const noexcept { return coords_.end(); }
  std::span<const Int> coords() const noexcept { return coords_; }
  const std::vector<Int>& vector() const noexcept { return coords_; }

  const Int& min() const { return coords_.front(); }
  const Int& max() const { return coords_.back(); }

  /// |x|, the total number of stones.
  Int norm() const {
    Int sum = 0;
    for (const Int& c : coords_) sum += c;
    return sum;
  }

  bool all_even() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return is_even(c); });
  }
  bool all_odd() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return is_odd(c); });
  }
  std::size_t even_count() const {
    return static_cast<std::size_t>(
        std::count_if(coords_.begin(), coords_.end(), [](const Int& c) { return is_even(c); }));
  }

  friend bool operator==(const basic_position&, const basic_position&) = default;
  friend std::strong_ordering operator<=>(const basic_position& a, const basic_position& b) {
    return std::lexicographical_compare_three_way(
        a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
        [](const Int& l, const Int& r) {
          return l < r ? std::strong_ordering::less
                       : (r < l ? std::strong_ordering::greater : std::strong_ordering::equal);
        });
  }

 private:
  std::vector<Int> coords_;
};

using position = basic_position<natural>;

template <pile_integer Int>
basic_position<Int> canonicalize(std::vector<Int> raw) {
  return basic_position<Int>(std::move(raw));
}

/// "(a,b,c)"
template <pile_integer Int>
std::string format(const basic_position<Int>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += to_string(x[i]);
  }
  out += ')';
  return out;
}

/// x ⪰ y: every sorted coordinate of x is at least the matching one of y.
template <pile_integer Int>
bool dominates(const basic_position<Int>& x, const basic_position<Int>& y) {
  if (x.size() != y.size()) throw usage_error("dominance needs positions of equal length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return false;
  }
  return true;
}

/// x ≻ y: dominance with x != y.
template <pile_integer Int>
bool strictly_dominates(const basic_position<Int>& x, const basic_position<Int>& y) {
  return dominates(x, y) && x != y;
}

/// Coordinatewise z <= x for an arbitrary (unsorted) z against a sorted x.
/// This implies sort(z) ⪯ x.
template <pile_integer Int>
bool bounded_by(std::span<const Int> z, const basic_position<Int>& x) {
  if (z.size() != x.size()) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || x[i] < z[i]) return false;
  }
  return true;
}

}  // namespace slownim
