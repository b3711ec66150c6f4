#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>
#include <functional>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "slownim/error.hpp"

namespace slownim {

/// Default pile-size type: unbounded, so |x| never overflows.
using natural = boost::multiprecision::cpp_int;

/// Signed integer-like types usable for pile sizes. Signedness is required
/// because several formulas (the NIM(4,3) tables, split bounds) go negative.
template <class T>
concept pile_integer = std::numeric_limits<T>::is_specialized &&
                       std::numeric_limits<T>::is_integer &&
                       std::numeric_limits<T>::is_signed &&
                       requires(T a, T b) {
                         { a + b };
                         { a - b };
                         { a * b };
                         { a / b };
                         { a % b };
                         { a < b } -> std::convertible_to<bool>;
                         { a == b } -> std::convertible_to<bool>;
                       };

template <pile_integer Int>
Int from_size(std::size_t v) {
  return static_cast<Int>(v);
}

template <pile_integer Int>
bool is_even(const Int& v) {
  return Int(v % 2) == 0;
}

template <pile_integer Int>
bool is_odd(const Int& v) {
  return !is_even(v);
}

/// Floor division for a nonnegative numerator and positive divisor.
template <pile_integer Int>
Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (Int(num % den) != 0 && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

template <pile_integer Int>
Int ceil_div(const Int& num, const Int& den) {
  return -floor_div<Int>(Int(-num), den);
}

/// Residue in [0, mod) regardless of the sign of v.
template <pile_integer Int>
Int mod_floor(const Int& v, const Int& mod) {
  Int r = v % mod;
  if (r < 0) r += mod;
  return r;
}

template <pile_integer Int>
std::string to_string(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Parses a plain decimal nonnegative integer. Throws usage_error on anything
/// else, including overflow of a bounded Int.
template <pile_integer Int>
Int parse_integer(std::string_view text) {
  if (text.empty()) throw usage_error("empty integer literal");
  Int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw usage_error("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
    const int digit = c - '0';
    if constexpr (std::numeric_limits<Int>::is_bounded) {
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) {
        throw usage_error("integer literal out of range: '" + std::string(text) + "'");
      }
    }
    value = value * 10 + digit;
  }
  return value;
}

struct pile_vector_hash {
  template <class Int>
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t seed = v.size();
    for (const Int& e : v) boost::hash_combine(seed, std::hash<Int>{}(e));
    return seed;
  }
};

}  // namespace slownim
