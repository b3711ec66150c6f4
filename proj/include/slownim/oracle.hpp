#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/game.hpp"
#include "slownim/grid.hpp"
#include "slownim/memo.hpp"
#include "slownim/position.hpp"

namespace slownim {

// ---------------------------------------------------------------------------
// Basic positions and B(x), straight from the definition.

/// If z is basic for NIM(k+1,k), returns b(z) = |z|/k. Basic means |z| = k*b,
/// every z_i <= b, and: all z_i even when b is even, exactly one even when b
/// is odd. Order of z is irrelevant.
template <pile_integer Int>
std::optional<Int> is_basic(std::span<const Int> z, std::size_t k) {
  if (z.size() != k + 1) throw usage_error("basic positions are defined for n = k+1");
  Int sum = 0;
  for (const Int& c : z) {
    if (c < 0) return std::nullopt;
    sum += c;
  }
  const Int kk = from_size<Int>(k);
  if (Int(sum % kk) != 0) return std::nullopt;
  const Int b = sum / kk;
  std::size_t evens = 0;
  for (const Int& c : z) {
    if (b < c) return std::nullopt;
    if (is_even(c)) ++evens;
  }
  if (is_even(b) ? evens != z.size() : evens != 1) return std::nullopt;
  return b;
}

template <pile_integer Int>
std::optional<Int> is_basic(const basic_position<Int>& z, std::size_t k) {
  return is_basic<Int>(z.coords(), k);
}

template <pile_integer Int>
struct basic_support {
  Int value;
  basic_position<Int> witness;
};

/// B(x) with a witness, by exhaustive search over every sorted z ⪯ x.
/// Ties go to the lexicographically smallest witness.
template <pile_integer Int>
basic_support<Int> b_oracle_witness(const basic_position<Int>& x, std::size_t k) {
  if (x.size() != k + 1) throw usage_error("B(x) is defined for NIM(k+1,k)");
  std::optional<basic_support<Int>> best;
  for_each_dominated(x, [&](const basic_position<Int>& z) {
    if (auto b = is_basic(z, k); b && (!best || best->value < *b)) {
      best = basic_support<Int>{*b, z};
    }
  });
  // z = 0 is basic with b = 0, so best is always set.
  return *best;
}

template <pile_integer Int>
Int b_oracle(const basic_position<Int>& x, std::size_t k) {
  return b_oracle_witness(x, k).value;
}

// ---------------------------------------------------------------------------
// Memoized brute force over the game graph.

/// Brute-force solver for one game. Holds its own memo tables, so share an
/// instance across queries but not across threads.
template <pile_integer Int>
class basic_oracle {
 public:
  using key_type = std::vector<Int>;

  explicit basic_oracle(game_spec spec, std::size_t memo_limit = memo_limit_from_environment())
      : spec_(std::move(spec)),
        remoteness_(memo_limit),
        sg_(memo_limit),
        below_(memo_limit),
        b_(memo_limit) {}

  const game_spec& spec() const noexcept { return spec_; }

  /// Smith's remoteness: 0 with no moves, 1 + the smallest even successor
  /// value if one exists, otherwise 1 + the largest (odd) successor value.
  Int remoteness(const basic_position<Int>& x) {
    check_dimension(x.size());
    return remoteness_key(key_of(x));
  }

  /// Raw pile vector. For hypergraph games this is the only meaningful form;
  /// for NIM(n,k) the vector is canonicalized first.
  Int remoteness(std::span<const Int> piles) {
    check_dimension(piles.size());
    return remoteness_key(key_of(piles));
  }

  /// Sprague-Grundy value: mex of the successor values.
  Int sg(const basic_position<Int>& x) {
    check_dimension(x.size());
    return sg_key(key_of(x));
  }

  Int sg(std::span<const Int> piles) {
    check_dimension(piles.size());
    return sg_key(key_of(piles));
  }

  /// B(x), computed as the max of b over basic positions in the down-set of
  /// x via down-neighbor recursion. Agrees with b_oracle.
  Int b(const basic_position<Int>& x) {
    require_keeps_one();
    check_dimension(x.size());
    const std::size_t k = spec_.k;
    return evaluate_dag(
        b_, x.vector(), [](const key_type& y) { return down_neighbors(y); },
        [k](const key_type& y, const std::vector<Int>& below) {
          Int best = is_basic<Int>(std::span<const Int>(y), k).value_or(Int(0));
          for (const Int& v : below) best = std::max(best, v);
          return best;
        });
  }

  /// Sorted set of remoteness values over all z ⪯ x (x included). For any m
  /// in this set, x dominates some m-critical position.
  const std::vector<Int>& values_below(const basic_position<Int>& x) {
    require_symmetric();
    check_dimension(x.size());
    return below_key(x.vector());
  }

  /// True iff R(x) = m and no z ≺ x has R(z) = m.
  bool is_critical(const basic_position<Int>& x, const Int& m) {
    if (remoteness(x) != m) return false;
    for (const key_type& y : down_neighbors(x.vector())) {
      const std::vector<Int>& d = below_key(y);
      if (std::binary_search(d.begin(), d.end(), m)) return false;
    }
    return true;
  }

  /// All m-critical positions with every coordinate <= bound, sorted.
  /// Exact for that box: the down-set of a boxed position stays in the box.
  std::vector<basic_position<Int>> critical(const Int& m, const Int& bound) {
    require_symmetric();
    std::vector<basic_position<Int>> out;
    for_each_sorted_tuple<Int>(spec_.n, bound, [&](const basic_position<Int>& x) {
      if (is_critical(x, m)) out.push_back(x);
    });
    return out;
  }

  /// m(x): the unique m such that x dominates an m-critical position but no
  /// (m+1)-critical one. `bound` is the caller's grid cap and must cover x.
  Int m_of(const basic_position<Int>& x, const Int& bound) {
    if (x.max() > bound) throw usage_error("m_of bound must be at least max(x)");
    const std::vector<Int>& d = values_below(x);
    std::optional<Int> found;
    for (const Int& v : d) {
      if (std::binary_search(d.begin(), d.end(), Int(v + 1))) continue;
      if (found) {
        throw invariant_violation("m(x) is not unique for " + format(x) + " in " + spec_.name());
      }
      found = v;
    }
    return *found;
  }

  std::size_t memo_entries() const noexcept {
    return remoteness_.size() + sg_.size() + below_.size() + b_.size();
  }

 private:
  using table = memo_table<key_type, Int, pile_vector_hash>;
  using set_table = memo_table<key_type, std::vector<Int>, pile_vector_hash>;

  void check_dimension(std::size_t size) const {
    if (size != spec_.n) {
      throw usage_error("position has " + std::to_string(size) + " piles, " + spec_.name() +
                        " needs " + std::to_string(spec_.n));
    }
  }
  void require_symmetric() const {
    if (spec_.is_hypergraph()) throw usage_error("dominance queries need a NIM(n,k) spec");
  }
  void require_keeps_one() const {
    if (!spec_.keeps_one()) throw usage_error("B(x) is defined for NIM(k+1,k)");
  }

  key_type key_of(const basic_position<Int>& x) const { return x.vector(); }
  key_type key_of(std::span<const Int> piles) const {
    key_type key(piles.begin(), piles.end());
    for (const Int& c : key) {
      if (c < 0) throw usage_error("pile sizes must be nonnegative");
    }
    if (!spec_.is_hypergraph()) std::sort(key.begin(), key.end());
    return key;
  }

  std::vector<key_type> children(const key_type& key) const {
    std::vector<key_type> out;
    if (spec_.is_hypergraph()) {
      for (const hyperedge& e : hypergraph_legal_moves<Int>(spec_, std::span<const Int>(key))) {
        out.push_back(apply_hyperedge<Int>(key, e));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    for (const basic_position<Int>& y : successors(spec_, basic_position<Int>(already_sorted, key))) {
      out.push_back(y.vector());
    }
    return out;
  }

  Int remoteness_key(const key_type& key) {
    return evaluate_dag(
        remoteness_, key, [this](const key_type& y) { return children(y); },
        [](const key_type&, const std::vector<Int>& next) {
          if (next.empty()) return Int(0);
          std::optional<Int> min_even;
          Int max_value = next.front();
          for (const Int& v : next) {
            if (is_even(v) && (!min_even || v < *min_even)) min_even = v;
            max_value = std::max(max_value, v);
          }
          return Int(1 + (min_even ? *min_even : max_value));
        });
  }

  Int sg_key(const key_type& key) {
    return evaluate_dag(
        sg_, key, [this](const key_type& y) { return children(y); },
        [](const key_type&, std::vector<Int> next) {
          std::sort(next.begin(), next.end());
          Int mex = 0;
          for (const Int& v : next) {
            if (v == mex) mex += 1;
            else if (mex < v) break;
          }
          return mex;
        });
  }

  const std::vector<Int>& below_key(const key_type& key) {
    return evaluate_dag(
        below_, key, [](const key_type& y) { return down_neighbors(y); },
        [this](const key_type& y, const std::vector<std::vector<Int>>& parts) {
          std::vector<Int> merged{remoteness_key(y)};
          for (const std::vector<Int>& p : parts) merged.insert(merged.end(), p.begin(), p.end());
          std::sort(merged.begin(), merged.end());
          merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
          return merged;
        });
  }

  game_spec spec_;
  table remoteness_;
  table sg_;
  set_table below_;
  table b_;
};

using oracle = basic_oracle<natural>;

// One-shot wrappers. Each builds a fresh oracle; reuse basic_oracle for batches.

template <pile_integer Int>
Int remoteness_oracle(const game_spec& spec, const basic_position<Int>& x) {
  return basic_oracle<Int>(spec).remoteness(x);
}

template <pile_integer Int>
Int sg_oracle(const game_spec& spec, const basic_position<Int>& x) {
  return basic_oracle<Int>(spec).sg(x);
}

template <pile_integer Int>
std::vector<basic_position<Int>> critical_oracle(const game_spec& spec, const Int& m, const Int& bound) {
  return basic_oracle<Int>(spec).critical(m, bound);
}

template <pile_integer Int>
Int m_of_oracle(const game_spec& spec, const basic_position<Int>& x, const Int& bound) {
  return basic_oracle<Int>(spec).m_of(x, bound);
}

}  // namespace slownim
