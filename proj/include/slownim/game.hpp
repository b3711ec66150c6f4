#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slownim/error.hpp"
#include "slownim/position.hpp"

namespace slownim {

using hyperedge = std::vector<std::size_t>;

/// NIM(n,k), or the hypergraph slow game when hyperedges are given.
///
/// Hyperedge indices are 0-based. For a hypergraph game, k is the size of
/// the smallest hyperedge and only matters for the 0 < k <= n invariant.
struct game_spec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::vector<hyperedge>> hyperedges;

  static game_spec nim(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw usage_error("NIM(n,k) needs 0 < k <= n");
    return game_spec{n, k, std::nullopt};
  }

  static game_spec hypergraph(std::size_t n, std::vector<hyperedge> edges) {
    if (n == 0) throw usage_error("hypergraph needs at least one vertex");
    std::size_t smallest = n;
    for (hyperedge& e : edges) {
      if (e.empty()) throw usage_error("hyperedges must be nonempty");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw usage_error("hyperedge lists a vertex twice");
      }
      if (e.back() >= n) throw usage_error("hyperedge vertex out of range");
      smallest = std::min(smallest, e.size());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return game_spec{n, smallest, std::move(edges)};
  }

  /// All k-subsets of {0..n-1}: the hypergraph form of NIM(n,k).
  static game_spec complete_hypergraph(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw usage_error("NIM(n,k) needs 0 < k <= n");
    std::vector<hyperedge> edges;
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      hyperedge e;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) e.push_back(i);
      }
      edges.push_back(std::move(e));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return hypergraph(n, std::move(edges));
  }

  bool is_hypergraph() const noexcept { return hyperedges.has_value(); }
  bool keeps_one() const noexcept { return !is_hypergraph() && n == k + 1; }

  std::string name() const {
    if (is_hypergraph()) return "hypergraph NIM on " + std::to_string(n) + " piles";
    return "NIM(" + std::to_string(n) + "," + std::to_string(k) + ")";
  }
};

/// A move in NIM(n,k), named by the n-k piles it leaves alone (sorted, 0-based).
/// For n = k+1 this is the single kept index.
struct move {
  std::vector<std::size_t> keep;

  std::size_t keep_index() const {
    if (keep.size() != 1) throw usage_error("move keeps more than one pile");
    return keep.front();
  }

  friend bool operator==(const move&, const move&) = default;
};

namespace detail {

inline void require_nim(const game_spec& spec) {
  if (spec.is_hypergraph()) {
    throw usage_error("operation needs a NIM(n,k) spec, use the hypergraph overloads");
  }
}

template <pile_integer Int>
void require_dimension(const game_spec& spec, const basic_position<Int>& x) {
  if (x.size() != spec.n) {
    throw usage_error("position has " + std::to_string(x.size()) + " piles, " + spec.name() +
                      " needs " + std::to_string(spec.n));
  }
}

}  // namespace detail

template <pile_integer Int>
std::size_t positive_count(const basic_position<Int>& x) {
  return static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [](const Int& c) { return c > 0; }));
}

/// True iff fewer than k piles are nonempty.
template <pile_integer Int>
bool is_terminal(const game_spec& spec, const basic_position<Int>& x) {
  detail::require_nim(spec);
  return positive_count(x) < spec.k;
}

/// Every keep-set whose complement consists of nonempty piles. Indices are
/// raw sorted-order indices; equal piles yield separate moves.
template <pile_integer Int>
std::vector<move> legal_moves(const game_spec& spec, const basic_position<Int>& x) {
  detail::require_nim(spec);
  detail::require_dimension(spec, x);
  std::vector<move> out;
  const std::size_t n = spec.n;
  const std::size_t keep_count = n - spec.k;
  if (keep_count == 1) {
    // Fast path for n = k+1: keep i is legal iff every other pile is positive.
    const std::size_t zeros = n - positive_count(x);
    for (std::size_t i = 0; i < n; ++i) {
      if (zeros == 0 || (zeros == 1 && x[i] == 0)) out.push_back(move{{i}});
    }
    return out;
  }
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(keep_count), true);
  do {
    move m;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) {
        m.keep.push_back(i);
      } else if (x[i] == 0) {
        ok = false;
      }
    }
    if (ok) out.push_back(std::move(m));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Applies `m` and re-sorts. The result has |x| - k stones.
template <pile_integer Int>
basic_position<Int> apply_move(const game_spec& spec, const basic_position<Int>& x, const move& m) {
  detail::require_nim(spec);
  detail::require_dimension(spec, x);
  if (m.keep.size() != spec.n - spec.k) throw usage_error("move keeps the wrong number of piles");
  std::vector<bool> kept(spec.n, false);
  for (std::size_t i : m.keep) {
    if (i >= spec.n || kept[i]) throw usage_error("move names an invalid pile index");
    kept[i] = true;
  }
  std::vector<Int> next = x.vector();
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (kept[i]) continue;
    if (next[i] == 0) throw usage_error("illegal move: reduces an empty pile");
    next[i] -= 1;
  }
  return basic_position<Int>(std::move(next));
}

/// Distinct successor positions (symmetric moves collapsed).
template <pile_integer Int>
std::vector<basic_position<Int>> successors(const game_spec& spec, const basic_position<Int>& x) {
  std::vector<basic_position<Int>> out;
  for (const move& m : legal_moves(spec, x)) out.push_back(apply_move(spec, x, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Hypergraph slow NIM. Positions here are raw pile vectors: moves are tied
// to vertex identities, so sorting would change the game.

template <pile_integer Int>
std::vector<hyperedge> hypergraph_legal_moves(const game_spec& spec, std::span<const Int> piles) {
  if (!spec.is_hypergraph()) throw usage_error("spec has no hyperedges");
  if (piles.size() != spec.n) throw usage_error("pile vector does not match the hypergraph size");
  std::vector<hyperedge> out;
  for (const hyperedge& e : *spec.hyperedges) {
    if (std::all_of(e.begin(), e.end(), [&](std::size_t i) { return piles[i] > 0; })) {
      out.push_back(e);
    }
  }
  return out;
}

template <pile_integer Int>
std::vector<hyperedge> hypergraph_legal_moves(const game_spec& spec, const basic_position<Int>& x) {
  return hypergraph_legal_moves<Int>(spec, x.coords());
}

template <pile_integer Int>
std::vector<Int> apply_hyperedge(std::span<const Int> piles, const hyperedge& e) {
  std::vector<Int> next(piles.begin(), piles.end());
  for (std::size_t i : e) {
    if (i >= next.size() || next[i] == 0) throw usage_error("illegal hyperedge move");
    next[i] -= 1;
  }
  return next;
}

}  // namespace slownim
