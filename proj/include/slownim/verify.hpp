#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slownim/critical.hpp"
#include "slownim/fast.hpp"
#include "slownim/game.hpp"
#include "slownim/grid.hpp"
#include "slownim/m_rule.hpp"
#include "slownim/oracle.hpp"
#include "slownim/position.hpp"

namespace slownim {

/// Outcome of one named check over a batch of positions. Keeps the first
/// few failure messages and counts the rest.
struct check_result {
  static constexpr std::size_t kept_failures = 20;

  std::string name;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures{};

  bool ok() const noexcept { return failure_count == 0; }

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (cond) return;
    ++failure_count;
    if (failures.size() < kept_failures) failures.push_back(what);
  }
};

/// R via the oracle, the fast algorithm, the M-rule playout and m(x), all
/// compared on each position. `bound` must cover every position.
template <pile_integer Int>
check_result triple_equivalence(basic_oracle<Int>& oracle, const std::vector<basic_position<Int>>& xs,
                                const Int& bound) {
  const std::size_t k = oracle.spec().k;
  check_result out{"oracle = fast = M-count = m(x)"};
  for (const basic_position<Int>& x : xs) {
    const Int brute = oracle.remoteness(x);
    const Int fast = remoteness_fast(x, k).remoteness;
    const Int played = m_count(x).length;
    const Int dominance = oracle.m_of(x, bound);
    out.expect(brute == fast && fast == played && played == dominance,
               format(x) + ": oracle " + to_string(brute) + ", fast " + to_string(fast) + ", M-count " +
                   to_string(played) + ", m(x) " + to_string(dominance));
  }
  return out;
}

/// The structural facts about B(x), exceptional positions, critical
/// positions and the M-rule, each checked exhaustively on the sorted grid
/// of NIM(k+1,k) with coordinates <= bound. B comes from the brute-force
/// oracle throughout.
template <pile_integer Int>
std::vector<check_result> property_suite(basic_oracle<Int>& oracle, const Int& bound) {
  const game_spec& spec = oracle.spec();
  if (!spec.keeps_one()) throw usage_error("property suite needs NIM(k+1,k)");
  const std::size_t k = spec.k;
  const std::vector<basic_position<Int>> grid = sorted_grid<Int>(spec.n, bound);

  check_result nonincrease{"Bnonincrease: B(x') <= B(x)"};
  check_result delta_odd{"DeltaGodd: B odd => B(x') >= B(x) - 2"};
  check_result to_even{"ToGeven: B(x') even => B(x') < B(x)"};
  check_result even_even{"GevenGeven: no move between B-even positions"};
  check_result bound12{"12bound: ordered basic z has z1 + z2 >= b"};
  check_result z1_fact{"z1-fact: z1 = 0 => z = (0,b,...,b)"};
  check_result terminal{"terminal: B(x) = 0 => x terminal"};
  check_result from_basic{"M-moveFromCritical: M-move keeps basic, b - 1"};
  check_result from_even{"FromGeven: B-even M-move lowers B by 1"};
  check_result from_odd{"FromGodd: B-odd non-exceptional M-move lowers B by 1"};
  check_result exc0{"exceptional0: B(x) < m(x), B(x) = m - 1"};
  check_result exc1{"exceptional1: x > z exceptional => B(x) > m(z)"};
  check_result exc2{"exceptional2: move into exceptional x' => B(x) = m(x') + 1"};
  check_result exc3{"exceptional3: moves from exceptional keep B = m - 1, odd"};
  check_result cor_i{"critical-even: even-m critical positions"};
  check_result cor_ii{"critical-odd: odd-m critical positions"};
  check_result e_vs_b{"E(x) <= B(x), equality iff B even"};
  check_result decrement{"M-move lowers remoteness by exactly 1"};
  check_result no_odd{"M-move never reaches an odd position"};
  check_result sg_parity{"R even <=> SG = 0"};
  check_result even_p{"even positions are P"};

  std::vector<basic_position<Int>> exceptional;
  for (const basic_position<Int>& x : grid) {
    if (is_exceptional(x, k)) exceptional.push_back(x);
  }

  for (const basic_position<Int>& x : grid) {
    const std::string fx = format(x);
    const Int bx = oracle.b(x);
    const Int rx = oracle.remoteness(x);
    const bool term = is_terminal(spec, x);
    const auto exc = is_exceptional(x, k);

    terminal.expect(bx != 0 || term, fx + " has B = 0 but is not terminal");
    sg_parity.expect(is_even(rx) == (oracle.sg(x) == 0), fx + ": R and SG disagree on P/N");
    if (x.all_even()) even_p.expect(is_even(rx), fx + " is even but R = " + to_string(rx));

    const even_support<Int> e = e_value(x, k);
    e_vs_b.expect(!(bx < e.value) && ((e.value == bx) == is_even(bx)),
                  fx + ": E = " + to_string(e.value) + ", B = " + to_string(bx));

    if (auto b = is_basic(x, k)) {
      bound12.expect(!(x[0] + x[1] < *b), fx + " is basic with z1 + z2 < b");
      if (x[0] == 0) {
        bool shape = true;
        for (std::size_t i = 1; i < x.size(); ++i) shape = shape && x[i] == *b;
        z1_fact.expect(shape, fx + " is basic with z1 = 0 but not (0,b,...,b)");
      }
      if (!term) {
        const basic_position<Int> next = m_move(x);
        const auto nb = is_basic(next, k);
        from_basic.expect(nb && *nb == *b - 1, fx + " -> " + format(next) + " is not basic with b - 1");
      }
    }

    for (const basic_position<Int>& y : successors(spec, x)) {
      const std::string edge = fx + " -> " + format(y);
      const Int by = oracle.b(y);
      nonincrease.expect(!(bx < by), edge);
      if (is_odd(bx)) delta_odd.expect(!(by < bx - 2), edge);
      if (is_even(by)) to_even.expect(by < bx, edge);
      even_even.expect(!(is_even(bx) && is_even(by)), edge);
      if (auto my = is_exceptional(y, k)) exc2.expect(bx == *my + 1, edge);
      if (exc) exc3.expect(bx == *exc - 1 && by == *exc - 1 && is_odd(bx), edge);
    }

    if (exc) {
      exc0.expect(bx < *exc && bx == *exc - 1, fx + ": B = " + to_string(bx) + ", m = " + to_string(*exc));
      for (const basic_position<Int>& z : exceptional) {
        if (strictly_dominates(x, z)) {
          exc1.expect(*is_exceptional(z, k) < bx, fx + " over " + format(z));
        }
      }
    }

    if (term) continue;
    const basic_position<Int> next = m_move(x);
    const Int bn = oracle.b(next);
    if (is_even(bx)) from_even.expect(bn == bx - 1, fx + " -> " + format(next));
    if (is_odd(bx) && !exc) from_odd.expect(bn == bx - 1, fx + " -> " + format(next));
    decrement.expect(oracle.remoteness(next) == rx - 1, fx + " -> " + format(next));
    no_odd.expect(!next.all_odd(), fx + " -> " + format(next));

    if (!oracle.is_critical(x, rx)) continue;
    const Int& m = rx;
    const auto branch = is_m_critical(x, k, m);
    if (is_even(m)) {
      cor_i.expect(branch && ((*branch == critical_branch::A && x.all_even()) ||
                              (*branch == critical_branch::B && x.all_odd())),
                   fx + " is " + to_string(m) + "-critical but neither even-A nor odd-B");
      if (branch == critical_branch::A) {
        bool small_even = false;
        for (const Int& c : x) small_even = small_even || (is_even(c) && c < m);
        cor_i.expect(small_even, fx + ": no even coordinate below m");
        for (const move& mv : legal_moves(spec, x)) {
          bool reduces_max = true;
          for (std::size_t i : mv.keep) reduces_max = reduces_max && x[i] != m;
          if (!reduces_max) continue;
          const basic_position<Int> y = apply_move(spec, x, mv);
          cor_i.expect(oracle.is_critical(y, Int(m - 1)) && is_m_critical(y, k, Int(m - 1)),
                       fx + " -> " + format(y) + " is not (m-1)-critical");
        }
        cor_i.expect(oracle.is_critical(next, Int(m - 1)), fx + ": M-move misses (m-1)-critical");
      }
    } else {
      std::size_t hits = 0;
      std::optional<std::size_t> hit_keep;
      for (const move& mv : legal_moves(spec, x)) {
        const basic_position<Int> y = apply_move(spec, x, mv);
        if (oracle.is_critical(y, Int(m - 1))) {
          ++hits;
          hit_keep = mv.keep_index();
        }
      }
      cor_ii.expect(hits == 1 && hit_keep == e_index(x) && x[*hit_keep] % 2 == 0,
                    fx + ": " + std::to_string(hits) + " moves reach an (m-1)-critical position");
    }
  }

  return {nonincrease, delta_odd, to_even, even_even, bound12,   z1_fact,   terminal,
          from_basic,  from_even, from_odd, exc0,      exc1,      exc2,      exc3,
          cor_i,       cor_ii,    e_vs_b,   decrement, no_odd,    sg_parity, even_p};
}

}  // namespace slownim
