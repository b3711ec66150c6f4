#pragma once

// Subcommands of the `slownim` tool. Kept in a header so tests can run them
// against string streams.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 resource limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "record.hpp"
#include "slownim/nim43.hpp"
#include "slownim/slownim.hpp"

namespace slownim::cli {

enum exit_code : int { ok = 0, mismatch = 1, usage = 2, resource = 3 };

/// "3,3,3", "3 3 3" or a mix. Throws usage_error.
inline position parse_position(const std::string& text) {
  std::vector<natural> raw;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) raw.push_back(parse_integer<natural>(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (raw.empty()) throw usage_error("empty position");
  return position(std::move(raw));
}

inline position parse_position(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& p : parts) joined += p + ' ';
  return parse_position(joined);
}

/// One position per line; blank lines and '#' comments are skipped.
inline std::vector<position> read_batch(std::istream& in) {
  std::vector<position> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    try {
      out.push_back(parse_position(line));
    } catch (const usage_error& e) {
      throw usage_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<position> read_batch_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  return read_batch(in);
}

// ---------------------------------------------------------------------------
// analyze

struct analyze_options {
  std::size_t k = 0;
  std::vector<std::string> position_text;
  std::string file;
  bool use_oracle = false;
  bool json = false;
  bool trace = false;
  std::size_t max_trace = 100'000;
};

inline output_record analyze_position(const position& x, const analyze_options& opt) {
  const std::size_t n = x.size();
  const std::size_t k = opt.k;
  if (k == 0 || k > n) {
    throw usage_error("k = " + std::to_string(k) + " does not fit a position with " + std::to_string(n) +
                      " piles");
  }
  if (!opt.use_oracle && n != k + 1) {
    throw usage_error("the fast solver needs k+1 piles; use --oracle for NIM(" + std::to_string(n) + "," +
                      std::to_string(k) + ")");
  }
  if (opt.trace && n != k + 1) throw usage_error("--trace follows the M-rule, which needs k+1 piles");

  output_record r{x, n, k};
  if (opt.use_oracle) {
    const game_spec spec = game_spec::nim(n, k);
    oracle o(spec);
    r.remoteness = o.remoteness(x);
    r.branch = "oracle";
    if (n == k + 1 && !is_terminal(spec, x)) {
      // Prefer the M-move; fall back to any move that lowers R by one.
      const std::size_t e = e_index(x);
      std::optional<std::size_t> pick;
      for (const move& m : legal_moves(spec, x)) {
        if (o.remoteness(apply_move(spec, x, m)) + 1 == r.remoteness) {
          if (!pick || m.keep_index() == e) pick = m.keep_index();
        }
      }
      if (pick) r.best_move_keep_index = *pick + 1;
    }
  } else {
    const analysis_result<natural> a = remoteness_fast(x, k);
    r.remoteness = a.remoteness;
    r.branch = std::string(branch_name(a.branch));
    if (a.best_keep) r.best_move_keep_index = *a.best_keep + 1;
  }
  r.status = is_even(r.remoteness) ? 'P' : 'N';
  if (opt.trace) {
    if (natural(opt.max_trace) < r.remoteness) {
      throw resource_limit_error("trace would have " + to_string(r.remoteness) + " steps (limit " +
                                 std::to_string(opt.max_trace) + ", see --max-trace)");
    }
    r.trace = m_count(x, opt.max_trace).trace;
  }
  return r;
}

inline void print_record(std::ostream& out, const output_record& r) {
  out << "position    " << format(r.x) << '\n';
  out << "game        NIM(" << r.n << ',' << r.k << ")\n";
  out << "remoteness  " << r.remoteness << '\n';
  out << "status      " << r.status << (r.status == 'P' ? " (player to move loses)" : " (player to move wins)")
      << '\n';
  if (r.best_move_keep_index) {
    const game_spec spec = game_spec::nim(r.n, r.k);
    const position next = apply_move(spec, r.x, move{{*r.best_move_keep_index - 1}});
    out << "best move   keep pile " << *r.best_move_keep_index << " -> " << format(next) << '\n';
  } else if (r.remoteness == 0) {
    out << "best move   none (terminal)\n";
  } else {
    out << "best move   n/a\n";
  }
  out << "branch      " << r.branch << '\n';
  if (r.trace) {
    out << "trace       ";
    for (std::size_t i = 0; i < r.trace->size(); ++i) out << (i ? " -> " : "") << format((*r.trace)[i]);
    out << '\n';
  }
}

inline int run_analyze(const analyze_options& opt, std::ostream& out) {
  std::vector<position> batch;
  if (!opt.file.empty()) {
    batch = read_batch_file(opt.file);
  } else {
    if (opt.position_text.empty()) throw usage_error("no position given");
    batch.push_back(parse_position(opt.position_text));
  }
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const output_record r = analyze_position(batch[i], opt);
    if (opt.json) {
      out << to_json(r).dump() << '\n';
    } else {
      if (i) out << '\n';
      print_record(out, r);
    }
  }
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// verify

struct verify_options {
  std::size_t k = 0;
  std::optional<std::size_t> max;
  std::string file;
  bool appendix = false;
  std::string conjecture;  // "M" or "LO-HI"
  std::optional<std::size_t> conjecture_n;
  bool skip_properties = false;
  std::optional<std::size_t> memo_limit;
};

inline bool report_check(std::ostream& out, const check_result& c) {
  if (c.ok()) {
    out << "PASS  " << c.name << "  [" << c.checked << " checks]\n";
    return true;
  }
  out << "FAIL  " << c.name << "  [" << c.failure_count << " of " << c.checked << " failed]\n";
  for (const std::string& f : c.failures) out << "        " << f << '\n';
  if (c.failures.size() < c.failure_count) {
    out << "        ... " << (c.failure_count - c.failures.size()) << " more\n";
  }
  return false;
}

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dash = text.find('-');
  auto num = [](const std::string& s) {
    return static_cast<std::size_t>(parse_integer<natural>(s));
  };
  if (dash == std::string::npos) {
    const std::size_t v = num(text);
    return {v, v};
  }
  const std::size_t lo = num(text.substr(0, dash));
  const std::size_t hi = num(text.substr(dash + 1));
  if (hi < lo) throw usage_error("empty range " + text);
  return {lo, hi};
}

inline int run_verify(const verify_options& opt, std::ostream& out) {
  if (opt.k == 0) throw usage_error("--k must be positive");
  if (!opt.max && opt.file.empty()) throw usage_error("give --max or --file");
  if (opt.appendix && opt.k != 3) throw usage_error("--appendix checks NIM(4,3); use --k 3");
  const std::size_t memo_limit = opt.memo_limit.value_or(memo_limit_from_environment());
  const game_spec spec = game_spec::nim(opt.k + 1, opt.k);
  oracle o(spec, memo_limit);
  bool all_ok = true;

  try {
    if (!opt.file.empty()) {
      std::vector<position> batch = read_batch_file(opt.file);
      std::sort(batch.begin(), batch.end());
      natural bound = 0;
      for (const position& x : batch) {
        if (x.size() != spec.n) {
          throw usage_error(format(x) + " does not have " + std::to_string(spec.n) + " piles");
        }
        bound = std::max(bound, x.max());
      }
      out << "verifying " << batch.size() << " positions from " << opt.file << " in " << spec.name() << '\n';
      all_ok &= report_check(out, triple_equivalence(o, batch, bound));
    }
    if (opt.max) {
      const natural bound(*opt.max);
      const std::vector<position> grid = sorted_grid(spec.n, bound);
      out << "verifying " << spec.name() << " on " << grid.size() << " positions with piles <= " << *opt.max
          << '\n';
      all_ok &= report_check(out, triple_equivalence(o, grid, bound));
      if (!opt.skip_properties) {
        for (const check_result& c : property_suite(o, bound)) all_ok &= report_check(out, c);
      }
      if (opt.appendix) {
        const nim43_report<natural> rep = nim43_consistency(bound);
        if (rep.mismatches.empty()) {
          out << "PASS  NIM(4,3) tables agree with the solver  [" << rep.checked << " positions]\n";
        } else {
          all_ok = false;
          out << "FAIL  NIM(4,3) tables disagree with the solver on " << rep.mismatches.size() << " of "
              << rep.checked << " positions\n";
          for (const auto& mm : rep.mismatches) {
            out << "        " << format(mm.x) << ": tables say " << status_char(mm.verdict.status) << " via "
                << mm.verdict.rule << ", solver R = " << mm.remoteness << " ("
                << (is_even(mm.remoteness) ? 'P' : 'N') << ")\n";
          }
        }
      }
      if (!opt.conjecture.empty()) {
        const auto [lo, hi] = parse_range(opt.conjecture);
        const std::size_t n = opt.conjecture_n.value_or(opt.k + 1);
        basic_oracle<natural> co(game_spec::nim(n, opt.k), memo_limit);
        for (std::size_t m = lo; m <= hi; ++m) {
          const critical_report<natural> rep = check_conjecture(co, natural(m), bound);
          out << "conjecture NIM(" << n << ',' << opt.k << ") m=" << m << ": " << rep.entries.size()
              << " critical positions, " << rep.violations.size() << " violations\n";
          for (const position& v : rep.violations) out << "        finding: " << format(v) << '\n';
        }
      }
    }
  } catch (const resource_limit_error& e) {
    out << "resource limit: " << e.what() << " (report above is partial)\n";
    return exit_code::resource;
  }
  return all_ok ? exit_code::ok : exit_code::mismatch;
}

// ---------------------------------------------------------------------------
// enumerate

struct enumerate_options {
  std::optional<std::size_t> k;
  std::size_t m = 0;
  std::vector<std::size_t> oracle_nk;  // {n, k}
  std::optional<std::size_t> max;
  std::size_t limit = default_enumeration_limit;
};

inline int run_enumerate(const enumerate_options& opt, std::ostream& out) {
  const natural m(opt.m);
  if (!opt.oracle_nk.empty()) {
    const std::size_t n = opt.oracle_nk.at(0);
    const std::size_t k = opt.oracle_nk.at(1);
    if (!opt.max) throw usage_error("--oracle needs --max (coordinate bound)");
    const game_spec spec = game_spec::nim(n, k);
    const auto found = critical_oracle(spec, m, natural(*opt.max));
    for (const position& x : found) {
      out << format(x);
      if (spec.keeps_one()) {
        const auto b = is_m_critical(x, k, m);
        out << ' ' << (b ? branch_label(*b) : "?");
      }
      out << '\n';
    }
    return exit_code::ok;
  }
  if (!opt.k) throw usage_error("give --k or --oracle N K");
  const critical_report<natural> rep = enumerate_critical(*opt.k, m, opt.limit);
  for (const auto& e : rep.entries) out << format(e.x) << ' ' << branch_label(*e.branch) << '\n';
  return exit_code::ok;
}

// ---------------------------------------------------------------------------
// play

struct play_options {
  std::size_t k = 0;
  std::vector<std::string> position_text;
  bool engine_first = false;
};

inline int run_play(const play_options& opt, std::istream& in, std::ostream& out) {
  position x = parse_position(opt.position_text);
  if (x.size() != opt.k + 1) throw usage_error("play needs k+1 piles");
  const game_spec spec = game_spec::nim(x.size(), opt.k);
  bool engine_to_move = opt.engine_first;

  auto announce = [&](const position& p) {
    const natural r = remoteness_fast(p, opt.k).remoteness;
    out << "position " << format(p) << "  remoteness " << r << (is_even(r) ? " (P)" : " (N)") << '\n';
  };

  out << "NIM(" << spec.n << ',' << spec.k << "): each move takes one stone from all piles but the one you keep.\n";
  announce(x);
  while (true) {
    if (is_terminal(spec, x)) {
      if (engine_to_move) {
        out << "engine cannot move and loses. You win.\n";
      } else {
        out << "you cannot move and lose. Engine wins.\n";
      }
      return exit_code::ok;
    }
    if (engine_to_move) {
      const move m = best_move(x, opt.k);
      x = apply_move(spec, x, m);
      out << "engine keeps pile " << m.keep_index() + 1 << '\n';
      announce(x);
      engine_to_move = false;
      continue;
    }
    out << "keep which pile (1-" << spec.n << ")? " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\ninput closed\n";
      return exit_code::ok;
    }
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line == "q" || line == "quit") return exit_code::ok;
    try {
      const auto choice = static_cast<std::size_t>(parse_integer<natural>(line));
      if (choice < 1 || choice > spec.n) throw usage_error("pile number out of range");
      x = apply_move(spec, x, move{{choice - 1}});
    } catch (const usage_error& e) {
      out << "rejected: " << e.what() << '\n';
      continue;
    }
    announce(x);
    engine_to_move = true;
  }
}

// ---------------------------------------------------------------------------
// bench

struct bench_options {
  std::size_t k = 2;
  unsigned bits = 60;
  std::size_t reps = 5;
  std::uint64_t seed = 20240901;
};

/// k+1 piles, each uniform on [0, 2^bits).
inline std::vector<natural> random_piles(std::size_t k, unsigned bits, std::mt19937_64& rng) {
  std::vector<natural> raw(k + 1);
  for (natural& v : raw) {
    v = 0;
    unsigned left = bits;
    while (left > 0) {
      const unsigned take = std::min(left, 64u);
      std::uint64_t chunk = rng();
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      v = (v << take) | natural(chunk);
      left -= take;
    }
  }
  return raw;
}

struct bench_sample {
  double seconds;
  natural remoteness;
};

/// Canonicalizes and solves one random position, timing both.
inline bench_sample bench_once(std::size_t k, unsigned bits, std::mt19937_64& rng) {
  std::vector<natural> raw = random_piles(k, bits, rng);
  const auto start = std::chrono::steady_clock::now();
  const position x(std::move(raw));
  natural r = remoteness_fast(x, k).remoteness;
  const auto stop = std::chrono::steady_clock::now();
  return {std::chrono::duration<double>(stop - start).count(), std::move(r)};
}

inline int run_bench(const bench_options& opt, std::ostream& out) {
  if (opt.k == 0) throw usage_error("--k must be positive");
  if (opt.reps == 0) throw usage_error("--reps must be positive");
  std::mt19937_64 rng(opt.seed);
  double total = 0;
  double worst = 0;
  std::size_t p_count = 0;
  for (std::size_t i = 0; i < opt.reps; ++i) {
    const bench_sample s = bench_once(opt.k, opt.bits, rng);
    total += s.seconds;
    worst = std::max(worst, s.seconds);
    if (is_even(s.remoteness)) ++p_count;
  }
  const double mean = total / static_cast<double>(opt.reps);
  out << "NIM(" << opt.k + 1 << ',' << opt.k << "), piles < 2^" << opt.bits << ", " << opt.reps
      << " positions, seed " << opt.seed << (opt.k == 1 ? " (trivial game: R = |x|)" : "") << '\n';
  out << "mean " << mean * 1e3 << " ms/position, max " << worst * 1e3 << " ms, throughput "
      << (mean > 0 ? 1.0 / mean : 0.0) << " positions/s, " << p_count << " P-positions\n";
  return exit_code::ok;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Slow NIM solver: remoteness, optimal play and critical positions for NIM(k+1,k)"};
  app.require_subcommand(1);

  analyze_options an;
  auto* analyze = app.add_subcommand("analyze", "Remoteness, P/N status and best move of a position");
  analyze->add_option("--k", an.k, "Piles reduced per move")->required();
  analyze->add_option("position", an.position_text, "Pile sizes, comma or space separated");
  analyze->add_option("--file", an.file, "Batch file, one position per line");
  analyze->add_flag("--oracle", an.use_oracle, "Use brute force (any NIM(n,k))");
  analyze->add_flag("--json", an.json, "Print JSON records");
  analyze->add_flag("--trace", an.trace, "Append the M-rule playout");
  analyze->add_option("--max-trace", an.max_trace, "Longest playout --trace will print");

  verify_options ve;
  auto* verify = app.add_subcommand("verify", "Cross-check all solvers and properties on an exhaustive grid");
  verify->add_option("--k", ve.k, "Piles reduced per move (game NIM(k+1,k))")->required();
  verify->add_option("--max", ve.max, "Largest pile size on the grid");
  verify->add_option("--file", ve.file, "Batch file of positions to verify");
  verify->add_flag("--appendix", ve.appendix, "Also check the NIM(4,3) closed-form tables (k = 3)");
  verify->add_option("--conjecture", ve.conjecture, "Check the critical-position bounds for m or LO-HI");
  verify->add_option("--n", ve.conjecture_n, "Pile count for --conjecture (default k+1)");
  verify->add_flag("--skip-properties", ve.skip_properties, "Only run the solver equivalence");
  verify->add_option("--memo-limit", ve.memo_limit, "Memo entries per table (default $SLOWNIM_MEMO_LIMIT)");

  enumerate_options en;
  auto* enumerate = app.add_subcommand("enumerate", "List m-critical positions");
  enumerate->add_option("--k", en.k, "Closed-form enumeration for NIM(k+1,k)");
  enumerate->add_option("--m", en.m, "Remoteness value m")->required();
  enumerate->add_option("--oracle", en.oracle_nk, "Brute force for NIM(N,K)")->expected(2);
  enumerate->add_option("--max", en.max, "Coordinate bound for --oracle");
  enumerate->add_option("--limit", en.limit, "Maximum number of positions");

  play_options pl;
  auto* play = app.add_subcommand("play", "Play against the M-rule engine");
  play->add_option("--k", pl.k, "Piles reduced per move")->required();
  play->add_option("position", pl.position_text, "Start position")->required();
  play->add_flag("--engine-first", pl.engine_first, "Engine makes the first move");

  bench_options be;
  auto* bench = app.add_subcommand("bench", "Time the polynomial solver on random positions");
  bench->add_option("--k", be.k, "Piles reduced per move");
  bench->add_option("--bits", be.bits, "Pile sizes are below 2^bits");
  bench->add_option("--reps", be.reps, "Number of random positions");
  bench->add_option("--seed", be.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (*analyze) return run_analyze(an, out);
    if (*verify) return run_verify(ve, out);
    if (*enumerate) return run_enumerate(en, out);
    if (*play) return run_play(pl, in, out);
    if (*bench) return run_bench(be, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_code::resource;
  }
  return exit_code::usage;
}

}  // namespace slownim::cli
