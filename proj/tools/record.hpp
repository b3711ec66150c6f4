#pragma once

// JSON form of an analysis, shared by `analyze --json` and the tests.
//
// {"position":[ints],"n":int,"k":int,"remoteness":int,"status":"P"|"N",
//  "best_move_keep_index":int|null,"branch":string,"trace":[[ints]]|null}
//
// Integers above 2^64 - 1 are written as decimal strings; the reader accepts
// both forms. Keep indices are 1-based.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slownim/slownim.hpp"

namespace slownim::cli {

struct output_record {
  position x;
  std::size_t n = 0;
  std::size_t k = 0;
  natural remoteness{};
  char status = 'P';
  std::optional<std::size_t> best_move_keep_index{};
  std::string branch{};
  std::optional<std::vector<position>> trace{};

  friend bool operator==(const output_record&, const output_record&) = default;
};

inline nlohmann::json natural_to_json(const natural& v) {
  if (v >= 0 && v <= natural(std::numeric_limits<std::uint64_t>::max())) {
    return nlohmann::json(static_cast<std::uint64_t>(v));
  }
  return nlohmann::json(to_string(v));
}

inline natural natural_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return natural(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0) throw usage_error("negative integer in JSON record");
    return natural(v);
  }
  if (j.is_string()) return parse_integer<natural>(j.get<std::string>());
  throw usage_error("expected an integer in JSON record");
}

inline nlohmann::json position_to_json(const position& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const natural& c : x) arr.push_back(natural_to_json(c));
  return arr;
}

inline position position_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw usage_error("expected a position array in JSON record");
  std::vector<natural> raw;
  for (const auto& e : j) raw.push_back(natural_from_json(e));
  return position(std::move(raw));
}

inline nlohmann::json to_json(const output_record& r) {
  nlohmann::json j;
  j["position"] = position_to_json(r.x);
  j["n"] = r.n;
  j["k"] = r.k;
  j["remoteness"] = natural_to_json(r.remoteness);
  j["status"] = std::string(1, r.status);
  j["best_move_keep_index"] =
      r.best_move_keep_index ? nlohmann::json(*r.best_move_keep_index) : nlohmann::json(nullptr);
  j["branch"] = r.branch;
  if (r.trace) {
    nlohmann::json t = nlohmann::json::array();
    for (const position& p : *r.trace) t.push_back(position_to_json(p));
    j["trace"] = std::move(t);
  } else {
    j["trace"] = nullptr;
  }
  return j;
}

inline output_record record_from_json(const nlohmann::json& j) {
  output_record r{position_from_json(j.at("position"))};
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  r.remoteness = natural_from_json(j.at("remoteness"));
  const std::string status = j.at("status").get<std::string>();
  if (status != "P" && status != "N") throw usage_error("status must be \"P\" or \"N\"");
  r.status = status[0];
  if (!j.at("best_move_keep_index").is_null()) {
    r.best_move_keep_index = j.at("best_move_keep_index").get<std::size_t>();
  }
  r.branch = j.at("branch").get<std::string>();
  if (!j.at("trace").is_null()) {
    std::vector<position> trace;
    for (const auto& p : j.at("trace")) trace.push_back(position_from_json(p));
    r.trace = std::move(trace);
  }
  return r;
}

}  // namespace slownim::cli
