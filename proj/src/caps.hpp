#pragma once

#include <cstdint>
#include <string>

namespace lawforge {

// Runtime resource limits. Every expensive operation checks these up front
// and fails with Errc::cap / Errc::budget instead of grinding.
struct Caps {
  uint64_t enumeration_cap = 2'000'000;   // max |G| for full element streams
  uint64_t closure_cap = 2'000'000;       // max subgroup size closure may build
  uint64_t pair_group_cap = 1500;         // max |G| for |G|^2 pair scans
  uint64_t word_length_cap = 10'000'000;  // max letters in a constructed word
  uint64_t field_order_cap = 1u << 20;    // max q for field construction
  uint64_t sample_default = 100'000;      // sampled-mode pair count
  uint64_t search_eval_budget = 2'000'000'000;  // words * |G|^2 guard for law search

  // Parses a partial override, e.g. {"pair_group_cap": 2000}. Unknown keys
  // are rejected so typos do not silently leave a cap unset.
  static Caps from_json(const std::string& text);
  static Caps from_json(const std::string& text, const Caps& base);
  std::string to_json() const;
};

}  // namespace lawforge
