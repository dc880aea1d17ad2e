#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "caps.hpp"
#include "freeword.hpp"
#include "groups.hpp"

namespace lawforge {

// Index-based view of a small group: elements materialized in enumeration
// order with flat multiplication/inverse tables, so |G|^2 word scans are
// table lookups. Built only when |G| is within the pair cap.
class DenseGroup {
 public:
  DenseGroup(GroupPtr g, uint64_t group_cap);

  uint32_t size() const { return n_; }
  uint32_t id_index() const { return id_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[size_t(a) * n_ + b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t pow(uint32_t a, int64_t e) const;
  const Element& element(uint32_t i) const { return elems_[i]; }
  uint32_t index_of(const Element& e) const;
  const Group& group() const { return *g_; }
  GroupPtr group_ptr() const { return g_; }

  // Ordered pairs (a, b) with <a, b> = G, cached after first use.
  const std::vector<std::pair<uint32_t, uint32_t>>& generating_pairs() const;
  bool generates(uint32_t a, uint32_t b) const;

  // Evaluates w at every listed pair; out[i] is the index of w(a_i, b_i).
  void evaluate_pairs(const Word& w, const std::vector<uint32_t>& as,
                      const std::vector<uint32_t>& bs, std::vector<uint32_t>& out) const;
  // Evaluates w on all of G x G (pair (a,b) at slot a*size()+b).
  void evaluate_all_pairs(const Word& w, std::vector<uint32_t>& out) const;
  uint32_t evaluate_one(const Word& w, uint32_t a, uint32_t b) const;

 private:
  GroupPtr g_;
  uint32_t n_ = 0;
  uint32_t id_ = 0;
  std::vector<Element> elems_;
  std::unordered_map<Element, uint32_t, ElementHash> index_;
  std::vector<uint32_t> mul_;
  std::vector<uint32_t> inv_;
  mutable std::vector<std::pair<uint32_t, uint32_t>> gen_pairs_;
  mutable bool gen_pairs_ready_ = false;
};

enum class VerifyMode : uint8_t { Exhaustive, Sampled, GeneratingPairs };
enum class Verdict : uint8_t { Law, LawSampled, Counterexample, CoversGeneratingPairs };

std::string verify_mode_str(VerifyMode m);
std::string verdict_str(Verdict v);

struct LawCertificate {
  std::string word;
  std::string group;
  VerifyMode mode = VerifyMode::Exhaustive;
  Verdict verdict = Verdict::Law;
  uint64_t pairs_checked = 0;
  uint64_t n_samples = 0;
  uint64_t seed = 0;
  std::optional<std::pair<uint32_t, uint32_t>> counterexample;  // element indices
  std::string counterexample_g, counterexample_h, counterexample_value;
  double wall_ms = 0;
};

LawCertificate check_law(const Word& w, GroupPtr g, VerifyMode mode, const Caps& caps,
                         uint64_t n_samples = 0, uint64_t seed = 0);
LawCertificate check_on_generating_pairs(const Word& w, GroupPtr g, const Caps& caps);

struct VanishingSet {
  uint32_t group_size = 0;
  uint64_t count = 0;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
};
VanishingSet vanishing_set(const Word& w, GroupPtr g, const Caps& caps);

struct ShortestLawResult {
  std::optional<Word> found;
  uint32_t frontier = 0;  // searched every length up to this
  uint64_t words_tested = 0;
};
ShortestLawResult shortest_law_search(GroupPtr g, uint32_t max_length, const Caps& caps);

}  // namespace lawforge
