#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caps.hpp"
#include "freeword.hpp"
#include "groups.hpp"
#include "lawkit.hpp"
#include "rng.hpp"
#include "verify.hpp"

namespace lawforge {

// Lazy random walk on {x, x^-1, y, y^-1}: each step is the identity with
// probability 1/2, otherwise uniform over the four letters. The endpoint is
// stored freely reduced.
Word sample_walk_word(uint64_t length, Rng& rng);

// Exact eccentricity of the identity under S union S^-1 (BFS).
uint32_t cayley_diameter(GroupPtr g, const std::vector<Element>& gens, const Caps& caps);

struct MixingReport {
  std::string group;
  std::string family;
  uint64_t q = 0;
  std::vector<uint32_t> generators;  // element indices of the symmetrized set
  uint32_t diameter = 0;
  uint64_t walk_length = 0;
  uint64_t trials = 0;
  uint64_t hits = 0;
  uint64_t e_count = 0;
  uint64_t group_order = 0;
  uint64_t seed = 0;
  bool pass = false;
  // threshold is e_count / (2 * group_order); pass means the empirical rate
  // clears it minus three binomial standard errors
};

// walk_length = 0 picks ceil(2 |S| diam^2 ln(2|G|)) as in the mixing bound.
// The first form samples a generating pair from the seed and takes
// E = {g : o(g) divides b(X,q)}; the second takes both explicitly.
MixingReport empirical_mixing_check(GroupPtr g, const LieTypeTag& tag, uint64_t q,
                                    uint64_t walk_length, uint64_t trials, uint64_t seed,
                                    const Caps& caps);
MixingReport empirical_mixing_check(GroupPtr g, const std::vector<Element>& gens,
                                    const std::vector<Element>& e_set, uint64_t walk_length,
                                    uint64_t trials, uint64_t seed, const Caps& caps);

struct AlmostLawResult {
  std::string group;
  std::string family;
  uint64_t q = 0;
  bool success = false;
  uint32_t attempts_used = 0;
  uint32_t m = 0;
  uint64_t walk_length = 0;
  uint64_t b = 0;
  uint64_t seed = 0;
  std::vector<Word> words;
  std::optional<Word> combined;
  bool covers = false;  // verdict of the verify module on the combined word
  uint64_t generating_pairs = 0;
};

// m < 0 or walk_length < 0 pick the defaults ceil(4 ln|G|) and ceil(ln|G|^2).
AlmostLawResult almost_law_search(GroupPtr g, const LieTypeTag& tag, uint64_t q, int64_t m,
                                  int64_t walk_length, uint64_t seed, uint32_t attempts,
                                  const Caps& caps);

struct CoverageReport {
  std::string group;
  uint32_t m = 0;
  uint64_t walk_length = 0;
  uint64_t seed = 0;
  uint64_t generating_pairs = 0;
  double c2_hat = 0;       // empirical per-word hit probability on E_G
  double union_bound = 0;  // (1 - c2_hat)^m * |G|^2
};

CoverageReport coverage_union_bound_report(GroupPtr g, const LieTypeTag& tag, uint64_t q,
                                           uint32_t m, uint64_t walk_length, uint64_t seed,
                                           const Caps& caps);

}  // namespace lawforge
