#include "walks.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace lawforge {

Word sample_walk_word(uint64_t length, Rng& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (uint64_t i = 0; i < length; ++i) {
    if (rng.coin()) continue;  // lazy half
    uint64_t c = rng.below(4);
    letters.push_back(Letter{c < 2 ? Gen::x : Gen::y, static_cast<int8_t>(c & 1 ? -1 : 1)});
  }
  return Word::from_letters(letters);
}

uint32_t cayley_diameter(GroupPtr g, const std::vector<Element>& gens, const Caps& caps) {
  if (g->order() > caps.enumeration_cap)
    fail(Errc::cap, g->describe() + " exceeds the enumeration cap");
  std::vector<Element> step;
  for (const Element& e : gens) {
    if (std::find(step.begin(), step.end(), e) == step.end()) step.push_back(e);
    Element ei = g->inv(e);
    if (std::find(step.begin(), step.end(), ei) == step.end()) step.push_back(ei);
  }
  std::unordered_map<Element, uint32_t, ElementHash> dist;
  std::vector<Element> queue;
  queue.push_back(g->identity());
  dist.emplace(queue[0], 0);
  uint32_t radius = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Element cur = queue[qi];
    uint32_t d = dist.at(cur);
    for (const Element& s : step) {
      Element nxt = g->mul(cur, s);
      if (dist.emplace(nxt, d + 1).second) {
        radius = std::max(radius, d + 1);
        queue.push_back(std::move(nxt));
      }
    }
  }
  if (queue.size() != g->order())
    fail(Errc::invalid, "generating set does not generate " + g->describe());
  return radius;
}

namespace {

// Symmetrized generating pair sampled by index; returns distinct step indices.
std::vector<uint32_t> random_generating_steps(const DenseGroup& dg, Rng& rng) {
  for (uint32_t tries = 0; tries < 4096; ++tries) {
    uint32_t a = static_cast<uint32_t>(rng.below(dg.size()));
    uint32_t b = static_cast<uint32_t>(rng.below(dg.size()));
    if (!dg.generates(a, b)) continue;
    std::vector<uint32_t> steps = {a, dg.inv(a), b, dg.inv(b)};
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return steps;
  }
  fail(Errc::budget, "no generating pair found for " + dg.group().describe());
}

uint32_t index_diameter(const DenseGroup& dg, const std::vector<uint32_t>& steps) {
  std::vector<uint32_t> dist(dg.size(), UINT32_MAX);
  std::vector<uint32_t> queue;
  queue.reserve(dg.size());
  dist[dg.id_index()] = 0;
  queue.push_back(dg.id_index());
  uint32_t radius = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t cur = queue[qi];
    for (uint32_t s : steps) {
      uint32_t nxt = dg.mul(cur, s);
      if (dist[nxt] == UINT32_MAX) {
        dist[nxt] = dist[cur] + 1;
        radius = std::max(radius, dist[nxt]);
        queue.push_back(nxt);
      }
    }
  }
  return radius;
}

std::vector<uint8_t> torus_exponent_mask(const DenseGroup& dg, uint64_t b) {
  std::vector<uint8_t> in_e(dg.size(), 0);
  for (uint32_t i = 0; i < dg.size(); ++i)
    if (dg.pow(i, static_cast<int64_t>(b)) == dg.id_index()) in_e[i] = 1;
  return in_e;
}

MixingReport run_mixing(const DenseGroup& dg, MixingReport report, const std::vector<uint8_t>& in_e,
                        uint64_t walk_length, uint64_t trials, Rng walk_rng) {
  report.diameter = index_diameter(dg, report.generators);
  if (walk_length == 0) {
    double l = 2.0 * static_cast<double>(report.generators.size()) * report.diameter *
               report.diameter * std::log(2.0 * static_cast<double>(dg.size()));
    walk_length = static_cast<uint64_t>(std::ceil(l));
  }
  report.walk_length = walk_length;
  report.trials = trials;
  report.e_count = static_cast<uint64_t>(std::count(in_e.begin(), in_e.end(), uint8_t(1)));

  uint64_t hits = 0;
  size_t n_steps = report.generators.size();
  for (uint64_t t = 0; t < trials; ++t) {
    uint32_t cur = dg.id_index();
    for (uint64_t s = 0; s < walk_length; ++s) {
      if (walk_rng.coin()) continue;
      cur = dg.mul(cur, report.generators[walk_rng.below(n_steps)]);
    }
    hits += in_e[cur];
  }
  report.hits = hits;
  double threshold = static_cast<double>(report.e_count) / (2.0 * static_cast<double>(dg.size()));
  double rate = static_cast<double>(hits) / static_cast<double>(trials);
  double se = std::sqrt(threshold * (1.0 - threshold) / static_cast<double>(trials));
  report.pass = rate >= threshold - 3.0 * se;
  return report;
}

}  // namespace

MixingReport empirical_mixing_check(GroupPtr g, const LieTypeTag& tag, uint64_t q,
                                    uint64_t walk_length, uint64_t trials, uint64_t seed,
                                    const Caps& caps) {
  MixingReport report;
  report.group = g->describe();
  report.family = family_str(tag);
  report.q = q;
  report.seed = seed;
  report.group_order = g->order();

  DenseGroup dg(g, caps.pair_group_cap);
  Rng rng(seed);
  Rng pair_rng = rng.split(0);
  report.generators = random_generating_steps(dg, pair_rng);
  std::vector<uint8_t> in_e = torus_exponent_mask(dg, torus_exponent(tag, q));
  return run_mixing(dg, std::move(report), in_e, walk_length, trials, rng.split(1));
}

MixingReport empirical_mixing_check(GroupPtr g, const std::vector<Element>& gens,
                                    const std::vector<Element>& e_set, uint64_t walk_length,
                                    uint64_t trials, uint64_t seed, const Caps& caps) {
  MixingReport report;
  report.group = g->describe();
  report.seed = seed;
  report.group_order = g->order();

  DenseGroup dg(g, caps.pair_group_cap);
  std::vector<uint32_t> steps;
  for (const Element& e : gens) {
    uint32_t i = dg.index_of(e);
    steps.push_back(i);
    steps.push_back(dg.inv(i));
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  report.generators = std::move(steps);
  std::vector<uint8_t> in_e(dg.size(), 0);
  for (const Element& e : e_set) in_e[dg.index_of(e)] = 1;
  return run_mixing(dg, std::move(report), in_e, walk_length, trials, Rng(seed).split(1));
}

AlmostLawResult almost_law_search(GroupPtr g, const LieTypeTag& tag, uint64_t q, int64_t m_in,
                                  int64_t length_in, uint64_t seed, uint32_t attempts,
                                  const Caps& caps) {
  AlmostLawResult result;
  result.group = g->describe();
  result.family = family_str(tag);
  result.q = q;
  result.seed = seed;
  result.b = torus_exponent(tag, q);

  DenseGroup dg(g, caps.pair_group_cap);
  double log_order = std::log(static_cast<double>(dg.size()));
  uint32_t m = m_in >= 0 ? static_cast<uint32_t>(m_in)
                         : static_cast<uint32_t>(std::ceil(4.0 * log_order));
  uint64_t walk_length = length_in >= 0 ? static_cast<uint64_t>(length_in)
                                        : static_cast<uint64_t>(std::ceil(log_order * log_order));
  result.m = m;
  result.walk_length = walk_length;

  const auto& pairs = dg.generating_pairs();
  result.generating_pairs = pairs.size();
  if (m == 0) {
    result.success = pairs.empty();
    result.covers = pairs.empty();
    result.attempts_used = 0;
    return result;
  }
  std::vector<uint32_t> as(pairs.size()), bs(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    as[i] = pairs[i].first;
    bs[i] = pairs[i].second;
  }

  Rng base(seed);
  std::vector<uint32_t> values;
  for (uint32_t attempt = 0; attempt < attempts; ++attempt) {
    Rng rng = base.split(attempt);
    std::vector<Word> words;
    words.reserve(m);
    while (words.size() < m) {
      Word w = sample_walk_word(walk_length, rng);
      if (!w.trivial()) words.push_back(std::move(w));
    }
    std::vector<uint8_t> covered(pairs.size(), 0);
    uint64_t remaining = pairs.size();
    for (const Word& w : words) {
      if (remaining == 0) break;
      dg.evaluate_pairs(w, as, bs, values);
      for (size_t i = 0; i < values.size(); ++i) {
        if (covered[i]) continue;
        if (dg.pow(values[i], static_cast<int64_t>(result.b)) == dg.id_index()) {
          covered[i] = 1;
          --remaining;
        }
      }
    }
    if (remaining != 0) continue;

    result.attempts_used = attempt + 1;
    result.words = words;
    std::vector<Word> powered;
    powered.reserve(m);
    for (const Word& w : words)
      powered.push_back(pow_checked(w, result.b, caps.word_length_cap));
    result.combined = union_combine(powered, caps.word_length_cap);
    LawCertificate cert = check_on_generating_pairs(*result.combined, g, caps);
    result.covers = cert.verdict == Verdict::CoversGeneratingPairs;
    result.success = result.covers;
    return result;
  }
  result.attempts_used = attempts;
  return result;
}

CoverageReport coverage_union_bound_report(GroupPtr g, const LieTypeTag& tag, uint64_t q,
                                           uint32_t m, uint64_t walk_length, uint64_t seed,
                                           const Caps& caps) {
  CoverageReport report;
  report.group = g->describe();
  report.m = m;
  report.walk_length = walk_length;
  report.seed = seed;

  DenseGroup dg(g, caps.pair_group_cap);
  uint64_t b = torus_exponent(tag, q);
  const auto& pairs = dg.generating_pairs();
  report.generating_pairs = pairs.size();
  std::vector<uint32_t> as(pairs.size()), bs(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    as[i] = pairs[i].first;
    bs[i] = pairs[i].second;
  }

  Rng rng(seed);
  uint64_t hits = 0, total = 0;
  std::vector<uint32_t> values;
  uint32_t samples = m == 0 ? 16 : m;  // estimate needs at least one word
  for (uint32_t i = 0; i < samples; ++i) {
    Word w = sample_walk_word(walk_length, rng);
    if (w.trivial()) {
      --i;
      continue;
    }
    dg.evaluate_pairs(w, as, bs, values);
    for (uint32_t v : values)
      if (dg.pow(v, static_cast<int64_t>(b)) == dg.id_index()) ++hits;
    total += values.size();
  }
  report.c2_hat = total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0;
  double order = static_cast<double>(dg.size());
  report.union_bound = std::pow(1.0 - report.c2_hat, m) * order * order;
  return report;
}

}  // namespace lawforge
