#include "verify.hpp"

#include <algorithm>
#include <chrono>

#include "rng.hpp"

namespace lawforge {

namespace {

constexpr uint64_t kPrescreenSeed = 0x6c617766u;  // fixed sample for the word search
constexpr uint32_t kPrescreenPairs = 64;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::string verify_mode_str(VerifyMode m) {
  switch (m) {
    case VerifyMode::Exhaustive: return "exhaustive";
    case VerifyMode::Sampled: return "sampled";
    case VerifyMode::GeneratingPairs: return "generating-pairs";
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Law: return "law";
    case Verdict::LawSampled: return "law-sampled";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::CoversGeneratingPairs: return "covers-generating-pairs";
  }
  return "?";
}

DenseGroup::DenseGroup(GroupPtr g, uint64_t group_cap) : g_(std::move(g)) {
  uint64_t order = g_->order();
  if (order > group_cap)
    fail(Errc::cap, g_->describe() + " has order " + std::to_string(order) +
                        "; the pair cap allows " + std::to_string(group_cap));
  elems_ = g_->elements(group_cap);
  n_ = static_cast<uint32_t>(elems_.size());
  index_.reserve(n_ * 2);
  for (uint32_t i = 0; i < n_; ++i) index_.emplace(elems_[i], i);
  id_ = index_.at(g_->identity());
  mul_.resize(size_t(n_) * n_);
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = 0; b < n_; ++b)
      mul_[size_t(a) * n_ + b] = index_.at(g_->mul(elems_[a], elems_[b]));
  inv_.resize(n_);
  for (uint32_t a = 0; a < n_; ++a) inv_[a] = index_.at(g_->inv(elems_[a]));
}

uint32_t DenseGroup::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) fail(Errc::invalid, "element not in " + g_->describe());
  return it->second;
}

uint32_t DenseGroup::pow(uint32_t a, int64_t e) const {
  uint32_t base = a;
  uint64_t n;
  if (e < 0) {
    base = inv_[a];
    n = static_cast<uint64_t>(-(e + 1)) + 1;
  } else {
    n = static_cast<uint64_t>(e);
  }
  uint32_t acc = id_;
  while (n) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return acc;
}

bool DenseGroup::generates(uint32_t a, uint32_t b) const {
  // BFS closure over the index tables
  std::vector<uint8_t> seen(n_, 0);
  std::vector<uint32_t> queue;
  queue.reserve(n_);
  seen[id_] = 1;
  queue.push_back(id_);
  uint32_t steps[4] = {a, inv_[a], b, inv_[b]};
  uint32_t found = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t cur = queue[qi];
    for (uint32_t s : steps) {
      uint32_t nxt = mul(cur, s);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        queue.push_back(nxt);
        ++found;
      }
    }
    if (found == n_) return true;
  }
  return found == n_;
}

const std::vector<std::pair<uint32_t, uint32_t>>& DenseGroup::generating_pairs() const {
  if (!gen_pairs_ready_) {
    for (uint32_t a = 0; a < n_; ++a)
      for (uint32_t b = 0; b < n_; ++b)
        if (generates(a, b)) gen_pairs_.emplace_back(a, b);
    gen_pairs_ready_ = true;
  }
  return gen_pairs_;
}

namespace {

// Per-distinct-(gen, exp) power tables so a word scan is one lookup per block.
struct BlockPlan {
  struct Step {
    bool on_x;
    uint32_t table;  // index into pows
  };
  std::vector<Step> steps;
  std::vector<std::vector<uint32_t>> pows;
};

BlockPlan plan_word(const DenseGroup& dg, const Word& w) {
  BlockPlan plan;
  std::unordered_map<int64_t, uint32_t> seen;  // exponent -> table id
  for (const Word::Block& b : w.blocks()) {
    auto it = seen.find(b.exp);
    uint32_t table;
    if (it == seen.end()) {
      table = static_cast<uint32_t>(plan.pows.size());
      seen.emplace(b.exp, table);
      std::vector<uint32_t> tab(dg.size());
      for (uint32_t i = 0; i < dg.size(); ++i) tab[i] = dg.pow(i, b.exp);
      plan.pows.push_back(std::move(tab));
    } else {
      table = it->second;
    }
    plan.steps.push_back({b.gen == Gen::x, table});
  }
  return plan;
}

}  // namespace

void DenseGroup::evaluate_pairs(const Word& w, const std::vector<uint32_t>& as,
                                const std::vector<uint32_t>& bs,
                                std::vector<uint32_t>& out) const {
  BlockPlan plan = plan_word(*this, w);
  size_t m = as.size();
  out.assign(m, id_);
  const uint32_t n = n_;
  for (const auto& step : plan.steps) {
    const uint32_t* pw = plan.pows[step.table].data();
    const uint32_t* base = step.on_x ? as.data() : bs.data();
    uint32_t* acc = out.data();
    const uint32_t* mt = mul_.data();
    for (size_t i = 0; i < m; ++i) acc[i] = mt[size_t(acc[i]) * n + pw[base[i]]];
  }
}

void DenseGroup::evaluate_all_pairs(const Word& w, std::vector<uint32_t>& out) const {
  BlockPlan plan = plan_word(*this, w);
  const uint32_t n = n_;
  out.assign(size_t(n) * n, id_);
  const uint32_t* mt = mul_.data();
  for (const auto& step : plan.steps) {
    const uint32_t* pw = plan.pows[step.table].data();
    uint32_t* acc = out.data();
    if (step.on_x) {
      for (uint32_t a = 0; a < n; ++a) {
        uint32_t t = pw[a];
        uint32_t* row = acc + size_t(a) * n;
        for (uint32_t b = 0; b < n; ++b) row[b] = mt[size_t(row[b]) * n + t];
      }
    } else {
      for (uint32_t a = 0; a < n; ++a) {
        uint32_t* row = acc + size_t(a) * n;
        for (uint32_t b = 0; b < n; ++b) row[b] = mt[size_t(row[b]) * n + pw[b]];
      }
    }
  }
}

uint32_t DenseGroup::evaluate_one(const Word& w, uint32_t a, uint32_t b) const {
  uint32_t acc = id_;
  for (const Word::Block& blk : w.blocks())
    acc = mul(acc, pow(blk.gen == Gen::x ? a : b, blk.exp));
  return acc;
}

namespace {

void fill_counterexample(LawCertificate& cert, const DenseGroup& dg, uint32_t a, uint32_t b,
                         const Word& w) {
  cert.verdict = Verdict::Counterexample;
  cert.counterexample = {a, b};
  cert.counterexample_g = dg.group().format(dg.element(a));
  cert.counterexample_h = dg.group().format(dg.element(b));
  uint32_t value = dg.evaluate_one(w, a, b);
  cert.counterexample_value = dg.group().format(dg.element(value));
}

}  // namespace

LawCertificate check_law(const Word& w, GroupPtr g, VerifyMode mode, const Caps& caps,
                         uint64_t n_samples, uint64_t seed) {
  if (w.trivial()) fail(Errc::invalid, "the identity of F2 is not a law candidate");
  if (mode == VerifyMode::GeneratingPairs) return check_on_generating_pairs(w, g, caps);
  double t0 = now_ms();
  LawCertificate cert;
  cert.word = w.str();
  cert.group = g->describe();
  cert.mode = mode;
  if (mode == VerifyMode::Exhaustive) {
    DenseGroup dg(g, caps.pair_group_cap);
    std::vector<uint32_t> out;
    dg.evaluate_all_pairs(w, out);
    uint32_t n = dg.size();
    cert.pairs_checked = uint64_t(n) * n;
    cert.verdict = Verdict::Law;
    for (size_t i = 0; i < out.size(); ++i) {
      if (out[i] != dg.id_index()) {
        fill_counterexample(cert, dg, static_cast<uint32_t>(i / n), static_cast<uint32_t>(i % n), w);
        break;
      }
    }
  } else {
    // Monte Carlo for groups beyond the pair cap: no |G|^2 table, just the
    // element list and generic evaluation.
    std::vector<Element> elems = g->elements(caps.enumeration_cap);
    if (n_samples == 0) n_samples = caps.sample_default;
    Rng rng(seed);
    Element id = g->identity();
    cert.pairs_checked = n_samples;
    cert.n_samples = n_samples;
    cert.seed = seed;
    cert.verdict = Verdict::LawSampled;
    for (uint64_t i = 0; i < n_samples; ++i) {
      uint32_t a = static_cast<uint32_t>(rng.below(elems.size()));
      uint32_t b = static_cast<uint32_t>(rng.below(elems.size()));
      Element value = evaluate(w, *g, elems[a], elems[b]);
      if (value != id) {
        cert.verdict = Verdict::Counterexample;
        cert.counterexample = {a, b};
        cert.counterexample_g = g->format(elems[a]);
        cert.counterexample_h = g->format(elems[b]);
        cert.counterexample_value = g->format(value);
        cert.pairs_checked = i + 1;
        break;
      }
    }
  }
  cert.wall_ms = now_ms() - t0;
  return cert;
}

LawCertificate check_on_generating_pairs(const Word& w, GroupPtr g, const Caps& caps) {
  if (w.trivial()) fail(Errc::invalid, "the identity of F2 is not a law candidate");
  double t0 = now_ms();
  LawCertificate cert;
  cert.word = w.str();
  cert.group = g->describe();
  cert.mode = VerifyMode::GeneratingPairs;
  DenseGroup dg(g, caps.pair_group_cap);
  const auto& pairs = dg.generating_pairs();
  std::vector<uint32_t> as(pairs.size()), bs(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    as[i] = pairs[i].first;
    bs[i] = pairs[i].second;
  }
  std::vector<uint32_t> out;
  dg.evaluate_pairs(w, as, bs, out);
  cert.pairs_checked = pairs.size();
  cert.verdict = Verdict::CoversGeneratingPairs;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] != dg.id_index()) {
      fill_counterexample(cert, dg, as[i], bs[i], w);
      break;
    }
  }
  cert.wall_ms = now_ms() - t0;
  return cert;
}

VanishingSet vanishing_set(const Word& w, GroupPtr g, const Caps& caps) {
  if (w.trivial()) fail(Errc::invalid, "the identity of F2 has no vanishing set");
  DenseGroup dg(g, caps.pair_group_cap);
  VanishingSet out;
  out.group_size = dg.size();
  // deliberately the slow generic path: an independent cross-check of the
  // table-driven scan used by check_law
  for (uint32_t a = 0; a < dg.size(); ++a)
    for (uint32_t b = 0; b < dg.size(); ++b)
      if (dg.evaluate_one(w, a, b) == dg.id_index()) {
        out.pairs.emplace_back(a, b);
        ++out.count;
      }
  return out;
}

ShortestLawResult shortest_law_search(GroupPtr g, uint32_t max_length, const Caps& caps) {
  DenseGroup dg(g, caps.pair_group_cap);
  uint64_t n_words = ReducedWordStream::count_up_to(max_length);
  uint64_t pair_count = uint64_t(dg.size()) * dg.size();
  if (n_words > caps.search_eval_budget / (pair_count ? pair_count : 1))
    fail(Errc::budget, "search would evaluate " + std::to_string(n_words) + " words over " +
                           std::to_string(pair_count) + " pairs");

  // almost every word dies within a few random pairs; screen there first
  Rng rng(kPrescreenSeed);
  std::vector<uint32_t> pre_a(kPrescreenPairs), pre_b(kPrescreenPairs);
  for (uint32_t i = 0; i < kPrescreenPairs; ++i) {
    pre_a[i] = static_cast<uint32_t>(rng.below(dg.size()));
    pre_b[i] = static_cast<uint32_t>(rng.below(dg.size()));
  }

  ShortestLawResult result;
  result.frontier = max_length;
  ReducedWordStream stream(max_length);
  std::vector<uint32_t> out, all;
  while (auto w = stream.next()) {
    ++result.words_tested;
    dg.evaluate_pairs(*w, pre_a, pre_b, out);
    bool alive = std::all_of(out.begin(), out.end(),
                             [&](uint32_t v) { return v == dg.id_index(); });
    if (!alive) continue;
    dg.evaluate_all_pairs(*w, all);
    if (std::all_of(all.begin(), all.end(), [&](uint32_t v) { return v == dg.id_index(); })) {
      result.found = *w;
      return result;
    }
  }
  return result;
}

}  // namespace lawforge
