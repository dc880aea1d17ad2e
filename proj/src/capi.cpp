#include "lawforge/lawforge.h"

#include <cstring>
#include <mutex>

#include <json.hpp>

#include "caps.hpp"
#include "common.hpp"
#include "freeword.hpp"
#include "groups.hpp"
#include "lawkit.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "spectra.hpp"
#include "verify.hpp"
#include "walks.hpp"

struct lf_word_s {
  lawforge::Word w;
};

struct lf_group_s {
  lawforge::GroupPtr g;
};

namespace {

using namespace lawforge;

thread_local std::string t_last_error;

std::mutex g_caps_mutex;
Caps g_caps;

Caps current_caps() {
  std::lock_guard<std::mutex> lock(g_caps_mutex);
  return g_caps;
}

lf_status status_of(Errc code) {
  switch (code) {
    case Errc::parse: return LF_ERR_PARSE;
    case Errc::invalid: return LF_ERR_INVALID;
    case Errc::cap: return LF_ERR_CAP;
    case Errc::budget: return LF_ERR_BUDGET;
    case Errc::unsupported: return LF_ERR_UNSUPPORTED;
    case Errc::internal: return LF_ERR_INTERNAL;
  }
  return LF_ERR_INTERNAL;
}

template <class Fn>
lf_status guarded(Fn&& fn) {
  try {
    fn();
    return LF_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return LF_ERR_PARSE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

VerifyMode parse_mode(const char* mode) {
  std::string m = mode ? mode : "exhaustive";
  if (m == "exhaustive") return VerifyMode::Exhaustive;
  if (m == "sampled") return VerifyMode::Sampled;
  if (m == "generating-pairs") return VerifyMode::GeneratingPairs;
  fail(Errc::parse, "unknown verification mode '" + m + "'");
}

std::vector<Word> parse_word_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(Errc::parse, std::string("expected a word array parameter '") + key + "'");
  std::vector<Word> out;
  for (const auto& item : j[key]) out.push_back(Word::parse(item.get<std::string>()));
  return out;
}

uint64_t need_u64(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    fail(Errc::parse, std::string("expected an unsigned parameter '") + key + "'");
  return j[key].get<uint64_t>();
}

}  // namespace

extern "C" {

const char* lf_version(void) { return "0.1.0"; }

const char* lf_last_error(void) { return t_last_error.c_str(); }

void lf_string_free(char* s) { std::free(s); }

lf_status lf_caps_set_json(const char* json) {
  return guarded([&] {
    Caps next = Caps::from_json(json ? json : "{}", current_caps());
    std::lock_guard<std::mutex> lock(g_caps_mutex);
    g_caps = next;
  });
}

lf_status lf_caps_get_json(char** out_json) {
  return guarded([&] { *out_json = dup_string(current_caps().to_json()); });
}

void lf_caps_reset(void) {
  std::lock_guard<std::mutex> lock(g_caps_mutex);
  g_caps = Caps();
}

lf_status lf_word_parse(const char* text, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{Word::parse(text ? text : "")}; });
}

lf_status lf_word_from_letters(const char* letters, lf_word** out) {
  return guarded([&] {
    std::vector<Letter> raw;
    for (const char* c = letters; c && *c; ++c) {
      switch (*c) {
        case 'x': raw.push_back({Gen::x, 1}); break;
        case 'X': raw.push_back({Gen::x, -1}); break;
        case 'y': raw.push_back({Gen::y, 1}); break;
        case 'Y': raw.push_back({Gen::y, -1}); break;
        case ' ': break;
        default: fail(Errc::parse, std::string("bad letter '") + *c + "'");
      }
    }
    *out = new lf_word_s{Word::from_letters(raw)};
  });
}

lf_status lf_word_format(const lf_word* w, char** out) {
  return guarded([&] { *out = dup_string(w->w.str()); });
}

lf_word* lf_word_clone(const lf_word* w) { return new lf_word_s{w->w}; }

void lf_word_free(lf_word* w) { delete w; }

uint64_t lf_word_length(const lf_word* w) { return static_cast<uint64_t>(w->w.length()); }

lf_status lf_word_concat(const lf_word* u, const lf_word* v, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{concat(u->w, v->w)}; });
}

lf_status lf_word_invert(const lf_word* w, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{w->w.inverse()}; });
}

lf_status lf_word_power(const lf_word* w, uint64_t e, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{pow_checked(w->w, e, current_caps().word_length_cap)}; });
}

lf_status lf_word_substitute(const lf_word* w, const lf_word* u, const lf_word* v, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{w->w.substitute(u->w, v->w)}; });
}

lf_status lf_word_cyclic_reduce(const lf_word* w, lf_word** core, lf_word** conjugator) {
  return guarded([&] {
    auto [c, conj] = w->w.cyclic_reduce();
    *core = new lf_word_s{std::move(c)};
    *conjugator = new lf_word_s{std::move(conj)};
  });
}

lf_status lf_word_cyclic_permutation(const lf_word* w, int64_t k, lf_word** out) {
  return guarded([&] { *out = new lf_word_s{w->w.cyclic_permutation(k)}; });
}

lf_status lf_group_parse(const char* descriptor, lf_group** out) {
  return guarded([&] { *out = new lf_group_s{parse_group(descriptor ? descriptor : "", current_caps())}; });
}

void lf_group_free(lf_group* g) { delete g; }

lf_status lf_group_order(const lf_group* g, uint64_t* out) {
  return guarded([&] { *out = g->g->order(); });
}

lf_status lf_group_describe(const lf_group* g, char** out) {
  return guarded([&] { *out = dup_string(g->g->describe()); });
}

lf_status lf_construct(const char* recipe, const char* params_json, char** out_json) {
  return guarded([&] {
    Caps caps = current_caps();
    nlohmann::json params = nlohmann::json::parse(params_json ? params_json : "{}");
    std::string name = recipe ? recipe : "";
    LawRecipe r;
    if (name == "psl2-law") {
      r = psl2_law(need_u64(params, "q"), caps);
    } else if (name == "solvable") {
      uint64_t d = need_u64(params, "d");
      if (d > 30) fail(Errc::cap, "derived length too large");
      Word w = solvable_law(static_cast<uint32_t>(d), caps.word_length_cap);
      r = make_recipe("solvable", {{"d", d}}, std::move(w), 1ull << (2 * d));
    } else if (name == "max-order") {
      uint64_t m = need_u64(params, "m");
      Word w = max_order_law(m, caps.word_length_cap);  // cap-guards m
      r = make_recipe("max-order", {{"m", m}}, std::move(w), 16 * m * m * m);
    } else if (name == "small-field") {
      if (!params.contains("family")) fail(Errc::parse, "small-field needs a 'family' parameter");
      LieTypeTag tag = parse_family(params["family"].get<std::string>());
      r = small_field_law(tag, need_u64(params, "n"), caps);
    } else if (name == "union" || name == "product") {
      std::vector<Word> ws = parse_word_array(params, "words");
      uint64_t max_len = 0;
      for (const Word& w : ws) max_len = std::max<uint64_t>(max_len, w.length());
      Word w = name == "union" ? union_combine(ws, caps.word_length_cap)
                               : product_law(ws, caps.word_length_cap);
      r = make_recipe(name, {{"m", ws.size()}}, std::move(w), 16 * ws.size() * ws.size() * max_len);
    } else if (name == "extension") {
      if (!params.contains("wn") || !params.contains("wq"))
        fail(Errc::parse, "extension needs 'wn' and 'wq' word parameters");
      Word wn = Word::parse(params["wn"].get<std::string>());
      Word wq = Word::parse(params["wq"].get<std::string>());
      uint64_t bound = static_cast<uint64_t>(wn.length()) * static_cast<uint64_t>(wq.length());
      r = make_recipe("extension", {}, extension_combine(wn, wq, caps.word_length_cap), bound);
    } else {
      fail(Errc::parse, "unknown recipe '" + name + "'");
    }
    *out_json = dup_string(to_json(r));
  });
}

lf_status lf_check_law(const lf_group* g, const lf_word* w, const char* mode, uint64_t n_samples,
                       uint64_t seed, int include_timing, char** out_json) {
  return guarded([&] {
    LawCertificate cert = check_law(w->w, g->g, parse_mode(mode), current_caps(), n_samples, seed);
    *out_json = dup_string(to_json(cert, include_timing != 0));
  });
}

lf_status lf_vanishing_set(const lf_group* g, const lf_word* w, char** out_json) {
  return guarded([&] {
    VanishingSet set = vanishing_set(w->w, g->g, current_caps());
    *out_json = dup_string(to_json(set, g->g->describe(), w->w.str()));
  });
}

lf_status lf_shortest_law(const lf_group* g, uint32_t max_length, char** out_json) {
  return guarded([&] {
    ShortestLawResult r = shortest_law_search(g->g, max_length, current_caps());
    *out_json = dup_string(to_json(r, g->g->describe(), max_length));
  });
}

lf_status lf_spectrum(const lf_group* g, char** out_json) {
  return guarded([&] { *out_json = dup_string(to_json(order_census(g->g, current_caps()))); });
}

lf_status lf_spectrum_csv(const lf_group* g, char** out_csv) {
  return guarded([&] { *out_csv = dup_string(to_csv(order_census(g->g, current_caps()))); });
}

lf_status lf_density(const lf_group* g, const char* family, uint64_t q, char** out_json) {
  return guarded([&] {
    LieTypeTag tag = parse_family(family ? family : "");
    *out_json = dup_string(to_json(power_divisor_density(g->g, tag, q, current_caps())));
  });
}

lf_status lf_tuple_count(uint64_t n, uint32_t d, char** out_json) {
  return guarded([&] { *out_json = dup_string(to_json(cyclic_tuple_count(n, d, current_caps()))); });
}

lf_status lf_walk_word(uint64_t length, uint64_t seed, char** out_word) {
  return guarded([&] {
    Rng rng(seed);
    *out_word = dup_string(sample_walk_word(length, rng).str());
  });
}

lf_status lf_diameter(const lf_group* g, const uint64_t* gens, size_t n_gens, uint64_t seed,
                      char** out_json) {
  return guarded([&] {
    Caps caps = current_caps();
    std::vector<Element> all = g->g->elements(caps.enumeration_cap);
    std::vector<Element> generators;
    std::vector<uint32_t> indices;
    if (n_gens == 0) {
      Rng rng(seed);
      for (uint32_t tries = 0; tries < 4096; ++tries) {
        uint64_t a = rng.below(all.size()), b = rng.below(all.size());
        if (is_generating_pair(*g->g, all[a], all[b], caps)) {
          generators = {all[a], all[b]};
          indices = {static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
          break;
        }
      }
      if (generators.empty()) fail(Errc::budget, "no generating pair found");
    } else {
      for (size_t i = 0; i < n_gens; ++i) {
        if (gens[i] >= all.size()) fail(Errc::invalid, "generator index out of range");
        generators.push_back(all[gens[i]]);
        indices.push_back(static_cast<uint32_t>(gens[i]));
      }
    }
    uint32_t diam = cayley_diameter(g->g, generators, caps);
    *out_json = dup_string(diameter_json(g->g->describe(), g->g->order(), diam, indices, seed));
  });
}

lf_status lf_mixing_check(const lf_group* g, const char* family, uint64_t q, uint64_t walk_length,
                          uint64_t trials, uint64_t seed, char** out_json) {
  return guarded([&] {
    LieTypeTag tag = parse_family(family ? family : "");
    MixingReport r = empirical_mixing_check(g->g, tag, q, walk_length, trials, seed, current_caps());
    *out_json = dup_string(to_json(r));
  });
}

lf_status lf_almost_law(const lf_group* g, const char* family, uint64_t q, int64_t m,
                        int64_t walk_length, uint64_t seed, uint32_t attempts, char** out_json) {
  return guarded([&] {
    LieTypeTag tag = parse_family(family ? family : "");
    AlmostLawResult r = almost_law_search(g->g, tag, q, m, walk_length, seed, attempts, current_caps());
    *out_json = dup_string(to_json(r));
  });
}

lf_status lf_coverage_report(const lf_group* g, const char* family, uint64_t q, uint32_t m,
                             uint64_t walk_length, uint64_t seed, char** out_json) {
  return guarded([&] {
    LieTypeTag tag = parse_family(family ? family : "");
    CoverageReport r = coverage_union_bound_report(g->g, tag, q, m, walk_length, seed, current_caps());
    *out_json = dup_string(to_json(r));
  });
}

}  // extern "C"
