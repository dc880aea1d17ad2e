#include "report.hpp"

#include <json.hpp>

namespace lawforge {

using nlohmann::json;

namespace {
std::string dump(const json& j) { return j.dump(2) + "\n"; }
}  // namespace

std::string to_json(const LawCertificate& cert, bool include_timing) {
  json j;
  j["word"] = cert.word;
  j["group"] = cert.group;
  j["mode"] = verify_mode_str(cert.mode);
  j["verdict"] = verdict_str(cert.verdict);
  j["pairs_checked"] = cert.pairs_checked;
  if (cert.mode == VerifyMode::Sampled) {
    j["n_samples"] = cert.n_samples;
    j["seed"] = cert.seed;
  }
  if (cert.counterexample) {
    j["counterexample"] = {{"i", cert.counterexample->first},
                           {"j", cert.counterexample->second},
                           {"g", cert.counterexample_g},
                           {"h", cert.counterexample_h},
                           {"value", cert.counterexample_value}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (include_timing) j["wall_time_ms"] = cert.wall_ms;
  return dump(j);
}

std::string to_json(const LawRecipe& recipe) {
  json j;
  j["constructor"] = recipe.constructor;
  j["params"] = recipe.params;
  j["word"] = recipe.word.str();
  j["length"] = recipe.word.length();
  j["claimed_bound"] = recipe.claimed_bound;
  return dump(j);
}

std::string to_json(const SpectrumReport& report) {
  json census = json::object();
  for (const auto& [o, c] : report.census) census[std::to_string(o)] = c;
  json j;
  j["group"] = report.group;
  j["order"] = report.order;
  j["census"] = census;
  j["max_order"] = report.max_order;
  return dump(j);
}

std::string to_csv(const SpectrumReport& report) {
  std::string out = "order,count\n";
  for (const auto& [o, c] : report.census)
    out += std::to_string(o) + "," + std::to_string(c) + "\n";
  return out;
}

std::string to_json(const DensityReport& report) {
  json j;
  j["group"] = report.group;
  j["family"] = report.family;
  j["q"] = report.q;
  j["b"] = report.b;
  j["e_count"] = report.e_count;
  j["group_order"] = report.order;
  j["density"] = fraction_str(report.e_count, report.order);
  j["density_reduced"] = fraction_reduced_str(report.e_count, report.order);
  return dump(j);
}

std::string to_json(const TupleCount& count) {
  json j;
  j["n"] = count.n;
  j["d"] = count.d;
  j["exact"] = count.exact;
  j["bound"] = count.bound;
  j["satisfied"] = count.bound < 0 || count.exact >= static_cast<uint64_t>(count.bound);
  return dump(j);
}

std::string to_json(const MixingReport& report) {
  json j;
  j["group"] = report.group;
  j["family"] = report.family;
  j["q"] = report.q;
  j["generators"] = report.generators;
  j["diameter"] = report.diameter;
  j["walk_length"] = report.walk_length;
  j["trials"] = report.trials;
  j["hits"] = report.hits;
  j["e_count"] = report.e_count;
  j["group_order"] = report.group_order;
  j["threshold"] = fraction_str(report.e_count, 2 * report.group_order);
  j["hit_rate"] = fraction_str(report.hits, report.trials);
  j["seed"] = report.seed;
  j["pass"] = report.pass;
  return dump(j);
}

std::string to_json(const AlmostLawResult& result) {
  json words = json::array();
  for (const Word& w : result.words) words.push_back(w.str());
  json j;
  j["group"] = result.group;
  j["family"] = result.family;
  j["q"] = result.q;
  j["success"] = result.success;
  j["attempts_used"] = result.attempts_used;
  j["m"] = result.m;
  j["walk_length"] = result.walk_length;
  j["b"] = result.b;
  j["seed"] = result.seed;
  j["words"] = words;
  j["combined_word"] = result.combined ? json(result.combined->str()) : json(nullptr);
  j["combined_length"] = result.combined ? json(result.combined->length()) : json(nullptr);
  j["covers_generating_pairs"] = result.covers;
  j["generating_pairs"] = result.generating_pairs;
  return dump(j);
}

std::string to_json(const ShortestLawResult& result, const std::string& group, uint32_t max_length) {
  json j;
  j["group"] = group;
  j["max_length"] = max_length;
  j["found"] = result.found ? json(result.found->str()) : json(nullptr);
  j["frontier"] = result.frontier;
  j["words_tested"] = result.words_tested;
  return dump(j);
}

std::string to_json(const VanishingSet& set, const std::string& group, const std::string& word) {
  json j;
  j["group"] = group;
  j["word"] = word;
  j["group_size"] = set.group_size;
  j["count"] = set.count;
  if (set.count <= 10000) {
    json pairs = json::array();
    for (const auto& [a, b] : set.pairs) pairs.push_back(json::array({a, b}));
    j["pairs"] = pairs;
  } else {
    j["pairs_omitted"] = true;
  }
  return dump(j);
}

std::string to_json(const CoverageReport& report) {
  json j;
  j["group"] = report.group;
  j["m"] = report.m;
  j["walk_length"] = report.walk_length;
  j["seed"] = report.seed;
  j["generating_pairs"] = report.generating_pairs;
  j["c2_hat"] = report.c2_hat;
  j["union_bound"] = report.union_bound;
  return dump(j);
}

std::string diameter_json(const std::string& group, uint64_t order, uint32_t diameter,
                          const std::vector<uint32_t>& generator_indices, uint64_t seed) {
  json j;
  j["group"] = group;
  j["order"] = order;
  j["diameter"] = diameter;
  j["generators"] = generator_indices;
  j["seed"] = seed;
  return dump(j);
}

std::string with_config(const std::string& config_json, const std::string& report_json) {
  json j;
  j["config"] = json::parse(config_json);
  j["report"] = json::parse(report_json);
  return dump(j);
}

}  // namespace lawforge
