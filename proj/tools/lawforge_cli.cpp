// lawforge command-line frontend. Uses only the public C API (lawforge.h);
// all group theory lives behind the shared library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lawforge/lawforge.h"

namespace {

using nlohmann::json;

// exit codes: 0 verdict-positive, 1 verdict-negative, 2 usage/parse, 3 cap/budget
constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

[[noreturn]] void die(lf_status status) {
  std::cerr << "lawforge: error: " << lf_last_error() << "\n";
  switch (status) {
    case LF_ERR_CAP:
    case LF_ERR_BUDGET:
      std::exit(kExitCap);
    case LF_ERR_PARSE:
    case LF_ERR_INVALID:
    case LF_ERR_UNSUPPORTED:
      std::exit(kExitUsage);
    default:
      std::exit(kExitUsage);
  }
}

void check(lf_status status) {
  if (status != LF_OK) die(status);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lf_string_free(s);
  return out;
}

struct WordHandle {
  lf_word* w = nullptr;
  ~WordHandle() { lf_word_free(w); }
};

struct GroupHandle {
  lf_group* g = nullptr;
  ~GroupHandle() { lf_group_free(g); }
};

struct Output {
  std::string path;     // empty = stdout
  bool timing = false;  // include wall-clock fields where supported

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "lawforge: cannot write " << path << "\n";
      std::exit(kExitUsage);
    }
    out << text;
  }
};

// Every report embeds the resolved configuration, so a run can be replayed
// from its own output.
std::string wrap_config(const std::string& command, const json& args, const std::string& report) {
  char* caps_raw = nullptr;
  check(lf_caps_get_json(&caps_raw));
  json config;
  config["command"] = command;
  config["args"] = args;
  config["caps"] = json::parse(take_string(caps_raw));
  json wrapped;
  wrapped["config"] = config;
  wrapped["report"] = json::parse(report);
  return wrapped.dump(2) + "\n";
}

std::vector<std::string> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "lawforge: cannot read " << path << "\n";
    std::exit(kExitUsage);
  }
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    words.push_back(line);
  }
  return words;
}

int verdict_exit(const json& report) {
  if (report.contains("verdict")) {
    std::string v = report["verdict"].get<std::string>();
    return (v == "counterexample") ? kExitNegative : kExitPositive;
  }
  for (const char* key : {"pass", "success", "satisfied", "covers_generating_pairs"})
    if (report.contains(key)) return report[key].get<bool>() ? kExitPositive : kExitNegative;
  if (report.contains("found")) return report["found"].is_null() ? kExitNegative : kExitPositive;
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* caps_env = std::getenv("LAWFORGE_CAPS")) {
    lf_status s = lf_caps_set_json(caps_env);
    if (s != LF_OK) {
      std::cerr << "lawforge: bad LAWFORGE_CAPS: " << lf_last_error() << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"law constructors and brute-force verifiers for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Output output;
  app.add_option("--out", output.path, "write the report to a file instead of stdout");
  app.add_flag("--timing", output.timing, "include wall-clock timing in certificates");

  // construct
  auto* construct = app.add_subcommand("construct", "build a law from a named recipe");
  std::string recipe;
  construct->add_option("recipe", recipe, "psl2-law | solvable | max-order | small-field | union | product | extension")
      ->required();
  uint64_t c_q = 0, c_d = 0, c_m = 0, c_n = 0;
  std::string c_family, c_words_file, c_wn, c_wq;
  construct->add_option("--q", c_q, "field order (psl2-law)");
  construct->add_option("--d", c_d, "derived length (solvable)");
  construct->add_option("--m", c_m, "order bound (max-order)");
  construct->add_option("--n", c_n, "field bound (small-field)");
  construct->add_option("--family", c_family, "family tag (small-field)");
  construct->add_option("--words-file", c_words_file, "word file, one word per line (union/product)");
  construct->add_option("--wn", c_wn, "kernel law (extension)");
  construct->add_option("--wq", c_wq, "quotient law (extension)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a word against a group");
  std::string v_group, v_word, v_word_file, v_mode = "exhaustive";
  uint64_t v_samples = 0, v_seed = 0;
  verify->add_option("--group", v_group, "group descriptor")->required();
  verify->add_option("--word", v_word, "word text");
  verify->add_option("--word-file", v_word_file, "word file, one word per line");
  verify->add_option("--mode", v_mode, "exhaustive | sampled | generating-pairs");
  verify->add_option("--samples", v_samples, "sampled mode: number of pairs");
  verify->add_option("--seed", v_seed, "sampled mode: seed");

  // vanishing-set
  auto* vanish = app.add_subcommand("vanishing-set", "compute Z(G, w) exactly");
  std::string z_group, z_word;
  vanish->add_option("--group", z_group)->required();
  vanish->add_option("--word", z_word)->required();

  // shortest-law
  auto* shortest = app.add_subcommand("shortest-law", "search all short words for a law");
  std::string s_group;
  uint32_t s_maxlen = 0;
  shortest->add_option("--group", s_group)->required();
  shortest->add_option("--max-len", s_maxlen, "largest word length to search")->required();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "element-order census");
  std::string sp_group, sp_format = "json";
  spectrum->add_option("--group", sp_group)->required();
  spectrum->add_option("--format", sp_format, "json | csv");

  // density
  auto* density = app.add_subcommand("density", "fraction of elements of order dividing b(X,q)");
  std::string d_group, d_family;
  uint64_t d_q = 0;
  density->add_option("--group", d_group)->required();
  density->add_option("--family", d_family)->required();
  density->add_option("--q", d_q)->required();

  // tuple-count
  auto* tuple = app.add_subcommand("tuple-count", "distinct-entry zero-sum tuples in (Z/n)^d");
  uint64_t t_n = 0;
  uint32_t t_d = 3;
  tuple->add_option("--n", t_n)->required();
  tuple->add_option("--d", t_d)->required();

  // diameter
  auto* diameter = app.add_subcommand("diameter", "Cayley-graph diameter by BFS");
  std::string dm_group;
  uint64_t dm_seed = 0;
  std::vector<uint64_t> dm_gens;
  diameter->add_option("--group", dm_group)->required();
  diameter->add_option("--seed", dm_seed, "seed for sampling a generating pair");
  diameter->add_option("--gens", dm_gens, "element indices in enumeration order")->delimiter(',');

  // mixing-check
  auto* mixing = app.add_subcommand("mixing-check", "empirical lazy-walk hit rate against E_G");
  std::string mx_group, mx_family;
  uint64_t mx_q = 0, mx_len = 0, mx_trials = 10000, mx_seed = 0;
  mixing->add_option("--group", mx_group)->required();
  mixing->add_option("--family", mx_family)->required();
  mixing->add_option("--q", mx_q)->required();
  mixing->add_option("--length", mx_len, "walk length; 0 applies the mixing-bound formula");
  mixing->add_option("--trials", mx_trials);
  mixing->add_option("--seed", mx_seed);

  // almost-law
  auto* almost = app.add_subcommand("almost-law", "random-walk search for a generating-pair law");
  std::string al_group, al_family;
  uint64_t al_q = 0, al_seed = 0;
  int64_t al_m = -1, al_len = -1;
  uint32_t al_attempts = 32;
  almost->add_option("--group", al_group)->required();
  almost->add_option("--family", al_family)->required();
  almost->add_option("--q", al_q)->required();
  almost->add_option("--m", al_m, "number of walk words; -1 = ceil(4 ln|G|)");
  almost->add_option("--length", al_len, "walk length; -1 = ceil(ln^2|G|)");
  almost->add_option("--seed", al_seed);
  almost->add_option("--attempts", al_attempts);

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) {
    json params;
    if (construct->count("--q")) params["q"] = c_q;
    if (construct->count("--d")) params["d"] = c_d;
    if (construct->count("--m")) params["m"] = c_m;
    if (construct->count("--n")) params["n"] = c_n;
    if (!c_family.empty()) params["family"] = c_family;
    if (!c_words_file.empty()) params["words"] = read_word_file(c_words_file);
    if (!c_wn.empty()) params["wn"] = c_wn;
    if (!c_wq.empty()) params["wq"] = c_wq;
    char* raw = nullptr;
    check(lf_construct(recipe.c_str(), params.dump().c_str(), &raw));
    std::string report = take_string(raw);
    json args{{"recipe", recipe}, {"params", params}};
    output.emit(wrap_config("construct", args, report));
    return kExitPositive;
  }

  if (verify->parsed()) {
    if (v_word.empty() == v_word_file.empty()) {
      std::cerr << "lawforge: verify needs exactly one of --word / --word-file\n";
      return kExitUsage;
    }
    std::vector<std::string> words =
        v_word.empty() ? read_word_file(v_word_file) : std::vector<std::string>{v_word};
    GroupHandle group;
    check(lf_group_parse(v_group.c_str(), &group.g));
    uint64_t order = 0;
    if (lf_group_order(group.g, &order) == LF_OK && v_mode == "exhaustive" && order > 500)
      std::cerr << "lawforge: scanning " << order << "^2 pairs on " << v_group << "\n";
    json reports = json::array();
    int exit_code = kExitPositive;
    for (const std::string& text : words) {
      WordHandle word;
      check(lf_word_parse(text.c_str(), &word.w));
      char* raw = nullptr;
      check(lf_check_law(group.g, word.w, v_mode.c_str(), v_samples, v_seed, output.timing, &raw));
      json report = json::parse(take_string(raw));
      exit_code = std::max(exit_code, verdict_exit(report));
      reports.push_back(std::move(report));
    }
    json args{{"group", v_group}, {"mode", v_mode}, {"samples", v_samples}, {"seed", v_seed}};
    output.emit(wrap_config("verify", args,
                            (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n"));
    return exit_code;
  }

  if (vanish->parsed()) {
    GroupHandle group;
    WordHandle word;
    check(lf_group_parse(z_group.c_str(), &group.g));
    check(lf_word_parse(z_word.c_str(), &word.w));
    char* raw = nullptr;
    check(lf_vanishing_set(group.g, word.w, &raw));
    output.emit(wrap_config("vanishing-set", json{{"group", z_group}, {"word", z_word}},
                            take_string(raw)));
    return kExitPositive;
  }

  if (shortest->parsed()) {
    GroupHandle group;
    check(lf_group_parse(s_group.c_str(), &group.g));
    char* raw = nullptr;
    check(lf_shortest_law(group.g, s_maxlen, &raw));
    json report = json::parse(take_string(raw));
    output.emit(wrap_config("shortest-law", json{{"group", s_group}, {"max_len", s_maxlen}},
                            report.dump(2) + "\n"));
    return verdict_exit(report);
  }

  if (spectrum->parsed()) {
    GroupHandle group;
    check(lf_group_parse(sp_group.c_str(), &group.g));
    char* raw = nullptr;
    if (sp_format == "csv") {
      check(lf_spectrum_csv(group.g, &raw));
      output.emit(take_string(raw));
    } else {
      check(lf_spectrum(group.g, &raw));
      output.emit(wrap_config("spectrum", json{{"group", sp_group}}, take_string(raw)));
    }
    return kExitPositive;
  }

  if (density->parsed()) {
    GroupHandle group;
    check(lf_group_parse(d_group.c_str(), &group.g));
    char* raw = nullptr;
    check(lf_density(group.g, d_family.c_str(), d_q, &raw));
    output.emit(wrap_config("density", json{{"group", d_group}, {"family", d_family}, {"q", d_q}},
                            take_string(raw)));
    return kExitPositive;
  }

  if (tuple->parsed()) {
    char* raw = nullptr;
    check(lf_tuple_count(t_n, t_d, &raw));
    json report = json::parse(take_string(raw));
    output.emit(wrap_config("tuple-count", json{{"n", t_n}, {"d", t_d}}, report.dump(2) + "\n"));
    return verdict_exit(report);
  }

  if (diameter->parsed()) {
    GroupHandle group;
    check(lf_group_parse(dm_group.c_str(), &group.g));
    char* raw = nullptr;
    check(lf_diameter(group.g, dm_gens.data(), dm_gens.size(), dm_seed, &raw));
    output.emit(wrap_config("diameter",
                            json{{"group", dm_group}, {"seed", dm_seed}, {"gens", dm_gens}},
                            take_string(raw)));
    return kExitPositive;
  }

  if (mixing->parsed()) {
    GroupHandle group;
    check(lf_group_parse(mx_group.c_str(), &group.g));
    char* raw = nullptr;
    check(lf_mixing_check(group.g, mx_family.c_str(), mx_q, mx_len, mx_trials, mx_seed, &raw));
    json report = json::parse(take_string(raw));
    json args{{"group", mx_group}, {"family", mx_family}, {"q", mx_q},
              {"length", mx_len},  {"trials", mx_trials}, {"seed", mx_seed}};
    output.emit(wrap_config("mixing-check", args, report.dump(2) + "\n"));
    return verdict_exit(report);
  }

  if (almost->parsed()) {
    GroupHandle group;
    check(lf_group_parse(al_group.c_str(), &group.g));
    char* raw = nullptr;
    check(lf_almost_law(group.g, al_family.c_str(), al_q, al_m, al_len, al_seed, al_attempts, &raw));
    json report = json::parse(take_string(raw));
    json args{{"group", al_group}, {"family", al_family}, {"q", al_q},      {"m", al_m},
              {"length", al_len},  {"seed", al_seed},     {"attempts", al_attempts}};
    output.emit(wrap_config("almost-law", args, report.dump(2) + "\n"));
    return verdict_exit(report);
  }

  return kExitUsage;
}
