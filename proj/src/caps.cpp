#include "caps.hpp"

#include <json.hpp>

#include "common.hpp"

namespace lawforge {

Caps Caps::from_json(const std::string& text) { return from_json(text, Caps()); }

Caps Caps::from_json(const std::string& text, const Caps& base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("bad caps JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::parse, "caps JSON must be an object");
  Caps caps = base;
  for (auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) fail(Errc::parse, "cap '" + key + "' must be a non-negative integer");
    uint64_t v = value.get<uint64_t>();
    if (key == "enumeration_cap")
      caps.enumeration_cap = v;
    else if (key == "closure_cap")
      caps.closure_cap = v;
    else if (key == "pair_group_cap")
      caps.pair_group_cap = v;
    else if (key == "word_length_cap")
      caps.word_length_cap = v;
    else if (key == "field_order_cap")
      caps.field_order_cap = v;
    else if (key == "sample_default")
      caps.sample_default = v;
    else if (key == "search_eval_budget")
      caps.search_eval_budget = v;
    else
      fail(Errc::parse, "unknown cap '" + key + "'");
  }
  return caps;
}

std::string Caps::to_json() const {
  nlohmann::json j;
  j["enumeration_cap"] = enumeration_cap;
  j["closure_cap"] = closure_cap;
  j["pair_group_cap"] = pair_group_cap;
  j["word_length_cap"] = word_length_cap;
  j["field_order_cap"] = field_order_cap;
  j["sample_default"] = sample_default;
  j["search_eval_budget"] = search_eval_budget;
  return j.dump();
}

}  // namespace lawforge
