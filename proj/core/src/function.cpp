#include "hel/function.hpp"

#include <json.hpp>

namespace hel {

std::string TupleFunction::to_json() const {
  nlohmann::json j;
  j["arity"] = arity_;
  j["group"] = nlohmann::json::parse(group_to_json(desc_));
  nlohmann::json items = nlohmann::json::array();
  for (const auto& [k, v] : items_sorted()) {
    nlohmann::json row;
    row["tuple"] = k;
    row["value"] = v;
    items.push_back(row);
  }
  j["values"] = items;
  return j.dump();
}

}  // namespace hel
