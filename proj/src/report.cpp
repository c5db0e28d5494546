#include "flagcalc/report.hpp"

namespace flagcalc {

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["element"] = element;
  out["identity"] = identity;
  if (!subject.empty()) out["subject"] = subject;
  out["pass"] = pass;
  out["substitutions"] = substitutions;
  if (!factorizations.empty()) {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& [u, v] : factorizations) fs.push_back(nlohmann::ordered_json::array({u, v}));
    out["factorizations"] = std::move(fs);
  }
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const Witness& w : witnesses) {
    ws.push_back({{"at", w.at}, {"residual", w.residual}});
  }
  out["witnesses"] = std::move(ws);
  return out;
}

}  // namespace flagcalc
