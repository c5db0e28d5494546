#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// A point where an identity failed: the substitution elements and the
/// nonzero residual found there.
struct Witness {
  std::vector<Word> at;
  std::string residual;
};

/// Outcome of checking one identity at one element (or one sample).
struct Report {
  std::string identity;
  Word element;
  std::string subject;
  bool pass = true;
  std::size_t substitutions = 0;
  std::vector<std::pair<Word, Word>> factorizations;
  std::vector<Witness> witnesses;

  nlohmann::ordered_json to_json() const;
};

}  // namespace flagcalc
