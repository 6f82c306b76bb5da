#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commat/bigint.hpp"

namespace commat::detail {

// Joins (coefficient, monomial) pairs into "m1 - 2*m2 + m3" form. An empty
// monomial string stands for the unit monomial. Pairs arrive in print order
// with nonzero coefficients.
inline std::string join_terms(const std::vector<std::pair<BigInt, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c.sign() < 0;
    const BigInt mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == BigInt::one()) {
      out += mono;
    } else {
      out += mag.str();
      out += "*";
      out += mono;
    }
  }
  return out;
}

} // namespace commat::detail
