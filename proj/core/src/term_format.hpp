#pragma once

#include <span>
#include <string>

#include "lindiff/scalars.hpp"

namespace lindiff::detail {

// Appends `c*atom` to a sum being printed. An empty atom prints the bare
// coefficient. Signs of single-term coefficients are pulled into the sum;
// sums are parenthesized wherever a product or later term follows.
inline void append_term(std::string& out, const RatFun& c, const std::string& atom,
                        std::span<const std::string> field_names) {
  std::string coeff = c.to_string(field_names);
  const bool is_sum = c.den().is_constant() && c.num().size() > 1;
  bool negative = false;
  if (!is_sum && coeff.front() == '-') {
    negative = true;
    coeff.erase(0, 1);
  }
  if (is_sum && (!atom.empty() || !out.empty())) coeff = "(" + coeff + ")";
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (atom.empty()) {
    out += coeff;
  } else if (coeff == "1") {
    out += atom;
  } else {
    out += coeff + "*" + atom;
  }
}

}  // namespace lindiff::detail
