#pragma once
// Expression language shared by every section of a problem file:
// integers, + - * / ^, parentheses, field variables, `d` / `d1..dm` in
// operators and differential indeterminates `y`, `y'`, `y''`, `y_(2,1)`.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lindiff/errors.hpp"
#include "lindiff/variety.hpp"

namespace lindiff::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Position of the first character of an expression in the input (1-based).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Names visible to an expression.
struct Scope {
  DiffFieldConfig cfg;
  std::vector<std::string> field_names;
  std::vector<std::string> var_names;
};

/// True for `d` and `d<digits>`, which always denote derivations.
bool is_reserved_name(std::string_view name);

RatFun parse_field_element(std::string_view text, const Scope& scope, SourcePos pos = {});
OrePoly parse_operator(std::string_view text, const Scope& scope, SourcePos pos = {});
DiffPoly parse_diffpoly(std::string_view text, const Scope& scope, SourcePos pos = {});
/// A homogeneous linear expression in the indeterminates, read as the element
/// sum c_(theta,i) theta e_i of K[Delta]^n.
ModElement parse_linear_form(std::string_view text, const Scope& scope, SourcePos pos = {});

}  // namespace lindiff::cli
