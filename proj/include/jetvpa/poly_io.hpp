#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jetvpa/polynomial.hpp"

namespace jetvpa {

// Diagnostic with a 1-based source position; thrown by all text parsers.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

// Grammar: variables `x{j}_{i}` (so x1_1 is the first base generator),
// integers and rationals `p/q`, operators + - * ^, parentheses;
// whitespace insignificant. Identifiers other than the x{j}_{i} form are
// resolved through `names` (name -> variable) when provided.
Polynomial parse_polynomial(std::string_view text,
                            const std::map<std::string, VarId>* names = nullptr);

// Offset the reported line number; used when parsing a polynomial
// embedded in a larger file.
Polynomial parse_polynomial_at(std::string_view text, int line_offset,
                               const std::map<std::string, VarId>* names = nullptr);

Scalar parse_scalar(std::string_view text);  // rational literal only

}  // namespace jetvpa
