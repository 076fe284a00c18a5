#pragma once

#include <map>
#include <stdexcept>

#include "genpos/groebner.hpp"

namespace genpos {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct IdealFile {
    FieldSpec field;
    std::vector<std::string> vars;
    PolynomialIdeal ideal;
    std::map<std::string, std::string> metadata;  // label and similar extras
};

// Text format:
//   # comment
//   field: QQ            (or GF(<prime>))
//   vars: x1 x2 x3
//   I: x1^2, x1*x2 + x2*x3, x2^3
// The generator list may continue over further lines.  Generators must be
// homogeneous; the GF modulus must be a prime below 2^31.
IdealFile parse_ideal_file(const std::string& text);

// Convenience parser for a single polynomial in the given variables.
Polynomial parse_polynomial(FieldSpec field, const std::vector<std::string>& vars,
                            const std::string& text, int line = 0);
Term parse_term(int nvars, const std::vector<std::string>& vars, const std::string& text);

std::string term_str(const Term& t, const std::vector<std::string>& vars = {});

}  // namespace genpos
