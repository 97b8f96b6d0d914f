// Recursive-descent parser for the CLI expression grammar.
//
// Polynomial:  term (('+'|'-') term)*
// term:        ['-']* factor ('*' factor)*
// factor:      integer ['/' integer] | 'x'|'y'|'z'|'Delta' ['^' integer]
// Whitespace-insensitive; no parentheses, no precedence beyond unary minus,
// '*' and '^'. 'Delta' expands to x*z - y^2.
//
// Field:  dx = <expr> ; dy = <expr> ; dz = <expr>   (components in any order,
// each exactly once; ',' also accepted as separator) or the canonical tuple
// form (p1, p2, p3).
#pragma once

#include "solint/vfield.hpp"

#include <stdexcept>
#include <string>

namespace solint {

struct ParseError : std::runtime_error {
    std::size_t position;  // 0-based offset into the input text
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

Poly parsePoly(const std::string& text);
VField parseField(const std::string& text);

}  // namespace solint
