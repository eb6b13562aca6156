#pragma once

#include <string>

#include "kripkit/formula.hpp"

namespace kripkit {

// Grammar (whitespace insignificant, "->" right-associative):
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "<" label ">" unary | "[" label "]" unary | atom
//   atom    := "p" digits | "false" | "true" | "(" formula ")"
//   label   := identifier (alphanumeric / underscore)
// Sugar (~, &, |, true, [..]) desugars into the four-node core on the fly.

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// When an alphabet is supplied, modality labels outside it are rejected with
// their position.
Formula parse_formula(const std::string& text, const Alphabet* alphabet = nullptr);

// Prints the core AST with minimal parentheses; parse_formula(print(f))
// rebuilds f exactly.
std::string print_formula(const Formula& f);

}  // namespace kripkit
