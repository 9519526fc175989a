#pragma once

// Readers for program files and interpretation files.
//
// Program syntax (one rule per '.'):
//   rule     ::= head [":-" body] "." | ":-" body "."
//   head     ::= literal ("|" literal)*
//   body     ::= element ("," element)*
//   element  ::= literal | "not" literal | term cmp term
//   literal  ::= ["-"] ident ["(" arg ("," arg)* ")"]
//   arg      ::= ident | Variable | number
//   term     ::= product ("+" product)*      product ::= primary ("*" primary)*
//   primary  ::= ident | Variable | number | "(" term ")"
//   cmp      ::= "=" | "!=" | "<=" | "<" | ">=" | ">"
// '%' starts a comment that runs to the end of the line.
//
// Interpretation syntax: "{ l1, l2, ... }" or one ground literal per line
// (an optional trailing '.' or ',' is accepted).

#include <string_view>
#include <vector>

#include "aspdbg/core.hpp"

namespace aspdbg {

struct ParsedProgram {
  Program program;
  /// Non-fatal diagnostics (kind ArityClashWarning).
  std::vector<ParseError> warnings;
};

ParsedProgram parse_program_with_warnings(std::string_view text);
Program parse_program(std::string_view text);

Interpretation parse_interpretation(std::string_view text);

/// Parse a single literal (optionally followed by '.'), ground or not.
Literal parse_literal(std::string_view text);

}  // namespace aspdbg
