#pragma once

#include <string>

#include "achron/formula.hpp"
#include "achron/signature.hpp"

namespace achron {

// Concrete syntax:
//
//   formula := iff
//   iff     := imp ("<->" iff)?
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "<" IDENT ">" unary | "[" IDENT "]" unary | atom
//   atom    := "p" NAT | "true" | "false" | "(" formula ")"
//
// -> and <-> associate to the right, & and | to the left.  Modality names
// are checked against the signature; unknown names raise UnknownModality,
// any other lexical or grammatical problem raises Parse with the byte
// offset of the offending token.
Formula parse(const std::string& text, const Signature& sig);

// Minimal-parenthesis rendering.  Expanded abbreviations (false, &, ->, <->,
// [m]) are folded back into their sugared spelling; parse(print(f)) is
// structurally identical to f.
std::string print(const Formula& f);

}  // namespace achron
