#pragma once

// Expression syntax for forms.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | '(' expr ')' | literal
//   literal := form | 'dali(' dyadic ')'
//   form    := '{' setpart '|' setpart '}'
//   setpart := 'phi' | expr (',' expr)*
//   dyadic  := integer | integer '/' denominator      denominator: 2^k as digits or "2^k"
//
// Whitespace is insignificant. 'φ', '×' and '−' are accepted for phi, '*' and '-'.
// Numerals are never accepted as form literals: "{3 | 5}" is a syntax error.

#include <cstddef>
#include <string_view>
#include <vector>

#include "surreal/dyadic.hpp"
#include "surreal/form_store.hpp"

namespace surreal {

struct Expr {
  enum class Kind { form, dali, negate, add, sub, mul };

  Kind kind = Kind::form;
  std::size_t position = 0;   // byte offset of the construct in the source
  Dyadic dyadic;              // dali
  std::vector<Expr> left;     // form
  std::vector<Expr> right;    // form
  std::vector<Expr> operands; // negate: one; add, sub, mul: two
};

// Throws SyntaxError (with byte position) or NonDyadicDenominator.
Expr parse(std::string_view text);

// Builds the form an expression denotes. Throws NotANumber when a literal's
// sets violate the numeric condition.
FormId elaborate(FormStore& store, const Expr& expr);

inline FormId evaluate(FormStore& store, std::string_view text) {
  return elaborate(store, parse(text));
}

}  // namespace surreal
