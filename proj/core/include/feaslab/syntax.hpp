#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "feaslab/formula.hpp"
#include "feaslab/sequent.hpp"
#include "feaslab/signature.hpp"
#include "feaslab/term.hpp"

// Concrete text syntax.
//
//   term     := sum
//   sum      := product ['+' sum]                 (right associative)
//   product  := primary ['*' product]             (binds tighter than +)
//   primary  := literal | ident ['(' term {',' term} ')'] | '(' term ')'
//   formula  := disj ['->' formula]               (right associative)
//   disj     := conj ['\/' disj]
//   conj     := unary ['/\' conj]
//   unary    := '~' unary | ('forall' | 'exists') ident unary | atom | '(' formula ')'
//   atom     := pred '(' term {',' term} ')' | term '=' term
//   sequent  := [formula {',' formula}] '|-' [formula {',' formula}]
//
// Identifiers that are not signature symbols are variables.

namespace feaslab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Term parse_term(std::string_view text, const Signature& sig);
Formula parse_formula(std::string_view text, const Signature& sig);
Sequent parse_sequent(std::string_view text, const Signature& sig);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

/// Numeral n as the successor chain s^n(0).
Term successor_numeral(std::size_t n);

}  // namespace feaslab
