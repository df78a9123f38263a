#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "colombeau/basic_space.hpp"
#include "colombeau/diffeomorphism.hpp"
#include "colombeau/distribution.hpp"
#include "colombeau/vector_field.hpp"

namespace colombeau {

/// Syntax or name-resolution error; line and column are 1-based positions in
/// the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Constructor grammar:
//   dist   := term (('+' | '-') term)*
//   term   := ['-'] [number '*'] atom
//   atom   := delta(x) | ddelta(x, m) | heaviside(x) | regular(name) | '(' dist ')'
//   rep    := iota(dist) | sigma(name) | zero | add(rep, rep) | sub(rep, rep)
//           | mul(rep, rep, ...) | scale(x, rep) | pow(rep, n) | lie(field, rep)
//           | act(diffeo, rep)
//   field  := ddx | euler | sinefield(b)
//   diffeo := identity | shift(a) | scale(k) | cubic | sine_perturb(b)
//           | compose(diffeo, diffeo)
Distribution parse_distribution(std::string_view text);
Representative parse_representative(std::string_view text);
VectorField parse_field(std::string_view text);
Diffeomorphism parse_diffeo(std::string_view text);

}  // namespace colombeau
