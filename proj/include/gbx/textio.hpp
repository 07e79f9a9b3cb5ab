#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbx/polynomial.hpp"

namespace gbx {

// Variable names of the CLI ring, in lex order x > y > z.
inline constexpr std::size_t kArity = 3;
inline constexpr char kVariableNames[kArity] = {'x', 'y', 'z'};

// The ordered m-tuple of input generators; never empty, never holds zero.
struct GeneratorSet {
  std::vector<Polynomial> generators;
  std::vector<std::string> labels;  // same length; "f1", "f2", ... unless named in the file

  std::size_t size() const { return generators.size(); }
};

// Builds a GeneratorSet from polynomials (default labels). Throws EmptyInputError
// or ZeroGeneratorError.
GeneratorSet make_generator_set(std::vector<Polynomial> generators);

// Grammar (whitespace allowed between tokens):
//   polynomial  := ['+'|'-'] term (('+'|'-') term)*
//   term        := coefficient ['*'] [factors] | factors
//   factors     := factor (['*'] factor)*
//   factor      := ('x'|'y'|'z') ['^' positive-integer]
//   coefficient := integer ['/' positive-integer]
// A fraction immediately followed by a variable ("3/2y") means (3/2)*y.
// Throws ParseError with the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text);

// One polynomial per line; '#' comments and blank lines skipped. A line may be
// prefixed by "label:" to name the generator. ParseError carries the 1-based line.
GeneratorSet parse_generators(std::string_view text);

// Canonical text: decreasing lex order, integer or "a/b" coefficients, unit
// coefficients elided except on the constant term. Integer coefficients are
// juxtaposed ("6yz"); fraction coefficients use '*' ("-1/3*y*z").
std::string print_polynomial(const Polynomial& p);
std::string print_monomial(const Monomial& m);

}  // namespace gbx
