#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gbx/monomial.hpp"
#include "gbx/rational.hpp"

namespace gbx {

struct Term {
  Rational coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical sparse polynomial over Q: terms strictly decreasing in lex order,
// no zero coefficients, zero polynomial = no terms. Equality is structural.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 3) : arity_(arity) {}
  // Accepts terms in any order; merges like monomials and drops zeros.
  Polynomial(std::size_t arity, std::vector<Term> terms);

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial from_term(std::size_t arity, Term t);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  bool is_constant() const;
  std::uint64_t total_degree() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  // p - LT(p); requires p != 0.
  Polynomial tail() const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Term& t) const;
  // *this - t * g, merged in one pass.
  Polynomial minus_term_times(const Term& t, const Polynomial& g) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  struct Canonical {};
  Polynomial(std::size_t arity, std::vector<Term> terms, Canonical)
      : arity_(arity), terms_(std::move(terms)) {}

  std::size_t arity_;
  std::vector<Term> terms_;
};

// Throws ZeroPolynomialError on p = 0.
const Term& leading_term(const Polynomial& p);
// p / LC(p). Throws ZeroPolynomialError on p = 0.
Polynomial make_monic(const Polynomial& p);
// Every monomial of degree <= 1 and at least one of degree exactly 1.
bool is_linear(const Polynomial& p);
// Requires arity 3.
double evaluate_float(const Polynomial& p, const std::array<double, 3>& point);

}  // namespace gbx
