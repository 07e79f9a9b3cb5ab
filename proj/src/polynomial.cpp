#include "gbx/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

void require_same_arity(const Polynomial& p, const Polynomial& q, const char* op) {
  if (p.arity() != q.arity())
    throw UsageError(std::string(op) + ": arity mismatch (" + std::to_string(p.arity()) + " vs " +
                     std::to_string(q.arity()) + ")");
}

// Merges two canonical term lists, scaling the second by `factor`.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, const Rational& factor) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = cmp_lex(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].coefficient * factor, b[j].monomial});
      ++j;
    } else {
      Rational sum = a[i].coefficient + b[j].coefficient * factor;
      if (!sum.is_zero()) out.push_back({std::move(sum), a[i].monomial});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].coefficient * factor, b[j].monomial});
  return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t arity, std::vector<Term> terms) : arity_(arity) {
  for (const Term& t : terms)
    if (t.monomial.arity() != arity) throw UsageError("Polynomial: term arity mismatch");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return cmp_lex(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient.is_zero()) terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  if (c.is_zero()) return Polynomial(arity);
  return Polynomial(arity, {Term{c, Monomial::unit(arity)}}, Canonical{});
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  return Polynomial(arity, {Term{1, Monomial::variable(arity, index)}}, Canonical{});
}

Polynomial Polynomial::from_term(std::size_t arity, Term t) {
  if (t.monomial.arity() != arity) throw UsageError("Polynomial: term arity mismatch");
  if (t.coefficient.is_zero()) return Polynomial(arity);
  return Polynomial(arity, {std::move(t)}, Canonical{});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading_term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) throw ZeroPolynomialError("tail");
  return Polynomial(arity_, std::vector<Term>(terms_.begin() + 1, terms_.end()), Canonical{});
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(arity_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.coefficient * c, t.monomial});
  return Polynomial(arity_, std::move(out), Canonical{});
}

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.monomial.arity() != arity_) throw UsageError("times_term: arity mismatch");
  if (t.coefficient.is_zero()) return Polynomial(arity_);
  // Multiplying by a monomial preserves the order of the terms.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& s : terms_) out.push_back({s.coefficient * t.coefficient, s.monomial * t.monomial});
  return Polynomial(arity_, std::move(out), Canonical{});
}

Polynomial Polynomial::minus_term_times(const Term& t, const Polynomial& g) const {
  require_same_arity(*this, g, "minus_term_times");
  if (t.coefficient.is_zero() || g.is_zero()) return *this;
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const Term& s : g.terms_) shifted.push_back({s.coefficient * t.coefficient, s.monomial * t.monomial});
  return Polynomial(arity_, merge(terms_, shifted, Rational(-1)), Canonical{});
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q, "poly_add");
  return Polynomial(p.arity_, merge(p.terms_, q.terms_, Rational(1)), Polynomial::Canonical{});
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q, "poly_sub");
  return Polynomial(p.arity_, merge(p.terms_, q.terms_, Rational(-1)), Polynomial::Canonical{});
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q, "poly_mul");
  Polynomial acc(p.arity_);
  for (const Term& t : q.terms_) acc = acc + p.times_term(t);
  return acc;
}

const Term& leading_term(const Polynomial& p) { return p.leading_term(); }

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("make_monic");
  const Rational& lc = p.leading_coefficient();
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

bool is_linear(const Polynomial& p) {
  bool has_degree_one = false;
  for (const Term& t : p.terms()) {
    auto d = t.monomial.total_degree();
    if (d > 1) return false;
    has_degree_one |= d == 1;
  }
  return has_degree_one;
}

double evaluate_float(const Polynomial& p, const std::array<double, 3>& point) {
  if (p.arity() != 3) throw UsageError("evaluate_float: arity must be 3");
  double sum = 0.0;
  for (const Term& t : p.terms()) {
    double v = t.coefficient.to_double();
    for (std::size_t i = 0; i < 3; ++i) {
      auto e = t.monomial[i];
      if (e) v *= std::pow(point[i], static_cast<double>(e));
    }
    sum += v;
  }
  return sum;
}

}  // namespace gbx
