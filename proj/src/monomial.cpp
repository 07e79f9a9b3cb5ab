#include "gbx/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b, const char* op) {
  if (a.arity() != b.arity())
    throw UsageError(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()) + ")");
}

}  // namespace

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw UsageError("Monomial::variable: index out of range");
  Monomial m(arity);
  m.exponents_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b, "monomial product");
  Monomial r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r.exponents_[i] = a[i] + b[i];
  return r;
}

std::strong_ordering LexOrder::operator()(const Monomial& a, const Monomial& b) const {
  require_same_arity(a, b, "cmp_lex");
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) { return LexOrder{}(a, b); }

bool mono_divides(const Monomial& divisor, const Monomial& m) {
  require_same_arity(m, divisor, "mono_divide");
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (divisor[i] > m[i]) return false;
  return true;
}

std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b) {
  if (!mono_divides(b, a)) return std::nullopt;
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b, "mono_lcm");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b, "mono_coprime");
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace gbx
