#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gbx {

using Exponent = std::uint32_t;

// Power product x_0^e_0 * ... * x_{n-1}^e_{n-1}; the arity n is fixed at construction.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  static Monomial unit(std::size_t arity) { return Monomial(arity); }
  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }
  std::uint64_t total_degree() const;
  bool is_unit() const;

  // a * b (componentwise sum).
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

// Pure lexicographic order with x_0 > x_1 > ... > x_{n-1}.
struct LexOrder {
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const;
};

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

// a / b when b divides a, std::nullopt otherwise.
std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& divisor, const Monomial& m);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

}  // namespace gbx
