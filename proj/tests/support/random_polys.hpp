#pragma once

#include <random>
#include <vector>

#include "gbx/polynomial.hpp"
#include "gbx/textio.hpp"

namespace gbx::testing {

struct PolySpec {
  std::size_t arity = 3;
  unsigned max_degree = 3;
  unsigned max_terms = 4;
  long coefficient_bound = 5;  // nonzero integers in [-bound, bound]
};

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t arity, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> pick(0, max_degree);
  unsigned budget = pick(rng);
  std::vector<Exponent> e(arity, 0);
  std::uniform_int_distribution<std::size_t> var(0, arity - 1);
  for (unsigned d = 0; d < budget; ++d) ++e[var(rng)];
  return Monomial(std::move(e));
}

inline Rational random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> pick(1, bound);
  std::bernoulli_distribution negative(0.5);
  long v = pick(rng);
  return Rational(negative(rng) ? -v : v);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> den(1, bound);
  return random_nonzero(rng, bound) / Rational(den(rng));
}

// Possibly zero when terms cancel; callers that need nonzero loop.
inline Polynomial random_polynomial(std::mt19937_64& rng, const PolySpec& spec) {
  std::uniform_int_distribution<unsigned> count(1, spec.max_terms);
  std::vector<Term> terms;
  unsigned n = count(rng);
  for (unsigned t = 0; t < n; ++t)
    terms.push_back({random_nonzero(rng, spec.coefficient_bound), random_monomial(rng, spec.arity, spec.max_degree)});
  return Polynomial(spec.arity, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const PolySpec& spec) {
  for (;;) {
    Polynomial p = random_polynomial(rng, spec);
    if (!p.is_zero()) return p;
  }
}

// 1..max_generators nonzero generators over (x, y, z).
inline GeneratorSet random_generator_set(std::mt19937_64& rng, std::size_t max_generators, const PolySpec& spec) {
  std::uniform_int_distribution<std::size_t> count(1, max_generators);
  std::vector<Polynomial> gens;
  std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(random_nonzero_polynomial(rng, spec));
  return make_generator_set(std::move(gens));
}

}  // namespace gbx::testing
