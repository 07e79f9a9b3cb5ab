#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gbx/polynomial.hpp"
#include "gbx/textio.hpp"
#include "gbx/trace.hpp"

namespace gbx {

// f = sum(quotients[k] * divisors[k]) + remainder.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division. The leading term of the running dividend is cancelled
// by the lowest-index divisor whose leading monomial divides it; otherwise it
// moves to the remainder. Throws EmptyDivisorSetError, ZeroPolynomialError for a
// zero divisor.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial rem(const Polynomial& f, std::span<const Polynomial> divisors);

// S(p, q) = (L / LT(p)) p - (L / LT(q)) q with L = lcm(LM(p), LM(q)).
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);

enum class Mode {
  // Every pair of the pass snapshot is recomputed on every pass.
  Faithful,
  // Each pair once, smallest lcm first, remainders against the current basis;
  // pairs skipped by the coprime and chain criteria. Same RGB as Faithful.
  Optimized,
};

struct BuchbergerOptions {
  Mode mode = Mode::Faithful;
  // Upper bound on S-pairs examined; 0 means unbounded. Exceeding it throws Error.
  std::size_t pair_budget = 0;
};

// Members are monic, in insertion order, starting with the (deduplicated) monic inputs.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, Trace* trace = nullptr,
                                   const BuchbergerOptions& options = {});

// `ids`, when given, labels the members of `basis` in trace events and is
// rewritten to label the members of the result.
std::vector<Polynomial> minimalize(std::span<const Polynomial> basis, Trace* trace = nullptr,
                                   std::vector<std::size_t>* ids = nullptr);

struct PartialStep {
  Polynomial result;        // h_p
  Monomial reduced;         // the eliminated monomial of p
  std::size_t divisor = 0;  // index into `others`
};

// One cancellation: the largest non-leading monomial of p divisible by some
// LM(g), g in others (lowest index wins). std::nullopt when nothing is reducible.
std::optional<PartialStep> partial_reduce_step(const Polynomial& p, std::span<const Polynomial> others);

// Repeats partial_reduce_step over the members (decreasing leading monomial,
// each to its fixpoint) until stable; result sorted by decreasing LM.
std::vector<Polynomial> reduce_to_rgb(std::span<const Polynomial> mgb, Trace* trace = nullptr,
                                      std::vector<std::size_t>* ids = nullptr);

struct GbResult {
  GeneratorSet input;
  std::vector<Polynomial> gb;
  std::vector<Polynomial> mgb;
  std::vector<Polynomial> rgb;
  Trace trace;
};

GbResult groebner_full(const GeneratorSet& input, const BuchbergerOptions& options = {});

}  // namespace gbx
