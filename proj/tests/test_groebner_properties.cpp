#include <algorithm>
#include <random>

#include "doctest.h"
#include "gbx/errors.hpp"
#include "gbx/groebner.hpp"
#include "support/random_polys.hpp"
#include "support/reference_gb.hpp"

using namespace gbx;

namespace {

constexpr std::size_t kPairBudget = 10000;

std::vector<GeneratorSet> small_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  testing::PolySpec spec{3, 3, 4, 5};
  std::vector<GeneratorSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_generator_set(rng, 3, spec));
  return out;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!rem(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

bool all_reduce_to_zero(std::span<const Polynomial> fs, std::span<const Polynomial> basis) {
  return std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) { return rem(f, basis).is_zero(); });
}

bool is_reduced(const std::vector<Polynomial>& rgb) {
  for (std::size_t k = 0; k < rgb.size(); ++k)
    for (std::size_t o = 0; o < rgb.size(); ++o)
      if (o != k)
        for (const auto& t : rgb[k].terms())
          if (mono_divides(rgb[o].leading_monomial(), t.monomial)) return false;
  return true;
}

}  // namespace

TEST_CASE("random: Buchberger criterion, containment, reducedness (optimized mode)") {
  for (const auto& set : small_instances(31, 150)) {
    GbResult r = groebner_full(set, {Mode::Optimized});
    // Large unreduced bases make the all-pairs check slow; the acceptance suite covers them.
    if (r.gb.size() <= 25) CHECK(satisfies_buchberger_criterion(r.gb));
    CHECK(satisfies_buchberger_criterion(r.mgb));
    CHECK(satisfies_buchberger_criterion(r.rgb));
    CHECK(all_reduce_to_zero(set.generators, r.gb));
    CHECK(all_reduce_to_zero(set.generators, r.mgb));
    CHECK(all_reduce_to_zero(set.generators, r.rgb));
    CHECK(is_reduced(r.rgb));
    for (const auto& g : r.rgb) CHECK(g.leading_coefficient().is_one());
    CHECK(std::is_sorted(r.rgb.begin(), r.rgb.end(), [](const Polynomial& a, const Polynomial& b) {
      return cmp_lex(a.leading_monomial(), b.leading_monomial()) > 0;
    }));
  }
}

TEST_CASE("random: both modes agree with an independent reference") {
  std::size_t faithful_done = 0;
  const auto sets = small_instances(32, 150);
  for (const auto& set : sets) {
    auto expected = testing::reference_reduced_gb(set.generators);
    CHECK(groebner_full(set, {Mode::Optimized}).rgb == expected);
    try {
      GbResult f = groebner_full(set, {Mode::Faithful, kPairBudget});
      ++faithful_done;
      CHECK(f.rgb == expected);
      if (f.gb.size() <= 25) CHECK(satisfies_buchberger_criterion(f.gb));
    } catch (const Error&) {
    }
  }
  MESSAGE("faithful mode finished " << faithful_done << " of " << sets.size() << " within the pair budget");
  CHECK(faithful_done > 0);
}

TEST_CASE("random: RGB invariant under permutation and scaling; idempotent") {
  std::mt19937_64 rng(33);
  for (const auto& set : small_instances(34, 100)) {
    auto rgb = groebner_full(set, {Mode::Optimized}).rgb;
    auto gens = set.generators;
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) g = g.scaled(testing::random_nonzero_rational(rng, 9));
    CHECK(groebner_full(make_generator_set(gens), {Mode::Optimized}).rgb == rgb);
    CHECK(groebner_full(make_generator_set(rgb), {Mode::Optimized}).rgb == rgb);
  }
}

TEST_CASE("random: division reconstructs the dividend") {
  std::mt19937_64 rng(35);
  testing::PolySpec spec{3, 4, 6, 9};
  for (int n = 0; n < 200; ++n) {
    Polynomial f = testing::random_polynomial(rng, spec);
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) g.push_back(testing::random_nonzero_polynomial(rng, spec));
    DivisionResult d = divide(f, g);
    Polynomial sum = d.remainder;
    for (std::size_t k = 0; k < g.size(); ++k) sum = sum + d.quotients[k] * g[k];
    CHECK(sum == f);
    for (const auto& t : d.remainder.terms())
      for (const auto& gk : g) CHECK_FALSE(mono_divides(gk.leading_monomial(), t.monomial));
    CHECK(d.remainder == testing::reference_normal_form(f, g));
  }
}

TEST_CASE("faithful mode blow-up is bounded by the pair budget") {
  // A small instance on which the snapshot loop grows by hundreds of elements
  // per pass; optimized mode finishes it instantly.
  auto set = make_generator_set({parse_polynomial("4xy-3y^2z+2y-4z"), parse_polynomial("4x^2y-2xy+5z^3"),
                                 parse_polynomial("3xy+2x+3")});
  CHECK_THROWS_AS(buchberger(set.generators, nullptr, {Mode::Faithful, 2000}), Error);
  GbResult r = groebner_full(set, {Mode::Optimized});
  CHECK(r.rgb == testing::reference_reduced_gb(set.generators));
}
