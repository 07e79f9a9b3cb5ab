#include "gbx/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

bool contains(const std::vector<Polynomial>& basis, const Polynomial& p) {
  return std::find(basis.begin(), basis.end(), p) != basis.end();
}

std::vector<std::size_t> default_ids(std::size_t n, std::vector<std::size_t>* ids) {
  if (ids && ids->size() == n) return *ids;
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

void record(Trace* trace, Phase phase, TraceEventData data) {
  if (trace) trace->push_back({phase, std::move(data)});
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) throw EmptyDivisorSetError();
  const std::size_t arity = f.arity();
  for (const auto& g : divisors) {
    if (g.is_zero()) throw ZeroPolynomialError("rem");
    if (g.arity() != arity) throw UsageError("rem: arity mismatch");
  }

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder;  // emitted in decreasing order
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Polynomial& g = divisors[k];
      if (auto m = mono_divide(lt.monomial, g.leading_monomial())) {
        Term t{lt.coefficient / g.leading_coefficient(), std::move(*m)};
        p = p.minus_term_times(t, g);
        quotient_terms[k].push_back(std::move(t));
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.push_back(lt);
      p = p.tail();
    }
  }

  DivisionResult result;
  result.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) result.quotients.emplace_back(arity, std::move(q));
  result.remainder = Polynomial(arity, std::move(remainder));
  return result;
}

Polynomial rem(const Polynomial& f, std::span<const Polynomial> divisors) {
  return divide(f, divisors).remainder;
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("s_polynomial");
  if (p.arity() != q.arity()) throw UsageError("s_polynomial: arity mismatch");
  const Term& ltp = p.leading_term();
  const Term& ltq = q.leading_term();
  Monomial lcm = mono_lcm(ltp.monomial, ltq.monomial);
  Term up{ltp.coefficient.inverse(), *mono_divide(lcm, ltp.monomial)};
  Term uq{ltq.coefficient.inverse(), *mono_divide(lcm, ltq.monomial)};
  return p.times_term(up) - q.times_term(uq);
}

namespace {

std::vector<Polynomial> buchberger_faithful(std::vector<Polynomial> basis, Trace* trace,
                                            const BuchbergerOptions& options) {
  std::size_t pairs_examined = 0;
  for (std::size_t pass = 1;; ++pass) {
    const std::vector<Polynomial> snapshot = basis;
    std::size_t added = 0;
    std::size_t considered = 0;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (options.pair_budget && ++pairs_examined > options.pair_budget)
          throw Error("buchberger: pair budget of " + std::to_string(options.pair_budget) + " exceeded");
        ++considered;
        Polynomial s = s_polynomial(snapshot[i], snapshot[j]);
        record(trace, Phase::Buchberger, event::SPairConsidered{i, j, s});
        Polynomial h = rem(s, snapshot);
        record(trace, Phase::Buchberger, event::RemainderComputed{i, j, h});
        if (h.is_zero()) continue;
        Polynomial m = make_monic(h);
        if (contains(basis, m)) continue;
        basis.push_back(m);
        ++added;
        record(trace, Phase::Buchberger, event::GeneratorAdded{basis.size() - 1, std::move(m), Phase::Buchberger});
      }
    }
    if (considered > 0) record(trace, Phase::Buchberger, event::PassCompleted{pass, added});
    if (added == 0) break;
  }
  return basis;
}

// Pair queue with the normal selection strategy (smallest lcm by degree, then
// lex), remainders against the current basis, and both Buchberger criteria.
std::vector<Polynomial> buchberger_optimized(std::vector<Polynomial> basis, Trace* trace,
                                             const BuchbergerOptions& options) {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto before = [](const Pair& a, const Pair& b) {
    auto da = a.lcm.total_degree(), db = b.lcm.total_degree();
    if (da != db) return da < db;
    if (auto c = cmp_lex(a.lcm, b.lcm); c != 0) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
      pending_keys.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t pairs_examined = 0;
  std::size_t considered = 0;
  std::size_t added = 0;
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), before);
    Pair pair = std::move(*best);
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});

    const Polynomial& p = basis[pair.i];
    const Polynomial& q = basis[pair.j];
    if (mono_coprime(p.leading_monomial(), q.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || !mono_divides(basis[k].leading_monomial(), pair.lcm)) continue;
      chain = !pending_keys.count(std::minmax(pair.i, k)) && !pending_keys.count(std::minmax(pair.j, k));
    }
    if (chain) continue;

    if (options.pair_budget && ++pairs_examined > options.pair_budget)
      throw Error("buchberger: pair budget of " + std::to_string(options.pair_budget) + " exceeded");
    ++considered;
    Polynomial s = s_polynomial(p, q);
    record(trace, Phase::Buchberger, event::SPairConsidered{pair.i, pair.j, s});
    Polynomial h = rem(s, basis);
    record(trace, Phase::Buchberger, event::RemainderComputed{pair.i, pair.j, h});
    if (h.is_zero()) continue;
    Polynomial m = make_monic(h);
    if (contains(basis, m)) continue;
    basis.push_back(m);
    ++added;
    record(trace, Phase::Buchberger, event::GeneratorAdded{basis.size() - 1, std::move(m), Phase::Buchberger});
    add_pairs_for(basis.size() - 1);
  }
  if (considered > 0) record(trace, Phase::Buchberger, event::PassCompleted{1, added});
  return basis;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, Trace* trace,
                                   const BuchbergerOptions& options) {
  std::vector<Polynomial> basis;
  for (const auto& f : generators) {
    if (f.is_zero()) throw ZeroGeneratorError(basis.size() + 1);
    Polynomial m = make_monic(f);
    if (!contains(basis, m)) basis.push_back(std::move(m));
  }
  if (options.mode == Mode::Optimized) return buchberger_optimized(std::move(basis), trace, options);
  return buchberger_faithful(std::move(basis), trace, options);
}

std::vector<Polynomial> minimalize(std::span<const Polynomial> basis, Trace* trace, std::vector<std::size_t>* ids) {
  std::vector<Polynomial> g(basis.begin(), basis.end());
  std::vector<std::size_t> labels = default_ids(g.size(), ids);
  for (const auto& p : g)
    if (p.is_zero()) throw ZeroPolynomialError("minimalize");

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = 0; k < g.size() && !removed; ++k) {
      for (std::size_t other = 0; other < g.size(); ++other) {
        if (other == k || !mono_divides(g[other].leading_monomial(), g[k].leading_monomial())) continue;
        std::string reason = "LM " + print_monomial(g[k].leading_monomial()) + " divisible by LM " +
                             print_monomial(g[other].leading_monomial()) + " of g" + std::to_string(labels[other] + 1);
        record(trace, Phase::Minimalize, event::GeneratorRemoved{labels[k], labels[other], std::move(reason)});
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(k));
        removed = true;
        break;
      }
    }
  }
  if (ids) *ids = std::move(labels);
  return g;
}

std::optional<PartialStep> partial_reduce_step(const Polynomial& p, std::span<const Polynomial> others) {
  if (p.is_zero()) throw ZeroPolynomialError("partial_reduce_step");
  auto terms = p.terms();
  for (std::size_t t = 1; t < terms.size(); ++t) {
    for (std::size_t k = 0; k < others.size(); ++k) {
      const Polynomial& g = others[k];
      auto quotient = mono_divide(terms[t].monomial, g.leading_monomial());
      if (!quotient) continue;
      Term multiplier{terms[t].coefficient / g.leading_coefficient(), std::move(*quotient)};
      return PartialStep{p.minus_term_times(multiplier, g), terms[t].monomial, k};
    }
  }
  return std::nullopt;
}

std::vector<Polynomial> reduce_to_rgb(std::span<const Polynomial> mgb, Trace* trace, std::vector<std::size_t>* ids) {
  std::vector<Polynomial> g(mgb.begin(), mgb.end());
  std::vector<std::size_t> labels = default_ids(g.size(), ids);
  for (const auto& p : g)
    if (p.is_zero()) throw ZeroPolynomialError("reduce_to_rgb");

  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cmp_lex(g[a].leading_monomial(), g[b].leading_monomial()) > 0;
  });

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k : order) {
      for (;;) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> other_pos;
        for (std::size_t o = 0; o < g.size(); ++o) {
          if (o == k) continue;
          others.push_back(g[o]);
          other_pos.push_back(o);
        }
        auto step = partial_reduce_step(g[k], others);
        if (!step) break;
        changed = true;
        g[k] = std::move(step->result);
        record(trace, Phase::Reduce,
               event::PartialReduction{labels[k], std::move(step->reduced), labels[other_pos[step->divisor]], g[k]});
      }
    }
  }

  // Leading monomials never change during reduction, so `order` is already canonical.
  std::vector<Polynomial> out;
  std::vector<std::size_t> out_labels;
  for (std::size_t k : order) {
    out.push_back(std::move(g[k]));
    out_labels.push_back(labels[k]);
  }
  if (ids) *ids = std::move(out_labels);
  return out;
}

GbResult groebner_full(const GeneratorSet& input, const BuchbergerOptions& options) {
  GbResult result;
  result.input = input;
  result.gb = buchberger(input.generators, &result.trace, options);
  std::vector<std::size_t> ids(result.gb.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  result.mgb = minimalize(result.gb, &result.trace, &ids);
  result.rgb = reduce_to_rgb(result.mgb, &result.trace, &ids);
  return result;
}

}  // namespace gbx
