#pragma once

// Textbook reduced Groebner basis (pair queue, full interreduction), built only
// from ring arithmetic and leading terms. Used as an independent oracle for the
// engine, which follows a different loop, division routine and reduction order.

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "gbx/polynomial.hpp"

namespace gbx::testing {

inline Polynomial term_poly(std::size_t arity, const Rational& c, const Monomial& m) {
  return Polynomial(arity, {Term{c, m}});
}

// Full normal form: every term of the result is irreducible by the LMs of g.
inline Polynomial reference_normal_form(Polynomial f, const std::vector<Polynomial>& g) {
  const std::size_t n = f.arity();
  Polynomial r(n);
  while (!f.is_zero()) {
    Term lt = f.terms()[0];
    const Polynomial* hit = nullptr;
    for (const auto& d : g) {
      bool divides = true;
      for (std::size_t i = 0; i < n; ++i) divides = divides && d.terms()[0].monomial[i] <= lt.monomial[i];
      if (divides) {
        hit = &d;
        break;
      }
    }
    if (!hit) {
      Polynomial lead = term_poly(n, lt.coefficient, lt.monomial);
      r = r + lead;
      f = f - lead;
      continue;
    }
    const Term& dl = hit->terms()[0];
    std::vector<Exponent> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = lt.monomial[i] - dl.monomial[i];
    f = f - term_poly(n, lt.coefficient / dl.coefficient, Monomial(std::move(e))) * *hit;
  }
  return r;
}

inline Polynomial reference_spoly(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.arity();
  const Term& a = p.terms()[0];
  const Term& b = q.terms()[0];
  std::vector<Exponent> ea(n), eb(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent l = std::max(a.monomial[i], b.monomial[i]);
    ea[i] = l - a.monomial[i];
    eb[i] = l - b.monomial[i];
  }
  return term_poly(n, a.coefficient.inverse(), Monomial(std::move(ea))) * p -
         term_poly(n, b.coefficient.inverse(), Monomial(std::move(eb))) * q;
}

inline bool reference_divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline std::vector<Polynomial> reference_reduced_gb(const std::vector<Polynomial>& input) {
  std::vector<Polynomial> g;
  for (const auto& f : input)
    if (!f.is_zero()) g.push_back(f);
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial h = reference_normal_form(reference_spoly(g[i], g[j]), g);
    if (h.is_zero()) continue;
    g.push_back(h);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimal: drop members whose LM is divisible by another kept member's LM.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool drop = false;
    for (std::size_t o = 0; o < g.size() && !drop; ++o) {
      if (o == k) continue;
      const Monomial& mo = g[o].terms()[0].monomial;
      const Monomial& mk = g[k].terms()[0].monomial;
      // Equal LMs: keep the later one only.
      drop = reference_divides(mo, mk) && (mo != mk || o > k);
    }
    if (!drop) minimal.push_back(g[k]);
  }

  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(minimal[o]);
    Polynomial nf = reference_normal_form(minimal[k], others);
    nf = nf.scaled(nf.terms()[0].coefficient.inverse());
    reduced.push_back(nf);
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    const auto& ma = a.terms()[0].monomial;
    const auto& mb = b.terms()[0].monomial;
    for (std::size_t i = 0; i < ma.arity(); ++i)
      if (ma[i] != mb[i]) return ma[i] > mb[i];
    return false;
  });
  return reduced;
}

}  // namespace gbx::testing
