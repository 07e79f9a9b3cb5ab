#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbx/groebner.hpp"

namespace gbx {

// A*x + B*y + C*z + D with (A, B, C) != 0.
struct LinearForm {
  Rational a, b, c, d;

  // Throws DegenerateFormError when (A, B, C) = 0; UsageError if p is not of degree <= 1 in arity 3.
  static LinearForm from_polynomial(const Polynomial& p);
  Polynomial to_polynomial() const;

  // Scaled so the first nonzero of (A, B, C) is 1.
  LinearForm monic() const;
  // Smallest integer multiple with a positive first nonzero coefficient ("2x+3y-z").
  LinearForm integer_scaled() const;
  bool is_scalar_multiple_of(const LinearForm& other) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class Provenance { FoundInBuchberger, FoundInReduction, FoundInRgb };

std::string_view provenance_name(Provenance p);

struct Witness {
  LinearForm form;  // monic
  Provenance provenance;
};

struct LtExclusion {
  bool y_excluded = false;  // y not in <LT(I)>
  bool z_excluded = false;  // z not in <LT(I)>
};

struct PlanarityReport {
  bool consistent = false;
  bool planar_detected = false;
  std::optional<Witness> witness;
  LtExclusion lt_exclusion;
  std::vector<LinearForm> oracle_basis;
};

// False iff rgb = {1}.
bool is_consistent(std::span<const Polynomial> rgb);

// Scans the Buchberger basis in insertion order, then every h_p of the
// reduction trace, then the RGB; the first linear polynomial wins.
std::optional<Witness> detect_linear_witness(const GbResult& result);

// True iff LM(g) divides m for some g in gb.
bool monomial_in_lt_ideal(const Monomial& m, std::span<const Polynomial> gb);

LtExclusion lt_exclusion_check(std::span<const Polynomial> gb);

// Basis of all linear members Ax+By+Cz+D of the ideal with (A,B,C) != 0, found
// by solving A*NF(x) + B*NF(y) + C*NF(z) + D*NF(1) = 0 over Q. Each form is
// monic and the basis is in reduced echelon form over (A, B, C, D).
std::vector<LinearForm> linear_member_oracle(std::span<const Polynomial> rgb);

PlanarityReport analyze(const GbResult& result);
PlanarityReport analyze(const GeneratorSet& input, const BuchbergerOptions& options = {});

std::string format_linear_form(const LinearForm& form);
// Key/value lines ("consistent: true").
std::string format_report_text(const PlanarityReport& report);
// Single JSON document, keys sorted.
std::string format_report_json(const PlanarityReport& report);

}  // namespace gbx
