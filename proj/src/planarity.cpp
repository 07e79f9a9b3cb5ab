#include "gbx/planarity.hpp"

#include <map>
#include <numeric>

#include "json.hpp"

#include "gbx/errors.hpp"
#include "gbx/linear_solve.hpp"

namespace gbx {

namespace {

const Rational* first_nonzero_normal(const LinearForm& f) {
  for (const Rational* r : {&f.a, &f.b, &f.c})
    if (!r->is_zero()) return r;
  return nullptr;
}

LinearForm scaled(const LinearForm& f, const Rational& k) { return {f.a * k, f.b * k, f.c * k, f.d * k}; }

std::optional<Witness> linear_witness(const Polynomial& p, Provenance provenance) {
  if (!is_linear(p)) return std::nullopt;
  return Witness{LinearForm::from_polynomial(p).monic(), provenance};
}

}  // namespace

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  if (p.arity() != 3) throw UsageError("LinearForm: arity must be 3");
  LinearForm f;
  for (const Term& t : p.terms()) {
    const Monomial& m = t.monomial;
    if (m.total_degree() > 1) throw UsageError("LinearForm: polynomial is not linear");
    if (m[0] == 1) f.a = t.coefficient;
    else if (m[1] == 1) f.b = t.coefficient;
    else if (m[2] == 1) f.c = t.coefficient;
    else f.d = t.coefficient;
  }
  if (!first_nonzero_normal(f)) throw DegenerateFormError();
  return f;
}

Polynomial LinearForm::to_polynomial() const {
  return Polynomial(3, {Term{a, Monomial{1, 0, 0}}, Term{b, Monomial{0, 1, 0}}, Term{c, Monomial{0, 0, 1}},
                        Term{d, Monomial{0, 0, 0}}});
}

LinearForm LinearForm::monic() const {
  const Rational* lead = first_nonzero_normal(*this);
  if (!lead) throw DegenerateFormError();
  return scaled(*this, lead->inverse());
}

LinearForm LinearForm::integer_scaled() const {
  LinearForm m = monic();
  BigInt den_lcm = 1;
  for (const Rational* r : {&m.a, &m.b, &m.c, &m.d}) {
    BigInt d = r->denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  m = scaled(m, Rational(den_lcm, BigInt(1)));
  BigInt num_gcd = 0;
  for (const Rational* r : {&m.a, &m.b, &m.c, &m.d}) {
    BigInt n = r->numerator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  return scaled(m, Rational(BigInt(1), num_gcd));
}

bool LinearForm::is_scalar_multiple_of(const LinearForm& other) const {
  if (!first_nonzero_normal(*this) || !first_nonzero_normal(other)) return false;
  return monic() == other.monic();
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::FoundInBuchberger: return "FoundInBuchberger";
    case Provenance::FoundInReduction: return "FoundInReduction";
    case Provenance::FoundInRgb: return "FoundInRgb";
  }
  return "Unknown";
}

bool is_consistent(std::span<const Polynomial> rgb) {
  return !(rgb.size() == 1 && rgb[0].is_constant() && !rgb[0].is_zero());
}

std::optional<Witness> detect_linear_witness(const GbResult& result) {
  for (const auto& g : result.gb)
    if (auto w = linear_witness(g, Provenance::FoundInBuchberger)) return w;
  for (const auto& e : result.trace) {
    if (const auto* step = std::get_if<event::PartialReduction>(&e.data))
      if (auto w = linear_witness(step->result, Provenance::FoundInReduction)) return w;
  }
  for (const auto& g : result.rgb)
    if (auto w = linear_witness(g, Provenance::FoundInRgb)) return w;
  return std::nullopt;
}

bool monomial_in_lt_ideal(const Monomial& m, std::span<const Polynomial> gb) {
  for (const auto& g : gb)
    if (!g.is_zero() && mono_divides(g.leading_monomial(), m)) return true;
  return false;
}

LtExclusion lt_exclusion_check(std::span<const Polynomial> gb) {
  return {!monomial_in_lt_ideal(Monomial{0, 1, 0}, gb), !monomial_in_lt_ideal(Monomial{0, 0, 1}, gb)};
}

std::vector<LinearForm> linear_member_oracle(std::span<const Polynomial> rgb) {
  if (rgb.empty()) throw EmptyDivisorSetError();
  const std::array<Polynomial, 4> images = {
      Polynomial::variable(3, 0), Polynomial::variable(3, 1), Polynomial::variable(3, 2),
      Polynomial::constant(3, Rational(1))};

  // One equation per monomial occurring in any normal form; columns (A, B, C, D).
  auto descending = [](const Monomial& a, const Monomial& b) { return cmp_lex(a, b) > 0; };
  std::map<Monomial, std::vector<Rational>, decltype(descending)> equations(descending);
  for (std::size_t col = 0; col < images.size(); ++col) {
    Polynomial nf = rem(images[col], rgb);
    for (const Term& t : nf.terms()) {
      auto [it, inserted] = equations.try_emplace(t.monomial, std::vector<Rational>(4, Rational(0)));
      it->second[col] = t.coefficient;
    }
  }
  RationalMatrix rows;
  for (auto& [m, row] : equations) rows.push_back(std::move(row));

  std::vector<LinearForm> basis;
  for (const auto& v : nullspace(std::move(rows), 4)) {
    LinearForm f{v[0], v[1], v[2], v[3]};
    if (first_nonzero_normal(f)) basis.push_back(f.monic());
  }
  return basis;
}

PlanarityReport analyze(const GbResult& result) {
  PlanarityReport report;
  report.consistent = is_consistent(result.rgb);
  report.lt_exclusion = lt_exclusion_check(result.gb);
  if (!report.consistent) return report;
  report.witness = detect_linear_witness(result);
  report.planar_detected = report.witness.has_value();
  report.oracle_basis = linear_member_oracle(result.rgb);
  return report;
}

PlanarityReport analyze(const GeneratorSet& input, const BuchbergerOptions& options) {
  return analyze(groebner_full(input, options));
}

std::string format_linear_form(const LinearForm& form) { return print_polynomial(form.to_polynomial()); }

std::string format_report_text(const PlanarityReport& report) {
  auto yes = [](bool b) { return b ? std::string("true") : std::string("false"); };
  std::string out;
  out += "consistent: " + yes(report.consistent) + "\n";
  if (!report.consistent) {
    out += "planar_detected: false\n";
    out += "note: RGB = {1}, the system has no common zeros; no planarity claim\n";
    return out;
  }
  out += "planar_detected: " + yes(report.planar_detected) + "\n";
  if (report.witness) {
    out += "witness: " + format_linear_form(report.witness->form) + "\n";
    out += "witness_integer: " + format_linear_form(report.witness->form.integer_scaled()) + "\n";
    out += "witness_provenance: " + std::string(provenance_name(report.witness->provenance)) + "\n";
  }
  out += "y_not_in_lt_ideal: " + yes(report.lt_exclusion.y_excluded) + "\n";
  out += "z_not_in_lt_ideal: " + yes(report.lt_exclusion.z_excluded) + "\n";
  out += "oracle_planar: " + yes(!report.oracle_basis.empty()) + "\n";
  for (const auto& f : report.oracle_basis) out += "oracle_form: " + format_linear_form(f) + "\n";
  return out;
}

std::string format_report_json(const PlanarityReport& report) {
  nlohmann::json j;
  j["consistent"] = report.consistent;
  j["planar_detected"] = report.planar_detected;
  if (report.witness) {
    j["witness"] = {
        {"form", format_linear_form(report.witness->form)},
        {"integer_form", format_linear_form(report.witness->form.integer_scaled())},
        {"provenance", provenance_name(report.witness->provenance)},
    };
  } else {
    j["witness"] = nullptr;
  }
  j["lt_exclusion"] = {{"y_excluded", report.lt_exclusion.y_excluded},
                       {"z_excluded", report.lt_exclusion.z_excluded}};
  j["oracle_basis"] = nlohmann::json::array();
  for (const auto& f : report.oracle_basis) j["oracle_basis"].push_back(format_linear_form(f));
  return j.dump(2);
}

}  // namespace gbx
