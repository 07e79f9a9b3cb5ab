#include "gbx/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw UsageError("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw UsageError("Rational: malformed literal '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw UsageError("Rational: inverse of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(inv);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw UsageError("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour.
  double truncated = mpq_get_d(value_.get_mpq_t());
  if (!std::isfinite(truncated)) return truncated;
  double away = std::nextafter(truncated, sgn(value_) >= 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  mpq_class lo(truncated), hi(away);
  mpq_class dlo = ::abs(value_ - lo), dhi = ::abs(hi - value_);
  int c = cmp(dlo, dhi);
  if (c < 0) return truncated;
  if (c > 0) return away;
  // Tie: even mantissa.
  int exp = 0;
  double m = std::frexp(truncated, &exp);
  double scaled = std::ldexp(m, 53);
  return std::fmod(scaled, 2.0) == 0.0 ? truncated : away;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace gbx
