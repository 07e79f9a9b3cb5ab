#include "gbx/textio.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

#include "gbx/errors.hpp"

namespace gbx {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    terms.push_back(parse_term(negative));
    for (skip_space(); !at_end(); skip_space()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      get();
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial(kArity, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_space();
    if (at_end()) fail("expected a term");
    Rational coefficient(1);
    bool need_factor = false;
    bool have_coefficient = false;
    if (is_digit(peek())) {
      coefficient = parse_coefficient();
      have_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        need_factor = true;
      }
    } else if (peek() == '.') {
      fail("decimal literals are not supported");
    } else if (!is_alpha(peek())) {
      fail(std::string("expected a term, found '") + peek() + "'");
    }
    Monomial monomial = parse_factors(need_factor || !have_coefficient);
    if (negative) coefficient = -coefficient;
    return Term{std::move(coefficient), std::move(monomial)};
  }

  Rational parse_coefficient() {
    std::string_view numerator = digits();
    reject_decimal();
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      if (at_end() || !is_digit(peek())) fail("expected denominator after '/'");
      std::size_t den_at = pos_;
      std::string_view denominator = digits();
      reject_decimal();
      BigInt d(std::string(denominator), 10);
      if (d == 0) fail_at("zero denominator", den_at);
      return Rational(BigInt(std::string(numerator), 10), d);
    }
    return Rational(BigInt(std::string(numerator), 10), BigInt(1));
  }

  // Parses variable factors; `required` demands at least one.
  Monomial parse_factors(bool required) {
    std::vector<Exponent> exponents(kArity, 0);
    bool any = false;
    for (;;) {
      skip_space();
      if (at_end() || !is_alpha(peek())) {
        if (!at_end() && is_digit(peek()) && any) fail("numeric literal must precede variables");
        if (!at_end() && peek() == '.') fail("decimal literals are not supported");
        if (required && !any) fail(at_end() ? "expected a variable" : std::string("expected a variable, found '") + peek() + "'");
        break;
      }
      std::size_t var_at = pos_;
      char name = get();
      std::size_t index = kArity;
      for (std::size_t i = 0; i < kArity; ++i)
        if (kVariableNames[i] == name) index = i;
      if (index == kArity) fail_at(std::string("unknown variable '") + name + "' (expected x, y or z)", var_at);
      Exponent power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        get();
        skip_space();
        if (at_end() || !is_digit(peek())) fail("expected exponent after '^'");
        std::size_t exp_at = pos_;
        std::string_view e = digits();
        reject_decimal();
        unsigned long long v = 0;
        for (char c : e) {
          v = v * 10 + static_cast<unsigned>(c - '0');
          if (v > std::numeric_limits<Exponent>::max() / 2) fail_at("exponent too large", exp_at);
        }
        if (v == 0) fail_at("exponent must be a positive integer", exp_at);
        power = static_cast<Exponent>(v);
      }
      if (static_cast<unsigned long long>(exponents[index]) + power > std::numeric_limits<Exponent>::max() / 2)
        fail_at("exponent too large", var_at);
      exponents[index] += power;
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
        if (at_end() || !is_alpha(peek())) fail("expected a variable after '*'");
      }
    }
    return Monomial(std::move(exponents));
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void reject_decimal() {
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      if (peek() == '.' || (pos_ + 1 < text_.size() && (is_digit(text_[pos_ + 1]) || text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+')))
        fail("decimal literals are not supported");
    }
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  return true;
}

std::string variable_name(std::size_t arity, std::size_t index) {
  if (arity <= kArity) return std::string(1, kVariableNames[index]);
  return "v" + std::to_string(index);
}

}  // namespace

GeneratorSet make_generator_set(std::vector<Polynomial> generators) {
  if (generators.empty()) throw EmptyInputError();
  GeneratorSet set;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) throw ZeroGeneratorError(i + 1);
    set.labels.push_back("f" + std::to_string(i + 1));
  }
  set.generators = std::move(generators);
  return set;
}

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

GeneratorSet parse_generators(std::string_view text) {
  GeneratorSet set;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }

    std::size_t body_offset = 0;
    std::string label = "f" + std::to_string(set.generators.size() + 1);
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      std::string_view name = trim(line.substr(0, colon));
      if (!is_label(name)) throw ParseError("invalid generator label", 0, line_no);
      label = std::string(name);
      body_offset = colon + 1;
    }
    Polynomial p;
    try {
      p = parse_polynomial(line.substr(body_offset));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.offset() + body_offset, line_no);
    }
    if (p.is_zero()) throw ZeroGeneratorError(line_no);
    set.generators.push_back(std::move(p));
    set.labels.push_back(std::move(label));
    if (end == text.size()) break;
  }
  if (set.generators.empty()) throw EmptyInputError();
  return set;
}

std::string print_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    out += variable_name(m.arity(), i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const Rational& c = t.coefficient;
    Rational magnitude = c.abs();
    if (c.sign() < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;

    if (t.monomial.is_unit()) {
      out += magnitude.to_string();
      continue;
    }
    bool fraction = !magnitude.is_integer();
    std::string sep = fraction ? "*" : "";
    if (!magnitude.is_one()) out += magnitude.to_string() + sep;
    bool first_factor = true;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!first_factor) out += sep;
      first_factor = false;
      out += variable_name(t.monomial.arity(), i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace gbx
