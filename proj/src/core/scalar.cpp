#include "core/scalar.hpp"

#include <charconv>
#include <string>

#include "core/error.hpp"

namespace nfgd {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool ParseDecimal(std::string_view text, Rational* out) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  std::size_t e = text.find_first_of("eE");
  if (e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 6) return false;
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  std::size_t dot = text.find('.');
  if (dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return false;
  if (!int_part.empty() && !AllDigits(int_part)) return false;
  if (!frac_part.empty() && !AllDigits(frac_part)) return false;

  std::string digits(int_part);
  digits += frac_part;
  mpz_class numerator(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
  value.canonicalize();
  *out = negative ? Rational(-value) : value;
  return true;
}

}  // namespace

bool TryParseRational(std::string_view text, Rational* out) {
  if (text.empty()) return false;
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return ParseDecimal(text, out);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!AllDigits(num) || !AllDigits(den)) return false;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return false;
  Rational value(n, d);
  value.canonicalize();
  *out = negative ? Rational(-value) : value;
  return true;
}

Rational ParseRational(std::string_view text) {
  Rational value;
  if (!TryParseRational(text, &value)) {
    Fail(ErrorKind::kParse, "expected a rational number, got '" + std::string(text) + "'");
  }
  return value;
}

std::string FormatScalar(const Rational& x) { return x.get_str(); }

std::string FormatScalar(double x) {
  if (x == 0.0) return "0";
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

bool ExactSqrt(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den.get_mpz_t());
  *root = Rational(n, d);
  root->canonicalize();
  return true;
}

}  // namespace nfgd
