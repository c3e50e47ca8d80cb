#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace nfgd {

// Always canonical: mpq_class arithmetic reduces after every operation.
using Rational = mpq_class;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "exact";
  static Rational FromRational(const Rational& q) { return q; }
  static bool IsZero(const Rational& x) { return sgn(x) == 0; }
  static bool Equal(const Rational& a, const Rational& b) { return a == b; }
  static bool LessOrEqual(const Rational& a, const Rational& b) { return a <= b; }
  static double ToDouble(const Rational& x) { return x.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";
  // Absolute tolerance used by every float-mode predicate.
  static constexpr double kTolerance = 1e-9;
  static double FromRational(const Rational& q) { return q.get_d(); }
  static bool IsZero(double x) { return std::abs(x) <= kTolerance; }
  static bool Equal(double a, double b) { return IsZero(a - b); }
  static bool LessOrEqual(double a, double b) { return a <= b + kTolerance; }
  static double ToDouble(double x) { return x; }
};

// Accepts "7", "-3/4" and finite decimals such as "0.25" or "-1.5e-3".
Rational ParseRational(std::string_view text);
bool TryParseRational(std::string_view text, Rational* out);

std::string FormatScalar(const Rational& x);
// Shortest representation that round-trips to the same double.
std::string FormatScalar(double x);

// Exact square root when x is the square of a rational.
bool ExactSqrt(const Rational& x, Rational* root);

template <typename T>
T Convert(const Rational& q) {
  return ScalarTraits<T>::FromRational(q);
}

}  // namespace nfgd
