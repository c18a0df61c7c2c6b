#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace phaselab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q always written, e.g. "1/1", "-3/7".
std::string to_fraction_string(const Rational& q);

// Truncated decimal rendering, at most `digits` fractional digits,
// trailing zeros removed. Deterministic.
std::string to_decimal_string(const Rational& q, unsigned digits = 12);

// Parses "p/q", "p", or a plain decimal like "0.25".
Rational parse_rational(const std::string& text);

// Closed rational interval [lo, hi] used wherever an irrational value
// (a logarithm, sqrt(2)) must take part in an exact comparison.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must not straddle 0
};

// Tri-state verdict for interval comparisons: decided only when the
// intervals are strictly on one side of each other.
enum class IntervalOrder { LessOrEqual, Greater, Indeterminate };

IntervalOrder compare_leq(const Interval& a, const Interval& b);

// Natural log of a positive rational, enclosed to within eps.
Interval ln_interval(const Rational& q, const Rational& eps);

// log_base(arg) = ln(arg)/ln(base) for rationals > 1.
Interval log_ratio_interval(const Rational& arg, const Rational& base, const Rational& eps);

// sqrt(q) for q >= 0, enclosed to within roughly 10^-sqrt_digits.
Interval sqrt_interval(const Rational& q, unsigned digits = 14);

// (1/sqrt(2))^n as a tight interval; exact for even n.
Interval inv_sqrt2_pow(unsigned n);

Interval pow_interval(const Interval& base, unsigned n);

// Real polynomial with exact rational coefficients, c0 + c1 x + c2 x^2 + ...
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Rational operator()(const Rational& x) const;
  Interval operator()(const Interval& x) const;
  Polynomial derivative() const;

  // "4,1" -> 4 + n. Coefficients listed constant-first.
  static Polynomial parse(const std::string& comma_separated);
  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

}  // namespace phaselab
