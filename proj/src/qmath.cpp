#include "phaselab/qmath.hpp"

#include "phaselab/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace phaselab {

std::string to_fraction_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

std::string to_decimal_string(const Rational& q, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::ostringstream os;
  if (neg && (whole != 0 || rem != 0)) os << '-';
  os << whole;
  if (rem != 0 && digits > 0) {
    os << '.';
    std::string frac;
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      BigInt d = rem / den;
      rem %= den;
      frac.push_back(static_cast<char>('0' + static_cast<int>(d)));
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) frac = "0";
    os << frac;
  }
  return os.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt p(text.substr(0, slash));
      BigInt q(text.substr(slash + 1));
      if (q == 0) throw ConfigError("zero denominator in: " + text);
      return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad decimal literal: " + text);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt whole(head);
    BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt num = boost::multiprecision::abs(whole) * scale + frac;
    if (neg) num = -num;
    return Rational(num, scale);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad rational literal '") + text + "': " + e.what());
  }
}

Interval Interval::operator*(const Interval& o) const {
  std::array<Rational, 4> c = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
  return {*std::min_element(c.begin(), c.end()), *std::max_element(c.begin(), c.end())};
}

Interval Interval::operator/(const Interval& o) const {
  if (o.lo <= 0 && o.hi >= 0) throw Error("interval division by an interval containing zero");
  Interval inv{Rational(1) / o.hi, Rational(1) / o.lo};
  return *this * inv;
}

IntervalOrder compare_leq(const Interval& a, const Interval& b) {
  if (a.hi <= b.lo) return IntervalOrder::LessOrEqual;
  if (a.lo > b.hi) return IntervalOrder::Greater;
  return IntervalOrder::Indeterminate;
}

Interval ln_interval(const Rational& q, const Rational& eps) {
  if (q <= 0) throw Error("ln of a non-positive rational");
  if (q == 1) return Interval(Rational(0));
  if (q < 1) {
    Interval r = ln_interval(Rational(1) / q, eps);
    return {-r.hi, -r.lo};
  }
  // atanh series: ln q = 2 * sum_{i>=0} t^(2i+1)/(2i+1), t = (q-1)/(q+1) in (0,1).
  Rational t = (q - 1) / (q + 1);
  Rational t2 = t * t;
  Rational term = t;  // t^(2i+1)
  Rational sum = 0;
  Rational tail;
  unsigned i = 0;
  for (;;) {
    sum += term / Rational(2 * i + 1);
    term *= t2;
    ++i;
    // remaining series < t^(2i+1) / ((2i+1)(1 - t^2))
    tail = Rational(2) * term / (Rational(2 * i + 1) * (Rational(1) - t2));
    if (tail < eps) break;
    if (i > 100000) throw Error("ln series failed to converge");
  }
  Rational lo = Rational(2) * sum;
  return {lo, lo + tail};
}

Interval log_ratio_interval(const Rational& arg, const Rational& base, const Rational& eps) {
  Interval num = ln_interval(arg, eps);
  Interval den = ln_interval(base, eps);
  return num / den;
}

Interval sqrt_interval(const Rational& q, unsigned digits) {
  if (q < 0) throw Error("sqrt of a negative rational");
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // floor(sqrt(q * scale^2)) via integer sqrt.
  BigInt target = boost::multiprecision::numerator(q) * scale * scale /
                  boost::multiprecision::denominator(q);
  BigInt root = boost::multiprecision::sqrt(target);
  return {Rational(root, scale), Rational(root + 1, scale)};
}

Interval inv_sqrt2_pow(unsigned n) {
  BigInt half_pow = BigInt(1) << (n / 2);
  Rational even_part(1, half_pow);
  if (n % 2 == 0) return Interval(even_part);
  static const Interval inv_sqrt2 = [] {
    Interval s = sqrt_interval(Rational(2));
    return Interval(Rational(1) / s.hi, Rational(1) / s.lo);
  }();
  return Interval(even_part) * inv_sqrt2;
}

Interval pow_interval(const Interval& base, unsigned n) {
  Interval acc{Rational(1)};
  for (unsigned i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Polynomial::operator()(const Interval& x) const {
  Interval acc{Rational(0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Interval(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({Rational(0)});
  std::vector<Rational> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::parse(const std::string& comma_separated) {
  std::vector<Rational> coeffs;
  std::string item;
  std::istringstream is(comma_separated);
  while (std::getline(is, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos)
      throw ConfigError("empty coefficient in polynomial: " + comma_separated);
    coeffs.push_back(parse_rational(item));
  }
  if (coeffs.empty()) throw ConfigError("polynomial needs at least one coefficient");
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << to_fraction_string(coeffs_[i]);
  }
  return os.str();
}

}  // namespace phaselab
