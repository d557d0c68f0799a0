#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace transvect {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Search loops (prime scans, coprimality scans) throw this when the
// configured candidate budget runs out; callers may retry with a larger
// limit.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& what, unsigned long long limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}
  unsigned long long limit() const { return limit_; }

 private:
  unsigned long long limit_;
};

// Factorization requests above the supported operand size.
class FactorTooLarge : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Least nonnegative representative, m != 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int mm = abs_int(m);
  if (mm == 0) throw std::domain_error("mod_floor: zero modulus");
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

struct ExtGcd {
  Int g, x, y;  // g = gcd(a,b) = a*x + b*y, g >= 0
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int mm = abs_int(m);
  if (mm == 1) return 0;
  ExtGcd e = ext_gcd(mod_floor(a, mm), mm);
  if (e.g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  return mod_floor(e.x, mm);
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
  Int mm = abs_int(m);
  if (mm == 1) return 0;
  if (exp < 0) throw std::domain_error("pow_mod: negative exponent");
  base = mod_floor(base, mm);
  Int result = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % mm;
    base = base * base % mm;
    exp >>= 1;
  }
  return result;
}

// Numerator/denominator access for Rat.
inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) {
  return boost::multiprecision::denominator(r);
}

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

}  // namespace transvect
