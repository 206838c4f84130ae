#pragma once

#include "rept/cyclotomic.hpp"

#include <map>
#include <string>

namespace rept {

// Sparse polynomial in the interpolation variable t with coefficients in
// Q(zeta_N). Zero coefficients are never stored.
class CycPoly {
 public:
  CycPoly() : order_(1) {}
  explicit CycPoly(int order) : order_(order) {}

  static CycPoly zero(int order = 1) { return CycPoly(order); }
  static CycPoly one(int order = 1);
  static CycPoly variable(int order = 1);  // t
  static CycPoly constant(const Cyclotomic& c);
  static CycPoly constant(const Rational& r);
  static CycPoly t_power(int deg, int order = 1);
  // prod_{i=0}^{n-1} (t - i)
  static CycPoly falling_factorial(int n);

  int order() const { return order_; }
  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Cyclotomic coeff(int deg) const;

  CycPoly embedded(int target_order) const;

  CycPoly operator-() const;
  CycPoly& operator+=(const CycPoly& o);
  CycPoly& operator-=(const CycPoly& o);
  friend CycPoly operator+(CycPoly a, const CycPoly& b) { return a += b; }
  friend CycPoly operator-(CycPoly a, const CycPoly& b) { return a -= b; }
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  CycPoly scaled(const Cyclotomic& c) const;
  CycPoly scaled(const Rational& r) const;
  CycPoly shifted(int deg) const;  // multiply by t^deg

  friend bool operator==(const CycPoly& a, const CycPoly& b);
  friend bool operator!=(const CycPoly& a, const CycPoly& b) { return !(a == b); }

  Cyclotomic eval(const Cyclotomic& v) const;
  Cyclotomic eval(long n) const;

  // Exact division; throws verify_error if the division leaves a remainder.
  CycPoly divexact(const CycPoly& divisor) const;

  // Canonical text form, descending degree: "1/2*t^2 - 5/2*t + 4",
  // cyclotomic coefficients parenthesized: "(1 + 2*z3)*t + (-1/3 + z3)".
  std::string str() const;

  void set_coeff(int deg, const Cyclotomic& c);

 private:
  int order_;
  std::map<int, Cyclotomic> terms_;
};

// Parses the canonical text form (and harmless variants, e.g. "t^2-1").
CycPoly parse_cycpoly(const std::string& s);

}  // namespace rept
