#pragma once

#include "rept/rational.hpp"

#include <string>
#include <vector>

namespace rept {

int euler_phi(int n);

// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending degree,
// length phi(N)+1, last entry 1. Integer polynomials, kept as rationals.
const std::vector<Rational>& cyclotomic_polynomial(int order);

// An element of Q(zeta_N), stored reduced modulo Phi_N on the power basis
// 1, z, ..., z^{phi(N)-1}. Elements of different orders combine by embedding
// into the lcm order.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);
  Cyclotomic(int order, std::vector<Rational> coeffs);

  static Cyclotomic from_rational(const Rational& r, int order = 1);
  static Cyclotomic zero(int order = 1) { return Cyclotomic(order); }
  static Cyclotomic one(int order = 1) { return from_rational(1, order); }
  static Cyclotomic zeta(int order);  // a primitive order-th root of unity

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_part() const;  // requires is_rational()

  // Image under zeta_N -> zeta_M^(M/N); requires order() | target_order.
  Cyclotomic embedded(int target_order) const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero
  Cyclotomic galois(int a) const;  // z -> z^a, gcd(a, order) = 1
  Cyclotomic conjugate() const;    // z -> z^{-1}
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // "3", "-1/2", "1 + 2*z3", "z3^2 - 1/3". Pure rationals render without zN.
  std::string str() const;

 private:
  int order_;
  std::vector<Rational> c_;  // length phi(order_)
};

// "z3", "1/2 + z6^2", plain rationals. The declared order, if any, must be
// consistent across the expression; result order is the lcm encountered.
Cyclotomic parse_cyclotomic(const std::string& s);

}  // namespace rept
