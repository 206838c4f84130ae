#include "rept/cyclotomic.hpp"

#include "rept/guards.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rept {

namespace {

using Poly = std::vector<Rational>;  // ascending degree, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place p -= q * c * x^shift
void submul(Poly& p, const Poly& q, const Rational& c, size_t shift) {
  if (p.size() < q.size() + shift) p.resize(q.size() + shift, Rational(0));
  for (size_t i = 0; i < q.size(); ++i) p[i + shift] -= q[i] * c;
  trim(p);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division, remainder must vanish (used only for x^N-1 over Phi_d).
Poly poly_divexact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    submul(num, den, c, shift);
  }
  if (!num.empty()) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

// Remainder of num modulo den (den monic-leading assumed nonzero).
Poly poly_mod(Poly num, const Poly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    submul(num, den, c, num.size() - den.size());
  }
  return num;
}

std::mutex cyc_mutex;
std::map<int, Poly> phi_cache;
// power_cache[N][m] = coordinates of z^m, 0 <= m < N, length phi(N)
std::map<int, std::vector<Poly>> power_cache;

const Poly& phi_poly_locked(int order) {
  auto it = phi_cache.find(order);
  if (it != phi_cache.end()) return it->second;
  // x^order - 1 divided by Phi_d for all proper divisors d
  Poly p(order + 1, Rational(0));
  p[0] = -1;
  p[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    const Poly& pd = phi_poly_locked(d);
    p = poly_divexact(std::move(p), pd);
  }
  return phi_cache.emplace(order, std::move(p)).first->second;
}

const std::vector<Poly>& powers_locked(int order) {
  auto it = power_cache.find(order);
  if (it != power_cache.end()) return it->second;
  const Poly& phi = phi_poly_locked(order);
  int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Poly> pows(order);
  Poly cur = {Rational(1)};
  for (int m = 0; m < order; ++m) {
    Poly padded = cur;
    padded.resize(deg, Rational(0));
    pows[m] = padded;
    // multiply by z, reduce
    cur.insert(cur.begin(), Rational(0));
    cur = poly_mod(std::move(cur), phi);
  }
  return power_cache.emplace(order, std::move(pows)).first->second;
}

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int order) {
  std::lock_guard<std::mutex> lk(cyc_mutex);
  return phi_poly_locked(order);
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  c_.assign(euler_phi(order), Rational(0));
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  if (c_.size() != static_cast<size_t>(euler_phi(order)))
    throw std::invalid_argument("cyclotomic coefficient vector has wrong length");
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, int order) {
  Cyclotomic z(order);
  z.c_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::zeta(int order) {
  Cyclotomic z(order);
  std::lock_guard<std::mutex> lk(cyc_mutex);
  z.c_ = powers_locked(order)[1 % order];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embedded(int target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0)
    throw std::invalid_argument("embedding target order not divisible by source order");
  int step = target_order / order_;
  Cyclotomic out(target_order);
  std::lock_guard<std::mutex> lk(cyc_mutex);
  const auto& pows = powers_locked(target_order);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const Poly& p = pows[(i * step) % target_order];
    for (size_t j = 0; j < p.size(); ++j) out.c_[j] += c_[i] * p[j];
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    int target = std::lcm(order_, o.order_);
    *this = embedded(target);
    return *this += o.embedded(target);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    int target = std::lcm(order_, o.order_);
    *this = embedded(target);
    return *this -= o.embedded(target);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    int target = std::lcm(order_, o.order_);
    *this = embedded(target);
    return *this *= o.embedded(target);
  }
  if (c_.size() == 1) {  // Q(zeta_1) = Q(zeta_2) = Q
    c_[0] *= o.c_[0];
    return *this;
  }
  Poly prod = poly_mul(c_, o.c_);
  std::lock_guard<std::mutex> lk(cyc_mutex);
  prod = poly_mod(std::move(prod), phi_poly_locked(order_));
  prod.resize(c_.size(), Rational(0));
  c_ = std::move(prod);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int target = std::lcm(a.order_, b.order_);
  return a.embedded(target).c_ == b.embedded(target).c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of zero cyclotomic");
  if (c_.size() == 1) return from_rational(Rational(1) / c_[0], order_);
  // Extended Euclid in Q[x] against Phi_N: find u with u*a = 1 mod Phi.
  Poly a = c_;
  trim(a);
  Poly r0, r1 = a, u0, u1 = {Rational(1)};
  {
    std::lock_guard<std::mutex> lk(cyc_mutex);
    r0 = phi_poly_locked(order_);
  }
  u0 = {};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    Poly r2 = r0;
    while (r2.size() >= r1.size() && !r2.empty()) {
      Rational c = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] = c;
      submul(r2, r1, c, shift);
    }
    trim(q);
    Poly u2 = u0;  // u2 = u0 - q*u1
    {
      Poly qu = poly_mul(q, u1);
      if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
      for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
      trim(u2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r0 = gcd (a nonzero constant, Phi_N irreducible), u0 * a = r0 mod Phi
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
  Rational scale = Rational(1) / r0[0];
  Cyclotomic out(order_);
  for (size_t i = 0; i < u0.size() && i < out.c_.size(); ++i) out.c_[i] = u0[i] * scale;
  if (u0.size() > out.c_.size()) throw std::logic_error("cyclotomic inverse: degree overflow");
  return out;
}

Cyclotomic Cyclotomic::galois(int a) const {
  int m = ((a % order_) + order_) % order_;
  if (std::gcd(m == 0 ? order_ : m, order_) != 1)
    throw std::invalid_argument("galois exponent not coprime to order");
  Cyclotomic out(order_);
  std::lock_guard<std::mutex> lk(cyc_mutex);
  const auto& pows = powers_locked(order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const Poly& p = pows[(i * m) % order_];
    for (size_t j = 0; j < p.size(); ++j) out.c_[j] += c_[i] * p[j];
  }
  return out;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (order_ <= 2) return *this;
  return galois(order_ - 1);
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyclotomic out = one(order_);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << rational_str(v);
    } else {
      if (v != 1) os << rational_str(v) << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Single term: "3", "-1/2", "z3", "2*z6^2"
Cyclotomic parse_cyc_term(const std::string& term) {
  std::string s = term;
  bool neg = false;
  size_t pos = 0;
  while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') neg = !neg;
    ++pos;
  }
  s = s.substr(pos);
  if (s.empty()) throw usage_error("empty cyclotomic term");
  Rational coeff(1);
  size_t z = s.find('z');
  if (z == std::string::npos) {
    coeff = parse_rational(s);
    return Cyclotomic::from_rational(neg ? -coeff : coeff, 1);
  }
  if (z > 0) {
    std::string cs = s.substr(0, z);
    if (!cs.empty() && cs.back() == '*') cs.pop_back();
    if (!cs.empty()) coeff = parse_rational(cs);
  }
  std::string zs = s.substr(z + 1);
  int order = 0, exp = 1;
  size_t caret = zs.find('^');
  try {
    if (caret == std::string::npos) {
      order = std::stoi(zs);
    } else {
      order = std::stoi(zs.substr(0, caret));
      exp = std::stoi(zs.substr(caret + 1));
    }
  } catch (const std::exception&) {
    throw usage_error("bad root-of-unity token: '" + s + "'");
  }
  if (order < 1) throw usage_error("root-of-unity order must be >= 1");
  Cyclotomic out = Cyclotomic::zeta(order).pow(exp);
  Cyclotomic c = Cyclotomic::from_rational(neg ? -coeff : coeff, 1);
  return out * c;
}

}  // namespace

Cyclotomic parse_cyclotomic(const std::string& s) {
  // split at top-level +/- (no parens inside a cyclotomic literal)
  Cyclotomic total = Cyclotomic::zero();
  std::string cur;
  bool any = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == ' ') continue;
    if ((ch == '+' || ch == '-') && !cur.empty() && cur.back() != '*' && cur.back() != '^' &&
        cur.back() != '+' && cur.back() != '-') {
      total += parse_cyc_term(cur);
      any = true;
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) {
    total += parse_cyc_term(cur);
    any = true;
  }
  if (!any) throw usage_error("empty cyclotomic literal");
  return total;
}

}  // namespace rept
