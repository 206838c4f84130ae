#include "rept/cycpoly.hpp"

#include "rept/guards.hpp"

#include <numeric>
#include <sstream>

namespace rept {

CycPoly CycPoly::one(int order) { return constant(Cyclotomic::one(order)); }

CycPoly CycPoly::variable(int order) { return t_power(1, order); }

CycPoly CycPoly::constant(const Cyclotomic& c) {
  CycPoly p(c.order());
  if (!c.is_zero()) p.terms_[0] = c;
  return p;
}

CycPoly CycPoly::constant(const Rational& r) { return constant(Cyclotomic::from_rational(r)); }

CycPoly CycPoly::t_power(int deg, int order) {
  CycPoly p(order);
  p.terms_[deg] = Cyclotomic::one(order);
  return p;
}

CycPoly CycPoly::falling_factorial(int n) {
  CycPoly p = one();
  for (int i = 0; i < n; ++i)
    p = p * (variable() - constant(Rational(i)));
  return p;
}

Cyclotomic CycPoly::coeff(int deg) const {
  auto it = terms_.find(deg);
  return it == terms_.end() ? Cyclotomic::zero(order_) : it->second;
}

CycPoly CycPoly::embedded(int target_order) const {
  CycPoly p(target_order);
  for (const auto& [d, c] : terms_) p.terms_[d] = c.embedded(target_order);
  return p;
}

void CycPoly::set_coeff(int deg, const Cyclotomic& c) {
  if (c.is_zero())
    terms_.erase(deg);
  else {
    if (c.order() != order_) order_ = std::lcm(order_, c.order());
    terms_[deg] = c.embedded(order_);
  }
}

CycPoly CycPoly::operator-() const {
  CycPoly p(order_);
  for (const auto& [d, c] : terms_) p.terms_[d] = -c;
  return p;
}

CycPoly& CycPoly::operator+=(const CycPoly& o) {
  if (o.order_ != order_) {
    int target = std::lcm(order_, o.order_);
    *this = embedded(target);
    return *this += o.embedded(target);
  }
  for (const auto& [d, c] : o.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& o) { return *this += -o; }

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  int target = std::lcm(a.order_, b.order_);
  CycPoly p(target);
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) {
      Cyclotomic prod = ca.embedded(target) * cb.embedded(target);
      if (prod.is_zero()) continue;
      auto it = p.terms_.find(da + db);
      if (it == p.terms_.end())
        p.terms_[da + db] = prod;
      else {
        it->second += prod;
        if (it->second.is_zero()) p.terms_.erase(it);
      }
    }
  return p;
}

CycPoly CycPoly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return zero(order_);
  return *this * constant(c);
}

CycPoly CycPoly::scaled(const Rational& r) const { return scaled(Cyclotomic::from_rational(r)); }

CycPoly CycPoly::shifted(int deg) const {
  CycPoly p(order_);
  for (const auto& [d, c] : terms_) p.terms_[d + deg] = c;
  return p;
}

bool operator==(const CycPoly& a, const CycPoly& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  int target = std::lcm(a.order_, b.order_);
  return a.embedded(target).terms_ == b.embedded(target).terms_;
}

Cyclotomic CycPoly::eval(const Cyclotomic& v) const {
  // Horner over the stored (sparse, ascending) terms, walked descending.
  Cyclotomic acc = Cyclotomic::zero(std::lcm(order_, v.order()));
  int last_deg = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      acc = it->second.embedded(acc.order());
      last_deg = it->first;
      first = false;
      continue;
    }
    acc *= v.pow(last_deg - it->first);
    acc += it->second;
    last_deg = it->first;
  }
  if (first) return acc;
  if (last_deg > 0) acc *= v.pow(last_deg);
  return acc;
}

Cyclotomic CycPoly::eval(long n) const { return eval(Cyclotomic::from_rational(Rational(n), 1)); }

CycPoly CycPoly::divexact(const CycPoly& divisor) const {
  if (divisor.is_zero()) throw verify_error("polynomial division by zero");
  int target = std::lcm(order_, divisor.order_);
  CycPoly rem = embedded(target);
  CycPoly den = divisor.embedded(target);
  CycPoly quot(target);
  Cyclotomic lead_inv = den.terms_.rbegin()->second.inverse();
  int dd = den.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Cyclotomic c = rem.terms_.rbegin()->second * lead_inv;
    quot.set_coeff(shift, c);
    CycPoly sub(target);
    for (const auto& [d, cc] : den.terms_) sub.terms_[d + shift] = cc * c;
    rem -= sub;
  }
  if (!rem.is_zero())
    throw verify_error("polynomial division is not exact (remainder " + rem.str() + ")");
  return quot;
}

std::string CycPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int deg = it->first;
    const Cyclotomic& c = it->second;
    std::string body;
    bool neg = false;
    if (c.is_rational()) {
      Rational r = c.rational_part();
      if (r < 0) {
        neg = true;
        r = -r;
      }
      if (r == 1 && deg > 0)
        body = "";
      else
        body = rational_str(r);
    } else {
      body = "(" + c.str() + ")";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (deg == 0) {
      os << (body.empty() ? "1" : body);
    } else {
      if (!body.empty()) os << body << "*";
      os << "t";
      if (deg > 1) os << "^" << deg;
    }
  }
  return os.str();
}

namespace {

struct PolyTerm {
  Cyclotomic coeff;
  int deg = 0;
};

// One term: "[coeff*]t[^d]" or bare coefficient. Coefficient is a rational or
// a parenthesized cyclotomic.
PolyTerm parse_poly_term(const std::string& term) {
  std::string s = term;
  bool neg = false;
  size_t pos = 0;
  while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') neg = !neg;
    ++pos;
  }
  s = s.substr(pos);
  if (s.empty()) throw usage_error("empty polynomial term");
  PolyTerm out;
  std::string coeff_text;
  std::string var_text = s;
  if (s[0] == '(') {
    size_t close = s.find(')');
    if (close == std::string::npos) throw usage_error("unbalanced parenthesis in '" + term + "'");
    coeff_text = s.substr(1, close - 1);
    var_text = s.substr(close + 1);
    if (!var_text.empty() && var_text[0] == '*') var_text = var_text.substr(1);
  } else {
    size_t tpos = var_text.find('t');
    if (tpos != std::string::npos) {
      coeff_text = var_text.substr(0, tpos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
      var_text = var_text.substr(tpos);
    } else {
      coeff_text = var_text;
      var_text.clear();
    }
  }
  Cyclotomic coeff = Cyclotomic::one();
  if (!coeff_text.empty()) coeff = parse_cyclotomic(coeff_text);
  if (!var_text.empty()) {
    if (var_text[0] != 't') throw usage_error("bad polynomial term: '" + term + "'");
    if (var_text.size() == 1) {
      out.deg = 1;
    } else {
      if (var_text[1] != '^') throw usage_error("bad polynomial term: '" + term + "'");
      try {
        out.deg = std::stoi(var_text.substr(2));
      } catch (const std::exception&) {
        throw usage_error("bad exponent in '" + term + "'");
      }
    }
  }
  out.coeff = neg ? -coeff : coeff;
  return out;
}

}  // namespace

CycPoly parse_cycpoly(const std::string& s) {
  CycPoly total;
  std::string cur;
  int depth = 0;
  bool any = false;
  auto flush = [&]() {
    if (cur.empty()) return;
    PolyTerm t = parse_poly_term(cur);
    total += CycPoly::constant(t.coeff).shifted(t.deg);
    any = true;
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !cur.empty() && cur.back() != '*' &&
        cur.back() != '^' && cur.back() != '+' && cur.back() != '-') {
      flush();
    }
    cur += ch;
  }
  flush();
  if (!any) throw usage_error("empty polynomial literal");
  return total;
}

}  // namespace rept
