#include "rept/rho.hpp"

#include <algorithm>
#include <numeric>

namespace rept {

namespace {

std::vector<Permutation> sorted_group(std::vector<Permutation> z) {
  std::sort(z.begin(), z.end());
  if (z.empty() || !z.front().is_identity())
    throw std::invalid_argument("group must contain the identity");
  return z;
}

}  // namespace

const CycMatrix& RhoMap::operator()(const Permutation& z) const {
  auto it = values.find(z);
  if (it == values.end()) throw std::invalid_argument("element outside the group of rho");
  return it->second;
}

bool RhoMap::validate() const {
  // e = (1/|Z|) sum_z z (x) rho(z); e^2 has z-coefficient
  // (1/|Z|^2) sum_{z1 z2 = z} rho(z1) rho(z2), compare with (1/|Z|) rho(z).
  Rational inv_order(1, static_cast<unsigned long>(group.size()));
  for (const Permutation& z : group) {
    CycMatrix sum(dim, dim, order);
    for (const Permutation& z1 : group) {
      Permutation z2 = z1.inverse() * z;
      auto it = values.find(z2);
      if (it == values.end()) return false;
      sum += (*this)(z1) * it->second;
    }
    CycMatrix lhs = sum.scaled(Cyclotomic::from_rational(inv_order * inv_order));
    CycMatrix rhs = (*this)(z).scaled(Cyclotomic::from_rational(inv_order));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool RhoMap::is_multiplicative() const {
  for (const Permutation& a : group)
    for (const Permutation& b : group)
      if (!((*this)(a * b) == (*this)(a) * (*this)(b))) return false;
  return true;
}

RhoMap RhoMap::dual() const {
  RhoMap out = *this;
  out.values.clear();
  for (const auto& [z, m] : values) out.values[z.inverse()] = m.transpose();
  out.name = name + "*";
  return out;
}

Cyclotomic RhoMap::trace_at_identity() const {
  return (*this)(Permutation(group.front().n())).trace();
}

RhoMap make_rho_trivial(const std::vector<Permutation>& z) {
  RhoMap rho;
  rho.group = sorted_group(z);
  rho.dim = 1;
  rho.order = 1;
  rho.name = "trivial";
  for (const Permutation& g : rho.group) rho.values[g] = CycMatrix::identity(1);
  return rho;
}

RhoMap make_rho_sign(const std::vector<Permutation>& z) {
  RhoMap rho;
  rho.group = sorted_group(z);
  rho.dim = 1;
  rho.order = 1;
  rho.name = "sign";
  for (const Permutation& g : rho.group)
    rho.values[g] = CycMatrix::scalar(1, Cyclotomic::from_rational(Rational(g.sign())));
  return rho;
}

RhoMap make_rho_cyclic(const std::vector<Permutation>& z, const Permutation& sigma, int a) {
  RhoMap rho;
  rho.group = sorted_group(z);
  int m = static_cast<int>(rho.group.size());
  // check Z = <sigma>
  std::vector<Permutation> powers;
  Permutation p(sigma.n());
  for (int i = 0; i < m; ++i) {
    powers.push_back(p);
    p = sigma * p;
  }
  std::sort(powers.begin(), powers.end());
  if (powers != rho.group || !p.is_identity())
    throw std::invalid_argument("cyclic character requires Z generated by sigma");
  rho.dim = 1;
  int aa = ((a % m) + m) % m;
  int d = aa == 0 ? m : std::gcd(aa, m);
  rho.order = aa == 0 ? 1 : m / d;
  rho.name = "cyclic:" + std::to_string(aa);
  // zeta_m^aa generates the order-(m/d) subfield; store values there
  Cyclotomic unit = aa == 0 ? Cyclotomic::one() : Cyclotomic::zeta(rho.order).pow(aa / d);
  Permutation q(sigma.n());
  for (int i = 0; i < m; ++i) {
    rho.values[q] = CycMatrix::scalar(1, unit.pow(i));
    q = sigma * q;
  }
  return rho;
}

RhoMap make_rho_explicit(const std::vector<Permutation>& z,
                         const std::map<Permutation, CycMatrix>& table, int order) {
  RhoMap rho;
  rho.group = sorted_group(z);
  rho.order = order;
  rho.name = "explicit";
  if (table.empty()) throw std::invalid_argument("empty character table");
  rho.dim = table.begin()->second.rows();
  for (const Permutation& g : rho.group) {
    auto it = table.find(g);
    if (it == table.end()) throw std::invalid_argument("character table missing a group element");
    if (it->second.rows() != rho.dim || it->second.cols() != rho.dim)
      throw std::invalid_argument("character table matrices must be square of equal size");
    rho.values[g] = it->second;
  }
  if (!rho.validate())
    throw std::invalid_argument("character table fails the averaging identity");
  return rho;
}

std::pair<Permutation, RhoMap> conjugate_pair(const Permutation& sigma1, const RhoMap& rho1,
                                              const Permutation& tau, const CycMatrix& a) {
  CycMatrix a_inv = a.inverse();  // throws std::domain_error if singular
  Permutation sigma2 = tau * sigma1 * tau.inverse();
  RhoMap rho2;
  rho2.dim = rho1.dim;
  rho2.order = rho1.order;
  rho2.name = rho1.name + "^tau";
  for (const Permutation& z : rho1.group) {
    Permutation zc = tau * z * tau.inverse();
    rho2.group.push_back(zc);
    rho2.values[zc] = a * rho1(z) * a_inv;
  }
  std::sort(rho2.group.begin(), rho2.group.end());
  return {sigma2, rho2};
}

}  // namespace rept
