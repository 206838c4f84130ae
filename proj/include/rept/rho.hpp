#pragma once

#include "rept/matrix.hpp"
#include "rept/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace rept {

// A map rho: Z -> M_k on a centralizer subgroup Z, required to satisfy
// sum_{z1 z2 = z} rho(z1) rho(z2) = |Z| rho(z) for all z, i.e. the averaged
// group-algebra element (1/|Z|) sum_z z (x) rho(z) is idempotent. Character
// values live in Q(zeta_order).
struct RhoMap {
  std::vector<Permutation> group;  // Z, deterministic order; group[0] is the identity
  int dim = 1;                     // k
  int order = 1;                   // cyclotomic order of the value field
  std::map<Permutation, CycMatrix> values;
  std::string name;  // "trivial", "sign", "cyclic:a", "explicit"

  const CycMatrix& operator()(const Permutation& z) const;

  // Squares (1/|Z|) sum_z z (x) rho(z) in the group-algebra tensor matrix
  // ring and compares with itself.
  bool validate() const;

  // True iff rho(z1 z2) = rho(z1) rho(z2) (a genuine representation).
  bool is_multiplicative() const;

  // rho*(z) = rho(z^{-1})^t.
  RhoMap dual() const;

  Cyclotomic trace_at_identity() const;
};

RhoMap make_rho_trivial(const std::vector<Permutation>& z);
RhoMap make_rho_sign(const std::vector<Permutation>& z);
// Requires Z to be cyclic generated by sigma; rho(sigma^m) = zeta_{|Z|}^{a m}.
RhoMap make_rho_cyclic(const std::vector<Permutation>& z, const Permutation& sigma, int a);
// Validates the supplied table.
RhoMap make_rho_explicit(const std::vector<Permutation>& z,
                         const std::map<Permutation, CycMatrix>& table, int order);

// Transports (sigma1, rho1) along tau and a basis change A:
// sigma2 = tau sigma1 tau^{-1}, rho2(tau z tau^{-1}) = A rho1(z) A^{-1}.
std::pair<Permutation, RhoMap> conjugate_pair(const Permutation& sigma1, const RhoMap& rho1,
                                              const Permutation& tau, const CycMatrix& a);

}  // namespace rept
