#pragma once

#include "rept/braid.hpp"
#include "rept/matrix.hpp"
#include "rept/rho.hpp"

#include <map>

namespace rept {

// A finite-scale verifier object: an S_n-graded S_n-module with homogeneous
// basis, explicit action table, and the braiding c(v (x) w) = (deg v . w) (x) v.
// Simple ones are induced from centralizer representations.
struct FiniteObject {
  int n = 1;       // ambient symmetric group
  int order = 1;   // cyclotomic order of the scalars
  std::vector<Permutation> degree;          // per basis vector
  std::map<Permutation, CycMatrix> action;  // full S_n action table
  std::string descriptor;

  int dim() const { return static_cast<int>(degree.size()); }
  const CycMatrix& act(const Permutation& g) const;

  FiniteObject dual() const;
  CycMatrix twist() const;  // theta(v) = deg(v) . v blockwise
};

// W = Ind_Z^{S_n}(rho) with degree h_i sigma h_i^{-1} on the coset h_i and
// action h .(h_i (x) v) = h_j (x) rho(z) v where h h_i = h_j z. Requires a
// genuinely multiplicative rho.
FiniteObject build_crossed_module(const CycleType& mu, const RhoMap& rho,
                                  const Guards& guards = {});

FiniteObject direct_sum(const std::vector<FiniteObject>& parts);

// Braiding of the pair (a (x) b -> b (x) a) and its inverse.
CycMatrix finite_braiding(const FiniteObject& a, const FiniteObject& b);
CycMatrix finite_braiding_inv(const FiniteObject& a, const FiniteObject& b);

// Right evaluation derived from the twist and the braiding with the dual;
// entry (0, b'*dim + b) pairs e_{b'} (x) e_b^*.
CycMatrix finite_ev_right(const FiniteObject& v);

// Quantum trace of the braid-word image on V^{(x) p}, closing the strands by
// iterated partial traces against finite_ev_right.
Cyclotomic finite_invariant(const FiniteObject& v, const BraidWord& b, const Guards& guards = {});

// Counts tuples in S_n^p fixed by the braid word's action where a positive
// crossing maps (a, b) to (a b a^{-1}, a). This is |Hom(G_L, S_n)| for the
// closure L of the braid.
long long artin_fix_count(int n, const BraidWord& b, const Guards& guards = {});

}  // namespace rept
