#pragma once

#include "rept/block.hpp"
#include "rept/rho.hpp"

#include <optional>
#include <vector>

namespace rept {

// An object of the center: a formal image ([n]^{oplus mult}, e) together with
// the seed d1 of its half-braiding (an endomorphism of width n+1 satisfying
// the naturality conditions) and the seed of the inverse braiding. Direct
// sums are realized block-diagonally; `component` tags each multiplicity
// index with its summand so evaluations can skip colorings that cannot close.
struct CenterObject {
  int width = 0;  // n
  int mult = 1;   // k
  BlockMorphism e;
  BlockMorphism d1;
  BlockMorphism d1_inv;
  std::vector<int> component;  // size mult
  std::string descriptor;

  // provenance for closed-form twists, duals and inverse seeds
  std::optional<Permutation> sigma;
  std::optional<RhoMap> rho;

  int component_count() const;

  // c_m: W (x) [m] -> [m] (x) W, derived on demand and never cached.
  BlockMorphism braid_past(int m) const;
  BlockMorphism braid_past_inv(int m) const;
};

// d1 = 1_{n+1} + sum_i (E^i_{sigma(i)} - E^i_i), at most 2n+1 terms.
Diagram build_d1_plain(const Permutation& sigma);

// e_rho = (1/|Z|) sum_{z in Z} x_z (x) rho(z), an idempotent of width n.
BlockMorphism build_e_rho(const Permutation& sigma, const RhoMap& rho);

// (e_rho (x) 1) d1 (e_rho (x) 1).
BlockMorphism build_d1_rho(const Permutation& sigma, const RhoMap& rho);

// The interpolation object W_{sigma,rho}; rho must validate on Z(sigma).
CenterObject build_w(const Permutation& sigma, const RhoMap& rho);
CenterObject build_w(const CycleType& mu, const RhoMap& rho);

// (X, Psi): any Karoubi object with the symmetric half-braiding.
CenterObject build_symmetric(int width, const BlockMorphism& idempotent,
                             const std::string& descriptor);

// V^mu = ([n] (x) [n], e_mu) with e_mu = (1/|Z|) sum_z x_z (x) x_1 and the
// braiding inherited from W_{sigma,triv} (x) ([n], x_1, symmetric).
CenterObject build_v_mu(const CycleType& mu);
// D_n = block-diagonal sum of V^mu over all mu |- n (uniform width 2n).
CenterObject build_d_n(int n);

CenterObject tensor_center(const CenterObject& a, const CenterObject& b);
CenterObject direct_sum_center(const std::vector<CenterObject>& parts);

// W_{sigma,rho}^* = W_{sigma,rho*}; requires (sigma,rho) provenance.
CenterObject dual_center(const CenterObject& w);

// Braiding of the pair: a's half-braiding evaluated at b's underlying object,
// an isomorphism (a (x) b -> b (x) a) of the Karoubi images.
BlockMorphism braiding_pair(const CenterObject& a, const CenterObject& b);
BlockMorphism braiding_pair_inv(const CenterObject& a, const CenterObject& b);

// Checks the four naturality identities for d1/d2 by exact diagram
// arithmetic: d1 (Id (x) pi_*) = Id (x) pi_*, (Id (x) pi^*) d1 = Id (x) pi^*,
// and d2 commutes with Id (x) pi_X and Id (x) pi_H.
bool verify_naturality(const CenterObject& w);

// d2 = (Id (x) Psi)(d1 (x) 1)(Id (x) Psi)(d1 (x) 1), width n+2.
BlockMorphism build_d2(const CenterObject& w);

// Evaluation and coevaluation of the Karoubi object V = ([n]^{oplus k}, e):
// the strand pairing i ~ n+i combined with the multiplicity pairing delta_ij,
// sandwiched by the idempotents of the respective sides.
BlockMorphism ev_left(const CenterObject& w);    // V* (x) V -> [0]
BlockMorphism ev_right(const CenterObject& w);   // V (x) V* -> [0]
BlockMorphism coev_left(const CenterObject& w);  // [0] -> V (x) V*
BlockMorphism coev_right(const CenterObject& w); // [0] -> V* (x) V

// Debug/strict mode: run verify_naturality at construction time.
void set_strict_construction(bool on);
bool strict_construction_enabled();

enum class TwistMode { closed_form, diagrammatic_left, diagrammatic_right };
BlockMorphism twist(const CenterObject& w, TwistMode mode);

CycPoly dimension(const CenterObject& w);

}  // namespace rept
