#pragma once

#include "rept/braid.hpp"
#include "rept/center.hpp"

namespace rept {

struct InvariantResult {
  CycPoly value;      // normalized value if `normalized` is set
  CycPoly raw;        // closure value before normalization
  CycPoly dim;        // dimension of the colouring object
  bool normalized = false;
  std::string object_desc;
  std::string link_desc;
};

// The image of the braid word on W^{(x) p}: letters act by the pair braiding
// of adjacent factors, composed in word order onto e^{(x) p}.
BlockMorphism braid_endomorphism(const CenterObject& w, const BraidWord& b,
                                 const Guards& guards = {});

// Categorical trace of the braid image, closing strand groups eagerly once no
// remaining letter touches them. Colourings of block-diagonal summands that
// are not fixed by the braid's underlying permutation are dropped up front;
// they cannot meet the diagonal of the final trace.
CycPoly closure_invariant(const CenterObject& w, const BraidWord& b, const Guards& guards = {});

InvariantResult invariant_for(const CenterObject& w, const LinkSpec& link, bool normalize,
                              const Guards& guards = {});

// P for the interpolation object of (mu, rho).
InvariantResult p_mu_rho(const CycleType& mu, const RhoMap& rho, const LinkSpec& link,
                         bool normalize, const Guards& guards = {});

// P for the block-diagonal regular object of S_n.
InvariantResult p_n(int n, const LinkSpec& link, const Guards& guards = {});

}  // namespace rept
