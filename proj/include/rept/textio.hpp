#pragma once

#include "rept/center.hpp"
#include "rept/crossed_module.hpp"
#include "rept/invariant.hpp"

#include <optional>
#include <string>

namespace rept {

// Object descriptor grammar:
//   W[mu=(2,2); rho=trivial]     W[mu=(3); rho=cyclic:1]
//   W[sigma=(1 2 3); rho=@file.json]
//   V[mu=(3)]                    D[n=3]
// rho kinds: trivial | sign | cyclic:a | @path-to-json.
struct ObjectSpec {
  enum class Kind { w, v, d };
  Kind kind = Kind::w;
  std::optional<CycleType> mu;
  std::optional<Permutation> sigma;
  std::string rho_kind = "trivial";
  int n = 0;  // for D[n=...]

  std::string str() const;
};

ObjectSpec parse_object_spec(const std::string& text);

// Builds the rho of the spec on the centralizer of sigma.
RhoMap build_rho(const std::string& rho_kind, const Permutation& sigma,
                 const Guards& guards = {});

CenterObject build_center_object(const ObjectSpec& spec, const Guards& guards = {});

// The corresponding verifier object (W and V specs only).
FiniteObject build_finite_object(const ObjectSpec& spec, const Guards& guards = {});

// RhoMap file format: {"cyclotomic_order": N,
//   "elements": [{"element": "(1 2)", "matrix": [["1","0"],["0","-1"]]}, ...]}
RhoMap parse_rho_file(const std::string& path, const Permutation& sigma,
                      const Guards& guards = {});

// {"variable":"t","cyclotomic_order":N,"terms":[{"deg":d,"coeff":["a0",...]}]}
std::string cycpoly_to_json(const CycPoly& p);
CycPoly cycpoly_from_json(const std::string& json_text);

std::string invariant_to_json(const InvariantResult& r);
std::string invariant_to_csv_row(const InvariantResult& r);

}  // namespace rept
