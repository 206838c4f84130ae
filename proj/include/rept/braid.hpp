#pragma once

#include "rept/guards.hpp"
#include "rept/perm.hpp"

#include <string>
#include <vector>

namespace rept {

// A braid word on `strands` strands; letter +i is the positive crossing of
// strands i, i+1 (1 <= i < strands), -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  // The permutation of strand positions effected by the word.
  Permutation underlying_permutation() const;

  std::string str() const;  // "+1 -2 +1"
};

// The (p,q)-torus link as a braid closure: |q| repetitions of the full cycle
// on p strands. The letter sign is fixed by the convention that q <= 0 uses
// positive crossings; see the crossing-convention note in the README.
BraidWord torus_braid(int p, int q);

// "torus:p,q" or "braid:p:+1 -2 +1" (quotes around the letters optional).
struct LinkSpec {
  enum class Kind { torus, braid };
  Kind kind = Kind::torus;
  int p = 1;
  int q = 0;
  BraidWord word;  // for kind == braid

  BraidWord braid() const;
  std::string str() const;
  static LinkSpec parse(const std::string& text);
  static LinkSpec torus(int p, int q);
};

}  // namespace rept
