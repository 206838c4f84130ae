#pragma once

#include "rept/guards.hpp"

#include <compare>
#include <string>
#include <vector>

namespace rept {

// A permutation of {0..n-1} in one-line notation. Composition follows
// function application: (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation from_cycles(const std::string& text, int n);  // "(1 2)(3 4)", 1-based

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  int sign() const;
  long order() const;
  std::vector<std::vector<int>> cycles() const;        // 0-based, including fixed points
  std::vector<int> cycle_type() const;                 // weakly decreasing parts

  std::string cycle_string() const;  // "(1 2)(3 4)" 1-based, "()" for identity

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// An integer partition mu |- n, weakly decreasing positive parts.
struct CycleType {
  std::vector<int> parts;

  CycleType() = default;
  explicit CycleType(std::vector<int> p);

  int n() const;
  std::string str() const;  // "(2,2)"
  static CycleType parse(const std::string& s);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

std::vector<CycleType> all_cycle_types(int n);

// sigma of cycle type mu built from consecutive cycles (1..mu1)(mu1+1..)...
Permutation canonical_permutation(const CycleType& mu);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

// Brute-force centralizer of sigma in S_n; n is guarded.
std::vector<Permutation> centralizer(const Permutation& sigma, const Guards& guards = {});

// |Z(sigma)| from the cycle type: prod_i i^{n_i} n_i!.
long long centralizer_order(const CycleType& mu);

}  // namespace rept
