#pragma once

#include "rept/cycpoly.hpp"
#include "rept/guards.hpp"
#include "rept/matrix.hpp"
#include "rept/set_partition.hpp"

#include <unordered_map>
#include <vector>

namespace rept {

// A morphism [k] -> [l]: a finite linear combination of set partitions in
// P_{k,l} with CycPoly coefficients. Zero coefficients are never stored.
class Diagram {
 public:
  Diagram() : upper_(0), lower_(0) {}
  Diagram(int upper, int lower) : upper_(upper), lower_(lower) {}

  static Diagram basis(const SetPartition& p);
  static Diagram basis(const SetPartition& p, const CycPoly& coeff);
  static Diagram identity(int n) { return basis(SetPartition::identity(n)); }
  static Diagram zero(int upper, int lower) { return Diagram(upper, lower); }

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::unordered_map<SetPartition, CycPoly, SetPartitionHash>& terms() const {
    return terms_;
  }
  CycPoly coeff(const SetPartition& p) const;

  // Deterministic (sorted) term order for printing and hashing-sensitive use.
  std::vector<std::pair<SetPartition, CycPoly>> sorted_terms() const;

  void add_term(const SetPartition& p, const CycPoly& c);

  Diagram operator-() const;
  Diagram& operator+=(const Diagram& o);
  Diagram& operator-=(const Diagram& o);
  friend Diagram operator+(Diagram a, const Diagram& b) { return a += b; }
  friend Diagram operator-(Diagram a, const Diagram& b) { return a -= b; }
  Diagram scaled(const CycPoly& c) const;
  Diagram scaled(const Rational& r) const;

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

  Diagram dual() const;

  // Closes all strands of an endomorphism; each component removed by the
  // closure contributes a factor t.
  CycPoly trace_closure() const;
  Diagram close_last(int b) const;
  Diagram close_first(int b) const;

  std::string str() const;

 private:
  int upper_, lower_;
  std::unordered_map<SetPartition, CycPoly, SetPartitionHash> terms_;
};

// a o b (b applied first); extends compose on partitions bilinearly, with a
// factor t^removed per term pair.
Diagram compose(const Diagram& a, const Diagram& b);
Diagram tensor(const Diagram& a, const Diagram& b);

// The recursively defined basis x_lambda = lambda - sum_{mu > lambda} x_mu.
// Memoized; coefficients are plain rationals.
Diagram x_lambda(const SetPartition& lambda);

// Explicit matrix of a diagram under the evaluation functor to S_n-modules:
// basis tuples {1..n}^upper (columns) -> {1..n}^lower (rows), coefficients
// evaluated at t = n. A partition contributes 1 to an entry iff the combined
// index labelling is constant on each of its blocks.
CycMatrix evaluation_matrix(int n, const Diagram& f, const Guards& guards = {});

Diagram parse_diagram(const std::string& s);

}  // namespace rept
