#pragma once

#include "rept/diagram.hpp"

#include <map>

namespace rept {

// A morphism [k]^{oplus cols} -> [l]^{oplus rows}: a rows x cols matrix of
// diagrams sharing widths (k,l). Stored sparsely; absent entries are zero.
// Composition is matrix product over diagram composition; a scalar matrix A
// paired with a diagram f gives f (x) A with entry (i,j) = A_ij * f, so that
// (f (x) A) o (g (x) B) = (f o g) (x) (A B).
class BlockMorphism {
 public:
  BlockMorphism() : rows_(0), cols_(0), upper_(0), lower_(0) {}
  BlockMorphism(int rows, int cols, int upper, int lower)
      : rows_(rows), cols_(cols), upper_(upper), lower_(lower) {}

  static BlockMorphism identity(int n, int mult);
  // f (x) I_mult
  static BlockMorphism diagonal(const Diagram& f, int mult);
  // f (x) A
  static BlockMorphism from_matrix(const Diagram& f, const CycMatrix& a);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int upper() const { return upper_; }
  int lower() const { return lower_; }
  bool is_zero() const { return entries_.empty(); }
  size_t total_terms() const;

  const std::map<std::pair<int, int>, Diagram>& entries() const { return entries_; }
  const Diagram* entry(int r, int c) const;
  Diagram entry_or_zero(int r, int c) const;
  void set_entry(int r, int c, const Diagram& d);
  void add_entry(int r, int c, const Diagram& d);

  BlockMorphism operator-() const;
  BlockMorphism& operator+=(const BlockMorphism& o);
  BlockMorphism& operator-=(const BlockMorphism& o);
  friend BlockMorphism operator+(BlockMorphism a, const BlockMorphism& b) { return a += b; }
  friend BlockMorphism operator-(BlockMorphism a, const BlockMorphism& b) { return a -= b; }
  BlockMorphism scaled(const CycPoly& c) const;
  BlockMorphism scaled(const Rational& r) const;

  friend bool operator==(const BlockMorphism& a, const BlockMorphism& b);
  friend bool operator!=(const BlockMorphism& a, const BlockMorphism& b) { return !(a == b); }

  // Transposes the block matrix and dualizes every entry.
  BlockMorphism dual() const;

  // Categorical trace of an endomorphism: matrix trace of diagram closures.
  CycPoly trace() const;

  // Closes the rightmost `strands` strands together with the rightmost
  // multiplicity factor of size `mult` (rows = m * mult for some m).
  BlockMorphism partial_trace_last(int strands, int mult) const;
  // Same on the left.
  BlockMorphism partial_trace_first(int strands, int mult) const;

  std::string str() const;

 private:
  int rows_, cols_, upper_, lower_;
  std::map<std::pair<int, int>, Diagram> entries_;
};

BlockMorphism compose(const BlockMorphism& a, const BlockMorphism& b);
// Double Kronecker: partition tensor on entries, matrix Kronecker on blocks.
BlockMorphism tensor(const BlockMorphism& a, const BlockMorphism& b);

// A formal image of an idempotent: the pair ([n]^{oplus mult}, e).
struct KaroubiObject {
  int width = 0;
  int mult = 1;
  BlockMorphism e;
};

}  // namespace rept
