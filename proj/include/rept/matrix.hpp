#pragma once

#include "rept/cyclotomic.hpp"

#include <vector>

namespace rept {

// Small dense matrix over a cyclotomic field. Used for character values,
// explicit module actions and the interpolation-functor images.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(int rows, int cols, int order = 1)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Cyclotomic(order)) {}

  static CycMatrix identity(int n, int order = 1);
  static CycMatrix scalar(int n, const Cyclotomic& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclotomic& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyclotomic& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  CycMatrix transpose() const;
  Cyclotomic trace() const;
  bool is_zero() const;

  CycMatrix& operator+=(const CycMatrix& o);
  CycMatrix& operator-=(const CycMatrix& o);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  CycMatrix scaled(const Cyclotomic& c) const;
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  CycMatrix kronecker(const CycMatrix& o) const;

  int rank() const;               // exact Gaussian elimination
  CycMatrix inverse() const;      // throws std::domain_error if singular

 private:
  int rows_, cols_;
  std::vector<Cyclotomic> a_;
};

}  // namespace rept
