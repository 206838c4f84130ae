#include "rept/matrix.hpp"

#include <stdexcept>

namespace rept {

CycMatrix CycMatrix::identity(int n, int order) {
  CycMatrix m(n, n, order);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
  return m;
}

CycMatrix CycMatrix::scalar(int n, const Cyclotomic& c) {
  CycMatrix m(n, n, c.order());
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Cyclotomic CycMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Cyclotomic t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Cyclotomic& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        const Cyclotomic& y = b.at(k, c);
        if (y.is_zero()) continue;
        m.at(r, c) += x * y;
      }
    }
  return m;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
  CycMatrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& o) const {
  CycMatrix m(rows_ * o.rows_, cols_ * o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero()) continue;
      for (int r2 = 0; r2 < o.rows_; ++r2)
        for (int c2 = 0; c2 < o.cols_; ++c2)
          m.at(r * o.rows_ + r2, c * o.cols_ + c2) = at(r, c) * o.at(r2, c2);
    }
  return m;
}

int CycMatrix::rank() const {
  CycMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows_; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int cc = 0; cc < m.cols_; ++cc) std::swap(m.at(pivot, cc), m.at(rank, cc));
    Cyclotomic inv = m.at(rank, c).inverse();
    for (int cc = c; cc < m.cols_; ++cc) m.at(rank, cc) *= inv;
    for (int r = 0; r < m.rows_; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      Cyclotomic f = m.at(r, c);
      for (int cc = c; cc < m.cols_; ++cc) m.at(r, cc) -= f * m.at(rank, cc);
    }
    ++rank;
  }
  return rank;
}

CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  CycMatrix m = *this;
  CycMatrix inv = identity(rows_);
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    for (int cc = 0; cc < cols_; ++cc) {
      std::swap(m.at(pivot, cc), m.at(c, cc));
      std::swap(inv.at(pivot, cc), inv.at(c, cc));
    }
    Cyclotomic f = m.at(c, c).inverse();
    for (int cc = 0; cc < cols_; ++cc) {
      m.at(c, cc) *= f;
      inv.at(c, cc) *= f;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      Cyclotomic g = m.at(r, c);
      for (int cc = 0; cc < cols_; ++cc) {
        m.at(r, cc) -= g * m.at(c, cc);
        inv.at(r, cc) -= g * inv.at(c, cc);
      }
    }
  }
  return inv;
}

}  // namespace rept
