#include "rept/block.hpp"

#include <sstream>

namespace rept {

BlockMorphism BlockMorphism::identity(int n, int mult) {
  return diagonal(Diagram::identity(n), mult);
}

BlockMorphism BlockMorphism::diagonal(const Diagram& f, int mult) {
  BlockMorphism m(mult, mult, f.upper(), f.lower());
  if (f.is_zero()) return m;
  for (int i = 0; i < mult; ++i) m.entries_.emplace(std::make_pair(i, i), f);
  return m;
}

BlockMorphism BlockMorphism::from_matrix(const Diagram& f, const CycMatrix& a) {
  BlockMorphism m(a.rows(), a.cols(), f.upper(), f.lower());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (a.at(r, c).is_zero()) continue;
      Diagram d = f.scaled(CycPoly::constant(a.at(r, c)));
      if (!d.is_zero()) m.entries_.emplace(std::make_pair(r, c), std::move(d));
    }
  return m;
}

size_t BlockMorphism::total_terms() const {
  size_t n = 0;
  for (const auto& [rc, d] : entries_) n += d.term_count();
  return n;
}

const Diagram* BlockMorphism::entry(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? nullptr : &it->second;
}

Diagram BlockMorphism::entry_or_zero(int r, int c) const {
  const Diagram* d = entry(r, c);
  return d ? *d : Diagram::zero(upper_, lower_);
}

void BlockMorphism::set_entry(int r, int c, const Diagram& d) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("block index out of range");
  if (d.upper() != upper_ || d.lower() != lower_)
    throw std::invalid_argument("entry width mismatch");
  if (d.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = d;
}

void BlockMorphism::add_entry(int r, int c, const Diagram& d) {
  if (d.is_zero()) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    set_entry(r, c, d);
  } else {
    it->second += d;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

BlockMorphism BlockMorphism::operator-() const {
  BlockMorphism m(rows_, cols_, upper_, lower_);
  for (const auto& [rc, d] : entries_) m.entries_.emplace(rc, -d);
  return m;
}

BlockMorphism& BlockMorphism::operator+=(const BlockMorphism& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || upper_ != o.upper_ || lower_ != o.lower_)
    throw std::invalid_argument("block shape mismatch in add");
  for (const auto& [rc, d] : o.entries_) add_entry(rc.first, rc.second, d);
  return *this;
}

BlockMorphism& BlockMorphism::operator-=(const BlockMorphism& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || upper_ != o.upper_ || lower_ != o.lower_)
    throw std::invalid_argument("block shape mismatch in sub");
  for (const auto& [rc, d] : o.entries_) add_entry(rc.first, rc.second, -d);
  return *this;
}

BlockMorphism BlockMorphism::scaled(const CycPoly& c) const {
  BlockMorphism m(rows_, cols_, upper_, lower_);
  if (c.is_zero()) return m;
  for (const auto& [rc, d] : entries_) m.entries_.emplace(rc, d.scaled(c));
  return m;
}

BlockMorphism BlockMorphism::scaled(const Rational& r) const {
  return scaled(CycPoly::constant(r));
}

bool operator==(const BlockMorphism& a, const BlockMorphism& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.upper_ != b.upper_ || a.lower_ != b.lower_)
    return false;
  return a.entries_ == b.entries_;
}

BlockMorphism BlockMorphism::dual() const {
  BlockMorphism m(cols_, rows_, lower_, upper_);
  for (const auto& [rc, d] : entries_)
    m.entries_.emplace(std::make_pair(rc.second, rc.first), d.dual());
  return m;
}

CycPoly BlockMorphism::trace() const {
  if (rows_ != cols_ || upper_ != lower_)
    throw std::invalid_argument("trace of non-endomorphism block morphism");
  CycPoly total;
  for (const auto& [rc, d] : entries_)
    if (rc.first == rc.second) total += d.trace_closure();
  return total;
}

BlockMorphism BlockMorphism::partial_trace_last(int strands, int mult) const {
  if (rows_ != cols_ || upper_ != lower_)
    throw std::invalid_argument("partial trace of non-endomorphism");
  if (strands < 0 || strands > upper_ || mult < 1 || rows_ % mult != 0)
    throw std::invalid_argument("partial trace shape");
  int m = rows_ / mult;
  BlockMorphism out(m, m, upper_ - strands, lower_ - strands);
  for (const auto& [rc, d] : entries_) {
    int rI = rc.first / mult, ru = rc.first % mult;
    int cI = rc.second / mult, cu = rc.second % mult;
    if (ru != cu) continue;
    out.add_entry(rI, cI, d.close_last(strands));
  }
  return out;
}

BlockMorphism BlockMorphism::partial_trace_first(int strands, int mult) const {
  if (rows_ != cols_ || upper_ != lower_)
    throw std::invalid_argument("partial trace of non-endomorphism");
  if (strands < 0 || strands > upper_ || mult < 1 || rows_ % mult != 0)
    throw std::invalid_argument("partial trace shape");
  int m = rows_ / mult;
  BlockMorphism out(m, m, upper_ - strands, lower_ - strands);
  for (const auto& [rc, d] : entries_) {
    int ru = rc.first / m, rI = rc.first % m;
    int cu = rc.second / m, cI = rc.second % m;
    if (ru != cu) continue;
    out.add_entry(rI, cI, d.close_first(strands));
  }
  return out;
}

std::string BlockMorphism::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " blocks of " << upper_ << "->" << lower_ << ":";
  for (const auto& [rc, d] : entries_)
    os << "\n  [" << rc.first << "," << rc.second << "] " << d.str();
  return os.str();
}

BlockMorphism compose(const BlockMorphism& a, const BlockMorphism& b) {
  if (a.cols() != b.rows() || b.lower() != a.upper())
    throw std::invalid_argument("block compose: shape mismatch");
  BlockMorphism out(a.rows(), b.cols(), b.upper(), a.lower());
  // group b's entries by row for the sparse product
  for (const auto& [arc, ad] : a.entries()) {
    for (const auto& [brc, bd] : b.entries()) {
      if (brc.first != arc.second) continue;
      out.add_entry(arc.first, brc.second, compose(ad, bd));
    }
  }
  return out;
}

BlockMorphism tensor(const BlockMorphism& a, const BlockMorphism& b) {
  BlockMorphism out(a.rows() * b.rows(), a.cols() * b.cols(), a.upper() + b.upper(),
                    a.lower() + b.lower());
  for (const auto& [arc, ad] : a.entries())
    for (const auto& [brc, bd] : b.entries())
      out.add_entry(arc.first * b.rows() + brc.first, arc.second * b.cols() + brc.second,
                    tensor(ad, bd));
  return out;
}

}  // namespace rept
