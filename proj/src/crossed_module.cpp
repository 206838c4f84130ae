#include "rept/crossed_module.hpp"

#include <algorithm>
#include <numeric>

namespace rept {

const CycMatrix& FiniteObject::act(const Permutation& g) const {
  auto it = action.find(g);
  if (it == action.end()) throw std::invalid_argument("action table missing an element");
  return it->second;
}

FiniteObject FiniteObject::dual() const {
  FiniteObject d;
  d.n = n;
  d.order = order;
  d.descriptor = descriptor + "*";
  for (const Permutation& g : degree) d.degree.push_back(g.inverse());
  for (const auto& [g, m] : action) d.action[g.inverse()] = m.transpose();
  return d;
}

CycMatrix FiniteObject::twist() const {
  CycMatrix t(dim(), dim(), order);
  for (int a = 0; a < dim(); ++a) {
    const CycMatrix& m = act(degree[a]);
    for (int b = 0; b < dim(); ++b) t.at(b, a) = m.at(b, a);
  }
  return t;
}

FiniteObject build_crossed_module(const CycleType& mu, const RhoMap& rho, const Guards& guards) {
  int n = mu.n();
  if (n > 6 || n > guards.max_n + 1)
    throw guard_error("crossed module: n too large");
  if (!rho.is_multiplicative())
    throw std::invalid_argument("crossed module needs a multiplicative rho");
  Permutation sigma = canonical_permutation(mu);
  {
    std::vector<Permutation> z = centralizer(sigma, guards);
    if (z != rho.group)
      throw std::invalid_argument("rho is not defined on the centralizer of sigma");
  }
  std::vector<Permutation> group = symmetric_group(n);
  // one representative per left coset of Z, in lexicographic order
  std::vector<Permutation> reps;
  std::map<Permutation, int> coset_of;
  for (const Permutation& h : group) {
    bool found = false;
    for (size_t i = 0; i < reps.size() && !found; ++i)
      for (const Permutation& z : rho.group)
        if (reps[i] * z == h) {
          coset_of[h] = static_cast<int>(i);
          found = true;
          break;
        }
    if (!found) {
      coset_of[h] = static_cast<int>(reps.size());
      reps.push_back(h);
    }
  }
  int k = rho.dim;
  FiniteObject w;
  w.n = n;
  w.order = rho.order;
  w.descriptor = "W[mu=" + mu.str() + "; rho=" + rho.name + "]";
  w.degree.reserve(reps.size() * k);
  for (const Permutation& h : reps) {
    Permutation deg = h * sigma * h.inverse();
    for (int a = 0; a < k; ++a) w.degree.push_back(deg);
  }
  int dim = static_cast<int>(w.degree.size());
  for (const Permutation& h : group) {
    CycMatrix m(dim, dim, rho.order);
    for (size_t i = 0; i < reps.size(); ++i) {
      Permutation hi = h * reps[i];
      int j = coset_of[hi];
      Permutation z = reps[j].inverse() * hi;
      const CycMatrix& rz = rho(z);
      for (int a = 0; a < k; ++a)
        for (int bidx = 0; bidx < k; ++bidx)
          m.at(j * k + bidx, static_cast<int>(i) * k + a) = rz.at(bidx, a);
    }
    w.action[h] = std::move(m);
  }
  return w;
}

FiniteObject direct_sum(const std::vector<FiniteObject>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  FiniteObject out;
  out.n = parts[0].n;
  out.order = 1;
  int dim = 0;
  for (const FiniteObject& p : parts) {
    if (p.n != out.n) throw std::invalid_argument("direct sum needs a single ambient group");
    dim += p.dim();
    out.order = std::lcm(out.order, p.order);
  }
  std::string desc;
  for (size_t i = 0; i < parts.size(); ++i)
    desc += (i ? " (+) " : "") + parts[i].descriptor;
  out.descriptor = desc;
  out.degree.reserve(dim);
  for (const FiniteObject& p : parts)
    out.degree.insert(out.degree.end(), p.degree.begin(), p.degree.end());
  for (const Permutation& g : symmetric_group(out.n)) {
    CycMatrix m(dim, dim, out.order);
    int offset = 0;
    for (const FiniteObject& p : parts) {
      const CycMatrix& pm = p.act(g);
      for (int r = 0; r < p.dim(); ++r)
        for (int c = 0; c < p.dim(); ++c) m.at(offset + r, offset + c) = pm.at(r, c);
      offset += p.dim();
    }
    out.action[g] = std::move(m);
  }
  return out;
}

CycMatrix finite_braiding(const FiniteObject& a, const FiniteObject& b) {
  int da = a.dim(), db = b.dim();
  CycMatrix m(db * da, da * db, std::lcm(a.order, b.order));
  for (int ia = 0; ia < da; ++ia) {
    const CycMatrix& actb = b.act(a.degree[ia]);
    for (int ib = 0; ib < db; ++ib)
      for (int jb = 0; jb < db; ++jb)
        if (!actb.at(jb, ib).is_zero()) m.at(jb * da + ia, ia * db + ib) = actb.at(jb, ib);
  }
  return m;
}

CycMatrix finite_braiding_inv(const FiniteObject& a, const FiniteObject& b) {
  int da = a.dim(), db = b.dim();
  CycMatrix m(da * db, db * da, std::lcm(a.order, b.order));
  for (int ia = 0; ia < da; ++ia) {
    const CycMatrix& actb = b.act(a.degree[ia].inverse());
    for (int ib = 0; ib < db; ++ib)
      for (int jb = 0; jb < db; ++jb)
        if (!actb.at(jb, ib).is_zero()) m.at(ia * db + jb, ib * da + ia) = actb.at(jb, ib);
  }
  return m;
}

CycMatrix finite_ev_right(const FiniteObject& v) {
  // ev^r = ev^l o Psi_{V,V*} o (theta_V (x) Id)
  int d = v.dim();
  FiniteObject vd = v.dual();
  CycMatrix ev_left(1, d * d, v.order);
  for (int a = 0; a < d; ++a) ev_left.at(0, a * d + a) = Cyclotomic::one(v.order);
  CycMatrix psi = finite_braiding(v, vd);
  CycMatrix theta_ext = v.twist().kronecker(CycMatrix::identity(d, v.order));
  return ev_left * psi * theta_ext;
}

namespace {

// closes the rightmost tensor factor of f (an endo of A (x) V) against ev^r
CycMatrix finite_partial_trace(const CycMatrix& f, int dim_v, const CycMatrix& ev_right) {
  int da = f.rows() / dim_v;
  CycMatrix out(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Cyclotomic sum;
      for (int b2 = 0; b2 < dim_v; ++b2)
        for (int b = 0; b < dim_v; ++b) {
          const Cyclotomic& fv = f.at(i * dim_v + b2, j * dim_v + b);
          if (fv.is_zero()) continue;
          sum += fv * ev_right.at(0, b2 * dim_v + b);
        }
      out.at(i, j) = sum;
    }
  return out;
}

}  // namespace

Cyclotomic finite_invariant(const FiniteObject& v, const BraidWord& b, const Guards& guards) {
  long long states = 1;
  for (int i = 0; i < b.strands; ++i) {
    states *= v.dim();
    if (states > guards.max_states) throw guard_error("finite invariant: dimension too large");
  }
  int p = b.strands;
  long long total = states;
  CycMatrix m = CycMatrix::identity(static_cast<int>(total), v.order);
  if (!b.letters.empty()) {
    CycMatrix psi_pos = finite_braiding(v, v);
    CycMatrix psi_neg = finite_braiding_inv(v, v);
    for (int letter : b.letters) {
      int i = std::abs(letter);
      if (i < 1 || i >= p) throw std::invalid_argument("braid letter out of range");
      const CycMatrix& psi = letter > 0 ? psi_pos : psi_neg;
      long long left = 1;
      for (int j = 0; j < i - 1; ++j) left *= v.dim();
      long long right = total / (left * v.dim() * v.dim());
      CycMatrix full = CycMatrix::identity(static_cast<int>(left), v.order)
                           .kronecker(psi)
                           .kronecker(CycMatrix::identity(static_cast<int>(right), v.order));
      m = full * m;
    }
  }
  CycMatrix ev_right = finite_ev_right(v);
  for (int s = 0; s < p; ++s) m = finite_partial_trace(m, v.dim(), ev_right);
  return m.at(0, 0);
}

long long artin_fix_count(int n, const BraidWord& b, const Guards& guards) {
  std::vector<Permutation> group = symmetric_group(n);
  long long g = static_cast<long long>(group.size());
  long long states = 1;
  for (int i = 0; i < b.strands; ++i) {
    states *= g;
    if (states > guards.max_states) throw guard_error("artin count: state space too large");
  }
  int p = b.strands;
  long long count = 0;
  std::vector<int> tuple(p, 0);
  std::vector<Permutation> work(p, Permutation(n));
  while (true) {
    for (int i = 0; i < p; ++i) work[i] = group[tuple[i]];
    for (int letter : b.letters) {
      int i = std::abs(letter) - 1;
      if (letter > 0) {
        Permutation a = work[i], bb = work[i + 1];
        work[i] = a * bb * a.inverse();
        work[i + 1] = a;
      } else {
        Permutation a = work[i], bb = work[i + 1];
        work[i] = bb;
        work[i + 1] = bb.inverse() * a * bb;
      }
    }
    bool fixed = true;
    for (int i = 0; i < p && fixed; ++i) fixed = work[i] == group[tuple[i]];
    if (fixed) ++count;
    int pos = p - 1;
    while (pos >= 0 && tuple[pos] == static_cast<int>(group.size()) - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return count;
}

}  // namespace rept
