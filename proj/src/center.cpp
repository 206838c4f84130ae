#include "rept/center.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace rept {

namespace {

std::atomic<bool> strict_flag{false};

// f (x) 1_m on the right, multiplicity untouched
BlockMorphism extend_right(const BlockMorphism& f, int m) {
  return tensor(f, BlockMorphism::diagonal(Diagram::identity(m), 1));
}

BlockMorphism psi_block(int a, int b, int mult) {
  return BlockMorphism::diagonal(Diagram::basis(symmetry(a, b)), mult);
}

}  // namespace

void set_strict_construction(bool on) { strict_flag = on; }
bool strict_construction_enabled() { return strict_flag; }

int CenterObject::component_count() const {
  int m = 0;
  for (int c : component) m = std::max(m, c + 1);
  return m;
}

BlockMorphism CenterObject::braid_past(int m) const {
  if (m == 0) return e;
  BlockMorphism c1 = compose(psi_block(width, 1, mult), d1);
  BlockMorphism c = c1;
  for (int j = 1; j < m; ++j)
    c = compose(tensor(BlockMorphism::diagonal(Diagram::identity(j), 1), c1),
                extend_right(c, 1));
  return c;
}

BlockMorphism CenterObject::braid_past_inv(int m) const {
  if (m == 0) return e;
  BlockMorphism c1i = compose(d1_inv, psi_block(1, width, mult));
  BlockMorphism c = c1i;
  for (int j = 1; j < m; ++j)
    c = compose(extend_right(c, 1),
                tensor(BlockMorphism::diagonal(Diagram::identity(j), 1), c1i));
  return c;
}

Diagram build_d1_plain(const Permutation& sigma) {
  int n = sigma.n();
  Diagram d = Diagram::identity(n + 1);
  for (int i = 1; i <= n; ++i) {
    int si = sigma(i - 1) + 1;
    if (si == i) continue;
    d += Diagram::basis(strand_map(n, i, si));
    d -= Diagram::basis(strand_map(n, i, i));
  }
  return d;
}

BlockMorphism build_e_rho(const Permutation& sigma, const RhoMap& rho) {
  int n = sigma.n();
  for (const Permutation& z : rho.group)
    if (!(z * sigma == sigma * z))
      throw std::invalid_argument("rho group does not centralize sigma");
  Rational inv_order(1, static_cast<unsigned long>(rho.group.size()));
  BlockMorphism e(rho.dim, rho.dim, n, n);
  for (const Permutation& z : rho.group) {
    Diagram xz = x_lambda(SetPartition::permutation(z.images())).scaled(inv_order);
    e += BlockMorphism::from_matrix(xz, rho(z));
  }
  return e;
}

BlockMorphism build_d1_rho(const Permutation& sigma, const RhoMap& rho) {
  BlockMorphism e1 = extend_right(build_e_rho(sigma, rho), 1);
  BlockMorphism d1k = BlockMorphism::diagonal(build_d1_plain(sigma), rho.dim);
  return compose(e1, compose(d1k, e1));
}

CenterObject build_w(const Permutation& sigma, const RhoMap& rho) {
  if (!rho.validate()) throw verify_error("rho fails the averaging identity");
  {
    std::vector<Permutation> z = centralizer(sigma);
    if (z != rho.group)
      throw std::invalid_argument("rho is not defined on the centralizer of sigma");
  }
  CenterObject w;
  w.width = sigma.n();
  w.mult = rho.dim;
  w.e = build_e_rho(sigma, rho);
  w.d1 = build_d1_rho(sigma, rho);
  w.d1_inv = build_d1_rho(sigma.inverse(), rho);
  w.component.assign(w.mult, 0);
  w.sigma = sigma;
  w.rho = rho;
  {
    std::ostringstream os;
    os << "W[mu=" << CycleType(sigma.cycle_type()).str() << "; rho=" << rho.name << "]";
    w.descriptor = os.str();
  }
  if (strict_construction_enabled() && !verify_naturality(w))
    throw verify_error("constructed object fails the naturality conditions");
  return w;
}

CenterObject build_w(const CycleType& mu, const RhoMap& rho) {
  return build_w(canonical_permutation(mu), rho);
}

CenterObject build_symmetric(int width, const BlockMorphism& idempotent,
                             const std::string& descriptor) {
  CenterObject w;
  w.width = width;
  w.mult = idempotent.rows();
  w.e = idempotent;
  w.d1 = extend_right(idempotent, 1);
  w.d1_inv = w.d1;
  w.component.assign(w.mult, 0);
  w.descriptor = descriptor;
  return w;
}

CenterObject build_v_mu(const CycleType& mu) {
  int n = mu.n();
  Permutation sigma = canonical_permutation(mu);
  RhoMap triv = make_rho_trivial(centralizer(sigma));
  CenterObject left = build_w(sigma, triv);
  BlockMorphism x1 =
      BlockMorphism::diagonal(x_lambda(SetPartition::identity(n)), 1);
  CenterObject right = build_symmetric(n, x1, "[" + std::to_string(n) + "]_x1");
  CenterObject v = tensor_center(left, right);
  v.descriptor = "V[mu=" + mu.str() + "]";
  v.sigma.reset();
  v.rho.reset();
  return v;
}

CenterObject build_d_n(int n) {
  std::vector<CenterObject> parts;
  for (const CycleType& mu : all_cycle_types(n)) parts.push_back(build_v_mu(mu));
  CenterObject d = direct_sum_center(parts);
  d.descriptor = "D[n=" + std::to_string(n) + "]";
  return d;
}

CenterObject tensor_center(const CenterObject& a, const CenterObject& b) {
  CenterObject w;
  w.width = a.width + b.width;
  w.mult = a.mult * b.mult;
  w.e = tensor(a.e, b.e);
  // braiding seed of the tensor product: braid the right factor past the new
  // strand, swap it inward, braid the left factor, swap back
  BlockMorphism first = tensor(BlockMorphism::identity(a.width, a.mult), b.d1);
  BlockMorphism swap_in = BlockMorphism::diagonal(
      tensor(Diagram::identity(a.width), Diagram::basis(symmetry(b.width, 1))), w.mult);
  BlockMorphism middle = tensor(a.d1, BlockMorphism::identity(b.width, b.mult));
  BlockMorphism swap_out = BlockMorphism::diagonal(
      tensor(Diagram::identity(a.width), Diagram::basis(symmetry(1, b.width))), w.mult);
  w.d1 = compose(swap_out, compose(middle, compose(swap_in, first)));
  BlockMorphism first_inv = tensor(BlockMorphism::identity(a.width, a.mult), b.d1_inv);
  BlockMorphism middle_inv = tensor(a.d1_inv, BlockMorphism::identity(b.width, b.mult));
  w.d1_inv = compose(first_inv, compose(swap_out, compose(middle_inv, swap_in)));
  w.component.resize(w.mult);
  int bcomp = b.component_count();
  for (int i = 0; i < a.mult; ++i)
    for (int j = 0; j < b.mult; ++j)
      w.component[i * b.mult + j] = a.component[i] * bcomp + b.component[j];
  w.descriptor = a.descriptor + " (x) " + b.descriptor;
  return w;
}

CenterObject direct_sum_center(const std::vector<CenterObject>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  CenterObject w;
  w.width = parts[0].width;
  w.mult = 0;
  for (const CenterObject& p : parts) {
    if (p.width != w.width)
      throw std::invalid_argument("direct sum requires uniform width");
    w.mult += p.mult;
  }
  w.e = BlockMorphism(w.mult, w.mult, w.width, w.width);
  w.d1 = BlockMorphism(w.mult, w.mult, w.width + 1, w.width + 1);
  w.d1_inv = w.d1;
  w.component.resize(w.mult);
  int offset = 0, comp_offset = 0;
  std::ostringstream desc;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const CenterObject& p = parts[pi];
    for (const auto& [rc, d] : p.e.entries())
      w.e.set_entry(offset + rc.first, offset + rc.second, d);
    for (const auto& [rc, d] : p.d1.entries())
      w.d1.set_entry(offset + rc.first, offset + rc.second, d);
    for (const auto& [rc, d] : p.d1_inv.entries())
      w.d1_inv.set_entry(offset + rc.first, offset + rc.second, d);
    for (int i = 0; i < p.mult; ++i)
      w.component[offset + i] = comp_offset + p.component[i];
    offset += p.mult;
    comp_offset += p.component_count();
    if (pi) desc << " (+) ";
    desc << p.descriptor;
  }
  w.descriptor = desc.str();
  return w;
}

CenterObject dual_center(const CenterObject& w) {
  if (!w.sigma || !w.rho)
    throw std::invalid_argument("dual object needs (sigma, rho) provenance");
  CenterObject d = build_w(*w.sigma, w.rho->dual());
  return d;
}

BlockMorphism braiding_pair(const CenterObject& a, const CenterObject& b) {
  BlockMorphism base = a.braid_past(b.width);
  int ka = a.mult, kb = b.mult;
  BlockMorphism expanded(kb * ka, ka * kb, a.width + b.width, a.width + b.width);
  for (const auto& [rc, d] : base.entries())
    for (int ib = 0; ib < kb; ++ib)
      expanded.set_entry(ib * ka + rc.first, rc.second * kb + ib, d);
  return compose(tensor(b.e, a.e), compose(expanded, tensor(a.e, b.e)));
}

BlockMorphism braiding_pair_inv(const CenterObject& a, const CenterObject& b) {
  BlockMorphism base = a.braid_past_inv(b.width);
  int ka = a.mult, kb = b.mult;
  BlockMorphism expanded(ka * kb, kb * ka, a.width + b.width, a.width + b.width);
  for (const auto& [rc, d] : base.entries())
    for (int ib = 0; ib < kb; ++ib)
      expanded.set_entry(rc.first * kb + ib, ib * ka + rc.second, d);
  return compose(tensor(a.e, b.e), compose(expanded, tensor(b.e, a.e)));
}

BlockMorphism build_d2(const CenterObject& w) {
  BlockMorphism xpart = BlockMorphism::diagonal(
      tensor(Diagram::identity(w.width), Diagram::basis(pi_cross())), w.mult);
  BlockMorphism d1x = extend_right(w.d1, 1);
  return compose(xpart, compose(d1x, compose(xpart, d1x)));
}

bool verify_naturality(const CenterObject& w) {
  BlockMorphism unit_part =
      tensor(w.e, BlockMorphism::diagonal(Diagram::basis(pi_unit()), 1));
  if (compose(w.d1, unit_part) != unit_part) return false;
  BlockMorphism counit_part =
      tensor(w.e, BlockMorphism::diagonal(Diagram::basis(pi_counit()), 1));
  if (compose(counit_part, w.d1) != counit_part) return false;
  BlockMorphism d2 = build_d2(w);
  BlockMorphism cross = tensor(w.e, BlockMorphism::diagonal(Diagram::basis(pi_cross()), 1));
  if (compose(d2, cross) != compose(cross, d2)) return false;
  BlockMorphism merge = tensor(w.e, BlockMorphism::diagonal(Diagram::basis(pi_merge()), 1));
  if (compose(d2, merge) != compose(merge, d2)) return false;
  return true;
}

namespace {

BlockMorphism ev_base(int width, int mult) {
  BlockMorphism base(1, mult * mult, 2 * width, 0);
  Diagram pair = Diagram::basis(pairing(width));
  for (int i = 0; i < mult; ++i) base.set_entry(0, i * mult + i, pair);
  return base;
}

BlockMorphism coev_base(int width, int mult) {
  BlockMorphism base(mult * mult, 1, 0, 2 * width);
  Diagram copair = Diagram::basis(copairing(width));
  for (int i = 0; i < mult; ++i) base.set_entry(i * mult + i, 0, copair);
  return base;
}

}  // namespace

BlockMorphism ev_left(const CenterObject& w) {
  return compose(ev_base(w.width, w.mult), tensor(w.e.dual(), w.e));
}

BlockMorphism ev_right(const CenterObject& w) {
  return compose(ev_base(w.width, w.mult), tensor(w.e, w.e.dual()));
}

BlockMorphism coev_left(const CenterObject& w) {
  return compose(tensor(w.e, w.e.dual()), coev_base(w.width, w.mult));
}

BlockMorphism coev_right(const CenterObject& w) {
  return compose(tensor(w.e.dual(), w.e), coev_base(w.width, w.mult));
}

BlockMorphism twist(const CenterObject& w, TwistMode mode) {
  if (mode == TwistMode::closed_form) {
    if (!w.sigma) throw std::invalid_argument("closed-form twist needs sigma provenance");
    Diagram sig_inv = Diagram::basis(SetPartition::permutation(w.sigma->inverse().images()));
    return compose(BlockMorphism::diagonal(sig_inv, w.mult), w.e);
  }
  BlockMorphism psi = braiding_pair(w, w);
  BlockMorphism edual = w.e.dual();
  if (mode == TwistMode::diagrammatic_left) {
    BlockMorphism start = tensor(coev_right(w), w.e);
    BlockMorphism mid = tensor(edual, psi);
    BlockMorphism finish = tensor(ev_left(w), w.e);
    return compose(finish, compose(mid, start));
  }
  BlockMorphism start = tensor(w.e, coev_left(w));
  BlockMorphism mid = tensor(psi, edual);
  BlockMorphism finish = tensor(w.e, ev_right(w));
  return compose(finish, compose(mid, start));
}

CycPoly dimension(const CenterObject& w) { return w.e.trace(); }

}  // namespace rept
