#include "rept/invariant.hpp"

#include <algorithm>
#include <numeric>

namespace rept {

namespace {

long long int_pow(long long base, int exp) {
  long long out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// digits of idx in base `mult`, most significant first
std::vector<int> mult_digits(long long idx, int mult, int count) {
  std::vector<int> d(count);
  for (int i = count - 1; i >= 0; --i) {
    d[i] = static_cast<int>(idx % mult);
    idx /= mult;
  }
  return d;
}

BlockMorphism idem_power(const CenterObject& w, int p) {
  BlockMorphism m = BlockMorphism::identity(0, 1);
  for (int i = 0; i < p; ++i) m = tensor(m, w.e);
  return m;
}

// keeps only blocks whose row colouring is valid under chi o pi = chi
BlockMorphism filter_colourings(const BlockMorphism& m, const CenterObject& w, int p,
                                const Permutation& pi) {
  if (w.component_count() <= 1) return m;
  BlockMorphism out(m.rows(), m.cols(), m.upper(), m.lower());
  for (const auto& [rc, d] : m.entries()) {
    std::vector<int> digits = mult_digits(rc.first, w.mult, p);
    bool keep = true;
    for (int j = 0; j < p && keep; ++j)
      keep = w.component[digits[pi(j)]] == w.component[digits[j]];
    if (keep) out.set_entry(rc.first, rc.second, d);
  }
  return out;
}

BlockMorphism letter_morphism(const CenterObject& w, int active, int letter,
                              const BlockMorphism& psi_pos, const BlockMorphism& psi_neg) {
  int i = std::abs(letter);
  const BlockMorphism& psi = letter > 0 ? psi_pos : psi_neg;
  BlockMorphism left = BlockMorphism::identity(w.width * (i - 1),
                                               static_cast<int>(int_pow(w.mult, i - 1)));
  BlockMorphism right = BlockMorphism::identity(w.width * (active - i - 1),
                                                static_cast<int>(int_pow(w.mult, active - i - 1)));
  return tensor(tensor(left, psi), right);
}

void check_width_guard(const CenterObject& w, int p, const Guards& guards) {
  if (w.width * p > guards.max_ambient_width)
    throw guard_error("ambient width " + std::to_string(w.width * p) + " exceeds limit " +
                      std::to_string(guards.max_ambient_width));
}

}  // namespace

BlockMorphism braid_endomorphism(const CenterObject& w, const BraidWord& b, const Guards& guards) {
  check_width_guard(w, b.strands, guards);
  for (int letter : b.letters)
    if (letter == 0 || std::abs(letter) >= b.strands)
      throw std::invalid_argument("braid letter out of range");
  BlockMorphism m = idem_power(w, b.strands);
  if (b.letters.empty()) return m;
  BlockMorphism psi_pos = braiding_pair(w, w);
  BlockMorphism psi_neg = braiding_pair_inv(w, w);
  for (int letter : b.letters)
    m = compose(letter_morphism(w, b.strands, letter, psi_pos, psi_neg), m);
  return m;
}

CycPoly closure_invariant(const CenterObject& w, const BraidWord& b, const Guards& guards) {
  check_width_guard(w, b.strands, guards);
  int p = b.strands;
  for (int letter : b.letters)
    if (letter == 0 || std::abs(letter) >= p)
      throw std::invalid_argument("braid letter out of range");

  BlockMorphism m = filter_colourings(idem_power(w, p), w, p, b.underlying_permutation());
  int active = p;
  if (!b.letters.empty()) {
    BlockMorphism psi_pos = braiding_pair(w, w);
    BlockMorphism psi_neg = braiding_pair_inv(w, w);
    // rightmost strand needed by the remaining suffix of the word
    std::vector<int> suffix_need(b.letters.size() + 1, 1);
    for (int j = static_cast<int>(b.letters.size()) - 1; j >= 0; --j)
      suffix_need[j] = std::max(suffix_need[j + 1], std::abs(b.letters[j]) + 1);
    for (size_t j = 0; j < b.letters.size(); ++j) {
      while (active > suffix_need[j]) {
        m = m.partial_trace_last(w.width, w.mult);
        --active;
      }
      m = compose(letter_morphism(w, active, b.letters[j], psi_pos, psi_neg), m);
    }
  }
  while (active > 0) {
    m = m.partial_trace_last(w.width, w.mult);
    --active;
  }
  // all strands closed: a 1x1 block of P_{0,0}
  const Diagram* d = m.entry(0, 0);
  if (!d) return CycPoly::zero();
  return d->coeff(SetPartition());
}

InvariantResult invariant_for(const CenterObject& w, const LinkSpec& link, bool normalize,
                              const Guards& guards) {
  InvariantResult r;
  r.object_desc = w.descriptor;
  r.link_desc = link.str();
  r.raw = closure_invariant(w, link.braid(), guards);
  r.dim = dimension(w);
  r.normalized = normalize;
  r.value = normalize ? r.raw.divexact(r.dim) : r.raw;
  return r;
}

InvariantResult p_mu_rho(const CycleType& mu, const RhoMap& rho, const LinkSpec& link,
                         bool normalize, const Guards& guards) {
  if (mu.n() > guards.max_n) throw guard_error("n exceeds limit");
  CenterObject w = build_w(mu, rho);
  return invariant_for(w, link, normalize, guards);
}

InvariantResult p_n(int n, const LinkSpec& link, const Guards& guards) {
  if (n < 1) throw usage_error("P_n needs n >= 1");
  if (n > guards.max_n) throw guard_error("n exceeds limit");
  CenterObject d = build_d_n(n);
  return invariant_for(d, link, false, guards);
}

}  // namespace rept
