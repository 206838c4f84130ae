#include "rept/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <numeric>

namespace rept {

namespace {

struct PairHash {
  size_t operator()(const std::pair<SetPartition, SetPartition>& pr) const {
    size_t h = pr.first.hash();
    h ^= pr.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Composition of basis partitions is the hot path of every evaluation; the
// same pairs recur constantly when powers of a braiding are taken, so the
// results are memoized. Insert-only and idempotent.
class ComposeCache {
 public:
  ComposeCache() {
    if (const char* env = std::getenv("REPT_CACHE_LIMIT")) limit_ = std::atoll(env);
  }
  std::pair<SetPartition, int> get(const SetPartition& beta, const SetPartition& alpha) {
    auto key = std::make_pair(beta, alpha);
    {
      std::lock_guard<std::mutex> lk(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto result = compose(beta, alpha);
    std::lock_guard<std::mutex> lk(mutex_);
    if (static_cast<long long>(map_.size()) < limit_) map_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::mutex mutex_;
  long long limit_ = 1 << 22;
  std::unordered_map<std::pair<SetPartition, SetPartition>, std::pair<SetPartition, int>, PairHash>
      map_;
};

ComposeCache& compose_cache() {
  static ComposeCache cache;
  return cache;
}

}  // namespace

Diagram Diagram::basis(const SetPartition& p) { return basis(p, CycPoly::one()); }

Diagram Diagram::basis(const SetPartition& p, const CycPoly& coeff) {
  Diagram d(p.upper(), p.lower());
  d.add_term(p, coeff);
  return d;
}

CycPoly Diagram::coeff(const SetPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? CycPoly::zero() : it->second;
}

std::vector<std::pair<SetPartition, CycPoly>> Diagram::sorted_terms() const {
  std::vector<std::pair<SetPartition, CycPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void Diagram::add_term(const SetPartition& p, const CycPoly& c) {
  if (p.upper() != upper_ || p.lower() != lower_)
    throw std::invalid_argument("term width mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Diagram Diagram::operator-() const {
  Diagram d(upper_, lower_);
  for (const auto& [p, c] : terms_) d.terms_.emplace(p, -c);
  return d;
}

Diagram& Diagram::operator+=(const Diagram& o) {
  if (o.upper_ != upper_ || o.lower_ != lower_)
    throw std::invalid_argument("diagram width mismatch in add");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Diagram& Diagram::operator-=(const Diagram& o) {
  if (o.upper_ != upper_ || o.lower_ != lower_)
    throw std::invalid_argument("diagram width mismatch in sub");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Diagram Diagram::scaled(const CycPoly& c) const {
  Diagram d(upper_, lower_);
  if (c.is_zero()) return d;
  for (const auto& [p, pc] : terms_) d.add_term(p, pc * c);
  return d;
}

Diagram Diagram::scaled(const Rational& r) const { return scaled(CycPoly::constant(r)); }

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.upper_ != b.upper_ || a.lower_ != b.lower_ || a.terms_.size() != b.terms_.size())
    return false;
  for (const auto& [p, c] : a.terms_) {
    auto it = b.terms_.find(p);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

Diagram Diagram::dual() const {
  Diagram d(lower_, upper_);
  for (const auto& [p, c] : terms_) d.add_term(p.dual(), c);
  return d;
}

CycPoly Diagram::trace_closure() const {
  if (upper_ != lower_) throw std::invalid_argument("trace of non-endomorphism");
  CycPoly total;
  for (const auto& [p, c] : terms_) {
    auto [rest, removed] = rept::close_last(p, upper_);
    (void)rest;
    total += c.shifted(removed);
  }
  return total;
}

Diagram Diagram::close_last(int b) const {
  if (upper_ != lower_) throw std::invalid_argument("closure of non-endomorphism");
  Diagram d(upper_ - b, lower_ - b);
  for (const auto& [p, c] : terms_) {
    auto [rest, removed] = rept::close_last(p, b);
    d.add_term(rest, removed ? c.shifted(removed) : c);
  }
  return d;
}

Diagram Diagram::close_first(int b) const {
  if (upper_ != lower_) throw std::invalid_argument("closure of non-endomorphism");
  Diagram d(upper_ - b, lower_ - b);
  for (const auto& [p, c] : terms_) {
    auto [rest, removed] = rept::close_first(p, b);
    d.add_term(rest, removed ? c.shifted(removed) : c);
  }
  return d;
}

std::string Diagram::str() const {
  if (terms_.empty()) return "0 : " + std::to_string(upper_) + "->" + std::to_string(lower_);
  std::ostringstream os;
  auto terms = sorted_terms();
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    std::string blocks = terms[i].first.str();
    blocks = blocks.substr(0, blocks.rfind(" :"));
    os << "(" << terms[i].second.str() << ") * " << blocks;
  }
  os << " : " << upper_ << "->" << lower_;
  return os.str();
}

Diagram compose(const Diagram& a, const Diagram& b) {
  if (b.lower() != a.upper())
    throw std::invalid_argument("diagram compose: width mismatch");
  Diagram out(b.upper(), a.lower());
  for (const auto& [pb, cb] : b.terms()) {
    for (const auto& [pa, ca] : a.terms()) {
      auto [p, removed] = compose_cache().get(pa, pb);
      CycPoly c = ca * cb;
      if (removed) c = c.shifted(removed);
      out.add_term(p, c);
    }
  }
  return out;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram out(a.upper() + b.upper(), a.lower() + b.lower());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add_term(tensor(pa, pb), ca * cb);
  return out;
}

Diagram x_lambda(const SetPartition& lambda) {
  static std::mutex mutex;
  static std::unordered_map<SetPartition, Diagram, SetPartitionHash> cache;
  {
    std::lock_guard<std::mutex> lk(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  Diagram result = Diagram::basis(lambda);
  for (const SetPartition& mu : coarsenings(lambda)) result -= x_lambda(mu);
  std::lock_guard<std::mutex> lk(mutex);
  cache.emplace(lambda, result);
  return result;
}

CycMatrix evaluation_matrix(int n, const Diagram& f, const Guards& guards) {
  long long cols = 1, rows = 1;
  for (int i = 0; i < f.upper(); ++i) {
    cols *= n;
    if (cols > guards.max_matrix_size) throw guard_error("evaluation matrix too large");
  }
  for (int i = 0; i < f.lower(); ++i) {
    rows *= n;
    if (rows > guards.max_matrix_size) throw guard_error("evaluation matrix too large");
  }
  int order = 1;
  for (const auto& [p, c] : f.terms()) order = std::lcm(order, c.order());
  CycMatrix m(static_cast<int>(rows), static_cast<int>(cols), order);
  if (n == 0) {
    // [0]-side is the 1-dim space; only the empty partition contributes.
    for (const auto& [p, c] : f.terms())
      if (p.num_blocks() == 0) m.at(0, 0) += c.eval(0);
    return m;
  }
  for (const auto& [p, c] : f.terms()) {
    Cyclotomic value = c.eval(n);
    if (value.is_zero()) continue;
    int nb = p.num_blocks();
    std::vector<int> label(nb, 0);
    // every assignment of {1..n} labels to blocks hits exactly one entry
    while (true) {
      long long col = 0, row = 0;
      for (int v = 0; v < f.upper(); ++v) col = col * n + label[p.block_of(v)];
      for (int v = 0; v < f.lower(); ++v) row = row * n + label[p.block_of(f.upper() + v)];
      m.at(static_cast<int>(row), static_cast<int>(col)) += value;
      int pos = nb - 1;
      while (pos >= 0 && label[pos] == n - 1) label[pos--] = 0;
      if (pos < 0) break;
      ++label[pos];
    }
  }
  return m;
}

Diagram parse_diagram(const std::string& s) {
  size_t colon = s.rfind(':');
  if (colon == std::string::npos) throw usage_error("diagram text missing ': k->l'");
  std::string widths = s.substr(colon + 1);
  size_t arrow = widths.find("->");
  if (arrow == std::string::npos) throw usage_error("diagram text missing '->'");
  int k = 0, l = 0;
  try {
    k = std::stoi(widths.substr(0, arrow));
    l = std::stoi(widths.substr(arrow + 2));
  } catch (const std::exception&) {
    throw usage_error("bad widths in diagram text");
  }
  Diagram out(k, l);
  std::string body = s.substr(0, colon);
  // terms separated by top-level +/-
  size_t pos = 0;
  bool neg = false;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == '+' || body[pos] == '-')) {
      if (body[pos] == '-') neg = !neg;
      if (body[pos] == '+') neg = false;
      ++pos;
    }
    if (pos >= body.size()) break;
    // coefficient up to '*{', then block list up to matching '}}'
    size_t bstart = body.find('{', pos);
    if (bstart == std::string::npos) throw usage_error("diagram term missing blocks");
    std::string coeff_text = body.substr(pos, bstart - pos);
    while (!coeff_text.empty() && (coeff_text.back() == ' ' || coeff_text.back() == '*'))
      coeff_text.pop_back();
    if (!coeff_text.empty() && coeff_text.front() == '(' && coeff_text.back() == ')')
      coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
    CycPoly coeff = coeff_text.empty() ? CycPoly::one() : parse_cycpoly(coeff_text);
    int depth = 0;
    size_t bend = bstart;
    for (; bend < body.size(); ++bend) {
      if (body[bend] == '{') ++depth;
      if (body[bend] == '}') {
        --depth;
        if (depth == 0) break;
      }
    }
    if (depth != 0) throw usage_error("unbalanced braces in diagram text");
    std::string blocks = body.substr(bstart, bend - bstart + 1) + " : " + std::to_string(k) +
                         "->" + std::to_string(l);
    SetPartition p = parse_set_partition(blocks);
    out.add_term(p, neg ? -coeff : coeff);
    neg = false;
    pos = bend + 1;
  }
  return out;
}

}  // namespace rept
