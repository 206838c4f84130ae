#include "rept/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <functional>

namespace rept {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<int> cycle;
  std::string token;
  bool in_cycle = false;
  auto flush = [&]() {
    if (token.empty()) return;
    int v;
    try {
      v = std::stoi(token);
    } catch (const std::exception&) {
      throw usage_error("bad cycle entry '" + token + "'");
    }
    if (v < 1 || v > n) throw usage_error("cycle entry out of range");
    cycle.push_back(v - 1);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',') {
      flush();
    } else if (ch == '(') {
      if (in_cycle) throw usage_error("nested parenthesis in cycle notation");
      in_cycle = true;
      cycle.clear();
    } else if (ch == ')') {
      flush();
      in_cycle = false;
      for (size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
        if (img[from] != from) throw usage_error("repeated entry in cycle notation");
        img[from] = to;
      }
      // re-validate below through the constructor
      cycle.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
    } else {
      throw usage_error(std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (in_cycle) throw usage_error("unterminated cycle");
  return Permutation(img);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < n(); ++i) inv[img_[i]] = i;
  return Permutation(inv);
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

long Permutation::order() const {
  long lcm = 1;
  for (const auto& c : cycles()) lcm = std::lcm(lcm, static_cast<long>(c.size()));
  return lcm;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cycle.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << " ";
      os << c[i] + 1;
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(a.n());
  for (int i = 0; i < a.n(); ++i) img[i] = a(b(i));
  return Permutation(img);
}

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("cycle type parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("cycle type parts must be weakly decreasing");
  }
}

int CycleType::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string CycleType::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

CycleType CycleType::parse(const std::string& s) {
  std::vector<int> parts;
  std::string token;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
    } else if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') {
      if (!token.empty()) {
        parts.push_back(std::stoi(token));
        token.clear();
      }
    } else {
      throw usage_error(std::string("unexpected character in cycle type: '") + ch + "'");
    }
  }
  if (!token.empty()) parts.push_back(std::stoi(token));
  if (parts.empty()) throw usage_error("empty cycle type");
  std::sort(parts.rbegin(), parts.rend());
  try {
    return CycleType(parts);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation canonical_permutation(const CycleType& mu) {
  int n = mu.n();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  int base = 0;
  for (int part : mu.parts) {
    for (int i = 0; i < part; ++i) img[base + i] = base + (i + 1) % part;
    base += part;
  }
  return Permutation(img);
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> centralizer(const Permutation& sigma, const Guards& guards) {
  if (sigma.n() > 8 || sigma.n() > guards.max_n + 3)
    throw guard_error("centralizer: n too large for brute force");
  std::vector<Permutation> out;
  for (const Permutation& g : symmetric_group(sigma.n()))
    if (g * sigma == sigma * g) out.push_back(g);
  return out;
}

long long centralizer_order(const CycleType& mu) {
  long long result = 1;
  int i = 0;
  while (i < static_cast<int>(mu.parts.size())) {
    int j = i;
    while (j < static_cast<int>(mu.parts.size()) && mu.parts[j] == mu.parts[i]) ++j;
    int mult = j - i;
    for (int a = 0; a < mult; ++a) result *= mu.parts[i];
    for (int a = 2; a <= mult; ++a) result *= a;
    i = j;
  }
  return result;
}

}  // namespace rept
