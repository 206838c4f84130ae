#include "rept/set_partition.hpp"

#include "rept/guards.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <numeric>

namespace rept {

namespace {

// Plain union-find on a small fixed vertex set.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void unite_by_assign(UnionFind& uf, const SetPartition& p, int offset_upper, int offset_lower) {
  int k = p.upper(), l = p.lower();
  std::vector<int> first(p.num_blocks(), -1);
  for (int v = 0; v < k + l; ++v) {
    int node = v < k ? offset_upper + v : offset_lower + (v - k);
    int b = p.block_of(v);
    if (first[b] < 0)
      first[b] = node;
    else
      uf.unite(first[b], node);
  }
}

}  // namespace

SetPartition SetPartition::from_assign(int upper, int lower, const std::vector<int>& raw) {
  if (static_cast<int>(raw.size()) != upper + lower)
    throw std::invalid_argument("assign vector has wrong length");
  SetPartition p;
  p.upper_ = upper;
  p.lower_ = lower;
  p.assign_.resize(raw.size());
  std::vector<int> relabel;
  for (size_t v = 0; v < raw.size(); ++v) {
    int label = raw[v];
    int id = -1;
    for (size_t j = 0; j < relabel.size(); ++j)
      if (relabel[j] == label) {
        id = static_cast<int>(j);
        break;
      }
    if (id < 0) {
      id = static_cast<int>(relabel.size());
      relabel.push_back(label);
    }
    p.assign_[v] = static_cast<uint8_t>(id);
  }
  p.blocks_ = static_cast<int>(relabel.size());
  return p;
}

SetPartition SetPartition::from_blocks(int upper, int lower,
                                       const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<int> raw(upper + lower, -1);
  int label = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    for (const Vertex& v : block) {
      if (v.index < 1 || v.index > (v.lower ? lower : upper))
        throw std::invalid_argument("vertex index out of range in block list");
      int node = v.lower ? upper + v.index - 1 : v.index - 1;
      if (raw[node] != -1) throw std::invalid_argument("overlapping blocks");
      raw[node] = label;
    }
    ++label;
  }
  for (int v = 0; v < upper + lower; ++v)
    if (raw[v] < 0) throw std::invalid_argument("uncovered vertex");
  return from_assign(upper, lower, raw);
}

SetPartition SetPartition::identity(int n) {
  std::vector<int> raw(2 * n);
  for (int i = 0; i < n; ++i) raw[i] = raw[n + i] = i;
  return from_assign(n, n, raw);
}

SetPartition SetPartition::permutation(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<int> raw(2 * n, -1);
  for (int i = 0; i < n; ++i) {
    raw[i] = i;
    raw[n + images[i]] = i;
  }
  for (int v = 0; v < 2 * n; ++v)
    if (raw[v] < 0) throw std::invalid_argument("images do not form a permutation");
  return from_assign(n, n, raw);
}

std::vector<std::vector<Vertex>> SetPartition::blocks() const {
  std::vector<std::vector<Vertex>> out(blocks_);
  for (int v = 0; v < upper_ + lower_; ++v) {
    Vertex vert;
    vert.lower = v >= upper_;
    vert.index = vert.lower ? v - upper_ + 1 : v + 1;
    out[assign_[v]].push_back(vert);
  }
  return out;
}

SetPartition SetPartition::dual() const {
  std::vector<int> raw(upper_ + lower_);
  for (int v = 0; v < lower_; ++v) raw[v] = assign_[upper_ + v];
  for (int v = 0; v < upper_; ++v) raw[lower_ + v] = assign_[v];
  return from_assign(lower_, upper_, raw);
}

std::string SetPartition::str() const {
  std::ostringstream os;
  os << "{";
  auto bl = blocks();
  for (size_t b = 0; b < bl.size(); ++b) {
    if (b) os << ",";
    os << "{";
    for (size_t i = 0; i < bl[b].size(); ++i) {
      if (i) os << ",";
      os << bl[b][i].index;
      if (bl[b][i].lower) os << "'";
    }
    os << "}";
  }
  os << "} : " << upper_ << "->" << lower_;
  return os.str();
}

size_t SetPartition::hash() const {
  // FNV-1a over widths and block bytes
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint8_t>(upper_));
  mix(static_cast<uint8_t>(lower_));
  for (uint8_t b : assign_) mix(b);
  return h;
}

std::pair<SetPartition, int> compose(const SetPartition& beta, const SetPartition& alpha) {
  if (alpha.lower() != beta.upper())
    throw std::invalid_argument("compose: width mismatch (" + std::to_string(alpha.lower()) +
                                " vs " + std::to_string(beta.upper()) + ")");
  int k = alpha.upper(), l = alpha.lower(), m = beta.lower();
  UnionFind uf(k + l + m);
  unite_by_assign(uf, alpha, 0, k);
  unite_by_assign(uf, beta, k, k + l);
  std::vector<int> raw(k + m);
  std::vector<char> outer_root(k + l + m, 0);
  for (int v = 0; v < k; ++v) {
    int r = uf.find(v);
    raw[v] = r;
    outer_root[r] = 1;
  }
  for (int v = 0; v < m; ++v) {
    int r = uf.find(k + l + v);
    raw[k + v] = r;
    outer_root[r] = 1;
  }
  int removed = 0;
  std::vector<char> counted(k + l + m, 0);
  for (int v = 0; v < l; ++v) {
    int r = uf.find(k + v);
    if (!outer_root[r] && !counted[r]) {
      counted[r] = 1;
      ++removed;
    }
  }
  return {SetPartition::from_assign(k, m, raw), removed};
}

SetPartition tensor(const SetPartition& a, const SetPartition& b) {
  int ka = a.upper(), la = a.lower(), kb = b.upper(), lb = b.lower();
  std::vector<int> raw(ka + kb + la + lb);
  int offset = a.num_blocks();
  for (int v = 0; v < ka; ++v) raw[v] = a.block_of(v);
  for (int v = 0; v < kb; ++v) raw[ka + v] = offset + b.block_of(v);
  for (int v = 0; v < la; ++v) raw[ka + kb + v] = a.block_of(ka + v);
  for (int v = 0; v < lb; ++v) raw[ka + kb + la + v] = offset + b.block_of(kb + v);
  return SetPartition::from_assign(ka + kb, la + lb, raw);
}

bool is_coarser(const SetPartition& coarse, const SetPartition& fine) {
  if (coarse.upper() != fine.upper() || coarse.lower() != fine.lower())
    throw std::invalid_argument("is_coarser: width mismatch");
  int total = fine.upper() + fine.lower();
  std::vector<int> image(fine.num_blocks(), -1);
  for (int v = 0; v < total; ++v) {
    int fb = fine.block_of(v);
    int cb = coarse.block_of(v);
    if (image[fb] < 0)
      image[fb] = cb;
    else if (image[fb] != cb)
      return false;
  }
  return true;
}

std::vector<SetPartition> coarsenings(const SetPartition& lambda) {
  int nb = lambda.num_blocks();
  int total = lambda.upper() + lambda.lower();
  std::vector<SetPartition> out;
  // Enumerate set partitions of the block set via restricted growth strings;
  // skip the discrete one (identity merge).
  std::vector<int> rgs(nb, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxid) {
    if (pos == nb) {
      if (maxid + 1 == nb) return;  // no merge
      std::vector<int> raw(total);
      for (int v = 0; v < total; ++v) raw[v] = rgs[lambda.block_of(v)];
      out.push_back(SetPartition::from_assign(lambda.upper(), lambda.lower(), raw));
      return;
    }
    for (int id = 0; id <= maxid + 1; ++id) {
      rgs[pos] = id;
      rec(pos + 1, std::max(maxid, id));
    }
  };
  if (nb > 0) rec(1, 0);  // rgs[0] = 0 fixed
  return out;
}

namespace {

std::pair<SetPartition, int> close_range(const SetPartition& p, int from, int count) {
  if (p.upper() != p.lower()) throw std::invalid_argument("closure needs an endomorphism");
  int n = p.upper();
  if (count < 0 || from < 0 || from + count > n) throw std::invalid_argument("closure range");
  UnionFind uf(2 * n);
  unite_by_assign(uf, p, 0, n);
  for (int j = 0; j < count; ++j) uf.unite(from + j, n + from + j);
  std::vector<int> raw;
  std::vector<char> survivor(2 * n, 0);
  int rest = n - count;
  raw.reserve(2 * rest);
  for (int v = 0; v < n; ++v)
    if (v < from || v >= from + count) {
      int r = uf.find(v);
      raw.push_back(r);
      survivor[r] = 1;
    }
  for (int v = 0; v < n; ++v)
    if (v < from || v >= from + count) {
      int r = uf.find(n + v);
      raw.push_back(r);
      survivor[r] = 1;
    }
  int removed = 0;
  std::vector<char> counted(2 * n, 0);
  for (int j = 0; j < count; ++j)
    for (int v : {from + j, n + from + j}) {
      int r = uf.find(v);
      if (!survivor[r] && !counted[r]) {
        counted[r] = 1;
        ++removed;
      }
    }
  return {SetPartition::from_assign(rest, rest, raw), removed};
}

}  // namespace

std::pair<SetPartition, int> close_last(const SetPartition& p, int b) {
  return close_range(p, p.upper() - b, b);
}

std::pair<SetPartition, int> close_first(const SetPartition& p, int b) {
  return close_range(p, 0, b);
}

SetPartition pi_unit() { return SetPartition::from_assign(0, 1, {0}); }

SetPartition pi_counit() { return SetPartition::from_assign(1, 0, {0}); }

SetPartition pi_merge() { return SetPartition::from_assign(2, 2, {0, 0, 0, 0}); }

SetPartition pi_cross() { return SetPartition::permutation({1, 0}); }

SetPartition pairing(int n) {
  std::vector<int> raw(2 * n);
  for (int i = 0; i < n; ++i) raw[i] = raw[n + i] = i;
  return SetPartition::from_assign(2 * n, 0, raw);
}

SetPartition copairing(int n) { return pairing(n).dual(); }

SetPartition symmetry(int a, int b) {
  std::vector<int> images(a + b);
  for (int i = 0; i < a; ++i) images[i] = b + i;
  for (int j = 0; j < b; ++j) images[a + j] = j;
  return SetPartition::permutation(images);
}

SetPartition strand_join(int n, int i) { return strand_map(n, i, i); }

SetPartition strand_map(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("strand index out of range");
  std::vector<int> raw(2 * (n + 1));
  for (int v = 0; v < n; ++v) raw[v] = raw[n + 1 + v] = v;
  raw[n] = i - 1;          // vertex n+1 joins block of i
  raw[2 * n + 1] = j - 1;  // vertex (n+1)' joins block of j'
  return SetPartition::from_assign(n + 1, n + 1, raw);
}

SetPartition parse_set_partition(const std::string& s) {
  size_t colon = s.rfind(':');
  if (colon == std::string::npos) throw usage_error("partition text missing ': k->l'");
  std::string widths = s.substr(colon + 1);
  size_t arrow = widths.find("->");
  if (arrow == std::string::npos) throw usage_error("partition text missing '->'");
  int k = 0, l = 0;
  try {
    k = std::stoi(widths.substr(0, arrow));
    l = std::stoi(widths.substr(arrow + 2));
  } catch (const std::exception&) {
    throw usage_error("bad widths in partition text");
  }
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cur;
  bool in_block = false;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) return;
    Vertex v;
    if (token.back() == '\'') {
      v.lower = true;
      token.pop_back();
    }
    try {
      v.index = std::stoi(token);
    } catch (const std::exception&) {
      throw usage_error("bad vertex token in partition text");
    }
    cur.push_back(v);
    token.clear();
  };
  for (size_t i = 0; i < colon; ++i) {
    char ch = s[i];
    if (ch == ' ') continue;
    if (ch == '{') {
      if (in_block)
        in_block = true;  // outer brace then inner
      in_block = true;
      cur.clear();
    } else if (ch == '}') {
      flush_token();
      if (!cur.empty()) {
        blocks.push_back(cur);
        cur.clear();
      }
      in_block = false;
    } else if (ch == ',') {
      flush_token();
    } else {
      token += ch;
    }
  }
  try {
    return SetPartition::from_blocks(k, l, blocks);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("bad partition: ") + e.what());
  }
}

}  // namespace rept
