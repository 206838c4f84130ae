#include "rept/braid.hpp"

#include <cstdlib>
#include <sstream>

namespace rept {

Permutation BraidWord::underlying_permutation() const {
  Permutation total(strands);
  for (int letter : letters) {
    int i = std::abs(letter) - 1;
    std::vector<int> img(strands);
    for (int j = 0; j < strands; ++j) img[j] = j;
    img[i] = i + 1;
    img[i + 1] = i;
    total = Permutation(img) * total;
  }
  return total;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << (letters[i] > 0 ? "+" : "") << letters[i];
  }
  return os.str();
}

BraidWord torus_braid(int p, int q) {
  if (p < 1) throw usage_error("torus braid needs p >= 1");
  BraidWord b;
  b.strands = p;
  int reps = std::abs(q);
  int sign = q <= 0 ? 1 : -1;
  for (int r = 0; r < reps; ++r)
    for (int i = 1; i < p; ++i) b.letters.push_back(sign * i);
  return b;
}

BraidWord LinkSpec::braid() const {
  if (kind == Kind::torus) return torus_braid(p, q);
  return word;
}

std::string LinkSpec::str() const {
  if (kind == Kind::torus)
    return "torus:" + std::to_string(p) + "," + std::to_string(q);
  return "braid:" + std::to_string(word.strands) + ":" + word.str();
}

LinkSpec LinkSpec::torus(int p, int q) {
  LinkSpec l;
  l.kind = Kind::torus;
  l.p = p;
  l.q = q;
  return l;
}

LinkSpec LinkSpec::parse(const std::string& text) {
  LinkSpec l;
  if (text.rfind("torus:", 0) == 0) {
    std::string rest = text.substr(6);
    size_t comma = rest.find(',');
    if (comma == std::string::npos) throw usage_error("torus spec needs 'torus:p,q'");
    try {
      l.p = std::stoi(rest.substr(0, comma));
      l.q = std::stoi(rest.substr(comma + 1));
    } catch (const std::exception&) {
      throw usage_error("bad torus parameters in '" + text + "'");
    }
    if (l.p < 1) throw usage_error("torus spec needs p >= 1");
    return l;
  }
  if (text.rfind("braid:", 0) == 0) {
    l.kind = Kind::braid;
    std::string rest = text.substr(6);
    size_t colon = rest.find(':');
    if (colon == std::string::npos) throw usage_error("braid spec needs 'braid:p:letters'");
    try {
      l.word.strands = std::stoi(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw usage_error("bad strand count in '" + text + "'");
    }
    if (l.word.strands < 1) throw usage_error("braid needs at least one strand");
    std::string letters = rest.substr(colon + 1);
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      int v;
      try {
        v = std::stoi(token);
      } catch (const std::exception&) {
        throw usage_error("bad braid letter '" + token + "'");
      }
      if (v == 0 || std::abs(v) >= l.word.strands)
        throw usage_error("braid letter out of range: " + token);
      l.word.letters.push_back(v);
      token.clear();
    };
    for (char ch : letters) {
      if (ch == ' ' || ch == ',' || ch == '"') {
        flush();
      } else {
        token += ch;
      }
    }
    flush();
    return l;
  }
  throw usage_error("unknown link spec '" + text + "' (want torus:p,q or braid:p:letters)");
}

}  // namespace rept
