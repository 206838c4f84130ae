#include "rept/rational.hpp"

#include "rept/guards.hpp"

namespace rept {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw usage_error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw usage_error("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

}  // namespace rept
