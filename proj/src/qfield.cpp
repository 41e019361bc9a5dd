#include "eisgen/qfield.hpp"

#include <sstream>

namespace eisgen {

static std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string QPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rat v = c[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1 && i > 0);
    if (!unit) os << rat_str(v);
    if (i > 0) {
      if (!unit) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string QRat::str() const {
  if (num.is_zero()) return "0";
  if (den == QPoly(1L)) return num.str();
  std::string n = num.str(), d = den.str();
  if (num.deg() > 0) n = "(" + n + ")";
  if (den.deg() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

std::string ScalarQ::str() const {
  if (is_zero()) return "0";
  if (b.is_zero()) return a.str();
  std::string bs = b.is_one() ? "q^(1/2)" : "(" + b.str() + ")*q^(1/2)";
  if (a.is_zero()) return bs;
  return a.str() + " + " + bs;
}

}  // namespace eisgen
