#include "stockpoly/subset.hpp"

#include <algorithm>

namespace stockpoly {

bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace stockpoly
