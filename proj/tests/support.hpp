#pragma once

#include <string>

#include "convkit/space.hpp"

namespace convkit::test {

// Points named by single characters.
inline GroundSet letters(const std::string& names) {
  std::vector<std::string> v;
  for (char c : names) v.emplace_back(1, c);
  return GroundSet(std::move(v));
}

inline Subset set(const GroundSet& g, const std::string& names) {
  Subset s;
  for (char c : names) s |= Subset::singleton(g.index_of(std::string(1, c)));
  return s;
}

// L(a)={a}, L(b)={a,b}, L(c)={b,c}.
inline FiniteSpace s3() {
  GroundSet g = letters("abc");
  return FiniteSpace(g, {set(g, "a"), set(g, "ab"), set(g, "bc")});
}

// L(0)={0}, L(1)={0,1}.
inline FiniteSpace two() {
  GroundSet g = letters("01");
  return FiniteSpace(g, {set(g, "0"), set(g, "01")});
}

}  // namespace convkit::test
