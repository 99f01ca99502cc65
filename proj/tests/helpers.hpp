#pragma once

#include <initializer_list>
#include <string>

#include "factorforge/catalog.hpp"
#include "factorforge/error.hpp"
#include "factorforge/factorization.hpp"

namespace fft {

using namespace factorforge;

inline ElementSet set_of(const GroupTable& g, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) {
    auto x = resolve_element(g, n);
    if (!x) throw Error(ErrorCode::UnknownName, n);
    s.set(*x);
  }
  return s;
}

inline ElementSet indices(std::initializer_list<int> xs) {
  ElementSet s;
  for (int x : xs) s.set(x);
  return s;
}

inline GroupTable perms(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
  return from_permutations(gens);
}

}  // namespace fft
