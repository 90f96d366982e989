#pragma once

// Test-only oracles, independent of the bitmask implementation paths they
// check.

#include <utility>
#include <vector>

#include "cliff/rational.hpp"
#include "cliff/signature.hpp"

namespace oracle {

// Multiply basis monomials by explicit symbol shuffling: concatenate the
// index lists, bubble adjacent generators (flipping the sign per swap) and
// cancel equal neighbours against their squared diagonal value. Returns
// {0, {}} for the wedge variant when a generator repeats.
inline std::pair<int, std::vector<int>> shuffle_product(std::vector<int> symbols,
                                                        const std::vector<int>& more,
                                                        const cliff::Signature& sig,
                                                        bool wedge = false) {
  symbols.insert(symbols.end(), more.begin(), more.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      if (symbols[i] == symbols[i + 1]) {
        if (wedge) return {0, {}};
        sign *= sig.eps(symbols[i]);
        symbols.erase(symbols.begin() + i, symbols.begin() + i + 2);
        changed = true;
        break;
      }
      if (symbols[i] > symbols[i + 1]) {
        std::swap(symbols[i], symbols[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {sign, symbols};
}

// Parity diagonal by its defining recursion: J_1 = [1],
// J_n = J_{n-1} (+) -J_{n-1}.
inline std::vector<int> j_diagonal_recursive(int n) {
  std::vector<int> d = {1};
  for (int k = 2; k <= n; ++k) {
    std::vector<int> next = d;
    for (int v : d) next.push_back(-v);
    d = std::move(next);
  }
  return d;
}

}  // namespace oracle
