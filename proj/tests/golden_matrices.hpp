#pragma once

// Frozen symbolic left-multiplication matrices for n = 1, 2, 3 and the
// n = 1, 2 reciprocal-basis matrices. Each entry of [L_u] for a general
// u = sum a_k e_{B_k} is (sign) * (product of diagonal entries over
// eps_mask) * a_j; instantiating unit coefficient patterns per signature
// recovers the concrete matrices.

#include <array>
#include <cstdint>

#include "cliff/repmat.hpp"

namespace golden {

struct Entry {
  int j;                  // 1-based coefficient index
  int sign;               // +1 / -1
  std::uint32_t epsmask;  // generators whose diagonal entries multiply in
};

// dim 2: rows of [L_u] for u = a1 + a2 e1
inline constexpr std::array<std::array<Entry, 2>, 2> kLeft1 = {{
    {{{1, 1, 0}, {2, 1, 0b1}}},
    {{{2, 1, 0}, {1, 1, 0}}},
}};

// dim 2: rows of the reciprocal-basis matrix for the same u
inline constexpr std::array<std::array<Entry, 2>, 2> kDual1 = {{
    {{{1, 1, 0}, {2, 1, 0}}},
    {{{2, 1, 0b1}, {1, 1, 0}}},
}};

// dim 4: u = a1 + a2 e1 + a3 e2 + a4 e12
inline constexpr std::array<std::array<Entry, 4>, 4> kLeft2 = {{
    {{{1, 1, 0}, {2, 1, 0b01}, {3, 1, 0b10}, {4, -1, 0b11}}},
    {{{2, 1, 0}, {1, 1, 0}, {4, 1, 0b10}, {3, -1, 0b10}}},
    {{{3, 1, 0}, {4, -1, 0b01}, {1, 1, 0}, {2, 1, 0b01}}},
    {{{4, 1, 0}, {3, -1, 0}, {2, 1, 0}, {1, 1, 0}}},
}};

inline constexpr std::array<std::array<Entry, 4>, 4> kDual2 = {{
    {{{1, 1, 0}, {2, 1, 0}, {3, 1, 0}, {4, 1, 0}}},
    {{{2, 1, 0b01}, {1, 1, 0}, {4, -1, 0b01}, {3, -1, 0}}},
    {{{3, 1, 0b10}, {4, 1, 0b10}, {1, 1, 0}, {2, 1, 0}}},
    {{{4, -1, 0b11}, {3, -1, 0b10}, {2, 1, 0b01}, {1, 1, 0}}},
}};

// dim 8: u = a1 + a2 e1 + a3 e2 + a4 e12 + a5 e3 + a6 e13 + a7 e23 + a8 e123
inline constexpr std::array<std::array<Entry, 8>, 8> kLeft3 = {{
    {{{1, 1, 0}, {2, 1, 0b001}, {3, 1, 0b010}, {4, -1, 0b011},
      {5, 1, 0b100}, {6, -1, 0b101}, {7, -1, 0b110}, {8, -1, 0b111}}},
    {{{2, 1, 0}, {1, 1, 0}, {4, 1, 0b010}, {3, -1, 0b010},
      {6, 1, 0b100}, {5, -1, 0b100}, {8, -1, 0b110}, {7, -1, 0b110}}},
    {{{3, 1, 0}, {4, -1, 0b001}, {1, 1, 0}, {2, 1, 0b001},
      {7, 1, 0b100}, {8, 1, 0b101}, {5, -1, 0b100}, {6, 1, 0b101}}},
    {{{4, 1, 0}, {3, -1, 0}, {2, 1, 0}, {1, 1, 0},
      {8, 1, 0b100}, {7, 1, 0b100}, {6, -1, 0b100}, {5, 1, 0b100}}},
    {{{5, 1, 0}, {6, -1, 0b001}, {7, -1, 0b010}, {8, -1, 0b011},
      {1, 1, 0}, {2, 1, 0b001}, {3, 1, 0b010}, {4, -1, 0b011}}},
    {{{6, 1, 0}, {5, -1, 0}, {8, -1, 0b010}, {7, -1, 0b010},
      {2, 1, 0}, {1, 1, 0}, {4, 1, 0b010}, {3, -1, 0b010}}},
    {{{7, 1, 0}, {8, 1, 0b001}, {5, -1, 0}, {6, 1, 0b001},
      {3, 1, 0}, {4, -1, 0b001}, {1, 1, 0}, {2, 1, 0b001}}},
    {{{8, 1, 0}, {7, 1, 0}, {6, -1, 0}, {5, 1, 0},
      {4, 1, 0}, {3, -1, 0}, {2, 1, 0}, {1, 1, 0}}},
}};

inline int eps_of_mask(std::uint32_t mask, const cliff::Signature& sig) {
  int s = 1;
  for (int i = 1; i <= sig.n(); ++i) {
    if ((mask >> (i - 1)) & 1u) s *= sig.eps(i);
  }
  return s;
}

// Instantiate a symbolic table for concrete coefficients a[0..dim-1].
template <std::size_t Dim>
cliff::RepMatrix instantiate(const std::array<std::array<Entry, Dim>, Dim>& table,
                             const std::array<cliff::Rational, Dim>& a,
                             const cliff::Signature& sig) {
  cliff::RepMatrix m(Dim);
  for (std::size_t r = 0; r < Dim; ++r) {
    for (std::size_t c = 0; c < Dim; ++c) {
      const Entry& e = table[r][c];
      cliff::Rational v = a[e.j - 1];
      if (e.sign * eps_of_mask(e.epsmask, sig) < 0) v = -v;
      m.at(r, c) = v;
    }
  }
  return m;
}

}  // namespace golden
