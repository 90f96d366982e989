#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliff/signature.hpp"

namespace cliff {

// Canonically ordered subset I of {1..n} naming the basis monomial e_I,
// held as a bitmask with bit (i-1) set iff i is in I. The InvLex rank of
// e_I is the mask value itself, so mask order is basis order.
class IndexSet {
 public:
  constexpr IndexSet() : mask_(0) {}
  constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}

  static IndexSet single(int i) {
    if (i < 1 || i > 32) throw range_error("generator index out of range");
    return IndexSet(std::uint32_t{1} << (i - 1));
  }

  static IndexSet of(std::initializer_list<int> indices) {
    std::uint32_t m = 0;
    for (int i : indices) m |= single(i).mask();
    return IndexSet(m);
  }

  std::uint32_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }

  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(IndexSet other) const { return (mask_ & other.mask_) != 0; }
  bool valid_for(const Signature& sig) const {
    return mask_ < (std::uint32_t{1} << sig.n());
  }

  IndexSet symmetric_difference(IndexSet other) const {
    return IndexSet(mask_ ^ other.mask_);
  }
  IndexSet intersection(IndexSet other) const { return IndexSet(mask_ & other.mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  // "1" for the unit, "e12" for small indices, "e[1,10,12]" once an index
  // needs more than one digit.
  std::string name() const {
    if (mask_ == 0) return "1";
    const auto idx = indices();
    if (idx.back() <= 9) {
      std::string s = "e";
      for (int i : idx) s += static_cast<char>('0' + i);
      return s;
    }
    std::string s = "e[";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(idx[k]);
    }
    s += ']';
    return s;
  }

  auto operator<=>(const IndexSet&) const = default;

 private:
  std::uint32_t mask_;
};

// Number of pairs (x in a, y in b) with x > y; the adjacent-transposition
// count needed to merge the concatenation a ++ b into sorted order.
inline int inversions(IndexSet a, IndexSet b) {
  int count = 0;
  std::uint32_t shifted = a.mask() >> 1;
  while (shifted != 0) {
    count += std::popcount(shifted & b.mask());
    shifted >>= 1;
  }
  return count;
}

struct MonomialProduct {
  int sign;  // +1 or -1
  IndexSet monomial;
};

// Product of two basis monomials: e_I e_J = sign * e_{I xor J} where the
// sign is (-1)^inversions(I,J) times the diagonal entries of the repeated
// generators. Total on masks valid for sig.
inline MonomialProduct monomial_product(IndexSet a, IndexSet b, const Signature& sig) {
  int sign = (inversions(a, b) % 2 == 0) ? 1 : -1;
  for (std::uint32_t m = a.intersection(b).mask(); m != 0; m &= m - 1) {
    sign *= sig.eps(std::countr_zero(m) + 1);
  }
  return {sign, a.symmetric_difference(b)};
}

// Wedge of basis monomials: zero on any shared generator, otherwise the
// pure inversion sign (no diagonal factors enter).
inline MonomialProduct wedge_monomials(IndexSet a, IndexSet b) {
  if (a.intersects(b)) return {0, IndexSet()};
  return {(inversions(a, b) % 2 == 0) ? 1 : -1, a.symmetric_difference(b)};
}

}  // namespace cliff
