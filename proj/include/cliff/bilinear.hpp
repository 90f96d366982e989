#pragma once

#include <cstddef>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

// Diagonal of the extended bilinear form over the basis in InvLex order:
// entry at rank(e_I) is the product of the diagonal entries over I (so the
// unit entry is 1 and every entry is +1 or -1).
inline std::vector<Rational> gram_diagonal(const Signature& sig) {
  std::vector<Rational> diag;
  diag.reserve(sig.basis_size());
  for (std::size_t m = 0; m < sig.basis_size(); ++m) {
    diag.emplace_back(detail::eps_product(IndexSet(static_cast<std::uint32_t>(m)), sig));
  }
  return diag;
}

// Extended bilinear form <u,v>: basis monomials are orthogonal, and
// <e_I,e_I> is the product of the diagonal entries over I. Symmetric and
// non-degenerate.
inline Rational scalar_product(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  Rational out(0);
  for (const auto& [I, a] : u.terms()) {
    const Rational b = v.coeff(I);
    if (b == 0) continue;
    Rational prod(a * b);
    if (detail::eps_product(I, u.signature()) < 0) prod = -prod;
    out += prod;
  }
  return out;
}

// Determinant route for the form on simple k-vectors: det of the k x k
// matrix of pairwise vector products. Independent of the diagonal rule in
// scalar_product; the two must agree on wedge products of the factors.
inline Rational det_extension(const std::vector<Multivector>& xs,
                              const std::vector<Multivector>& ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw range_error("det_extension needs equal-length nonempty factor lists");
  }
  for (const auto& x : xs) {
    if (!x.homogeneous(1)) throw grade_error("det_extension factors must be vectors");
  }
  for (const auto& y : ys) {
    if (!y.homogeneous(1)) throw grade_error("det_extension factors must be vectors");
  }
  const std::size_t k = xs.size();
  std::vector<Rational> m(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m[i * k + j] = scalar_product(xs[i], ys[j]);
    }
  }
  // Gaussian elimination; exact division, so the determinant is exact.
  Rational det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot * k + col] == 0) ++pivot;
    if (pivot == k) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m[pivot * k + j], m[col * k + j]);
      det = -det;
    }
    det *= m[col * k + col];
    for (std::size_t row = col + 1; row < k; ++row) {
      if (m[row * k + col] == 0) continue;
      Rational factor(m[row * k + col] / m[col * k + col]);
      for (std::size_t j = col; j < k; ++j) {
        m[row * k + j] -= factor * m[col * k + j];
      }
    }
  }
  return det;
}

// Left contraction u _| v. On basis monomials: the Clifford product when
// I is contained in J, zero otherwise. Valid for the orthogonal diagonal
// basis used here; the Leibniz/duality properties are enforced by tests.
inline Multivector left_contraction(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  Multivector out(u.signature());
  for (const auto& [I, a] : u.terms()) {
    for (const auto& [J, b] : v.terms()) {
      if (!I.subset_of(J)) continue;
      auto [sign, K] = monomial_product(I, J, u.signature());
      Rational prod(a * b);
      if (sign < 0) prod = -prod;
      out.add_term(K, std::move(prod));
    }
  }
  return out;
}

// Reciprocal basis in InvLex order: entry at rank(e_I) is T_eps(e_I), the
// eps-scaled monomial pairing to delta against the basis itself.
inline std::vector<Multivector> dual_basis(const Signature& sig) {
  std::vector<Multivector> out;
  out.reserve(sig.basis_size());
  for (std::size_t m = 0; m < sig.basis_size(); ++m) {
    out.push_back(T_eps(Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(m)))));
  }
  return out;
}

// Action of a multiform on a multivector. phi is the form as an ordinary
// element (expanded in the basis); its coordinates relative to the
// reciprocal basis are eps-scaled, and the two scalings cancel so the
// action is just the extended bilinear form.
inline Rational apply_form(const Multivector& phi, const Multivector& v) {
  return scalar_product(phi, v);
}

}  // namespace cliff
