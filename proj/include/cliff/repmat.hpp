#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cliff/bilinear.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

// Dense square matrix of exact rationals with row/column basis labels.
// Rows and columns are indexed by InvLex rank for full left-regular
// matrices, or by the generator list of an ideal basis for restricted
// ones.
class RepMatrix {
 public:
  explicit RepMatrix(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), a_(dim * dim, Rational(0)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back(std::to_string(i));
    }
  }

  static RepMatrix identity(std::size_t dim, std::vector<std::string> labels = {}) {
    RepMatrix m(dim, std::move(labels));
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  static RepMatrix block_diag(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix m(a.dim_ + b.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.dim_; ++i)
      for (std::size_t j = 0; j < b.dim_; ++j) m.at(a.dim_ + i, a.dim_ + j) = b.at(i, j);
    return m;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  RepMatrix transpose() const {
    RepMatrix m(dim_, labels_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend bool operator==(const RepMatrix& a, const RepMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RepMatrix& a, const RepMatrix& b) { return !(a == b); }

  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    if (a.dim_ != b.dim_) throw range_error("matrix dimension mismatch");
    RepMatrix m(a.dim_, a.labels_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj == 0) continue;
          m.at(i, j) += aik * bkj;
        }
      }
    }
    return m;
  }

  friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
    if (a.dim_ != b.dim_) throw range_error("matrix dimension mismatch");
    RepMatrix m(a.dim_, a.labels_);
    for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }

  friend RepMatrix operator-(const RepMatrix& a) {
    RepMatrix m(a.dim_, a.labels_);
    for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) m.a_[i] = -a.a_[i];
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> a_;
  std::vector<std::string> labels_;
};

// The basis of Cl_n in InvLex order: position k holds the monomial with
// mask k, so for n = 3 the order is 1, e1, e2, e12, e3, e13, e23, e123.
inline std::vector<IndexSet> invlex_basis(int n) {
  if (n < 1 || n > kDefaultDimensionCap) throw range_error("basis dimension out of range");
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    out.emplace_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

inline std::vector<std::string> basis_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(std::size_t{1} << n);
  for (const IndexSet& I : invlex_basis(n)) labels.push_back(I.name());
  return labels;
}

namespace detail {
inline void require_matrix_cap(const Signature& sig) {
  if (sig.n() > kMatrixDimensionCap) {
    throw range_error("dense matrices capped at n <= " +
                      std::to_string(kMatrixDimensionCap));
  }
}
}  // namespace detail

// Matrix of the left-multiplication operator v -> u v relative to the
// InvLex basis: column J holds the coordinates of u e_J.
inline RepMatrix left_matrix(const Multivector& u) {
  const Signature& sig = u.signature();
  detail::require_matrix_cap(sig);
  const std::size_t d = sig.basis_size();
  RepMatrix m(d, basis_labels(sig.n()));
  for (const auto& [I, a] : u.terms()) {
    for (std::size_t col = 0; col < d; ++col) {
      auto [sign, K] = monomial_product(I, IndexSet(static_cast<std::uint32_t>(col)), sig);
      if (sign > 0) {
        m.at(K.mask(), col) += a;
      } else {
        m.at(K.mask(), col) -= a;
      }
    }
  }
  return m;
}

// Matrix of v -> reversion(u) v relative to the reciprocal basis on both
// sides: column J holds the reciprocal-basis coordinates of
// reversion(u) * T_eps(e_J). Equals the transpose of left_matrix(u).
inline RepMatrix dual_left_matrix(const Multivector& u) {
  const Signature& sig = u.signature();
  detail::require_matrix_cap(sig);
  RepMatrix m = left_matrix(reversion(u));
  const std::size_t d = sig.basis_size();
  std::vector<int> sgn(d);
  for (std::size_t k = 0; k < d; ++k) {
    sgn[k] = detail::eps_product(IndexSet(static_cast<std::uint32_t>(k)), sig);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn[i] * sgn[j] < 0) m.at(i, j) = -m.at(i, j);
    }
  }
  return m;
}

// Alternating-parity diagonal of size 2^(n-1): entry k is -1 to the
// popcount of k. Satisfies J_n = J_{n-1} (+) -J_{n-1} with J_1 = [1]; the
// recursion is kept as a test oracle.
struct JMatrix {
  int n;

  explicit JMatrix(int n_) : n(n_) {
    if (n < 1 || n > kMatrixDimensionCap) throw range_error("J matrix order out of range");
  }

  std::size_t dim() const { return std::size_t{1} << (n - 1); }

  int entry(std::size_t k) const {
    return std::popcount(static_cast<std::uint64_t>(k)) % 2 == 0 ? 1 : -1;
  }

  RepMatrix as_matrix() const {
    RepMatrix m(dim());
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, k) = entry(k);
    return m;
  }
};

namespace detail {

// [[0, s J_n],[t J_n, 0]] with scalars s, t in {+1,-1}.
inline RepMatrix j_corner_matrix(int n, int s, int t) {
  const JMatrix J(n);
  const std::size_t h = J.dim();
  RepMatrix m(2 * h);
  for (std::size_t k = 0; k < h; ++k) {
    m.at(k, h + k) = s * J.entry(k);
    m.at(h + k, k) = t * J.entry(k);
  }
  return m;
}

inline RepMatrix generator_recursion(int i, int n, int eps_i, bool dual) {
  if (i == n) {
    // Generator block: [[0, eps J],[J, 0]], transposed corners for the
    // reciprocal family.
    return dual ? j_corner_matrix(n, 1, eps_i) : j_corner_matrix(n, eps_i, 1);
  }
  RepMatrix lower = generator_recursion(i, n - 1, eps_i, dual);
  return RepMatrix::block_diag(lower, lower);
}

}  // namespace detail

// Left-multiplication matrix of e_i built by the block recursion (two
// copies of the lower-dimensional matrix on the diagonal until the
// generator's own corner block appears). Must equal
// left_matrix(generator(i)).
inline RepMatrix generator_matrix(int i, const Signature& sig) {
  detail::require_matrix_cap(sig);
  if (i < 1 || i > sig.n()) throw range_error("generator index out of range");
  RepMatrix m = detail::generator_recursion(i, sig.n(), sig.eps(i), false);
  return m;
}

// The reciprocal family: transpose of generator_matrix(i), equal to
// left_matrix(tp(e_i)).
inline RepMatrix dual_generator_matrix(int i, const Signature& sig) {
  detail::require_matrix_cap(sig);
  if (i < 1 || i > sig.n()) throw range_error("generator index out of range");
  return detail::generator_recursion(i, sig.n(), sig.eps(i), true);
}

// Exact check that transposing the left-multiplication matrix of u equals
// the left-multiplication matrix of tp(u), with the first mismatching
// entry on failure.
struct TransposeCheck {
  bool ok = true;
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;  // transpose(left_matrix(u)) at (row, col)
  Rational rhs;  // left_matrix(tp(u)) at (row, col)
};

inline TransposeCheck transpose_theorem_check(const Multivector& u) {
  const RepMatrix lu = left_matrix(u);
  const RepMatrix ltp = left_matrix(tp(u));
  TransposeCheck out;
  for (std::size_t i = 0; i < lu.dim(); ++i) {
    for (std::size_t j = 0; j < lu.dim(); ++j) {
      if (lu.at(j, i) != ltp.at(i, j)) {
        out.ok = false;
        out.row = i;
        out.col = j;
        out.lhs = lu.at(j, i);
        out.rhs = ltp.at(i, j);
        return out;
      }
    }
  }
  return out;
}

}  // namespace cliff
