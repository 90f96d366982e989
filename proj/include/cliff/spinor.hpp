#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/repmat.hpp"

namespace cliff {

// Idempotent / ideal-basis preconditions failed.
class ideal_error : public error {
 public:
  using error::error;
};

// An image left the span of the ideal basis: the given vectors do not
// span a left ideal.
class not_invariant_error : public error {
 public:
  using error::error;
};

inline bool verify_idempotent(const Multivector& f) { return cmul(f, f) == f; }

inline bool verify_annihilating(const Multivector& f1, const Multivector& f2) {
  require_same(f1.signature(), f2.signature());
  return cmul(f1, f2).is_zero() && cmul(f2, f1).is_zero();
}

namespace detail {

// Fraction-free (Bareiss) elimination on the augmented system
// [cols | target]; exact over rationals. Returns the coordinates, or
// nullopt when target is outside the column span. Throws when the columns
// themselves are dependent.
inline std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& target) {
  const std::size_t r = cols.size();
  const std::size_t d = target.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(r + 1, Rational(0)));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];
  }
  for (std::size_t i = 0; i < d; ++i) m[i][r] = target[i];

  Rational prev(1);
  std::size_t row = 0;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t pr = row;
    while (pr < d && m[pr][k] == 0) ++pr;
    if (pr == d) throw ideal_error("dependent ideal basis columns");
    if (pr != row) std::swap(m[pr], m[row]);
    const Rational pivot = m[row][k];
    for (std::size_t i = row + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j <= r; ++j) {
        m[i][j] = Rational(m[i][j] * pivot - m[i][k] * m[row][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = pivot;
    ++row;
  }
  for (std::size_t i = row; i < d; ++i) {
    if (m[i][r] != 0) return std::nullopt;
  }
  // Back-substitution on the leading r x r triangle.
  std::vector<Rational> x(r, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    Rational sum = m[k][r];
    for (std::size_t j = k + 1; j < r; ++j) sum -= m[k][j] * x[j];
    x[k] = Rational(sum / m[k][k]);
  }
  return x;
}

inline std::vector<Rational> dense_coordinates(const Multivector& u) {
  std::vector<Rational> out(u.signature().basis_size(), Rational(0));
  for (const auto& [I, c] : u.terms()) out[I.mask()] = c;
  return out;
}

}  // namespace detail

// Basis of the left ideal Cl(p,q) f spanned by m_i f for the given
// monomial generators. Construction verifies idempotency of f and exact
// linear independence of the spanning vectors.
class IdealBasis {
 public:
  IdealBasis(Multivector f, std::vector<IndexSet> generators)
      : f_(std::move(f)), generators_(std::move(generators)) {
    if (!verify_idempotent(f_)) throw ideal_error("not an idempotent");
    if (generators_.empty()) throw ideal_error("generator list empty");
    vectors_.reserve(generators_.size());
    for (IndexSet m : generators_) {
      vectors_.push_back(cmul(Multivector::basis(f_.signature(), m), f_));
    }
    std::vector<std::vector<Rational>> cols;
    cols.reserve(vectors_.size());
    for (const auto& v : vectors_) cols.push_back(detail::dense_coordinates(v));
    // Solving for the first vector doubles as the rank check.
    detail::solve_in_span(cols, cols.front());
  }

  const Signature& signature() const { return f_.signature(); }
  const Multivector& idempotent() const { return f_; }
  const std::vector<IndexSet>& generators() const { return generators_; }
  const std::vector<Multivector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (IndexSet m : generators_) {
      out.push_back(m.empty() ? std::string("f") : m.name() + " f");
    }
    return out;
  }

 private:
  Multivector f_;
  std::vector<IndexSet> generators_;
  std::vector<Multivector> vectors_;
};

inline IdealBasis ideal_basis(const Multivector& f, const std::vector<IndexSet>& generators) {
  return IdealBasis(f, generators);
}

// Matrix of v -> u v restricted to the ideal: column j holds the exact
// coordinates of u * basis[j] in the ideal basis. Throws when some image
// falls outside the span.
inline RepMatrix restricted_left_matrix(const Multivector& u, const IdealBasis& basis) {
  require_same(u.signature(), basis.signature());
  std::vector<std::vector<Rational>> cols;
  cols.reserve(basis.size());
  for (const auto& v : basis.vectors()) cols.push_back(detail::dense_coordinates(v));

  RepMatrix m(basis.size(), basis.labels());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Multivector image = cmul(u, basis.vectors()[j]);
    auto coords = detail::solve_in_span(cols, detail::dense_coordinates(image));
    if (!coords) {
      throw not_invariant_error("image of basis vector " + std::to_string(j) +
                                " lies outside the ideal");
    }
    for (std::size_t i = 0; i < basis.size(); ++i) m.at(i, j) = (*coords)[i];
  }
  return m;
}

}  // namespace cliff
