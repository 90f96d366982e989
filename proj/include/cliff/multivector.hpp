#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "cliff/index_set.hpp"
#include "cliff/rational.hpp"
#include "cliff/signature.hpp"

namespace cliff {

// Sparse element of Cl(p,q): a map from basis monomial to exact rational
// coefficient. Zero coefficients are never stored, so the zero element is
// the empty map and operator== is structural. Values are immutable after
// construction; every operation below is a pure function.
class Multivector {
 public:
  using TermMap = std::map<IndexSet, Rational>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }

  static Multivector scalar(Signature sig, Rational c) {
    Multivector u(sig);
    u.add_term(IndexSet(), std::move(c));
    return u;
  }

  static Multivector one(Signature sig) { return scalar(sig, 1); }

  static Multivector basis(Signature sig, IndexSet I) {
    if (!I.valid_for(sig)) throw range_error("monomial index out of range for " + sig.str());
    Multivector u(sig);
    u.add_term(I, 1);
    return u;
  }

  static Multivector generator(Signature sig, int i) {
    return basis(sig, IndexSet::single(i));
  }

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(IndexSet I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Top grade among stored terms; nullopt for the zero element, which has
  // no grade.
  std::optional<int> grade() const {
    std::optional<int> top;
    for (const auto& [I, c] : terms_) {
      if (!top || I.grade() > *top) top = I.grade();
    }
    return top;
  }

  // True when every stored term has grade k (vacuously true for zero).
  bool homogeneous(int k) const {
    for (const auto& [I, c] : terms_) {
      if (I.grade() != k) return false;
    }
    return true;
  }

  Multivector grade_part(int k) const {
    Multivector out(sig_);
    for (const auto& [I, c] : terms_) {
      if (I.grade() == k) out.add_term(I, c);
    }
    return out;
  }

  // Accumulate c * e_I, dropping the entry if the sum cancels.
  void add_term(IndexSet I, Rational c) {
    if (!I.valid_for(sig_)) {
      throw range_error("monomial index out of range for " + sig_.str());
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(I, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same(a.sig_, b.sig_);
    Multivector out = a;
    for (const auto& [I, c] : b.terms_) out.add_term(I, c);
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    require_same(a.sig_, b.sig_);
    Multivector out = a;
    for (const auto& [I, c] : b.terms_) out.add_term(I, -c);
    return out;
  }

  friend Multivector operator-(const Multivector& a) {
    Multivector out(a.sig_);
    for (const auto& [I, c] : a.terms_) out.add_term(I, -c);
    return out;
  }

  friend Multivector operator*(const Rational& c, const Multivector& a) {
    Multivector out(a.sig_);
    if (c == 0) return out;
    for (const auto& [I, k] : a.terms_) out.add_term(I, c * k);
    return out;
  }

 private:
  Signature sig_;
  TermMap terms_;
};

// Clifford product, the bilinear extension of the monomial product.
inline Multivector cmul(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  Multivector out(u.signature());
  for (const auto& [I, a] : u.terms()) {
    for (const auto& [J, b] : v.terms()) {
      auto [sign, K] = monomial_product(I, J, u.signature());
      Rational prod(a * b);
      if (sign < 0) prod = -prod;
      out.add_term(K, std::move(prod));
    }
  }
  return out;
}

// Exterior product: vanishes on shared generators, pure inversion sign
// otherwise. Coincides with cmul on disjoint monomials of an orthogonal
// basis.
inline Multivector wedge(const Multivector& u, const Multivector& v) {
  require_same(u.signature(), v.signature());
  Multivector out(u.signature());
  for (const auto& [I, a] : u.terms()) {
    for (const auto& [J, b] : v.terms()) {
      auto [sign, K] = wedge_monomials(I, J);
      if (sign == 0) continue;
      Rational prod(a * b);
      if (sign < 0) prod = -prod;
      out.add_term(K, std::move(prod));
    }
  }
  return out;
}

namespace detail {

template <typename SignOf>
Multivector scale_terms(const Multivector& u, SignOf sign_of) {
  Multivector out(u.signature());
  for (const auto& [I, c] : u.terms()) {
    Rational k = c;
    if (sign_of(I) < 0) k = -k;
    out.add_term(I, std::move(k));
  }
  return out;
}

inline int eps_product(IndexSet I, const Signature& sig) {
  int s = 1;
  for (int i : I.indices()) s *= sig.eps(i);
  return s;
}

}  // namespace detail

// Grade involution: grade-k part scaled by (-1)^k. Algebra automorphism.
inline Multivector grade_involution(const Multivector& u) {
  return detail::scale_terms(u, [](IndexSet I) { return I.grade() % 2 == 0 ? 1 : -1; });
}

// Reversion: grade-k part scaled by (-1)^(k(k-1)/2); reverses the factor
// order of monomials. Anti-automorphism.
inline Multivector reversion(const Multivector& u) {
  return detail::scale_terms(u, [](IndexSet I) {
    const int k = I.grade();
    return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  });
}

// Clifford conjugation = grade involution o reversion: (-1)^(k(k+1)/2).
inline Multivector conjugation(const Multivector& u) {
  return detail::scale_terms(u, [](IndexSet I) {
    const int k = I.grade();
    return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  });
}

// The signature-dependent orthogonal map on vectors: e_i -> eps(i) e_i.
// Defined on grade-1 input only (zero passes as the empty vector).
inline Multivector t_eps(const Multivector& x) {
  if (!x.homogeneous(1)) throw grade_error("t_eps requires a grade-1 element");
  return detail::scale_terms(
      x, [&](IndexSet I) { return x.signature().eps(I.indices().front()); });
}

// The algebra automorphism extending t_eps: e_I scaled by the product of
// the diagonal entries over I. Involutive.
inline Multivector T_eps(const Multivector& u) {
  return detail::scale_terms(
      u, [&](IndexSet I) { return detail::eps_product(I, u.signature()); });
}

// The transposition anti-involution: T_eps o reversion (in either order).
// Reduces to reversion when q = 0 and to conjugation when p = 0, and
// transposes left-multiplication matrices in every signature.
inline Multivector tp(const Multivector& u) {
  return detail::scale_terms(u, [&](IndexSet I) {
    const int k = I.grade();
    const int rev = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
    return rev * detail::eps_product(I, u.signature());
  });
}

// Canonical text form: terms in basis (InvLex) order, exact coefficients,
// e.g. "1/2 - 3 e1 + e12". Parseable by the expression grammar.
inline std::string to_string(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [I, c] : u.terms()) {
    const bool neg = c < 0;
    Rational mag = c;
    if (neg) mag = -mag;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool unit_coeff = (mag == 1) && !I.empty();
    if (!unit_coeff) out += pretty_string(mag);
    if (!I.empty()) {
      if (!unit_coeff) out += " ";
      out += I.name();
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Multivector& u) {
  return os << to_string(u);
}

}  // namespace cliff
