#pragma once

#include <map>
#include <string>
#include <utility>

#include "cliff/multivector.hpp"

namespace cliff {

namespace detail {

// Monomial product sign in Cl(m,0) (all_plus) or Cl(0,m): inversion sign
// times the diagonal entries of repeated generators.
inline int uniform_sign(IndexSet a, IndexSet b, bool all_plus) {
  int sign = (inversions(a, b) % 2 == 0) ? 1 : -1;
  if (!all_plus && a.intersection(b).grade() % 2 != 0) sign = -sign;
  return sign;
}

}  // namespace detail

// Element of the graded tensor product of the Euclidean factor Cl(p,0)
// and the anti-Euclidean factor Cl(0,q): sparse map from a monomial pair
// (first-factor mask over p bits, second-factor mask over q bits) to an
// exact coefficient. Second-factor generator k stands for e_{p+k} of the
// ambient algebra. p or q may be zero, in which case that slot only ever
// holds the unit.
class SplitElement {
 public:
  using Key = std::pair<IndexSet, IndexSet>;
  using TermMap = std::map<Key, Rational>;

  SplitElement(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0 || p + q < 1) throw range_error("invalid split factor dimensions");
  }

  static SplitElement unit(int p, int q) {
    SplitElement x(p, q);
    x.add_term(IndexSet(), IndexSet(), 1);
    return x;
  }

  int p() const { return p_; }
  int q() const { return q_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(IndexSet I1, IndexSet I2) const {
    auto it = terms_.find({I1, I2});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(IndexSet I1, IndexSet I2, Rational c) {
    if (c == 0) return;
    if (I1.mask() >= (std::uint32_t{1} << p_) || I2.mask() >= (std::uint32_t{1} << q_)) {
      throw range_error("split term outside factor dimensions");
    }
    auto [it, inserted] = terms_.try_emplace(Key{I1, I2}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const SplitElement& a, const SplitElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SplitElement& a, const SplitElement& b) { return !(a == b); }

 private:
  int p_;
  int q_;
  TermMap terms_;
};

inline void require_same_factors(const SplitElement& a, const SplitElement& b) {
  if (a.p() != b.p() || a.q() != b.q()) {
    throw mismatch_error("split factor mismatch");
  }
}

// Factor a multivector through Cl(p,0) (x) Cl(0,q): the first p indices of
// each monomial keep their labels, the remaining ones are relabeled by
// subtracting p. Linear, and a bijection onto the split form; no sign
// appears because each monomial already lists its Euclidean generators
// first.
inline SplitElement split(const Multivector& u) {
  const int p = u.signature().p();
  const int q = u.signature().q();
  SplitElement out(p, q);
  const std::uint32_t low = (std::uint32_t{1} << p) - 1;
  for (const auto& [I, c] : u.terms()) {
    const IndexSet I1(I.mask() & low);
    const IndexSet I2(I.mask() >> p);
    out.add_term(I1, I2, c);
  }
  return out;
}

// Inverse of split back into the ambient algebra named by target.
inline Multivector unsplit(const SplitElement& x, const Signature& target) {
  if (x.p() != target.p() || x.q() != target.q()) {
    throw mismatch_error("split factors do not match target signature");
  }
  Multivector out(target);
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    out.add_term(IndexSet(I1.mask() | (I2.mask() << x.p())), c);
  }
  return out;
}

// Product in the graded tensor algebra: (a (x) b)(c (x) d) equals
// (-1)^(|b||c|) ac (x) bd, extended bilinearly. The first factor
// multiplies as Cl(p,0), the second as Cl(0,q).
inline SplitElement graded_cmul(const SplitElement& x, const SplitElement& y) {
  require_same_factors(x, y);
  SplitElement out(x.p(), x.q());
  for (const auto& [kx, a] : x.terms()) {
    const auto& [a1, a2] = kx;
    for (const auto& [ky, b] : y.terms()) {
      const auto& [b1, b2] = ky;
      int sign = (a2.grade() * b1.grade()) % 2 == 0 ? 1 : -1;
      sign *= detail::uniform_sign(a1, b1, true);
      sign *= detail::uniform_sign(a2, b2, false);
      Rational prod(a * b);
      if (sign < 0) prod = -prod;
      out.add_term(a1.symmetric_difference(b1), a2.symmetric_difference(b2),
                   std::move(prod));
    }
  }
  return out;
}

// Composite of the ungraded and graded switches: each term e_I (x) e_J is
// scaled by (-1)^(|I||J|) with the slots left in place. The swapped
// intermediate lives in the opposite-ordered product and is not exposed.
inline SplitElement koszul_twist(const SplitElement& x) {
  SplitElement out(x.p(), x.q());
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    Rational k = c;
    if ((I1.grade() * I2.grade()) % 2 != 0) k = -k;
    out.add_term(I1, I2, std::move(k));
  }
  return out;
}

namespace detail {

// Scale each split term by sign1(|I1|) * sign2(|I2|).
template <typename S1, typename S2>
SplitElement scale_slots(const SplitElement& x, S1 sign1, S2 sign2) {
  SplitElement out(x.p(), x.q());
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    Rational k = c;
    if (sign1(I1.grade()) * sign2(I2.grade()) < 0) k = -k;
    out.add_term(I1, I2, std::move(k));
  }
  return out;
}

inline int sign_identity(int) { return 1; }
inline int sign_grade_involution(int k) { return k % 2 == 0 ? 1 : -1; }
inline int sign_reversion(int k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }
inline int sign_conjugation(int k) { return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace detail

// Exact verification, for one element, that the three involution diagrams
// commute through split:
//   T_eps    ~ identity (x) grade involution
//   tp       ~ (reversion (x) conjugation) after the Koszul twist
//   reversion~ (reversion (x) reversion)   after the Koszul twist
struct DiagramReport {
  bool teps_ok = false;
  bool tp_ok = false;
  bool reversion_ok = false;
  bool ok() const { return teps_ok && tp_ok && reversion_ok; }
};

inline DiagramReport diagram_checks(const Multivector& u) {
  const SplitElement s = split(u);
  DiagramReport r;
  r.teps_ok = split(T_eps(u)) == detail::scale_slots(s, detail::sign_identity,
                                                     detail::sign_grade_involution);
  r.tp_ok = split(tp(u)) ==
            detail::scale_slots(koszul_twist(s), detail::sign_reversion,
                                detail::sign_conjugation);
  r.reversion_ok = split(reversion(u)) ==
                   detail::scale_slots(koszul_twist(s), detail::sign_reversion,
                                       detail::sign_reversion);
  return r;
}

inline std::string to_string(const SplitElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    const bool neg = c < 0;
    Rational mag = c;
    if (neg) mag = -mag;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += pretty_string(mag) + " ";
    out += I1.name() + "(x)" + I2.name();
  }
  return out;
}

}  // namespace cliff
