#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliff/bilinear.hpp"
#include "cliff/expr.hpp"
#include "cliff/multivector.hpp"
#include "cliff/repmat.hpp"
#include "cliff/spinor.hpp"
#include "cliff/split.hpp"

namespace cliff {

// SplitMix64. Self-contained so a seed gives the same stream on every
// platform, which keeps verification reports byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Inclusive range; bias is irrelevant at these sizes.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline Rational random_coeff(Rng& rng) {
  long num = rng.range(1, 9);
  if (rng.range(0, 1) == 1) num = -num;
  return rat(num, rng.range(1, 2));
}

// dense: every basis coefficient nonzero; otherwise roughly half of them.
inline Multivector random_multivector(const Signature& sig, Rng& rng, bool dense = false) {
  Multivector u(sig);
  for (std::size_t m = 0; m < sig.basis_size(); ++m) {
    if (!dense && rng.range(0, 1) == 0) continue;
    u.add_term(IndexSet(static_cast<std::uint32_t>(m)), random_coeff(rng));
  }
  return u;
}

inline Multivector random_vector(const Signature& sig, Rng& rng) {
  Multivector x(sig);
  for (int i = 1; i <= sig.n(); ++i) {
    if (rng.range(0, 2) == 0) continue;
    x.add_term(IndexSet::single(i), random_coeff(rng));
  }
  if (x.is_zero()) x.add_term(IndexSet::single(1), Rational(1));
  return x;
}

struct VerifyCase {
  std::string id;
  bool pass = true;
  std::string note;  // inputs and both sides of the first failure
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 25;
  int exhaustive_max_n = 4;   // exhaustive sweeps over basis monomials
  int random_max_n = 6;       // randomized sweeps
  int transpose_spot_n = 8;   // extra transpose spot-check dimension
  std::optional<Signature> only_sig;
  int cap = kDefaultDimensionCap;
};

namespace detail {

// All signatures with 1 <= n <= sweep_max_n, Euclidean first within each
// dimension. An explicit --sig selection replaces the sweep entirely.
inline std::vector<Signature> sweep_signatures(int sweep_max_n, const VerifyOptions& opts) {
  if (opts.only_sig) return {*opts.only_sig};
  std::vector<Signature> out;
  for (int n = 1; n <= sweep_max_n; ++n) {
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p, opts.cap);
  }
  return out;
}

inline void record(std::vector<VerifyCase>& cases, std::string id, bool pass,
                   std::string note = "") {
  cases.push_back({std::move(id), pass, pass ? std::string() : std::move(note)});
}

inline std::string side_by_side(const std::string& inputs, const Multivector& lhs,
                                const Multivector& rhs) {
  return inputs + "; lhs=" + to_string(lhs) + "; rhs=" + to_string(rhs);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// involutions: product relations and the five basis maps
// ---------------------------------------------------------------------------
inline std::vector<VerifyCase> verify_involutions(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  Rng rng(opts.seed);
  for (const Signature& sig : detail::sweep_signatures(opts.random_max_n, opts)) {
    const std::string tag = "/" + sig.str();

    {
      bool ok = true;
      std::string note;
      for (int i = 1; i <= sig.n() && ok; ++i) {
        const Multivector ei = Multivector::generator(sig, i);
        const Multivector sq = cmul(ei, ei);
        const Multivector want = Multivector::scalar(sig, sig.eps(i));
        if (sq != want) {
          ok = false;
          note = detail::side_by_side("e" + std::to_string(i) + "^2", sq, want);
        }
        for (int j = 1; j <= sig.n() && ok; ++j) {
          if (i == j) continue;
          const Multivector ej = Multivector::generator(sig, j);
          if (!(cmul(ei, ej) + cmul(ej, ei)).is_zero()) {
            ok = false;
            note = "e" + std::to_string(i) + ", e" + std::to_string(j) +
                     " fail to anticommute";
          }
        }
      }
      detail::record(cases, "involutions/generator-relations" + tag, ok, note);
    }

    {
      // e_I rev(e_I) = rev(e_I) e_I = (product of diagonal entries) * 1,
      // exhaustively over the basis.
      bool ok = true;
      std::string note;
      for (std::size_t m = 0; m < sig.basis_size() && ok; ++m) {
        const Multivector eI = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(m)));
        const Multivector want =
            Multivector::scalar(sig, detail::eps_product(IndexSet(static_cast<std::uint32_t>(m)), sig));
        if (cmul(eI, reversion(eI)) != want || cmul(reversion(eI), eI) != want) {
          ok = false;
          note = "monomial " + IndexSet(static_cast<std::uint32_t>(m)).name();
        }
      }
      detail::record(cases, "involutions/monomial-norm" + tag, ok, note);
    }

    {
      // Associativity, unit, and the (anti-)automorphism laws on random
      // elements.
      bool assoc_ok = true, unit_ok = true, homo_ok = true, anti_ok = true,
           invol_ok = true, factor_ok = true;
      std::string detail_assoc, detail_homo, detail_anti;
      for (int t = 0; t < opts.trials; ++t) {
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        const Multivector w = random_multivector(sig, rng);
        if (assoc_ok && cmul(cmul(u, v), w) != cmul(u, cmul(v, w))) {
          assoc_ok = false;
          detail_assoc = "u=" + to_string(u) + "; v=" + to_string(v) + "; w=" + to_string(w);
        }
        if (unit_ok && (cmul(Multivector::one(sig), u) != u || cmul(u, Multivector::one(sig)) != u)) {
          unit_ok = false;
        }
        const Multivector uv = cmul(u, v);
        if (homo_ok && (grade_involution(uv) != cmul(grade_involution(u), grade_involution(v)) ||
                        T_eps(uv) != cmul(T_eps(u), T_eps(v)))) {
          homo_ok = false;
          detail_homo = "u=" + to_string(u) + "; v=" + to_string(v);
        }
        if (anti_ok && (reversion(uv) != cmul(reversion(v), reversion(u)) ||
                        conjugation(uv) != cmul(conjugation(v), conjugation(u)) ||
                        tp(uv) != cmul(tp(v), tp(u)))) {
          anti_ok = false;
          detail_anti = "u=" + to_string(u) + "; v=" + to_string(v);
        }
        if (invol_ok && (grade_involution(grade_involution(u)) != u ||
                         reversion(reversion(u)) != u ||
                         conjugation(conjugation(u)) != u || T_eps(T_eps(u)) != u ||
                         tp(tp(u)) != u)) {
          invol_ok = false;
        }
        if (factor_ok &&
            (tp(u) != T_eps(reversion(u)) || tp(u) != reversion(T_eps(u)))) {
          factor_ok = false;
        }
      }
      detail::record(cases, "involutions/cmul-associative-unital" + tag, assoc_ok && unit_ok,
                     detail_assoc);
      detail::record(cases, "involutions/automorphism-laws" + tag, homo_ok, detail_homo);
      detail::record(cases, "involutions/anti-automorphism-laws" + tag, anti_ok, detail_anti);
      detail::record(cases, "involutions/involutive" + tag, invol_ok);
      detail::record(cases, "involutions/tp-factorisation" + tag, factor_ok);
    }

    {
      // t_eps squares to the identity on vectors and matches T_eps there.
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector x = random_vector(sig, rng);
        ok = t_eps(t_eps(x)) == x && t_eps(x) == T_eps(x);
      }
      detail::record(cases, "involutions/t-eps-on-vectors" + tag, ok);
    }

    if (sig.q() == 0 || sig.p() == 0) {
      // Signature reductions, exhaustively over the basis.
      bool ok = true;
      for (std::size_t m = 0; m < sig.basis_size() && ok; ++m) {
        const Multivector eI = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(m)));
        if (sig.q() == 0) {
          ok = tp(eI) == reversion(eI) && T_eps(eI) == eI;
        } else {
          ok = tp(eI) == conjugation(eI) && T_eps(eI) == grade_involution(eI);
        }
      }
      detail::record(cases,
                     std::string("involutions/") +
                         (sig.q() == 0 ? "euclidean-reduction" : "anti-euclidean-reduction") + tag,
                     ok);
    }

    if (sig.n() <= opts.exhaustive_max_n) {
      // Wedge agrees with the Clifford product on disjoint monomials.
      bool ok = true;
      for (std::size_t a = 0; a < sig.basis_size() && ok; ++a) {
        for (std::size_t b = 0; b < sig.basis_size() && ok; ++b) {
          const IndexSet I(static_cast<std::uint32_t>(a)), J(static_cast<std::uint32_t>(b));
          const Multivector eI = Multivector::basis(sig, I);
          const Multivector eJ = Multivector::basis(sig, J);
          if (I.intersects(J)) {
            ok = wedge(eI, eJ).is_zero();
          } else {
            ok = wedge(eI, eJ) == cmul(eI, eJ);
          }
        }
      }
      detail::record(cases, "involutions/wedge-vs-cmul-disjoint" + tag, ok);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// duality: the extended bilinear form, contraction, and the dual basis
// ---------------------------------------------------------------------------
inline std::vector<VerifyCase> verify_duality(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  Rng rng(opts.seed ^ 0x6475616cULL);
  for (const Signature& sig : detail::sweep_signatures(opts.random_max_n, opts)) {
    const std::string tag = "/" + sig.str();
    const bool exhaustive = sig.n() <= opts.exhaustive_max_n;

    if (exhaustive) {
      // Gram matrix of the form over the basis is the expected diagonal.
      bool ok = true;
      const auto diag = gram_diagonal(sig);
      for (std::size_t a = 0; a < sig.basis_size() && ok; ++a) {
        for (std::size_t b = 0; b < sig.basis_size() && ok; ++b) {
          const Rational got = scalar_product(
              Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(a))),
              Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(b))));
          const Rational want = (a == b) ? diag[a] : Rational(0);
          if (got != want) ok = false;
        }
      }
      detail::record(cases, "duality/gram-diagonal" + tag, ok);
    }

    if (exhaustive) {
      // <e_I, e_J e_K> = <rev(e_J) e_I, e_K> over all basis triples.
      bool ok = true;
      std::string note;
      for (std::size_t a = 0; a < sig.basis_size() && ok; ++a) {
        for (std::size_t b = 0; b < sig.basis_size() && ok; ++b) {
          for (std::size_t c = 0; c < sig.basis_size() && ok; ++c) {
            const Multivector eI = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(a)));
            const Multivector eJ = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(b)));
            const Multivector eK = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(c)));
            if (scalar_product(eI, cmul(eJ, eK)) !=
                scalar_product(cmul(reversion(eJ), eI), eK)) {
              ok = false;
              note = IndexSet(static_cast<std::uint32_t>(a)).name() + "," +
                       IndexSet(static_cast<std::uint32_t>(b)).name() + "," +
                       IndexSet(static_cast<std::uint32_t>(c)).name();
            }
          }
        }
      }
      detail::record(cases, "duality/monomial-triple-pairing" + tag, ok, note);
    }

    {
      bool dual_ok = true, adjoint_ok = true;
      std::string detail_dual, detail_adjoint;
      for (int t = 0; t < opts.trials; ++t) {
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        const Multivector w = random_multivector(sig, rng);
        if (dual_ok &&
            scalar_product(u, cmul(v, w)) != scalar_product(cmul(reversion(v), u), w)) {
          dual_ok = false;
          detail_dual = "u=" + to_string(u) + "; v=" + to_string(v) + "; w=" + to_string(w);
        }
        if (adjoint_ok && scalar_product(left_contraction(u, v), w) !=
                               scalar_product(v, wedge(reversion(u), w))) {
          adjoint_ok = false;
          detail_adjoint =
              "u=" + to_string(u) + "; v=" + to_string(v) + "; w=" + to_string(w);
        }
      }
      detail::record(cases, "duality/product-pairing-formula" + tag, dual_ok, detail_dual);
      detail::record(cases, "duality/contraction-wedge-pairing" + tag, adjoint_ok,
                     detail_adjoint);
    }

    {
      // Contraction axioms and the vector product decomposition.
      bool vec_ok = true, leibniz_ok = true, module_ok = true, chevalley_ok = true;
      for (int t = 0; t < opts.trials; ++t) {
        const Multivector x = random_vector(sig, rng);
        const Multivector y = random_vector(sig, rng);
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        const Multivector w = random_multivector(sig, rng);
        if (vec_ok && left_contraction(x, y) !=
                          Multivector::scalar(sig, scalar_product(x, y))) {
          vec_ok = false;
        }
        if (leibniz_ok &&
            left_contraction(x, wedge(u, v)) !=
                wedge(left_contraction(x, u), v) +
                    wedge(grade_involution(u), left_contraction(x, v))) {
          leibniz_ok = false;
        }
        if (module_ok &&
            left_contraction(wedge(u, v), w) !=
                left_contraction(u, left_contraction(v, w))) {
          module_ok = false;
        }
        if (chevalley_ok &&
            cmul(x, u) != left_contraction(x, u) + wedge(x, u)) {
          chevalley_ok = false;
        }
      }
      detail::record(cases, "duality/contraction-on-vectors" + tag, vec_ok);
      detail::record(cases, "duality/contraction-leibniz" + tag, leibniz_ok);
      detail::record(cases, "duality/contraction-module-law" + tag, module_ok);
      detail::record(cases, "duality/vector-product-decomposition" + tag, chevalley_ok);
    }

    {
      // Determinant route equals the diagonal route on simple k-vectors.
      bool ok = true;
      std::string note;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const int k = static_cast<int>(rng.range(1, std::min(4, sig.n())));
        std::vector<Multivector> xs, ys;
        for (int j = 0; j < k; ++j) {
          xs.push_back(random_vector(sig, rng));
          ys.push_back(random_vector(sig, rng));
        }
        Multivector wx = xs[0], wy = ys[0];
        for (int j = 1; j < k; ++j) {
          wx = wedge(wx, xs[j]);
          wy = wedge(wy, ys[j]);
        }
        const Rational via_form = scalar_product(wx, wy);
        const Rational via_det = det_extension(xs, ys);
        if (via_form != via_det) {
          ok = false;
          note = "k=" + std::to_string(k) + "; form=" + pretty_string(via_form) +
                   "; det=" + pretty_string(via_det);
        }
      }
      detail::record(cases, "duality/det-extension-agrees" + tag, ok, note);
    }

    if (exhaustive) {
      // Reciprocal basis pairs to delta against the basis.
      bool ok = true;
      const auto dual = dual_basis(sig);
      for (std::size_t a = 0; a < sig.basis_size() && ok; ++a) {
        for (std::size_t b = 0; b < sig.basis_size() && ok; ++b) {
          const Rational got = scalar_product(
              dual[a], Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(b))));
          if (got != Rational(a == b ? 1 : 0)) ok = false;
        }
      }
      detail::record(cases, "duality/reciprocal-basis-delta" + tag, ok);
    }

    {
      // Multiform action: reciprocal-basis coordinates contract plainly
      // with the coordinates of the argument.
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector phi = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        Rational expected(0);
        for (const auto& [I, c] : phi.terms()) {
          // coordinate of phi on T_eps(e_I) is eps-product * c
          Rational coord = c;
          if (detail::eps_product(I, sig) < 0) coord = -coord;
          expected += coord * v.coeff(I);
        }
        if (apply_form(phi, v) != expected) ok = false;
      }
      detail::record(cases, "duality/multiform-action" + tag, ok);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// transpose: the central matrix identities
// ---------------------------------------------------------------------------
inline std::vector<VerifyCase> verify_transpose(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  Rng rng(opts.seed ^ 0x7472616eULL);

  for (const Signature& sig : detail::sweep_signatures(opts.random_max_n, opts)) {
    const std::string tag = "/" + sig.str();
    if (sig.n() > kMatrixDimensionCap) continue;

    if (sig.n() <= opts.exhaustive_max_n) {
      bool ok = true;
      std::string note;
      for (std::size_t m = 0; m < sig.basis_size() && ok; ++m) {
        const auto check = transpose_theorem_check(
            Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(m))));
        if (!check.ok) {
          ok = false;
          note = "monomial " + IndexSet(static_cast<std::uint32_t>(m)).name() + "; entry (" +
                   std::to_string(check.row) + "," + std::to_string(check.col) +
                   "): " + pretty_string(check.lhs) + " vs " + pretty_string(check.rhs);
        }
      }
      detail::record(cases, "transpose/basis-exhaustive" + tag, ok, note);
    }

    {
      bool ok = true;
      std::string note;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector u = random_multivector(sig, rng, /*dense=*/true);
        const auto check = transpose_theorem_check(u);
        if (!check.ok) {
          ok = false;
          note = "u=" + to_string(u) + "; entry (" + std::to_string(check.row) + "," +
                   std::to_string(check.col) + "): " + pretty_string(check.lhs) + " vs " +
                   pretty_string(check.rhs);
        }
      }
      detail::record(cases, "transpose/random-dense" + tag, ok, note);
    }

    {
      // Reciprocal-basis matrix equals the transpose.
      bool ok = true;
      for (int t = 0; t < std::min(opts.trials, 10) && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        ok = dual_left_matrix(u) == left_matrix(u).transpose();
      }
      detail::record(cases, "transpose/reciprocal-matrix" + tag, ok);
    }

    {
      // Left multiplication is an algebra homomorphism into matrices.
      bool ok = true;
      for (int t = 0; t < std::min(opts.trials, 5) && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        ok = left_matrix(cmul(u, v)) == left_matrix(u) * left_matrix(v);
      }
      detail::record(cases, "transpose/matrix-homomorphism" + tag, ok);
    }
  }

  if (!opts.only_sig && opts.transpose_spot_n > opts.random_max_n &&
      opts.transpose_spot_n <= kMatrixDimensionCap) {
    const int n = opts.transpose_spot_n;
    const int spot_trials = std::max(1, opts.trials / 10);
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p, opts.cap);
      bool ok = true;
      std::string note;
      for (int t = 0; t < spot_trials && ok; ++t) {
        const Multivector u = random_multivector(sig, rng, /*dense=*/true);
        const auto check = transpose_theorem_check(u);
        if (!check.ok) {
          ok = false;
          note = "entry (" + std::to_string(check.row) + "," + std::to_string(check.col) + ")";
        }
      }
      detail::record(cases, "transpose/spot-dense/" + sig.str(), ok, note);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// recursion: generator matrix families and their block structure
// ---------------------------------------------------------------------------
inline std::vector<VerifyCase> verify_recursion(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;

  {
    // Closed-form parity diagonal equals its defining recursion.
    bool ok = true;
    const int top = std::min(kMatrixDimensionCap, 12);
    for (int n = 1; n <= top && ok; ++n) {
      const JMatrix J(n);
      if (n == 1) {
        ok = J.dim() == 1 && J.entry(0) == 1;
        continue;
      }
      const JMatrix lower(n - 1);
      for (std::size_t k = 0; k < J.dim() && ok; ++k) {
        const int want = k < lower.dim() ? lower.entry(k) : -lower.entry(k - lower.dim());
        ok = J.entry(k) == want;
      }
    }
    detail::record(cases, "recursion/parity-diagonal", ok);
  }

  for (const Signature& sig : detail::sweep_signatures(opts.random_max_n, opts)) {
    const std::string tag = "/" + sig.str();
    if (sig.n() > kMatrixDimensionCap) continue;

    {
      bool gen_ok = true, dual_ok = true;
      std::string detail_gen, detail_dual;
      for (int i = 1; i <= sig.n(); ++i) {
        const RepMatrix E = generator_matrix(i, sig);
        const RepMatrix F = dual_generator_matrix(i, sig);
        const Multivector ei = Multivector::generator(sig, i);
        if (gen_ok && E != left_matrix(ei)) {
          gen_ok = false;
          detail_gen = "generator " + std::to_string(i);
        }
        if (dual_ok && (F != E.transpose() || F != left_matrix(tp(ei)))) {
          dual_ok = false;
          detail_dual = "generator " + std::to_string(i);
        }
      }
      detail::record(cases, "recursion/generator-vs-left-matrix" + tag, gen_ok, detail_gen);
      detail::record(cases, "recursion/reciprocal-family-transpose" + tag, dual_ok, detail_dual);
    }

    {
      // Squares and anticommutation of the generator matrices.
      bool ok = true;
      std::vector<RepMatrix> E;
      for (int i = 1; i <= sig.n(); ++i) E.push_back(generator_matrix(i, sig));
      const RepMatrix id = RepMatrix::identity(sig.basis_size());
      for (int i = 0; i < sig.n() && ok; ++i) {
        RepMatrix sq = E[i] * E[i];
        if (sig.eps(i + 1) < 0) sq = -sq;
        ok = sq == id;
        for (int j = i + 1; j < sig.n() && ok; ++j) {
          ok = (E[i] * E[j]) == -(E[j] * E[i]);
        }
      }
      detail::record(cases, "recursion/generator-relations" + tag, ok);
    }

    if (sig.n() >= 2) {
      // InvLex nesting: lower-dimensional generator matrices appear twice
      // on the diagonal.
      bool ok = true;
      const int n = sig.n();
      const int p_low = std::min(sig.p(), n - 1);
      const Signature lower(p_low, (n - 1) - p_low, opts.cap);
      for (int i = 1; i <= n - 1 && ok; ++i) {
        const RepMatrix low = generator_matrix(i, lower);
        ok = generator_matrix(i, sig) == RepMatrix::block_diag(low, low);
      }
      detail::record(cases, "recursion/block-nesting" + tag, ok);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// split: the graded tensor factorisation
// ---------------------------------------------------------------------------
inline std::vector<VerifyCase> verify_split(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  Rng rng(opts.seed ^ 0x73706c69ULL);
  for (const Signature& sig : detail::sweep_signatures(opts.random_max_n, opts)) {
    const std::string tag = "/" + sig.str();

    {
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        ok = unsplit(split(u), sig) == u;
      }
      detail::record(cases, "split/round-trip" + tag, ok);
    }

    {
      bool iso_ok = true, diagram_ok = true;
      std::string detail_iso, detail_diagram;
      for (int t = 0; t < opts.trials; ++t) {
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        if (iso_ok && split(cmul(u, v)) != graded_cmul(split(u), split(v))) {
          iso_ok = false;
          detail_iso = "u=" + to_string(u) + "; v=" + to_string(v);
        }
        if (diagram_ok && !diagram_checks(u).ok()) {
          diagram_ok = false;
          detail_diagram = "u=" + to_string(u);
        }
      }
      detail::record(cases, "split/product-factorisation" + tag, iso_ok, detail_iso);
      detail::record(cases, "split/involution-diagrams" + tag, diagram_ok, detail_diagram);
    }

    if (sig.n() <= opts.exhaustive_max_n) {
      // Koszul twist scales each basis tensor by the parity of the grade
      // product; diagrams hold exhaustively over the basis.
      bool twist_ok = true, diagram_ok = true;
      for (std::size_t m = 0; m < sig.basis_size(); ++m) {
        const Multivector eI = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(m)));
        const SplitElement s = split(eI);
        const auto& [I1, I2] = s.terms().begin()->first;
        const int sign = (I1.grade() * I2.grade()) % 2 == 0 ? 1 : -1;
        SplitElement want(s.p(), s.q());
        want.add_term(I1, I2, Rational(sign));
        if (koszul_twist(s) != want) twist_ok = false;
        if (!diagram_checks(eI).ok()) diagram_ok = false;
      }
      detail::record(cases, "split/koszul-twist-basis" + tag, twist_ok);
      detail::record(cases, "split/involution-diagrams-basis" + tag, diagram_ok);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// spinor: ideal restrictions for Cl(1,1), Cl(2,0) and Cl(4,2)
// ---------------------------------------------------------------------------
namespace detail {

// Restricted generator matrices on the leading minimal ideal of Cl(4,2)
// generated by (1+e1)(1+e35)(1+e46)/8: the six left-multiplication tables
// for e1..e6 relative to [f, e2 f, e3 f, e4 f, e23 f, e24 f, e34 f, e234 f].
// The orthogonal images t_eps(e_k) reproduce the same tables for k <= 4
// and the negated ones for k = 5, 6.
inline const std::array<std::array<std::array<int, 8>, 8>, 6>& cl42_generator_tables() {
  static const std::array<std::array<std::array<int, 8>, 8>, 6> tables = {{
      {{{1, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, -1}}},
      {{{0, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 1, 0}}},
      {{{0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, -1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0}}},
      {{{0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, -1, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0}}},
      {{{0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, -1, 0},
        {0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0}}},
      {{{0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1},
        {0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0}}},
  }};
  return tables;
}

inline RepMatrix table_to_matrix(const std::array<std::array<int, 8>, 8>& t) {
  RepMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = t[i][j];
  }
  return m;
}

inline std::vector<Multivector> cl42_idempotents(const Signature& sig) {
  std::vector<Multivector> out;
  const Multivector one = Multivector::one(sig);
  const Multivector e1 = Multivector::generator(sig, 1);
  const Multivector e35 = Multivector::basis(sig, IndexSet::of({3, 5}));
  const Multivector e46 = Multivector::basis(sig, IndexSet::of({4, 6}));
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        const Multivector f =
            rat(1, 8) * cmul(cmul(one + Rational(s1) * e1, one + Rational(s2) * e35),
                             one + Rational(s3) * e46);
        out.push_back(f);
      }
    }
  }
  return out;
}

inline std::vector<IndexSet> cl42_ideal_generators() {
  return {IndexSet(), IndexSet::of({2}), IndexSet::of({3}), IndexSet::of({4}),
          IndexSet::of({2, 3}), IndexSet::of({2, 4}), IndexSet::of({3, 4}),
          IndexSet::of({2, 3, 4})};
}

}  // namespace detail

inline std::vector<VerifyCase> verify_spinor(const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  Rng rng(opts.seed ^ 0x7370696eULL);
  const auto wants_sig = [&](const Signature& sig) {
    return !opts.only_sig || *opts.only_sig == sig;
  };

  // --- Cl(1,1): rank-2 ideals of the hyperbolic plane -----------------------
  if (const Signature sig(1, 1, opts.cap); wants_sig(sig)) {
    const Multivector f1 = eval_text("(1+e12)/2", sig);
    const Multivector f2 = eval_text("(1-e12)/2", sig);
    detail::record(cases, "spinor/cl11-idempotent-pair",
                   verify_idempotent(f1) && verify_idempotent(f2) &&
                       verify_annihilating(f1, f2) &&
                       f1 + f2 == Multivector::one(sig));

    const IdealBasis s1(f1, {IndexSet(), IndexSet::of({1})});
    const IdealBasis s2(f2, {IndexSet(), IndexSet::of({1})});

    {
      // Closed forms of the restricted matrices for random coefficients.
      bool ok = true;
      std::string note;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Rational a1 = random_coeff(rng), a2 = random_coeff(rng),
                       a3 = random_coeff(rng), a4 = random_coeff(rng);
        Multivector u(sig);
        u.add_term(IndexSet(), a1);
        u.add_term(IndexSet::of({1}), a2);
        u.add_term(IndexSet::of({2}), a3);
        u.add_term(IndexSet::of({1, 2}), a4);

        RepMatrix m1(2), m2(2), mt(2);
        m1.at(0, 0) = a1 + a4; m1.at(0, 1) = a2 - a3;
        m1.at(1, 0) = a2 + a3; m1.at(1, 1) = a1 - a4;
        m2.at(0, 0) = a1 - a4; m2.at(0, 1) = a2 + a3;
        m2.at(1, 0) = a2 - a3; m2.at(1, 1) = a1 + a4;
        mt.at(0, 0) = a1 + a4; mt.at(0, 1) = a2 + a3;
        mt.at(1, 0) = a2 - a3; mt.at(1, 1) = a1 - a4;

        const RepMatrix got1 = restricted_left_matrix(u, s1);
        const RepMatrix got2 = restricted_left_matrix(u, s2);
        const RepMatrix gott = restricted_left_matrix(tp(u), s1);
        if (got1 != m1 || got2 != m2 || gott != mt || gott != got1.transpose()) {
          ok = false;
          note = "u=" + to_string(u);
        }
      }
      detail::record(cases, "spinor/cl11-restricted-closed-form", ok, note);
    }

    {
      // Direct sum rebuilds left multiplication after the change of basis
      // to {f1, e1 f1, f2, e1 f2}: L P = P (M1 (+) M2).
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        RepMatrix pmat(4);
        const std::vector<Multivector> cols = {s1.vectors()[0], s1.vectors()[1],
                                               s2.vectors()[0], s2.vectors()[1]};
        for (std::size_t j = 0; j < 4; ++j) {
          for (const auto& [I, c] : cols[j].terms()) pmat.at(I.mask(), j) = c;
        }
        const RepMatrix blocks = RepMatrix::block_diag(restricted_left_matrix(u, s1),
                                                       restricted_left_matrix(u, s2));
        ok = left_matrix(u) * pmat == pmat * blocks;
      }
      detail::record(cases, "spinor/cl11-direct-sum", ok);
    }

    {
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        const Multivector v = random_multivector(sig, rng);
        ok = restricted_left_matrix(cmul(u, v), s1) ==
                 restricted_left_matrix(u, s1) * restricted_left_matrix(v, s1) &&
             restricted_left_matrix(tp(u), s1) ==
                 restricted_left_matrix(u, s1).transpose();
      }
      detail::record(cases, "spinor/cl11-restriction-homomorphism-transpose", ok);
    }
  }

  // --- Cl(2,0) ---------------------------------------------------------------
  if (const Signature sig(2, 0, opts.cap); wants_sig(sig)) {
    const Multivector f = eval_text("(1+e1)/2", sig);
    const IdealBasis s(f, {IndexSet(), IndexSet::of({2})});
    bool ok = verify_idempotent(f);
    for (int t = 0; t < opts.trials && ok; ++t) {
      const Multivector u = random_multivector(sig, rng);
      const Multivector v = random_multivector(sig, rng);
      ok = restricted_left_matrix(tp(u), s) == restricted_left_matrix(u, s).transpose() &&
           restricted_left_matrix(cmul(u, v), s) ==
               restricted_left_matrix(u, s) * restricted_left_matrix(v, s);
    }
    detail::record(cases, "spinor/cl20-restriction-transpose", ok);
  }

  // --- Cl(4,2) ---------------------------------------------------------------
  if (const Signature sig(4, 2, opts.cap); wants_sig(sig)) {
    const auto idempotents = detail::cl42_idempotents(sig);

    {
      bool ok = true;
      Multivector sum = Multivector::zero(sig);
      for (const auto& f : idempotents) {
        if (!verify_idempotent(f)) ok = false;
        sum = sum + f;
      }
      for (std::size_t a = 0; a < idempotents.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < idempotents.size() && ok; ++b) {
          ok = verify_annihilating(idempotents[a], idempotents[b]);
        }
      }
      ok = ok && sum == Multivector::one(sig);
      detail::record(cases, "spinor/cl42-unity-decomposition", ok);
    }

    const IdealBasis s1(idempotents.front(), detail::cl42_ideal_generators());

    {
      bool ok = true;
      std::string note;
      const auto& tables = detail::cl42_generator_tables();
      for (int k = 1; k <= 6 && ok; ++k) {
        const RepMatrix want = detail::table_to_matrix(tables[k - 1]);
        const Multivector ek = Multivector::generator(sig, k);
        const RepMatrix got = restricted_left_matrix(ek, s1);
        const RepMatrix got_te = restricted_left_matrix(t_eps(ek), s1);
        const RepMatrix want_te = k <= 4 ? want : -want;
        if (got != want || got_te != want_te ||
            restricted_left_matrix(tp(ek), s1) != got.transpose()) {
          ok = false;
          note = "generator " + std::to_string(k);
        }
      }
      detail::record(cases, "spinor/cl42-generator-tables", ok, note);
    }

    {
      bool ok = true;
      for (int t = 0; t < std::min(opts.trials, 10) && ok; ++t) {
        const Multivector u = random_multivector(sig, rng);
        ok = restricted_left_matrix(tp(u), s1) == restricted_left_matrix(u, s1).transpose();
      }
      detail::record(cases, "spinor/cl42-transpose-on-ideal", ok);
    }
  }

  return cases;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "involutions", "duality", "transpose", "recursion", "split", "spinor"};
  return names;
}

inline std::vector<VerifyCase> verify_suite(const std::string& name,
                                            const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  if (name == "involutions" || name == "all") {
    auto c = verify_involutions(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (name == "duality" || name == "all") {
    auto c = verify_duality(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (name == "transpose" || name == "all") {
    auto c = verify_transpose(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (name == "recursion" || name == "all") {
    auto c = verify_recursion(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (name == "split" || name == "all") {
    auto c = verify_split(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (name == "spinor" || name == "all") {
    auto c = verify_spinor(opts);
    cases.insert(cases.end(), c.begin(), c.end());
  }
  if (cases.empty() && name != "all") {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw range_error("unknown verification suite '" + name + "'");
    }
  }
  // Deterministic report order regardless of generation order.
  std::sort(cases.begin(), cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  return cases;
}

}  // namespace cliff
