#include <catch2/catch.hpp>

#include "cliff/expr.hpp"
#include "cliff/spinor.hpp"
#include "cliff/verify.hpp"

using namespace cliff;

TEST_CASE("idempotent checks") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);
  const Multivector f2 = eval_text("(1-e12)/2", sig);
  REQUIRE(verify_idempotent(f1));
  REQUIRE(verify_idempotent(f2));
  REQUIRE(!verify_idempotent(Multivector::generator(Signature(1, 0), 1)));

  const Signature big(4, 2);
  REQUIRE(verify_idempotent(eval_text("(1+e1)*(1+e35)*(1+e46)/8", big)));
}

TEST_CASE("mutual annihilation") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);
  const Multivector f2 = eval_text("(1-e12)/2", sig);
  REQUIRE(verify_annihilating(f1, f2));
  REQUIRE(f1 + f2 == Multivector::one(sig));
  REQUIRE(!verify_annihilating(f1, f1));
  REQUIRE(verify_annihilating(Multivector::zero(sig), Multivector::zero(sig)));
}

TEST_CASE("ideal basis construction and failure modes") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);

  const IdealBasis s1 = ideal_basis(f1, {IndexSet(), IndexSet::of({1})});
  REQUIRE(s1.size() == 2);
  REQUIRE(s1.vectors()[0] == f1);
  REQUIRE(s1.vectors()[1] == cmul(Multivector::generator(sig, 1), f1));

  REQUIRE_THROWS_AS(ideal_basis(f1, {IndexSet(), IndexSet()}), ideal_error);
  REQUIRE_THROWS_AS(ideal_basis(Multivector::generator(sig, 1), {IndexSet()}), ideal_error);
  REQUIRE_THROWS_AS(ideal_basis(f1, {}), ideal_error);
}

TEST_CASE("restricted matrices for the hyperbolic plane") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);
  const Multivector f2 = eval_text("(1-e12)/2", sig);
  const IdealBasis s1 = ideal_basis(f1, {IndexSet(), IndexSet::of({1})});
  const IdealBasis s2 = ideal_basis(f2, {IndexSet(), IndexSet::of({1})});

  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const Rational a1 = random_coeff(rng), a2 = random_coeff(rng),
                   a3 = random_coeff(rng), a4 = random_coeff(rng);
    Multivector u(sig);
    u.add_term(IndexSet(), a1);
    u.add_term(IndexSet::of({1}), a2);
    u.add_term(IndexSet::of({2}), a3);
    u.add_term(IndexSet::of({1, 2}), a4);

    const RepMatrix m1 = restricted_left_matrix(u, s1);
    REQUIRE(m1.at(0, 0) == a1 + a4);
    REQUIRE(m1.at(0, 1) == a2 - a3);
    REQUIRE(m1.at(1, 0) == a2 + a3);
    REQUIRE(m1.at(1, 1) == a1 - a4);

    const RepMatrix m2 = restricted_left_matrix(u, s2);
    REQUIRE(m2.at(0, 0) == a1 - a4);
    REQUIRE(m2.at(0, 1) == a2 + a3);
    REQUIRE(m2.at(1, 0) == a2 - a3);
    REQUIRE(m2.at(1, 1) == a1 + a4);

    REQUIRE(restricted_left_matrix(tp(u), s1) == m1.transpose());
  }
}

TEST_CASE("restriction is a homomorphism and rebuilds the full matrix") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);
  const Multivector f2 = eval_text("(1-e12)/2", sig);
  const IdealBasis s1 = ideal_basis(f1, {IndexSet(), IndexSet::of({1})});
  const IdealBasis s2 = ideal_basis(f2, {IndexSet(), IndexSet::of({1})});

  RepMatrix pmat(4);
  const std::vector<Multivector> cols = {s1.vectors()[0], s1.vectors()[1],
                                         s2.vectors()[0], s2.vectors()[1]};
  for (std::size_t j = 0; j < 4; ++j) {
    for (const auto& [I, c] : cols[j].terms()) pmat.at(I.mask(), j) = c;
  }

  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    const Multivector u = random_multivector(sig, rng);
    const Multivector v = random_multivector(sig, rng);
    REQUIRE(restricted_left_matrix(cmul(u, v), s1) ==
            restricted_left_matrix(u, s1) * restricted_left_matrix(v, s1));

    const RepMatrix blocks = RepMatrix::block_diag(restricted_left_matrix(u, s1),
                                                   restricted_left_matrix(u, s2));
    REQUIRE(left_matrix(u) * pmat == pmat * blocks);
  }
}

TEST_CASE("non-invariant spans are rejected") {
  const Signature sig(1, 1);
  const Multivector f1 = eval_text("(1+e12)/2", sig);
  const IdealBasis partial = ideal_basis(f1, {IndexSet()});
  REQUIRE_THROWS_AS(restricted_left_matrix(Multivector::generator(sig, 1), partial),
                    not_invariant_error);
}

TEST_CASE("restricted generator tables for Cl(4,2) at a spot check") {
  const Signature sig(4, 2);
  const Multivector f1 = eval_text("(1+e1)*(1+e35)*(1+e46)/8", sig);
  const IdealBasis s1 =
      ideal_basis(f1, {IndexSet(), IndexSet::of({2}), IndexSet::of({3}), IndexSet::of({4}),
                       IndexSet::of({2, 3}), IndexSet::of({2, 4}), IndexSet::of({3, 4}),
                       IndexSet::of({2, 3, 4})});
  REQUIRE(s1.size() == 8);

  // e5 acts antisymmetrically on the ideal (tp(e5) = -e5), e1 diagonally.
  const RepMatrix m5 = restricted_left_matrix(Multivector::generator(sig, 5), s1);
  REQUIRE(restricted_left_matrix(tp(Multivector::generator(sig, 5)), s1) == m5.transpose());
  REQUIRE(m5.transpose() == -m5);

  const RepMatrix m1 = restricted_left_matrix(Multivector::generator(sig, 1), s1);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (i != j) REQUIRE(m1.at(i, j) == 0);
    }
  }
  REQUIRE(m1.at(0, 0) == 1);
}

TEST_CASE("spinor verification suite passes") {
  VerifyOptions opts;
  opts.seed = 5;
  opts.trials = 10;
  for (const auto& c : verify_spinor(opts)) {
    INFO(c.id << " " << c.note);
    REQUIRE(c.pass);
  }
}
