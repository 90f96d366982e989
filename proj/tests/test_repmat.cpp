#include <catch2/catch.hpp>

#include "cliff/repmat.hpp"
#include "cliff/verify.hpp"
#include "golden_matrices.hpp"
#include "oracles.hpp"

using namespace cliff;

TEST_CASE("invlex basis order") {
  const auto b1 = invlex_basis(1);
  REQUIRE(b1.size() == 2);
  REQUIRE(b1[0] == IndexSet());
  REQUIRE(b1[1] == IndexSet::of({1}));

  const auto b2 = invlex_basis(2);
  REQUIRE(b2[0].name() == "1");
  REQUIRE(b2[1].name() == "e1");
  REQUIRE(b2[2].name() == "e2");
  REQUIRE(b2[3].name() == "e12");

  const auto b3 = invlex_basis(3);
  const char* want[] = {"1", "e1", "e2", "e12", "e3", "e13", "e23", "e123"};
  for (std::size_t k = 0; k < 8; ++k) REQUIRE(b3[k].name() == want[k]);

  REQUIRE_THROWS_AS(invlex_basis(0), range_error);
  REQUIRE_THROWS_AS(invlex_basis(13), range_error);
}

TEST_CASE("left matrix of the unit is the identity") {
  const Signature sig(2, 1);
  REQUIRE(left_matrix(Multivector::one(sig)) ==
          RepMatrix::identity(sig.basis_size(), basis_labels(sig.n())));
}

TEST_CASE("left matrix columns hold the coordinates of u e_J") {
  Rng rng(37);
  for (int n = 1; n <= 4; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      const Multivector u = random_multivector(sig, rng);
      const RepMatrix m = left_matrix(u);
      for (std::uint32_t col = 0; col < sig.basis_size(); ++col) {
        const Multivector image = cmul(u, Multivector::basis(sig, IndexSet(col)));
        for (std::uint32_t row = 0; row < sig.basis_size(); ++row) {
          REQUIRE(m.at(row, col) == image.coeff(IndexSet(row)));
        }
      }
    }
  }
}

TEST_CASE("golden symbolic matrices, n = 1 and 2, unit coefficient patterns") {
  for (int p = 1; p >= 0; --p) {
    const Signature sig(p, 1 - p);
    for (int unit = 0; unit < 2; ++unit) {
      std::array<Rational, 2> a = {Rational(0), Rational(0)};
      a[unit] = 1;
      const Multivector u = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(unit)));
      REQUIRE(left_matrix(u) == golden::instantiate(golden::kLeft1, a, sig));
      REQUIRE(dual_left_matrix(u) == golden::instantiate(golden::kDual1, a, sig));
    }
  }
  for (int p = 2; p >= 0; --p) {
    const Signature sig(p, 2 - p);
    for (int unit = 0; unit < 4; ++unit) {
      std::array<Rational, 4> a = {Rational(0), Rational(0), Rational(0), Rational(0)};
      a[unit] = 1;
      const Multivector u = Multivector::basis(sig, IndexSet(static_cast<std::uint32_t>(unit)));
      REQUIRE(left_matrix(u) == golden::instantiate(golden::kLeft2, a, sig));
      REQUIRE(dual_left_matrix(u) == golden::instantiate(golden::kDual2, a, sig));
    }
  }
}

TEST_CASE("golden symbolic matrices with dense random coefficients") {
  Rng rng(41);
  for (int p = 2; p >= 0; --p) {
    const Signature sig(p, 2 - p);
    std::array<Rational, 4> a;
    Multivector u(sig);
    for (int k = 0; k < 4; ++k) {
      a[k] = random_coeff(rng);
      u.add_term(IndexSet(static_cast<std::uint32_t>(k)), a[k]);
    }
    REQUIRE(left_matrix(u) == golden::instantiate(golden::kLeft2, a, sig));
    REQUIRE(dual_left_matrix(u) == golden::instantiate(golden::kDual2, a, sig));
  }
  for (int p = 3; p >= 0; --p) {
    const Signature sig(p, 3 - p);
    std::array<Rational, 8> a;
    Multivector u(sig);
    for (int k = 0; k < 8; ++k) {
      a[k] = random_coeff(rng);
      u.add_term(IndexSet(static_cast<std::uint32_t>(k)), a[k]);
    }
    REQUIRE(left_matrix(u) == golden::instantiate(golden::kLeft3, a, sig));
  }
}

TEST_CASE("reciprocal matrix is the transpose") {
  Rng rng(43);
  for (int n = 1; n <= 5; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      for (int t = 0; t < 5; ++t) {
        const Multivector u = random_multivector(sig, rng);
        REQUIRE(dual_left_matrix(u) == left_matrix(u).transpose());
      }
    }
  }
}

TEST_CASE("left multiplication is a matrix homomorphism") {
  Rng rng(47);
  for (int n = 1; n <= 4; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      const Multivector u = random_multivector(sig, rng);
      const Multivector v = random_multivector(sig, rng);
      REQUIRE(left_matrix(cmul(u, v)) == left_matrix(u) * left_matrix(v));
    }
  }
}

TEST_CASE("parity diagonal closed form equals its recursion, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const JMatrix J(n);
    const auto want = oracle::j_diagonal_recursive(n);
    REQUIRE(J.dim() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(J.entry(k) == want[k]);
  }
}

TEST_CASE("generator matrices: pinned low-dimensional forms") {
  {
    const Signature sig(0, 1);  // eps_1 = -1
    const RepMatrix E = generator_matrix(1, sig);
    REQUIRE(E.dim() == 2);
    REQUIRE(E.at(0, 0) == 0);
    REQUIRE(E.at(0, 1) == -1);
    REQUIRE(E.at(1, 0) == 1);
    REQUIRE(E.at(1, 1) == 0);

    const RepMatrix F = dual_generator_matrix(1, sig);
    REQUIRE(F.at(0, 1) == 1);
    REQUIRE(F.at(1, 0) == -1);
  }
  {
    const Signature sig(1, 1);  // eps_2 = -1
    const RepMatrix E = generator_matrix(2, sig);
    const long want[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) REQUIRE(E.at(i, j) == want[i][j]);
    }
  }
  {
    const Signature sig(3, 0);
    const RepMatrix lower = generator_matrix(1, Signature(2, 0));
    REQUIRE(generator_matrix(1, sig) == RepMatrix::block_diag(lower, lower));
  }
  REQUIRE_THROWS_AS(generator_matrix(4, Signature(2, 1)), range_error);
  REQUIRE_THROWS_AS(generator_matrix(0, Signature(2, 1)), range_error);
}

TEST_CASE("generator families agree with left multiplication, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      for (int i = 1; i <= n; ++i) {
        const Multivector ei = Multivector::generator(sig, i);
        const RepMatrix E = generator_matrix(i, sig);
        const RepMatrix F = dual_generator_matrix(i, sig);
        REQUIRE(E == left_matrix(ei));
        REQUIRE(F == E.transpose());
        REQUIRE(F == left_matrix(tp(ei)));
      }
    }
  }
}

TEST_CASE("generator matrices satisfy the product relations") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      std::vector<RepMatrix> E;
      for (int i = 1; i <= n; ++i) E.push_back(generator_matrix(i, sig));
      const RepMatrix id = RepMatrix::identity(sig.basis_size());
      for (int i = 0; i < n; ++i) {
        RepMatrix sq = E[i] * E[i];
        if (sig.eps(i + 1) < 0) sq = -sq;
        REQUIRE(sq == id);
        for (int j = i + 1; j < n; ++j) {
          REQUIRE(E[i] * E[j] == -(E[j] * E[i]));
        }
      }
    }
  }
}

TEST_CASE("transpose theorem check") {
  {
    const Signature sig(1, 1);
    const auto check = transpose_theorem_check(Multivector::basis(sig, IndexSet::of({1, 2})));
    REQUIRE(check.ok);
  }
  {
    const Signature sig(2, 1);
    REQUIRE(transpose_theorem_check(Multivector::zero(sig)).ok);
  }
  Rng rng(53);
  for (int n = 1; n <= 6; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      for (int t = 0; t < 3; ++t) {
        REQUIRE(transpose_theorem_check(random_multivector(sig, rng, true)).ok);
      }
    }
  }
  // spot checks at n = 7, 8
  for (int n = 7; n <= 8; ++n) {
    Rng spot(59 + n);
    const Signature sig(n - 2, 2);
    REQUIRE(transpose_theorem_check(random_multivector(sig, spot, true)).ok);
  }
}

TEST_CASE("dense matrices are capped") {
  const Signature sig(13, 0, 16);
  REQUIRE_THROWS_AS(left_matrix(Multivector::one(sig)), range_error);
  REQUIRE_THROWS_AS(generator_matrix(1, sig), range_error);
}
