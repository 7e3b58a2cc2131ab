#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stingray/error.hpp"
#include "stingray/fmatrix.hpp"
#include "stingray/random.hpp"

using namespace stingray;
using mat::DenseMatrix;
using mat::Subspace;
using poly::DensePoly;

namespace {

DensePoly P(const ff::FieldSpec& F, std::vector<ff::Elt> c) { return DensePoly(F, std::move(c)); }

DenseMatrix random_matrix(const ff::FieldSpec& F, std::size_t d, Rng& rng) {
  DenseMatrix m(F, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.set(i, j, below(rng, F.order()));
  return m;
}

DenseMatrix random_invertible(const ff::FieldSpec& F, std::size_t d, Rng& rng) {
  for (;;) {
    auto m = random_matrix(F, d, rng);
    if (m.is_invertible()) return m;
  }
}

// Naive product with schoolbook loops, kept separate from the library's kernel.
DenseMatrix naive_mul(const DenseMatrix& a, const DenseMatrix& b) {
  const auto& F = a.field();
  DenseMatrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ff::Elt s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      c.set(i, j, s);
    }
  return c;
}

// Order by repeated naive multiplication.
std::uint64_t brute_order(const DenseMatrix& m, std::uint64_t limit) {
  DenseMatrix x = m;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (x.is_identity()) return n;
    x = naive_mul(x, m);
  }
  return 0;
}

const Subspace& check_echelon(const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto piv = s.pivots()[i];
    EXPECT_EQ(s.basis()[i][piv], 1u);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      if (k != i) {
        EXPECT_EQ(s.basis()[k][piv], 0u);
      }
    }
    for (std::size_t j = 0; j < piv; ++j) EXPECT_EQ(s.basis()[i][j], 0u);
    if (i > 0) {
      EXPECT_LT(s.pivots()[i - 1], piv);
    }
  }
  return s;
}

}  // namespace

TEST(MatArith, Examples) {
  Rng rng(21);
  const auto F2 = ff::make_field(2);
  const auto m = random_matrix(ff::make_field(5), 4, rng);
  EXPECT_EQ(DenseMatrix::identity(m.field(), 4) * m, m);
  const auto c = DenseMatrix::companion(P(F2, {1, 1, 1}));
  EXPECT_EQ(c.inverse(), c * c);
  EXPECT_TRUE(m.pow(0).is_identity());
}

TEST(MatArith, ProductsMatchNaiveLoops) {
  Rng rng(22);
  for (const auto& F : {ff::make_field(2), ff::make_field(3, 2), ff::make_field(101)}) {
    for (int i = 0; i < 20; ++i) {
      const auto a = random_matrix(F, 1 + below(rng, 9), rng);
      const auto b = random_matrix(F, a.cols(), rng);
      ASSERT_EQ(a * b, naive_mul(a, b));
    }
  }
}

TEST(MatArith, InverseAndPowers) {
  Rng rng(23);
  for (const auto& F : {ff::make_field(2), ff::make_field(7), ff::make_field(2, 3)}) {
    for (int i = 0; i < 20; ++i) {
      const auto a = random_invertible(F, 1 + below(rng, 8), rng);
      ASSERT_TRUE((a * a.inverse()).is_identity());
      ASSERT_EQ(a.pow(5), a * a * a * a * a);
      ASSERT_TRUE((a.pow(-3) * a.pow(3)).is_identity());
    }
  }
}

TEST(MatArith, Errors) {
  const auto F = ff::make_field(3);
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([&] { (void)(DenseMatrix(F, 2, 3) * DenseMatrix(F, 2, 3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { DenseMatrix(F, 2, 2).inverse(); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([&] { mat::char_poly(DenseMatrix(F, 2, 3)); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([&] { mat::matrix_order(DenseMatrix(F, 3, 3)); }), ErrorCode::Singular);
}

TEST(MatArith, InvertibilityCacheAgreesWithRank) {
  Rng rng(24);
  const auto F = ff::make_field(2);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(F, 5, rng);
    const bool first = m.is_invertible();
    ASSERT_EQ(first, m.rank() == 5);
    ASSERT_EQ(m.is_invertible(), first);
    ASSERT_EQ(first, m.det() != 0);
    const DenseMatrix copy = m;
    ASSERT_EQ(copy.is_invertible(), first);
  }
}

TEST(CharPoly, Examples) {
  const auto F2 = ff::make_field(2);
  const auto phi5 = P(F2, {1, 1, 1, 1, 1});
  EXPECT_EQ(mat::char_poly(DenseMatrix::companion(phi5)), phi5);
  for (const auto& F : {F2, ff::make_field(5), ff::make_field(2, 2)}) {
    for (unsigned d = 1; d <= 6; ++d)
      EXPECT_EQ(mat::char_poly(DenseMatrix::identity(F, d)), poly::pow(P(F, {F.neg(1), 1}), d));
  }
  const auto g = DenseMatrix::block_diag(DenseMatrix::companion(phi5), DenseMatrix::identity(F2, 4));
  EXPECT_EQ(mat::char_poly(g), phi5 * poly::pow(P(F2, {1, 1}), 4));
}

TEST(CharPoly, CompanionOfRandomMonic) {
  Rng rng(25);
  const auto F = ff::make_field(3, 2);
  for (int i = 0; i < 30; ++i) {
    std::vector<ff::Elt> c(2 + below(rng, 10));
    for (auto& x : c) x = below(rng, F.order());
    c.back() = 1;
    ASSERT_EQ(mat::char_poly(DenseMatrix::companion(P(F, c))), P(F, c));
  }
}

TEST(CharPoly, AgreesWithDeterminantAtEveryPoint) {
  // det(xI - m) at all x in GF(q) pins down a monic degree-d polynomial when q > d
  Rng rng(26);
  for (const auto& F : {ff::make_field(13), ff::make_field(2, 4), ff::make_field(3, 3)}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t d = 1 + below(rng, 10);
      const auto m = random_matrix(F, d, rng);
      const auto cp = mat::char_poly(m);
      ASSERT_EQ(cp.degree(), static_cast<int>(d));
      ASSERT_EQ(cp.leading(), 1u);
      for (ff::Elt x = 0; x < F.order(); ++x) {
        const auto shifted = DenseMatrix::identity(F, d).scaled(x) - m;
        ASSERT_EQ(cp.eval(x), shifted.det());
      }
    }
  }
}

TEST(CharPoly, CayleyHamilton) {
  Rng rng(27);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto F = ff::make_field_of_order(q);
    for (std::size_t d = 1; d <= 12; ++d) {
      for (int i = 0; i < 3; ++i) {
        const auto m = random_matrix(F, d, rng);
        ASSERT_TRUE(mat::eval(mat::char_poly(m), m) == DenseMatrix(F, d, d)) << "q=" << q << " d=" << d;
      }
    }
  }
}

TEST(MinPoly, Examples) {
  const auto F2 = ff::make_field(2);
  EXPECT_EQ(mat::min_poly(DenseMatrix::identity(F2, 5)), P(F2, {1, 1}));
  const auto phi5 = P(F2, {1, 1, 1, 1, 1});
  const auto c = DenseMatrix::companion(phi5);
  EXPECT_EQ(mat::min_poly(c), phi5);
  EXPECT_EQ(mat::min_poly(DenseMatrix::block_diag(c, c)), phi5);
}

TEST(MinPoly, DividesCharPolyWithSameSupport) {
  Rng rng(28);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto F = ff::make_field_of_order(q);
    for (int i = 0; i < 30; ++i) {
      const std::size_t d = 1 + below(rng, 10);
      // block sums with repeated blocks exercise the lcm accumulation
      auto m = random_matrix(F, d, rng);
      if (i % 3 == 0) m = DenseMatrix::block_diag(m, m);
      const auto mp = mat::min_poly(m), cp = mat::char_poly(m);
      ASSERT_TRUE((cp % mp).is_zero());
      ASSERT_TRUE(mat::eval(mp, m) == DenseMatrix(F, m.rows(), m.rows()));
      const auto fm = poly::factor(mp), fc = poly::factor(cp);
      ASSERT_EQ(fm.factors.size(), fc.factors.size());
      for (std::size_t k = 0; k < fm.factors.size(); ++k) ASSERT_EQ(fm.factors[k].first, fc.factors[k].first);
      // minimality: no proper divisor annihilates m
      for (const auto& [f, mult] : fm.factors) {
        (void)mult;
        ASSERT_FALSE(mat::eval(mp / f, m) == DenseMatrix(F, m.rows(), m.rows()));
      }
    }
  }
}

TEST(KernelImage, Examples) {
  const auto F2 = ff::make_field(2);
  EXPECT_EQ(mat::kernel(DenseMatrix(F2, 4, 4)).dim(), 4u);
  const auto g = DenseMatrix::block_diag(DenseMatrix::companion(P(F2, {1, 1, 1, 1, 1})), DenseMatrix::identity(F2, 4));
  const auto I8 = DenseMatrix::identity(F2, 8);
  EXPECT_EQ(mat::kernel(I8 - g).dim(), 4u);
  EXPECT_EQ(mat::image(I8 - I8).dim(), 0u);
}

TEST(KernelImage, RankNullityAndDefinitions) {
  Rng rng(29);
  for (const auto& F : {ff::make_field(2), ff::make_field(3), ff::make_field(2, 2), ff::make_field(5)}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t d = 1 + below(rng, 9);
      auto m = random_matrix(F, d, rng);
      // force rank deficiency half the time: a low-rank product
      if (i % 2 == 0 && d > 1) {
        DenseMatrix a(F, d, d - 1), b(F, d - 1, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c + 1 < d; ++c) {
            a.set(r, c, below(rng, F.order()));
            b.set(c, r, below(rng, F.order()));
          }
        m = a * b;
      }
      const auto k = check_echelon(mat::kernel(m)), im = check_echelon(mat::image(m));
      ASSERT_EQ(k.dim() + im.dim(), d);
      ASSERT_EQ(im.dim(), m.rank());
      for (const auto& v : k.basis())
        for (auto x : mat::vec_mul(v, m)) ASSERT_EQ(x, 0u);
      for (std::size_t r = 0; r < d; ++r) ASSERT_TRUE(im.contains(m.row(r)));
    }
  }
}

TEST(MatrixOrder, Examples) {
  const auto F2 = ff::make_field(2), F3 = ff::make_field(3);
  EXPECT_EQ(mat::matrix_order(DenseMatrix::identity(F2, 6)), 1);
  EXPECT_EQ(mat::matrix_order(DenseMatrix::companion(P(F2, {1, 1, 1, 1, 1}))), 5);
  EXPECT_EQ(mat::matrix_order(DenseMatrix::from_rows(F3, {{1, 1}, {0, 1}})), 3);
}

TEST(MatrixOrder, ExactAgainstBruteForce) {
  Rng rng(30);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    const auto F = ff::make_field_of_order(q);
    for (int i = 0; i < 25; ++i) {
      const std::size_t d = 1 + below(rng, 5);
      auto m = random_invertible(F, d, rng);
      // unipotent blocks give p-power contributions
      if (i % 4 == 0) m = DenseMatrix::block_diag(m, DenseMatrix::from_rows(F, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
      const auto n = mat::matrix_order(m);
      if (n > 10000) continue;
      ASSERT_EQ(n, brute_order(m, 10000)) << "q=" << q << "\n" << m.to_string();
      ASSERT_EQ(mat::matrix_order(m, n * 6), n);  // a multiple as hint
    }
  }
}

TEST(MatrixOrder, PrimeDivisorsGiveProperPowers) {
  Rng rng(31);
  const auto F = ff::make_field(2, 3);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_invertible(F, 8, rng);
    const auto n = mat::matrix_order(m);
    ASSERT_TRUE(m.pow(n).is_identity());
    for (const auto& [l, e] : nt::factor(n).factors) {
      (void)e;
      ASSERT_FALSE(m.pow(n / l).is_identity());
    }
  }
}

TEST(Restrict, Examples) {
  Rng rng(32);
  const auto F2 = ff::make_field(2), F5 = ff::make_field(5);
  const auto m = random_matrix(F5, 5, rng);
  EXPECT_EQ(mat::char_poly(mat::restrict(m, Subspace::full(F5, 5))), mat::char_poly(m));
  const auto a = random_matrix(F5, 3, rng), b = random_matrix(F5, 2, rng);
  const auto first = Subspace::span(F5, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
  EXPECT_EQ(mat::restrict(DenseMatrix::block_diag(a, b), first), a);
  const auto phi5 = P(F2, {1, 1, 1, 1, 1});
  const auto g = DenseMatrix::block_diag(DenseMatrix::companion(phi5), DenseMatrix::identity(F2, 4));
  EXPECT_EQ(mat::char_poly(mat::restrict(g, mat::image(DenseMatrix::identity(F2, 8) - g))), phi5);
}

TEST(Restrict, RejectsNonInvariantSubspace) {
  const auto F3 = ff::make_field(3);
  const auto m = DenseMatrix::from_rows(F3, {{0, 1}, {1, 0}});
  try {
    mat::restrict(m, Subspace::span(F3, 2, {{1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvariant);
  }
}

TEST(Subspaces, IntersectionAndSumDimensions) {
  Rng rng(33);
  const auto F = ff::make_field(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<mat::Vec> va, vb;
    for (std::size_t k = 0, n = below(rng, 5); k < n; ++k) va.push_back(random_matrix(F, 6, rng).row(0));
    for (std::size_t k = 0, n = below(rng, 5); k < n; ++k) vb.push_back(random_matrix(F, 6, rng).row(0));
    const auto A = Subspace::span(F, 6, va), B = Subspace::span(F, 6, vb);
    const auto S = mat::sum(A, B), I = mat::intersect(A, B);
    ASSERT_EQ(S.dim() + I.dim(), A.dim() + B.dim());
    ASSERT_TRUE(S.contains(A));
    ASSERT_TRUE(A.contains(I));
    ASSERT_TRUE(B.contains(I));
    ASSERT_EQ(A.annihilator().dim(), 6 - A.dim());
  }
}
