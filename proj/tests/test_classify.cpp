#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stingray/classify.hpp"
#include "stingray/error.hpp"
#include "stingray/groups.hpp"
#include "stingray/harness.hpp"
#include "stingray/ppd.hpp"

using namespace stingray;
using classify::Tag;
using cyclo::CyclotomicInt;
using mat::DenseMatrix;
using poly::DensePoly;

namespace {

DensePoly P(const ff::FieldSpec& F, std::vector<ff::Elt> c) { return DensePoly(F, std::move(c)); }

DenseMatrix from_mask(std::uint16_t m) {
  const auto F2 = ff::make_field(2);
  DenseMatrix g(F2, 4, 4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) g.set(i, j, (m >> (4 * i + j)) & 1);
  return g;
}

DenseMatrix random_invertible(const ff::FieldSpec& F, std::size_t d, Rng& rng) {
  for (;;) {
    DenseMatrix m(F, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.set(i, j, below(rng, F.order()));
    if (m.is_invertible()) return m;
  }
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

DenseMatrix phi5_stingray() {
  const auto F2 = ff::make_field(2);
  return DenseMatrix::block_diag(DenseMatrix::companion(P(F2, {1, 1, 1, 1, 1})), DenseMatrix::identity(F2, 4));
}

DenseMatrix phi5_repeated() {
  const auto c = DenseMatrix::companion(P(ff::make_field(2), {1, 1, 1, 1, 1}));
  return DenseMatrix::block_diag(c, c);
}

// Random elements of order exactly r in GL_d(q), by powering random elements.
std::vector<DenseMatrix> order_r_elements(std::uint64_t q, unsigned d, unsigned r, std::size_t want,
                                          std::uint64_t seed) {
  const auto grp = groups::classical_generators(groups::Classical::GL, d, q);
  groups::RandomWalkState st(grp, seed);
  std::vector<DenseMatrix> out;
  for (std::size_t draws = 0; out.size() < want && draws < 200 * want; ++draws) {
    if (auto h = harness::power_to_order(groups::random_element(grp, st), r)) out.push_back(*h);
  }
  return out;
}

}  // namespace

TEST(ClassifyElement, Examples) {
  const auto s = classify::classify_element(phi5_stingray(), 4);
  EXPECT_EQ(s.tag, Tag::Stingray);
  EXPECT_EQ(s.tag_string(), "STINGRAY(4)");
  EXPECT_EQ(s.order, 5);
  EXPECT_EQ(s.fixed_dim, 4u);
  EXPECT_TRUE(s.ppd);
  EXPECT_TRUE(s.semisimple);

  const auto t = classify::classify_element(phi5_repeated(), 4);
  EXPECT_EQ(t.tag, Tag::Type2II);
  EXPECT_EQ(t.fixed_dim, 0u);

  const auto F2 = ff::make_field(2);
  const auto fac = poly::factor(poly::cyclotomic_quotient(17, F2));
  ASSERT_EQ(fac.factors.size(), 2u);
  const auto g17 = DenseMatrix::block_diag(DenseMatrix::companion(fac.factors[0].first),
                                           DenseMatrix::companion(fac.factors[1].first));
  const auto u = classify::classify_element(g17, 8);
  EXPECT_EQ(u.tag, Tag::Type2I);
  EXPECT_EQ(u.order, 17);
  EXPECT_FALSE(classify::is_stingray_oracle(g17, 8));

  for (unsigned d : {2u, 5u, 8u}) EXPECT_EQ(classify::classify_element(DenseMatrix::identity(F2, d), 1).tag, Tag::NotPpd);
}

TEST(ClassifyElement, Errors) {
  const auto F3 = ff::make_field(3);
  EXPECT_EQ(code_of([&] { classify::classify_element(DenseMatrix(F3, 3, 3), 1); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([&] { classify::is_stingray_oracle(DenseMatrix(F3, 3, 3), 1); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([&] { classify::classify_element(DenseMatrix::identity(F3, 3), 4); }), ErrorCode::InvalidArgument);
}

TEST(StingrayOracle, Examples) {
  EXPECT_TRUE(classify::is_stingray_oracle(phi5_stingray(), 4));
  EXPECT_FALSE(classify::is_stingray_oracle(phi5_repeated(), 4));

  const auto mod = groups::deleted_perm_module(13, 2);
  ASSERT_EQ(mod.dim(), 12u);
  const auto g = mod.map(groups::perm_from_cycles(13, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}));
  EXPECT_FALSE(classify::is_stingray_oracle(g, 6));
  const auto c = classify::classify_element(g, 6);
  EXPECT_NE(c.tag, Tag::Stingray);
  EXPECT_LE(c.fixed_dim, 4u);
  EXPECT_EQ(c.order, 9);
  EXPECT_TRUE(c.ppd);  // 9 is the primitive prime-power divisor of 2^6 - 1
}

TEST(ClassifyElement, ConjugationInvariance) {
  Rng rng(41);
  const auto F2 = ff::make_field(2);
  const std::vector<std::pair<DenseMatrix, unsigned>> examples{
      {phi5_stingray(), 4}, {phi5_repeated(), 4}, {DenseMatrix::identity(F2, 8), 4}};
  for (const auto& [g, e] : examples) {
    const auto base = classify::classify_element(g, e);
    const bool oracle = classify::is_stingray_oracle(g, e);
    for (int i = 0; i < 1000; ++i) {
      const auto h = random_invertible(F2, 8, rng);
      const auto conj = h.inverse() * g * h;
      ASSERT_EQ(classify::classify_element(conj, e).report(), base.report());
      ASSERT_EQ(classify::is_stingray_oracle(conj, e), oracle);
    }
  }
}

TEST(ClassifyElement, ExhaustiveGL42) {
  std::map<Tag, std::size_t> counts;
  std::size_t invertible = 0;
  for (unsigned m = 0; m < 65536; ++m) {
    const auto mask = static_cast<std::uint16_t>(m);
    if (!oracle::gf2x4::invertible(mask)) continue;
    ++invertible;
    const auto g = from_mask(mask);
    const auto c = classify::classify_element(g, 2);
    const unsigned ord = oracle::gf2x4::order(mask), fixed = oracle::gf2x4::fixed_vectors(mask);
    ASSERT_EQ(c.order, ord);
    ASSERT_EQ(1u << c.fixed_dim, fixed);
    ASSERT_EQ(c.tag == Tag::Stingray, classify::is_stingray_oracle(g, 2)) << g.to_string();
    // over F_2 the only irreducible quadratic is t^2+t+1, so the shapes are decided by order 3
    ASSERT_EQ(c.tag == Tag::Stingray, ord == 3 && fixed == 4);
    ASSERT_EQ(c.tag == Tag::Type2II, ord == 3 && fixed == 1);
    ASSERT_NE(c.tag, Tag::Type2I);
    ++counts[c.tag];
  }
  EXPECT_EQ(invertible, 20160u);
  // class sizes from centralizer orders: |GL_1(4) x GL_2(2)| = 18 and |GL_2(4)| = 180
  EXPECT_EQ(counts[Tag::Stingray], 20160u / 18);
  EXPECT_EQ(counts[Tag::Type2II], 20160u / 180);
}

TEST(ClassifyElement, OrderThreeNeverType2IWhenQIsTwoModThree) {
  for (std::uint64_t q : {2u, 5u, 8u, 11u}) {
    const auto elems = order_r_elements(q, 4, 3, 150, 42 + q);
    ASSERT_GE(elems.size(), 100u) << "q=" << q;
    for (const auto& g : elems) {
      const auto c = classify::classify_element(g, 2);
      ASSERT_NE(c.tag, Tag::Type2I);
      ASSERT_TRUE(c.tag == Tag::Stingray || c.tag == Tag::Type2II) << c.report();
    }
  }
}

TEST(ClassifyElement, TrichotomyForPrimePpdOrders) {
  // (q, d, r) with r a (d/2)-ppd prime for q
  struct Case {
    std::uint64_t q;
    unsigned d, r;
  };
  for (const auto& [q, d, r] : std::vector<Case>{{2, 8, 5}, {4, 4, 5}, {3, 8, 5}, {2, 6, 7}, {5, 4, 3}}) {
    ASSERT_TRUE(ppd::is_eppd_prime(r, q, d / 2));
    const auto elems = order_r_elements(q, d, r, 60, 7 * q + d);
    ASSERT_GE(elems.size(), 20u) << "q=" << q << " d=" << d;
    for (const auto& g : elems) {
      const auto c = classify::classify_element(g, d / 2);
      ASSERT_TRUE(c.ppd);
      const int hits = (c.tag == Tag::Stingray) + (c.tag == Tag::Type2I) + (c.tag == Tag::Type2II);
      ASSERT_EQ(hits, 1) << c.report();
      ASSERT_EQ(c.tag == Tag::Stingray, classify::is_stingray_oracle(g, d / 2));
    }
  }
}

TEST(ClassifyElement, CharacterCriterionConsistency) {
  struct Case {
    std::uint64_t q;
    unsigned d, r;
  };
  // r a (d/2)-ppd prime with r = d/2 + 1 or r = d + 1, the shapes the character criterion covers
  for (const auto& [q, d, r] : std::vector<Case>{{2, 4, 3}, {5, 4, 3}, {2, 8, 5}, {4, 4, 5}, {2, 6, 7}}) {
    ASSERT_TRUE(ppd::is_eppd_prime(r, q, d / 2));
    const auto elems = order_r_elements(q, d, r, 60, 99 + q * d);
    ASSERT_GE(elems.size(), 20u);
    std::set<Tag> seen;
    for (const auto& g : elems) {
      const auto c = classify::classify_element(g, d / 2);
      const auto chi = classify::brauer_value(g, r);
      const auto sol = classify::eigenvalue_multiplicities(g, r);
      ASSERT_EQ(cyclo::solve_multiplicities(chi, d, r).mults, sol.mults);
      ASSERT_EQ(sol.mults[0], c.fixed_dim);
      const auto verdict = cyclo::stingray_criterion(r, d, chi);
      seen.insert(c.tag);
      if (r == d / 2 + 1) {
        ASSERT_EQ(c.tag == Tag::Stingray, chi == CyclotomicInt::integer(r, d / 2 - 1));
        ASSERT_EQ(c.tag == Tag::Stingray, verdict == cyclo::Verdict::Stingray);
        ASSERT_EQ(c.tag == Tag::Type2II, verdict == cyclo::Verdict::Type2II);
      } else {
        ASSERT_EQ(c.tag == Tag::Stingray, verdict == cyclo::Verdict::Stingray);
        ASSERT_EQ(c.tag == Tag::Type2I, verdict == cyclo::Verdict::Type2I);
        ASSERT_EQ(c.tag == Tag::Type2II, verdict == cyclo::Verdict::Type2II);
      }
    }
    EXPECT_TRUE(seen.count(Tag::Stingray)) << "q=" << q << " d=" << d;
  }
}

TEST(EigenvalueMultiplicities, Examples) {
  const auto s = classify::eigenvalue_multiplicities(phi5_stingray(), 5);
  EXPECT_EQ(s.mults, (std::vector<std::uint64_t>{4, 1, 1, 1, 1}));
  const auto F2 = ff::make_field(2);
  EXPECT_EQ(classify::eigenvalue_multiplicities(DenseMatrix::identity(F2, 6), 3).mults,
            (std::vector<std::uint64_t>{6, 0, 0}));
  const auto F5 = ff::make_field(5);
  const auto g = DenseMatrix::from_rows(F5, {{0, 1}, {4, 4}});  // companion of t^2+t+1, order 3
  ASSERT_EQ(mat::matrix_order(g), 3);
  const auto mod = groups::sl2_module(5, groups::Sl2Spec{groups::Sl2Kind::SymCube});
  const auto img = mod.map(g);
  const auto m = classify::eigenvalue_multiplicities(img, 3);
  EXPECT_EQ(m.mults, (std::vector<std::uint64_t>{2, 1, 1}));
  EXPECT_TRUE(classify::is_stingray_oracle(img, 2));
  EXPECT_EQ(classify::classify_element(img, 2).tag, Tag::Stingray);
}

TEST(EigenvalueMultiplicities, Errors) {
  EXPECT_EQ(code_of([] { classify::eigenvalue_multiplicities(phi5_stingray(), 3); }), ErrorCode::OrderMismatch);
  const auto F3 = ff::make_field(3);
  const auto u = DenseMatrix::from_rows(F3, {{1, 1}, {0, 1}});
  EXPECT_EQ(code_of([&] { classify::eigenvalue_multiplicities(u, 3); }), ErrorCode::CharacteristicOrder);
}

TEST(EigenvalueMultiplicities, RootOfUnityHasOrderR) {
  for (auto [q, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 5}, {4, 5}, {7, 3}, {3, 13}}) {
    const auto F = ff::extension_field(ff::make_field_of_order(q), oracle::mult_order(r, q));
    ASSERT_EQ((F.order() - 1) % r, 0u);
    const auto z = classify::root_of_unity(F, r);
    EXPECT_EQ(F.element_order(z), r);
    for (ff::Elt x = 1; x < z; ++x) EXPECT_NE(F.element_order(x), r);  // smallest encoding
  }
}

TEST(ConstructStingray, Examples) {
  const auto g = classify::construct_stingray(2, 8, 5);
  EXPECT_EQ(g.rows(), 8u);
  const auto c = classify::classify_element(g, 4);
  EXPECT_EQ(c.tag, Tag::Stingray);
  EXPECT_EQ(c.order, 5);
  EXPECT_EQ(code_of([] { classify::construct_stingray(2, 12); }), ErrorCode::NoPpdPrime);
  const auto h = classify::construct_stingray(4, 4, 5, true);
  EXPECT_EQ(h.det(), 1u);
  EXPECT_EQ(classify::classify_element(h, 2).tag, Tag::Stingray);
  EXPECT_TRUE(classify::is_stingray_oracle(h, 2));
}

TEST(ConstructStingray, ProducesPpdStingraysAcrossSmallFields) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (unsigned d : {4u, 6u, 8u, 10u}) {
      if (!ppd::primitive_prime_divisors(q, d / 2).exists) {
        EXPECT_EQ(code_of([&] { classify::construct_stingray(q, d); }), ErrorCode::NoPpdPrime);
        continue;
      }
      const auto g = classify::construct_stingray(q, d);
      const auto c = classify::classify_element(g, d / 2);
      ASSERT_EQ(c.tag, Tag::Stingray) << "q=" << q << " d=" << d;
      ASSERT_TRUE(c.ppd);
      ASSERT_TRUE(classify::is_stingray_oracle(g, d / 2));
      ASSERT_TRUE(ppd::is_eppd_prime(c.order, q, d / 2));
      try {
        const auto h = classify::construct_stingray(q, d, std::nullopt, true);
        ASSERT_EQ(h.det(), 1u);
        ASSERT_TRUE(classify::is_stingray_oracle(h, d / 2));
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::NoUnimodularFactor);
      }
    }
  }
}
