#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stingray/classify.hpp"
#include "stingray/error.hpp"
#include "stingray/groups.hpp"

using namespace stingray;
using groups::MatrixGroup;
using groups::Perm;
using mat::DenseMatrix;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

Perm random_perm(unsigned n, Rng& rng) {
  Perm p = groups::identity_perm(n);
  for (unsigned i = n; i > 1; --i) std::swap(p[i - 1], p[below(rng, i)]);
  return p;
}

// Order of the generated group by breadth-first closure over matrices.
std::size_t closure_order(const MatrixGroup& grp, std::size_t limit) {
  return oracle::closure_size(grp.generators, DenseMatrix::identity(grp.field, grp.dim),
                              [](const DenseMatrix& a, const DenseMatrix& b) { return a * b; }, limit);
}

BigInt sl2_order(std::uint64_t q) { return BigInt(q) * (BigInt(q) * q - 1); }

}  // namespace

TEST(Permutations, Basics) {
  const auto a = groups::perm_from_cycles(5, {{1, 2, 3}});
  const auto b = groups::perm_from_cycles(5, {{3, 4}});
  EXPECT_EQ(a, (Perm{1, 2, 0, 3, 4}));
  // left to right: first a then b
  const auto ab = groups::compose(a, b);
  EXPECT_EQ(ab[1], 3u);
  EXPECT_TRUE(groups::is_even(a));
  EXPECT_FALSE(groups::is_even(b));
  EXPECT_EQ(groups::compose(a, groups::inverse(a)), groups::identity_perm(5));
  EXPECT_EQ(groups::cycle_type(groups::perm_from_cycles(13, {{1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12}})).to_string(),
            "9.3.1");
}

TEST(DeletedPermModule, Examples) {
  EXPECT_EQ(groups::deleted_perm_module(9, 2).dim(), 8u);
  EXPECT_EQ(groups::deleted_perm_module(10, 2).dim(), 8u);
  EXPECT_EQ(code_of([] { groups::deleted_perm_module(4, 2); }), ErrorCode::DegreeTooSmall);

  const auto F2 = ff::make_field(2);
  const auto m9 = groups::deleted_perm_module(9, 2);
  const auto g5 = m9.map(groups::perm_from_cycles(9, {{1, 2, 3, 4, 5}}));
  EXPECT_EQ(mat::char_poly(g5), poly::cyclotomic_quotient(5, F2) * poly::pow(poly::DensePoly::linear(F2, 1), 4));
  EXPECT_EQ(classify::classify_element(g5, 4).tag, classify::Tag::Stingray);

  const auto m10 = groups::deleted_perm_module(10, 2);
  const auto g55 = m10.map(groups::perm_from_cycles(10, {{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}));
  EXPECT_FALSE(classify::is_stingray_oracle(g55, 4));
  const auto fac = poly::factor(mat::char_poly(g55));
  bool repeated = false;
  for (const auto& [f, mult] : fac.factors) repeated = repeated || (f.degree() > 1 && mult > 1);
  EXPECT_TRUE(repeated);

  const auto g9 = m9.map(groups::perm_from_cycles(9, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}));
  EXPECT_FALSE(classify::is_stingray_oracle(g9, 4));
  EXPECT_NE(classify::classify_element(g9, 4).tag, classify::Tag::Stingray);
}

TEST(DeletedPermModule, DeltaRule) {
  for (unsigned n = 5; n <= 30; ++n) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      const auto m = groups::deleted_perm_module(n, p);
      ASSERT_EQ(m.dim(), n % p == 0 ? n - 2 : n - 1) << "n=" << n << " p=" << p;
    }
  }
}

TEST(DeletedPermModule, MapIsAHomomorphism) {
  Rng rng(51);
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{9, 2}, {10, 2}, {6, 3}, {10, 5}, {7, 7}}) {
    const auto m = groups::deleted_perm_module(n, p);
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_perm(n, rng), t = random_perm(n, rng);
      ASSERT_EQ(m.map(groups::compose(s, t)), m.map(s) * m.map(t)) << "n=" << n << " p=" << p;
    }
    EXPECT_TRUE(m.map(groups::identity_perm(n)).is_identity());
  }
}

TEST(DeletedPermModule, FaithfulOnElementOrders) {
  Rng rng(52);
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{9, 3}, {10, 2}, {11, 5}}) {
    const auto m = groups::deleted_perm_module(n, p);
    const auto F = m.field();
    for (int i = 0; i < 30; ++i) {
      const auto s = random_perm(n, rng);
      const auto g = m.map(s);
      const auto y = groups::perm_matrix(F, s);
      ASSERT_EQ(mat::char_poly(g).degree(), static_cast<int>(m.dim()));
      ASSERT_EQ(mat::matrix_order(g), mat::matrix_order(y));
    }
  }
}

TEST(Sl2Module, Examples) {
  const auto F5 = ff::make_field(5);
  const auto sc = groups::sl2_module(5, groups::Sl2Spec::parse("symcube"));
  const auto g3 = DenseMatrix::from_rows(F5, {{0, 1}, {4, 4}});
  EXPECT_EQ(classify::classify_element(sc.map(g3), 2).tag, classify::Tag::Stingray);
  EXPECT_EQ(code_of([] { groups::sl2_module(9, groups::Sl2Spec::parse("symcube")); }),
            ErrorCode::CharTooSmallForSymcube);
  EXPECT_EQ(code_of([] { groups::sl2_module(8, groups::Sl2Spec::parse("twist:1,1")); }), ErrorCode::BadTwist);
  EXPECT_EQ(code_of([] { groups::sl2_module(8, groups::Sl2Spec::parse("twist:0,3")); }), ErrorCode::BadTwist);
  EXPECT_EQ(code_of([] { groups::Sl2Spec::parse("cube"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(groups::Sl2Spec::parse("twist:0,2").to_string(), "twist:0,2");
}

TEST(Sl2Module, MapIsAHomomorphismOnSl2) {
  Rng rng(53);
  for (auto [q, spec] : std::vector<std::pair<std::uint64_t, std::string>>{
           {5, "symcube"}, {7, "symcube"}, {8, "twist:0,1"}, {16, "twist:0,1"}, {9, "twist:0,1"}, {11, "natural"}}) {
    const auto mod = groups::sl2_module(q, groups::Sl2Spec::parse(spec));
    groups::RandomWalkState st(mod.natural(), rng());
    for (int i = 0; i < 100; ++i) {
      const auto a = groups::random_element(mod.natural(), st), b = groups::random_element(mod.natural(), st);
      ASSERT_EQ(a.det(), 1u);
      ASSERT_EQ(mod.map(a * b), mod.map(a) * mod.map(b)) << spec << " q=" << q;
    }
  }
}

TEST(Sl2Module, SymcubePreservesAlternatingForm) {
  for (std::uint64_t q : {5u, 7u, 11u, 13u, 25u}) {
    const auto mod = groups::sl2_module(q, groups::Sl2Spec::parse("symcube"));
    ASSERT_TRUE(mod.gram().has_value());
    const auto& J = *mod.gram();
    EXPECT_EQ(J.transpose(), J.scaled(mod.field().neg(1)));
    EXPECT_TRUE(J.is_invertible());
    for (const auto& g : mod.group().generators) EXPECT_EQ(g.transpose() * J * g, J) << "q=" << q;
  }
}

TEST(Sl2Module, TwistDiagonalizabilityFollowsSubfieldRule) {
  // order-3 images of TWIST(0,1) in characteristic 2: q0 = 2, so diagonalizable iff F_4 is in F_q
  for (std::uint64_t q : {8u, 16u, 32u, 64u}) {
    const auto mod = groups::sl2_module(q, groups::Sl2Spec::parse("twist:0,1"));
    const auto F = ff::make_field_of_order(q);
    const bool contains_f4 = F.degree() % 2 == 0;
    // an order-3 element of SL_2(q): companion of t^2 + t + 1
    const auto g = DenseMatrix::from_rows(F, {{0, 1}, {1, 1}});
    ASSERT_EQ(mat::matrix_order(g), 3);
    const auto img = mod.map(g);
    const auto mp = mat::min_poly(img);
    bool split = true;
    for (const auto& [f, m] : poly::factor(mp).factors) split = split && f.degree() == 1 && m == 1;
    EXPECT_EQ(split, contains_f4) << "q=" << q;
    EXPECT_EQ(classify::is_stingray_oracle(img, 2), !contains_f4) << "q=" << q;
  }
}

TEST(ClassicalGenerators, Examples) {
  EXPECT_EQ(groups::group_order(groups::classical_generators(groups::Classical::SL, 2, 7)), 336);
  EXPECT_EQ(groups::group_order(groups::classical_generators(groups::Classical::GL, 4, 2)), 20160);
  const auto sp = groups::classical_generators(groups::Classical::SP, 4, 3);
  const auto J = groups::symplectic_gram(sp.field, 4);
  for (const auto& g : sp.generators) EXPECT_EQ(g.transpose() * J * g, J);
  EXPECT_EQ(code_of([] { groups::classical_generators(groups::Classical::SP, 5, 3); }),
            ErrorCode::OddDimensionSymplectic);
}

TEST(ClassicalGenerators, OrdersMatchFormulas) {
  auto gl = [](unsigned d, std::uint64_t q) {
    BigInt o = 1, qd = nt::ipow(BigInt(q), d);
    for (unsigned i = 0; i < d; ++i) o *= qd - nt::ipow(BigInt(q), i);
    return o;
  };
  auto sp = [](unsigned d, std::uint64_t q) {
    const unsigned m = d / 2;
    BigInt o = nt::ipow(BigInt(q), m * m);
    for (unsigned i = 1; i <= m; ++i) o *= nt::ipow(BigInt(q), 2 * i) - 1;
    return o;
  };
  for (auto [d, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {4, 2}, {2, 9}}) {
    EXPECT_EQ(groups::group_order(groups::classical_generators(groups::Classical::GL, d, q)), gl(d, q));
    EXPECT_EQ(groups::group_order(groups::classical_generators(groups::Classical::SL, d, q)), gl(d, q) / (q - 1));
  }
  for (auto [d, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 5}, {4, 2}, {4, 3}, {6, 2}}) {
    const auto grp = groups::classical_generators(groups::Classical::SP, d, q);
    const auto J = groups::symplectic_gram(grp.field, d);
    for (const auto& g : grp.generators) ASSERT_EQ(g.transpose() * J * g, J);
    EXPECT_EQ(groups::group_order(grp), sp(d, q)) << "Sp(" << d << "," << q << ")";
  }
}

TEST(GroupOrder, MatchesClosureEnumeration) {
  std::vector<MatrixGroup> cases{
      groups::classical_generators(groups::Classical::GL, 3, 2),
      groups::classical_generators(groups::Classical::SL, 2, 5),
      groups::classical_generators(groups::Classical::SL, 2, 8),
      groups::classical_generators(groups::Classical::GL, 2, 7),
      groups::classical_generators(groups::Classical::SP, 4, 2),
      groups::deleted_perm_module(7, 2).group(),
      groups::deleted_perm_module(6, 3).group(),
      groups::sl2_module(5, groups::Sl2Spec::parse("symcube")).group(),
      groups::sl2_module(8, groups::Sl2Spec::parse("twist:0,1")).group(),
      groups::sl2_module(4, groups::Sl2Spec::parse("natural")).group(),
      groups::sl2_module(16, groups::Sl2Spec::parse("natural")).group(),
      groups::perm_module(6, 3),
  };
  for (const auto& grp : cases) {
    const auto brute = closure_order(grp, 100000);
    ASSERT_GT(brute, 0u) << grp.label;
    EXPECT_EQ(groups::group_order(grp), brute) << grp.label;
  }
}

TEST(GroupOrder, ModuleExamples) {
  EXPECT_EQ(groups::group_order(groups::deleted_perm_module(7, 2).group()), 2520);
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u})
    EXPECT_EQ(groups::group_order(groups::sl2_module(q, groups::Sl2Spec::parse("natural")).group()), sl2_order(q))
        << "q=" << q;
  // the symmetric cube of SL_2(q) is faithful (-1 acts as -1), twisted tensors kill -1 only in odd characteristic
  EXPECT_EQ(groups::group_order(groups::sl2_module(7, groups::Sl2Spec::parse("symcube")).group()), sl2_order(7));
  EXPECT_EQ(groups::group_order(groups::sl2_module(7, groups::Sl2Spec::parse("symcube")).group(), groups::Action::Projective),
            sl2_order(7) / 2);
  EXPECT_EQ(code_of([] { groups::group_order(groups::classical_generators(groups::Classical::GL, 8, 9)); }),
            ErrorCode::ActionTooLarge);
}

TEST(RandomElement, DeterministicAndInvertible) {
  const auto grp = groups::classical_generators(groups::Classical::GL, 5, 3);
  groups::RandomWalkState a(grp, 1234), b(grp, 1234), c(grp, 1235);
  EXPECT_TRUE(a.burn_in_done());
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = groups::random_element(grp, a), y = groups::random_element(grp, b), z = groups::random_element(grp, c);
    ASSERT_EQ(x, y);
    ASSERT_TRUE(x.is_invertible());
    differs = differs || x != z;
  }
  EXPECT_TRUE(differs);
}

TEST(RandomElement, CoversAllClassificationTagsOfGL42) {
  // tags present in the exhaustive enumeration
  std::set<std::string> full;
  for (unsigned m = 0; m < 65536; ++m) {
    const auto mask = static_cast<std::uint16_t>(m);
    if (!oracle::gf2x4::invertible(mask)) continue;
    DenseMatrix g(ff::make_field(2), 4, 4);
    for (unsigned i = 0; i < 16; ++i) g.set(i / 4, i % 4, (mask >> i) & 1);
    full.insert(classify::classify_element(g, 2).tag_string());
  }
  const auto grp = groups::classical_generators(groups::Classical::GL, 4, 2);
  groups::RandomWalkState st(grp, 77);
  std::set<std::string> sampled;
  for (int i = 0; i < 10000; ++i) sampled.insert(classify::classify_element(groups::random_element(grp, st), 2).tag_string());
  EXPECT_EQ(sampled, full);
}

TEST(Spin, Examples) {
  const auto y9 = groups::perm_module(9, 2);
  const auto D = groups::spin({mat::Vec(9, 1)}, y9);
  EXPECT_EQ(D.dim(), 1u);
  EXPECT_TRUE(D.contains(mat::Vec(9, 1)));

  Rng rng(54);
  for (std::uint64_t q : {5u, 8u, 9u}) {
    const auto nat = groups::sl2_module(q, groups::Sl2Spec::parse("natural")).natural();
    for (int i = 0; i < 10; ++i) {
      mat::Vec v{below(rng, q), below(rng, q)};
      if (v[0] == 0 && v[1] == 0) v[0] = 1;
      EXPECT_EQ(groups::spin({v}, nat).dim(), 2u);
    }
  }
  const auto a9 = groups::deleted_perm_module(9, 2).group();
  for (int i = 0; i < 10; ++i) {
    mat::Vec v(8);
    for (auto& x : v) x = below(rng, 2);
    v[i % 8] = 1;
    EXPECT_EQ(groups::spin({v}, a9).dim(), 8u);
  }
  EXPECT_EQ(code_of([&] { groups::spin({mat::Vec(8, 0)}, a9); }), ErrorCode::ZeroVector);
}

TEST(Spin, IsInvariantAndIdempotent) {
  Rng rng(55);
  const auto grp = groups::perm_module(8, 3);
  for (int i = 0; i < 20; ++i) {
    mat::Vec v(8);
    for (auto& x : v) x = below(rng, 3);
    v[0] = 1;
    const auto s = groups::spin({v}, grp);
    EXPECT_TRUE(groups::is_invariant(s, grp));
    EXPECT_EQ(groups::spin(s.basis(), grp), s);
  }
}

TEST(Meataxe, Examples) {
  const auto y9 = groups::is_irreducible(groups::perm_module(9, 2));
  ASSERT_EQ(y9.kind, groups::IrreducibilityResult::Kind::No);
  ASSERT_TRUE(y9.witness.has_value());
  EXPECT_TRUE(y9.witness->dim() == 1 || y9.witness->dim() == 8);
  EXPECT_TRUE(groups::is_invariant(*y9.witness, groups::perm_module(9, 2)));

  EXPECT_EQ(groups::is_irreducible(groups::deleted_perm_module(9, 2).group()).kind,
            groups::IrreducibilityResult::Kind::Yes);
  EXPECT_EQ(groups::is_irreducible(groups::sl2_module(5, groups::Sl2Spec::parse("symcube")).group()).kind,
            groups::IrreducibilityResult::Kind::Yes);
}

TEST(Meataxe, TwistedTensorsAreAbsolutelyIrreducible) {
  for (auto [q, spec] : std::vector<std::pair<std::uint64_t, std::string>>{
           {8, "twist:0,1"}, {16, "twist:0,1"}, {16, "twist:0,2"}, {9, "twist:0,1"}, {27, "twist:1,2"}}) {
    const auto res = groups::is_irreducible(groups::sl2_module(q, groups::Sl2Spec::parse(spec)).group());
    EXPECT_EQ(res.kind, groups::IrreducibilityResult::Kind::Yes) << spec << " q=" << q;
    EXPECT_TRUE(res.absolutely_irreducible) << spec << " q=" << q;
  }
}

TEST(Meataxe, ReducibleWitnessesAreInvariant) {
  // block upper triangular generators always have an invariant subspace
  Rng rng(56);
  const auto F = ff::make_field(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<DenseMatrix> gens;
    for (int k = 0; k < 3; ++k) {
      DenseMatrix g(F, 5, 5);
      for (;;) {
        for (std::size_t r = 0; r < 5; ++r)
          for (std::size_t c = 0; c < 5; ++c) g.set(r, c, (r >= 2 && c < 2) ? 0 : below(rng, 3));
        if (g.is_invertible()) break;
      }
      gens.push_back(g);
    }
    const MatrixGroup grp(F, 5, gens);
    const auto res = groups::is_irreducible(grp, rng());
    ASSERT_EQ(res.kind, groups::IrreducibilityResult::Kind::No);
    ASSERT_TRUE(res.witness);
    ASSERT_GT(res.witness->dim(), 0u);
    ASSERT_LT(res.witness->dim(), 5u);
    ASSERT_TRUE(groups::is_invariant(*res.witness, grp));
  }
}
