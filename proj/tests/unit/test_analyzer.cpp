#include <gtest/gtest.h>

#include <random>

#include "icc/analyzer/analyzer.hpp"
#include "icc/matgroup/matrix_group.hpp"
#include "random_groups.hpp"

using namespace icc::analyzer;
using icc::catalog::FgAbelian;
using icc::catalog::FiniteGroup;
using icc::catalog::Free;
using icc::catalog::PermGroup;
using icc::linalg::make_vector;

namespace {

const int a = 1, b = 2, c = 3;

GroupDesc z(std::size_t rank = 1) { return GroupDesc(FgAbelian{rank, {}}); }
GroupDesc c2() { return GroupDesc(FiniteGroup{PermGroup(2, {{1, 0}})}); }
Free f2() { return Free{{"a", "b"}}; }

ExtensionSpec abelian(std::size_t r, GroupDesc q, MatrixAction m) {
  return make_extension(FgAbelian{r, {}}, std::move(q), {}, std::move(m));
}

const ConditionResult& condition(const Report& r, const std::string& name) {
  for (const auto& c : r.conditions)
    if (c.condition == name) return c;
  throw std::runtime_error("missing condition " + name);
}

// Re-verifies a witness against the spec's action.
bool witness_verifies(const ExtensionSpec& spec, const Witness& w) {
  if (auto* kv = std::get_if<KernelVectorWitness>(&w)) {
    const auto& mats = std::get<MatrixAction>(spec.action);
    icc::matgroup::MatGroupGens g(mats.empty() ? MatrixAction{IntMatrix::identity(kv->vector.size())} : mats);
    auto orbit = icc::matgroup::orbit_bfs(g, kv->vector);
    auto* fin = std::get_if<icc::matgroup::OrbitFinite>(&orbit);
    return fin && fin->orbit == kv->orbit && kv->finite_orbit_lattice.contains(kv->vector);
  }
  if (auto* ql = std::get_if<QuotientLiftWitness>(&w)) {
    if (ql->element.empty()) return false;
    if (auto* mats = std::get_if<MatrixAction>(&spec.action)) {
      IntMatrix acc = IntMatrix::identity(mats->front().rows());
      for (int x : ql->element.letters()) {
        const auto& m = (*mats)[static_cast<std::size_t>(std::abs(x)) - 1];
        acc = acc * (x > 0 ? m : m.inverse_unimodular());
      }
      return acc.is_identity();
    }
    if (auto* auts = std::get_if<FreeAction>(&spec.action)) {
      FreeAut acc = FreeAut::identity(auts->front().rank());
      for (int x : ql->element.letters()) {
        const auto& phi = (*auts)[static_cast<std::size_t>(std::abs(x)) - 1];
        acc = acc.compose(x > 0 ? phi : phi.inverse());
      }
      const Word& w0 = std::get<InnerEvidence>(ql->evidence).conjugator;
      return acc == FreeAut::conjugation(acc.rank(), w0) && ql->lift_kernel_part == w0.inverse();
    }
    return std::holds_alternative<TrivialKernelEvidence>(ql->evidence);
  }
  return std::holds_alternative<KernelTorsionWitness>(w);
}

}  // namespace

TEST(Analyzer, SolTypeIsIcc) {
  auto spec = abelian(2, z(), {IntMatrix{{2, 1}, {1, 1}}});
  auto r = analyze(spec);
  EXPECT_EQ(r.verdict, Verdict::Icc);
  EXPECT_EQ(r.theorem_path, kPathAbelianKernel);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(condition(r, kConditionOrbits).status, ConditionStatus::Holds);
  EXPECT_EQ(condition(r, kConditionInjective).status, ConditionStatus::Holds);
}

TEST(Analyzer, KleinBottleHasKernelVectorWitness) {
  auto spec = abelian(1, z(), {IntMatrix{{-1}}});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  const auto& kv = std::get<KernelVectorWitness>(*r.witness);
  EXPECT_EQ(kv.vector, make_vector({1}));
  EXPECT_EQ(kv.orbit, (std::vector<icc::linalg::IntVector>{make_vector({1}), make_vector({-1})}));
  EXPECT_TRUE(witness_verifies(spec, *r.witness));
  const auto& inj = condition(r, kConditionInjective);
  EXPECT_EQ(inj.status, ConditionStatus::Fails);
  EXPECT_EQ(std::get<QuotientLiftWitness>(*inj.witness).element_text, "t^2");
}

TEST(Analyzer, TorsionShortcutIgnoresAction) {
  auto spec = make_extension(FgAbelian{2, {2}}, z(), {}, MatrixAction{IntMatrix{{2, 1}, {1, 1}}});
  EXPECT_TRUE(std::holds_alternative<std::monostate>(spec.action));
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  const auto& kt = std::get<KernelTorsionWitness>(*r.witness);
  EXPECT_EQ(kt.element_order, 2u);
  EXPECT_EQ(kt.class_size_bound, 2u);
  EXPECT_EQ(condition(r, kConditionInjective).status, ConditionStatus::NotEvaluated);
}

TEST(Analyzer, MinusIdentityWitnessIsFirstBasisVector) {
  auto r = analyze(abelian(2, z(), {IntMatrix{{-1, 0}, {0, -1}}}));
  const auto& kv = std::get<KernelVectorWitness>(*r.witness);
  EXPECT_EQ(kv.vector, make_vector({1, 0}));
  EXPECT_EQ(kv.orbit.size(), 2u);
}

TEST(Analyzer, SwapPrefersFixedVector) {
  auto r = analyze(abelian(2, c2(), {IntMatrix{{0, 1}, {1, 0}}}));
  const auto& kv = std::get<KernelVectorWitness>(*r.witness);
  EXPECT_EQ(kv.vector, make_vector({1, 1}));
  EXPECT_EQ(kv.orbit.size(), 1u);
}

TEST(Analyzer, RotationFailsBothConditions) {
  auto spec = abelian(2, z(), {IntMatrix{{0, -1}, {1, 0}}});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<KernelVectorWitness>(*r.witness).orbit.size(), 4u);
  const auto& inj = condition(r, kConditionInjective);
  ASSERT_EQ(inj.status, ConditionStatus::Fails);
  const auto& ql = std::get<QuotientLiftWitness>(*inj.witness);
  EXPECT_EQ(ql.element_text, "t^4");
  EXPECT_TRUE(std::get<MatrixIdentityEvidence>(ql.evidence).action.is_identity());
  EXPECT_TRUE(witness_verifies(spec, *inj.witness));
}

TEST(Analyzer, FreeQuotientMakesInjectivityVacuous) {
  auto spec = make_extension(FgAbelian{2, {}}, GroupDesc(f2()), {}, MatrixAction{IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 2}}});
  EXPECT_EQ(analyze(spec).verdict, Verdict::Icc);
}

TEST(Analyzer, FreeKernelTimesZ) {
  auto spec = make_extension(f2(), z(), {}, std::monostate{});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(r.theorem_path, kPathFreeKernel);
  const auto& ql = std::get<QuotientLiftWitness>(*r.witness);
  EXPECT_EQ(ql.element_text, "t");
  EXPECT_TRUE(std::get<InnerEvidence>(ql.evidence).conjugator.empty());
  EXPECT_TRUE(witness_verifies(spec, *r.witness));
}

TEST(Analyzer, SwapOnFreeKernelIsIcc) {
  auto spec = make_extension(f2(), c2(), {}, FreeAction{FreeAut(2, {Word{b}, Word{a}})});
  auto r = analyze(spec);
  EXPECT_EQ(r.verdict, Verdict::Icc);
  EXPECT_EQ(condition(r, kConditionKernelIcc).status, ConditionStatus::Holds);
}

TEST(Analyzer, InnerActionGivesCentralizingLift) {
  auto spec = make_extension(f2(), z(), {}, FreeAction{FreeAut::conjugation(2, Word{a})});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  const auto& ql = std::get<QuotientLiftWitness>(*r.witness);
  EXPECT_EQ(std::get<InnerEvidence>(ql.evidence).conjugator, (Word{a}));
  EXPECT_EQ(ql.lift_kernel_part, (Word{-a}));
  EXPECT_TRUE(witness_verifies(spec, *r.witness));
}

TEST(Analyzer, OutSideOrderSearch) {
  // a -> b, b -> a^-1 has order 4 and its square is not inner
  auto spec = make_extension(f2(), z(), {}, FreeAction{FreeAut(2, {Word{b}, Word{-a}})});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<QuotientLiftWitness>(*r.witness).element_text, "t^4");
  // hyperbolic on the abelianization: injective without search
  auto hyp = make_extension(f2(), z(), {}, FreeAction{FreeAut(2, {Word{a, b}, Word{a}})});
  EXPECT_EQ(analyze(hyp).verdict, Verdict::Icc);
}

TEST(Analyzer, OutSideUnknownIsMonotone) {
  Free f3{{"a", "b", "c"}};
  FreeAut phi(3, {Word{a}, Word{b}, Word{c, a, b, -a, -b}});
  auto spec = make_extension(f3, z(), {}, FreeAction{phi});
  auto r = analyze(spec);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_EQ(r.obstruction, "out-order-unbounded");
  AnalyzerOptions wide;
  wide.out_order_cap = 40;
  EXPECT_EQ(analyze(spec, wide).verdict, Verdict::Unknown);
}

TEST(Analyzer, AbelianQuotientRelationSearch) {
  IntMatrix m{{2, 1}, {1, 1}};
  auto spec = abelian(2, z(2), {m, m.inverse_unimodular()});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<QuotientLiftWitness>(*r.witness).element_text, "t1 t2");
  EXPECT_TRUE(witness_verifies(spec, *r.witness));

  auto sq = abelian(2, z(2), {m, m * m});
  auto rs = analyze(sq);
  ASSERT_EQ(rs.verdict, Verdict::NotIcc);
  EXPECT_TRUE(witness_verifies(sq, *rs.witness));

  // independent hyperbolic blocks: injective, but only a bounded search exists
  IntMatrix m1 = IntMatrix::identity(4), m2 = IntMatrix::identity(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m1(i, j) = m(i, j);
      m2(i + 2, j + 2) = m(i, j);
    }
  auto blocks = abelian(4, z(2), {m1, m2});
  auto rb = analyze(blocks);
  EXPECT_EQ(rb.verdict, Verdict::Unknown);
  EXPECT_EQ(rb.obstruction, "abelian-relation-bound");
  EXPECT_EQ(condition(rb, kConditionOrbits).status, ConditionStatus::Holds);
}

TEST(Analyzer, ProductQuotientUsesJointModel) {
  IntMatrix m{{2, 1}, {1, 1}};
  auto spec = abelian(2, GroupDesc::product({z(), c2()}), {m, IntMatrix{{-1, 0}, {0, -1}}});
  EXPECT_EQ(analyze(spec).verdict, Verdict::Icc);
  auto trivial_c2 = abelian(2, GroupDesc::product({z(), c2()}), {m, IntMatrix::identity(2)});
  auto r = analyze(trivial_c2);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<QuotientLiftWitness>(*r.witness).element_text, "q");
}

TEST(Analyzer, FiniteKernel) {
  auto spec = make_extension(FiniteGroup{PermGroup(3, {{1, 0, 2}, {1, 2, 0}})}, z(), {}, std::monostate{});
  auto r = analyze(spec);
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(r.theorem_path, kPathFiniteKernel);
  EXPECT_EQ(std::get<KernelTorsionWitness>(*r.witness).class_size_bound, 6u);
}

TEST(Analyzer, TrivialKernel) {
  auto free_q = analyze(make_extension(FgAbelian{0, {}}, GroupDesc(f2()), {}, std::monostate{}));
  EXPECT_EQ(free_q.verdict, Verdict::Icc);
  EXPECT_EQ(free_q.theorem_path, kPathTrivialKernel);
  auto z_q = analyze(make_extension(FgAbelian{0, {}}, z(), {}, std::monostate{}));
  EXPECT_EQ(z_q.verdict, Verdict::NotIcc);
  auto prod = analyze(make_extension(FgAbelian{0, {}}, GroupDesc::product({GroupDesc(f2()), z()}), {}, std::monostate{}));
  ASSERT_EQ(prod.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<QuotientLiftWitness>(*prod.witness).element_text, "t");
  EXPECT_THROW(analyze(make_extension(FgAbelian{0, {}}, z(0), {}, std::monostate{})), icc::UnsupportedError);
}

TEST(Analyzer, TrivialQuotientAnalysesTheKernel) {
  EXPECT_EQ(analyze(make_extension(f2(), z(0), {}, std::monostate{})).verdict, Verdict::Icc);
  EXPECT_EQ(analyze(make_extension(FgAbelian{2, {}}, z(0), {}, std::monostate{})).verdict, Verdict::NotIcc);
}

TEST(Analyzer, RankOneFreeKernel) {
  auto r = analyze(make_extension(Free{{"x"}}, z(), {}, FreeAction{FreeAut(1, {Word{-a}})}));
  ASSERT_EQ(r.verdict, Verdict::NotIcc);
  EXPECT_EQ(std::get<KernelVectorWitness>(*r.witness).orbit.size(), 2u);
}

TEST(MakeExtension, Validation) {
  try {
    abelian(2, z(), {IntMatrix{{2, 0}, {0, 2}}});
    FAIL();
  } catch (const icc::ValidationError& e) {
    EXPECT_STREQ(e.what(), "non-unimodular matrix, det=4");
  }
  // conjugation by a squares to conjugation by a^2, not the identity
  EXPECT_THROW(make_extension(f2(), c2(), {}, FreeAction{FreeAut::conjugation(2, Word{a})}), icc::ValidationError);
  EXPECT_THROW(abelian(2, GroupDesc(FgAbelian{0, {2}}), {IntMatrix{{0, -1}, {1, 0}}}), icc::ValidationError);
  EXPECT_THROW(abelian(2, z(2), {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}}}), icc::ValidationError);
  EXPECT_THROW(abelian(2, z(), {}), icc::ValidationError);
  EXPECT_THROW(make_extension(f2(), z(), {"t", "u"}, std::monostate{}), icc::ValidationError);
}

TEST(Analyzer, VerdictStableUnderBasisChange) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    auto m = icc::testing::random_small_unimodular(rng, r);
    auto spec = abelian(r, z(), {m});
    auto p = icc::testing::random_unimodular(rng, r);
    auto moved = abelian(r, z(), {p * m * p.inverse_unimodular()});
    auto r1 = analyze(spec), r2 = analyze(moved);
    ASSERT_EQ(r1.verdict, r2.verdict) << m.to_string();
    if (r1.witness) {
      EXPECT_EQ(witness_kind(*r1.witness), witness_kind(*r2.witness));
      EXPECT_TRUE(witness_verifies(spec, *r1.witness));
      EXPECT_TRUE(witness_verifies(moved, *r2.witness));
      if (auto* kv = std::get_if<KernelVectorWitness>(&*r1.witness)) {
        EXPECT_EQ(kv->orbit.size(), std::get<KernelVectorWitness>(*r2.witness).orbit.size());
      }
    }
  }
}
