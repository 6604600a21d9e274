#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/dsl.hpp"

using namespace ringlab;

namespace {

Ideal gen(const RingPtr& r, std::vector<Elem> g) { return ideal_generate(r, g); }
MulClosedSet mcs(const RingPtr& r, std::vector<Elem> g) { return mcs_generate(r, g); }

}  // namespace

TEST(RIdeal, Z12EveryProperIdeal) {
  auto z12 = make_zn(12);
  for (const auto& a : all_ideals(z12)) {
    if (!a.is_proper()) continue;
    EXPECT_TRUE(is_r_ideal(a).is_holds()) << a.text();
  }
}

TEST(RIdeal, ZeroIdealAlwaysHolds) {
  for (const auto& e : default_corpus().entries) {
    if (e.ring.kind != dsl::RingKind::Finite || e.ring.finite->size() < 2) continue;
    EXPECT_TRUE(is_r_ideal(zero_ideal(e.ring.finite)).is_holds()) << e.expr;
  }
}

TEST(RIdeal, UnitIdealNotApplicable) {
  auto v = is_r_ideal(unit_ideal(make_zn(6)));
  EXPECT_TRUE(v.is_na());
  EXPECT_EQ(v.reason, reason::kNotProper);
}

TEST(PrIdeal, Examples) {
  auto z4 = make_zn(4);
  auto z12 = make_zn(12);
  EXPECT_TRUE(is_pr_ideal(zero_ideal(z4)).is_holds());
  EXPECT_TRUE(is_pr_ideal(gen(z12, {4})).is_holds());
}

TEST(SRIdeal, TrivialSetMatchesRIdeal) {
  for (const char* expr : {"Z12", "Z2 x Z4", "triv(Z2, free(2))"}) {
    auto r = dsl::parse_ring(expr);
    const auto one = mcs(r, {});
    for (const auto& a : all_ideals(r)) {
      if (!a.is_proper()) continue;
      EXPECT_EQ(is_S_r_ideal(a, one).outcome, is_r_ideal(a).outcome);
    }
  }
}

TEST(SRIdeal, DisjointnessGate) {
  auto z12 = make_zn(12);
  auto v = is_S_r_ideal(gen(z12, {2}), mcs(z12, {4}));
  EXPECT_TRUE(v.is_na());
  EXPECT_EQ(v.reason, reason::kDisjointness);
  ClassifyOptions loose;
  loose.enforce_disjoint = false;
  EXPECT_FALSE(is_S_r_ideal(gen(z12, {2}), mcs(z12, {4}), loose).is_na());
}

TEST(SRIdeal, AgreesWithDefinitionOracle) {
  for (const char* expr : {"Z12", "Z2 x Z6", "Z4 x Z4", "triv(Z3, free(1))", "amalg(Z4, Z4, id, (2))"}) {
    auto r = dsl::parse_ring(expr);
    for (const auto& s : mcs_candidates(r))
      for (const auto& a : all_ideals(r)) {
        const auto v = is_S_r_ideal(a, s);
        const auto want = oracle::s_r(*r, oracle::to_set(a.members()), oracle::to_set(s.members()));
        if (!want) {
          EXPECT_TRUE(v.is_na());
          continue;
        }
        EXPECT_EQ(v.is_holds(), *want) << expr << " " << a.text() << " " << s.text();
        if (v.is_holds()) {
          ASSERT_TRUE(v.witness);
          EXPECT_TRUE(s.contains(*v.witness));
        }
      }
  }
}

TEST(SPrime, Examples) {
  auto z6 = make_zn(6);
  auto z12 = make_zn(12);
  const auto p = gen(z12, {3});
  auto v = is_S_prime(p, mcs(z12, {}));
  ASSERT_TRUE(v.is_holds());
  EXPECT_EQ(v.witness, std::optional<Elem>(1));

  auto z6v = is_S_prime(zero_ideal(z6), mcs(z6, {}));
  ASSERT_TRUE(z6v.is_fails());
  EXPECT_EQ(z6v.counterexample, (std::vector<Elem>{2, 3}));

  auto f = is_S_prime(gen(z12, {4}), mcs(z12, {}));
  ASSERT_TRUE(f.is_fails());
  EXPECT_EQ(f.counterexample, (std::vector<Elem>{2, 2}));
}

TEST(PrimeVerdict, Z6ZeroIdealPair) {
  auto z6 = make_zn(6);
  auto v = prime_verdict(zero_ideal(z6));
  ASSERT_TRUE(v.is_fails());
  EXPECT_EQ(v.counterexample, (std::vector<Elem>{2, 3}));
}

TEST(Z0, Examples) {
  auto z6 = make_zn(6);
  EXPECT_TRUE(is_z0_ideal(zero_ideal(z6)).is_holds());
  EXPECT_TRUE(is_z0_ideal(gen(z6, {2})).is_holds());
  auto z4 = make_zn(4);
  for (const auto& a : all_ideals(z4)) {
    if (!a.is_proper()) continue;
    auto v = is_z0_ideal(a);
    EXPECT_TRUE(v.is_na());
    EXPECT_EQ(v.reason, reason::kNotReduced);
  }
}

TEST(Z0, DefinitionOracle) {
  for (const char* expr : {"Z30", "Z2 x Z3", "Z2 x Z2 x Z2", "Z6 x Z5"}) {
    auto r = dsl::parse_ring(expr);
    ASSERT_TRUE(r->is_reduced());
    for (const auto& a : all_ideals(r)) {
      if (!a.is_proper()) continue;
      bool brute = true;
      for (Elem w : oracle::all(*r))
        for (Elem z : oracle::all(*r))
          if (a.contains(w) && oracle::ann(*r, {w}) == oracle::ann(*r, {z}) && !a.contains(z)) brute = false;
      EXPECT_EQ(is_z0_ideal(a).is_holds(), brute) << expr << " " << a.text();
    }
  }
}

TEST(Uz, EveryFiniteRing) {
  for (const auto& e : default_corpus().entries) {
    if (e.ring.kind != dsl::RingKind::Finite) continue;
    const auto& r = e.ring.finite;
    EXPECT_TRUE(is_uz_ring(r).is_holds()) << e.expr;
    for (const auto& s : mcs_candidates(r)) EXPECT_TRUE(is_S_uz_ring(r, s).is_holds()) << e.expr;
  }
}

TEST(PropertyA, Examples) {
  EXPECT_TRUE(has_property_A(make_zn(7)).is_holds());
  EXPECT_TRUE(has_property_A(make_zn(12)).is_holds());
  EXPECT_TRUE(has_property_A(make_product(make_zn(2), make_zn(2))).is_holds());
}

TEST(AnnihilatorConditions, Examples) {
  auto f = make_zn(5);
  EXPECT_TRUE(has_ac(f).is_holds());
  EXPECT_TRUE(has_fac(f).is_holds());
  EXPECT_TRUE(has_ac(make_zn(12)).is_holds());
  auto v = make_product(make_zn(2), make_zn(2));
  auto fac = has_fac(v);
  ASSERT_TRUE(fac.is_fails());
  // (1,0) and (0,1) are indices 2 and 1.
  std::vector<Elem> ce = fac.counterexample;
  std::sort(ce.begin(), ce.end());
  EXPECT_EQ(ce, (std::vector<Elem>{1, 2}));
}

TEST(SIdempotent, Examples) {
  auto z6 = make_zn(6);
  auto z12 = make_zn(12);
  EXPECT_TRUE(s_idempotent_ideal_check(z6, mcs(z6, {}), std::vector<Elem>{0}).is_holds());
  EXPECT_TRUE(s_idempotent_ideal_check(z6, mcs(z6, {}), std::vector<Elem>{3}).is_holds());
  auto v = s_idempotent_ideal_check(z12, mcs(z12, {4}), std::vector<Elem>{8});
  EXPECT_TRUE(v.is_na());
  EXPECT_EQ(v.reason, reason::kNotSIdempotent);
}

TEST(SIdempotent, ListMatchesDefinition) {
  auto z12 = make_zn(12);
  for (const auto& s : mcs_candidates(z12)) {
    const Elem prod = s.product();
    std::vector<Elem> brute;
    for (Elem a : oracle::all(*z12))
      if (z12->mul(a, a) == z12->mul(prod, a)) brute.push_back(a);
    EXPECT_EQ(s_idempotents(z12, s), brute);
  }
}

TEST(PerPairS, IsNeverStricterThanUniform) {
  auto r = dsl::parse_ring("Z4 x Z4");
  ClassifyOptions pp;
  pp.per_pair_s = true;
  for (const auto& s : mcs_candidates(r))
    for (const auto& a : all_ideals(r)) {
      const auto uni = is_S_r_ideal(a, s);
      if (uni.is_holds()) EXPECT_TRUE(is_S_r_ideal(a, s, pp).is_holds());
    }
}
