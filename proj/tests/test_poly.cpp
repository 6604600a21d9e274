#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/poly.hpp"

using namespace ringlab;

namespace {

Poly P(const RingPtr& r, std::vector<Elem> c) { return Poly(r, std::move(c)); }
MulClosedSet mcs(const RingPtr& r, std::vector<Elem> g) { return mcs_generate(r, g); }

// Schoolbook product straight from the tables.
std::vector<Elem> convolve(const FiniteRing& r, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST(PolyArith, Examples) {
  auto z2 = make_zn(2);
  const auto f = P(z2, {1, 1});
  EXPECT_EQ(poly_mul(f, f), P(z2, {1, 0, 1}));
  EXPECT_TRUE(poly_mul(f, P(z2, {})).is_zero());
  auto z3 = make_zn(3);
  EXPECT_EQ(poly_eval(P(z3, {2, 1}), 1), 0U);
}

TEST(PolyArith, CanonicalForm) {
  auto z6 = make_zn(6);
  EXPECT_EQ(P(z6, {1, 2, 0, 0}).coeffs().size(), 2U);
  EXPECT_TRUE(P(z6, {0, 0}).is_zero());
  EXPECT_EQ(P(z6, {}).degree(), -1);
  // 2x * 3x = 0 over Z6: trailing zeros vanish.
  EXPECT_TRUE(poly_mul(P(z6, {0, 2}), P(z6, {0, 3})).is_zero());
  EXPECT_EQ(P(z6, {1, 2}).text(), "2x+1");
}

TEST(PolyArith, DegreeLimit) {
  auto z2 = make_zn(2);
  std::vector<Elem> c(kMaxDegree + 2, 1);
  try {
    poly_mul(P(z2, c), P(z2, {1}));
    FAIL() << "expected DegreeLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeLimit);
  }
}

TEST(PolyArith, MatchesConvolutionOracle) {
  auto z12 = make_zn(12);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<Elem> a(rng() % 5), b(rng() % 5);
    for (auto& x : a) x = static_cast<Elem>(rng() % 12);
    for (auto& x : b) x = static_cast<Elem>(rng() % 12);
    const auto fa = P(z12, a), fb = P(z12, b);
    EXPECT_EQ(poly_mul(fa, fb).coeffs(), convolve(*z12, fa.coeffs(), fb.coeffs()));
    // Evaluation is a ring hom.
    for (Elem x = 0; x < 12; ++x)
      EXPECT_EQ(poly_eval(poly_mul(fa, fb), x), z12->mul(poly_eval(fa, x), poly_eval(fb, x)));
    EXPECT_EQ(poly_sub(poly_add(fa, fb), fb), fa);
  }
}

TEST(Content, Examples) {
  auto z12 = make_zn(12);
  const auto zero = P(z12, {});
  EXPECT_EQ(oracle::to_set(content_set(zero)), oracle::Set{0});
  EXPECT_TRUE(content_ideal(zero).is_zero());
  EXPECT_EQ(content_ideal(P(z12, {4, 2})), ideal_generate(z12, std::vector<Elem>{2}));
  EXPECT_EQ(content_ideal(P(z12, {4, 3})).size(), 12U);
}

TEST(McCoy, Examples) {
  for (std::size_t n : {2U, 4U, 6U, 12U}) EXPECT_TRUE(mccoy_regular(Poly::x(make_zn(n))));
  EXPECT_FALSE(mccoy_regular(P(make_zn(4), {0, 2})));
  EXPECT_TRUE(mccoy_regular(P(make_zn(3), {2, 1})));
}

TEST(McCoy, ConstantAnnihilatorOracle) {
  for (const char* expr : {"Z2", "Z4", "Z6", "Z8", "Z2 x Z2", "Z9", "Z12", "triv(Z2, free(1))"}) {
    auto r = dsl::parse_ring(expr);
    if (r->size() > 12) continue;
    const int d = r->size() <= 6 ? 3 : 2;
    for (const auto& f : all_polys(r, d)) {
      bool killed = false;
      for (Elem c = 1; c < r->size() && !killed; ++c) {
        bool all_zero = true;
        for (Elem a : f.coeffs()) all_zero = all_zero && r->mul(c, a) == 0;
        killed = all_zero;
      }
      ASSERT_EQ(mccoy_regular(f), !killed) << expr << " " << f.text();
    }
  }
}

TEST(McCoy, DirectLinearAnnihilatorSearch) {
  // Any nonzero g of degree <= 1 with f g = 0 certifies f is not regular.
  for (const char* expr : {"Z4", "Z6", "Z2 x Z2"}) {
    auto r = dsl::parse_ring(expr);
    const auto gs = all_polys(r, 1);
    for (const auto& f : all_polys(r, 2)) {
      bool found = false;
      for (const auto& g : gs)
        if (!g.is_zero() && convolve(*r, f.coeffs(), g.coeffs()).empty()) found = true;
      if (found) EXPECT_FALSE(mccoy_regular(f)) << expr << " " << f.text();
      if (!mccoy_regular(f)) EXPECT_TRUE(found) << expr << " " << f.text();
    }
  }
}

TEST(DedekindMertens, Examples) {
  auto z6 = make_zn(6);
  EXPECT_TRUE(dedekind_mertens_check(P(z6, {1, 2}), P(z6, {})));
  EXPECT_TRUE(dedekind_mertens_check(P(z6, {1, 2}), P(z6, {2, 3})));
  auto z12 = make_zn(12);
  EXPECT_TRUE(dedekind_mertens_check(P(z12, {2}), P(z12, {3})));
  EXPECT_TRUE(ideal_product(content_ideal(P(z12, {3})), content_ideal(P(z12, {2}))).members() ==
              ideal_generate(z12, std::vector<Elem>{6}).members());
}

TEST(DedekindMertens, ContentMultiplicativityBound) {
  auto r = dsl::parse_ring("Z2 x Z4");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<Elem> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& x : a) x = static_cast<Elem>(rng() % r->size());
    for (auto& x : b) x = static_cast<Elem>(rng() % r->size());
    const auto w = P(r, a), z = P(r, b);
    EXPECT_TRUE(content_ideal(poly_mul(w, z)).members().subset_of(
        ideal_product(content_ideal(w), content_ideal(z)).members()));
    EXPECT_TRUE(dedekind_mertens_check(w, z));
  }
}

TEST(SpecMembership, ContentAndKernel) {
  auto z6 = make_zn(6);
  const auto two = ideal_generate(z6, std::vector<Elem>{2});
  const auto c = PolyIdealSpec::content(two);
  EXPECT_TRUE(c.contains(P(z6, {2, 4})));
  EXPECT_FALSE(c.contains(P(z6, {2, 3})));
  const auto k = PolyIdealSpec::kernel(1, zero_ideal(z6));
  EXPECT_TRUE(k.contains(P(z6, {5, 1})));
  EXPECT_FALSE(k.contains(P(z6, {1, 1})));
}

TEST(BoundedSearch, FieldKernelExamples) {
  auto z3 = make_zn(3);
  const auto v = bounded_S_r_search(PolyIdealSpec::kernel(1, zero_ideal(z3)), mcs(z3, {2}), 3);
  ASSERT_EQ(v.outcome, PolyOutcome::No);
  EXPECT_EQ(v.degree, 1);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->first, P(z3, {2, 1}));
  EXPECT_EQ(v.counterexample->second, P(z3, {1}));

  auto z2 = make_zn(2);
  const auto v2 = bounded_S_r_search(PolyIdealSpec::kernel(1, zero_ideal(z2)), mcs(z2, {}), 3);
  ASSERT_EQ(v2.outcome, PolyOutcome::No);
  EXPECT_EQ(v2.counterexample->first, P(z2, {1, 1}));
  EXPECT_EQ(v2.counterexample->second, P(z2, {1}));
}

TEST(BoundedSearch, CounterexampleGenuinelyDefeatsEveryS) {
  for (std::size_t p : {2U, 3U, 5U}) {
    auto f = make_zn(p);
    const auto spec = PolyIdealSpec::kernel(1, zero_ideal(f));
    const auto s = mcs_from_members(f, f->units());
    const auto v = bounded_S_r_search(spec, s, 2);
    ASSERT_EQ(v.outcome, PolyOutcome::No);
    const auto& [w, z] = *v.counterexample;
    EXPECT_TRUE(mccoy_regular(w));
    EXPECT_TRUE(spec.contains(poly_mul(w, z)));
    s.members().for_each([&](Elem sv) { EXPECT_FALSE(spec.contains(poly_scale(sv, z))); });
  }
}

TEST(BoundedSearch, ZeroContentNeverViolates) {
  for (std::size_t n : {2U, 4U, 6U}) {
    auto r = make_zn(n);
    for (int d = 0; d <= 2; ++d) {
      const auto v = bounded_S_r_search(PolyIdealSpec::content(zero_ideal(r)), mcs(r, {}), d);
      EXPECT_EQ(v.outcome, PolyOutcome::NoViolationUpTo);
      EXPECT_EQ(v.bound, d);
    }
  }
}

TEST(BoundedSearch, DegreeCap) {
  auto z2 = make_zn(2);
  EXPECT_THROW(bounded_S_r_search(PolyIdealSpec::content(zero_ideal(z2)), mcs(z2, {}), kMaxDegree + 1), Error);
}

TEST(DecideContent, Examples) {
  auto z12 = make_zn(12);
  const auto v = decide_content_S_r(ideal_generate(z12, std::vector<Elem>{2}), mcs(z12, {}));
  EXPECT_EQ(v.outcome, PolyOutcome::YesByTheorem);
  EXPECT_NE(v.gate, PolyGate::None);
  EXPECT_EQ(decide_content_S_r(zero_ideal(z12), mcs(z12, {})).outcome, PolyOutcome::YesByTheorem);

  auto klein = make_product(make_zn(2), make_zn(2));
  const auto a = ideal_generate(klein, std::vector<Elem>{1});  // {(0,0),(0,1)}
  const auto kv = decide_content_S_r(a, mcs(klein, {}));
  EXPECT_EQ(kv.gate, PolyGate::PropertyA);
  EXPECT_EQ(kv.outcome, PolyOutcome::YesByTheorem);

  EXPECT_THROW(decide_content_S_r(ideal_generate(z12, std::vector<Elem>{2}), mcs(z12, {4})), Error);
}

TEST(DecideContent, GatesAgreeWithBoundedSearch) {
  for (const char* expr : {"Z4", "Z6", "Z2 x Z2", "Z8", "Z9"}) {
    auto r = dsl::parse_ring(expr);
    const int d = r->size() <= 4 ? 3 : 2;
    for (const auto& a : all_ideals(r)) {
      if (!a.is_proper()) continue;
      for (const auto& s : {mcs(r, {}), mcs_from_members(r, r->units())}) {
        if (a.members().intersects(s.members())) continue;
        const auto v = decide_content_S_r(a, s);
        const auto b = bounded_S_r_search(PolyIdealSpec::content(a), s, d);
        if (v.outcome == PolyOutcome::YesByTheorem) EXPECT_EQ(b.outcome, PolyOutcome::NoViolationUpTo) << expr;
        if (v.outcome == PolyOutcome::No) EXPECT_EQ(b.outcome, PolyOutcome::No) << expr;
      }
    }
  }
}

TEST(SUnit, Examples) {
  auto z3 = make_zn(3);
  const auto nonzero = mcs(z3, {2});
  EXPECT_EQ(poly_s_unit_check(Poly::x(z3), nonzero).kind, SUnitResult::Kind::AnalyticNo);
  const auto two = poly_s_unit_check(P(z3, {2}), nonzero);
  ASSERT_EQ(two.kind, SUnitResult::Kind::Yes);
  EXPECT_EQ(*two.witness, P(z3, {1}));
  auto z2 = make_zn(2);
  const auto r = poly_s_unit_check(P(z2, {1, 1}), mcs(z2, {}), 3);
  EXPECT_EQ(r.kind, SUnitResult::Kind::NoUpTo);
  EXPECT_EQ(r.bound, 3);
}
