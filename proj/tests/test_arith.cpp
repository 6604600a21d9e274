#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "ringlab/arith.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/dsl.hpp"

using namespace ringlab;
using namespace ringlab::arith;

namespace {

ArithRing zz() { return make_arith_ring({Factor::integers(), Factor::integers()}); }
ArithRing z() { return make_arith_ring({Factor::integers()}); }

McsDescriptor units() { return {McsDescriptor::Kind::Units, {}}; }
McsDescriptor everything() { return {McsDescriptor::Kind::All, {}}; }
McsDescriptor fin(std::vector<long long> v) { return {McsDescriptor::Kind::FinSet, std::move(v)}; }

// Window brute force written against the definitions alone: coordinates in
// [-b, b] for Z, all residues for Z_n.
std::vector<ArithElement> box(const ArithRing& r, int b) {
  std::vector<ArithElement> out{{}};
  for (const auto& f : r.factors) {
    std::vector<ArithElement> next;
    for (const auto& p : out) {
      const long long lo = f.is_int() ? -b : 0;
      const long long hi = f.is_int() ? b : f.modulus - 1;
      for (long long v = lo; v <= hi; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  return out;
}

bool in_ideal(const ArithIdeal& a, const ArithElement& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    long long v = x[i];
    if (!f.is_int()) v = ((v % f.modulus) + f.modulus) % f.modulus;
    if (d == 0 ? v != 0 : v % d != 0) return false;
  }
  return true;
}

ArithElement times(const ArithRing& r, const ArithElement& a, const ArithElement& b) {
  ArithElement out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long v = a[i] * b[i];
    if (!r.factors[i].is_int()) v = ((v % r.factors[i].modulus) + r.factors[i].modulus) % r.factors[i].modulus;
    out.push_back(v);
  }
  return out;
}

bool is_regular(const ArithRing& r, const ArithElement& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& f = r.factors[i];
    if (f.is_int() ? w[i] == 0 : std::gcd(((w[i] % f.modulus) + f.modulus) % f.modulus, f.modulus) != 1) return false;
  }
  return true;
}

// Does s make every window pair (w, z) with w regular and wz in A satisfy sz in A?
bool uniform_s_works(const ArithIdeal& a, const ArithElement& s, int b) {
  const auto pts = box(a.ring, b);
  for (const auto& w : pts) {
    if (!is_regular(a.ring, w)) continue;
    for (const auto& zz : pts)
      if (in_ideal(a, times(a.ring, w, zz)) && !in_ideal(a, times(a.ring, s, zz))) return false;
  }
  return true;
}

}  // namespace

TEST(AnnIsZero, Examples) {
  EXPECT_TRUE(arith_ann_is_zero(z(), {3}));
  EXPECT_TRUE(arith_ann_is_zero(zz(), {1, 2}));
  EXPECT_FALSE(arith_ann_is_zero(zz(), {0, 5}));
  const auto mixed = make_arith_ring({Factor::integers(), Factor::mod(4)});
  EXPECT_TRUE(arith_ann_is_zero(mixed, {2, 3}));
  EXPECT_FALSE(arith_ann_is_zero(mixed, {2, 2}));
}

TEST(ArithPrime, Examples) {
  EXPECT_TRUE(arith_is_prime(make_arith_ideal(z(), {3})));
  EXPECT_FALSE(arith_is_prime(make_arith_ideal(zz(), {0, 2})));
  EXPECT_FALSE(arith_is_prime(make_arith_ideal(z(), {6})));
  EXPECT_TRUE(arith_is_prime(make_arith_ideal(z(), {0})));
  EXPECT_TRUE(arith_is_prime(make_arith_ideal(zz(), {1, 0})));
  EXPECT_THROW(arith_is_prime(make_arith_ideal(z(), {1})), Error);
}

TEST(ArithPrime, WindowOracle) {
  for (long long d = 0; d <= 12; ++d) {
    if (d == 1) continue;
    const auto a = make_arith_ideal(z(), {d});
    bool brute = true;
    for (long long x = -12; x <= 12; ++x)
      for (long long y = -12; y <= 12; ++y)
        if (in_ideal(a, {x * y}) && !in_ideal(a, {x}) && !in_ideal(a, {y})) brute = false;
    EXPECT_EQ(arith_is_prime(a), brute) << d;
  }
}

TEST(ArithR, ThreeZFailsWithThreeOne) {
  const auto v = arith_is_r_ideal(make_arith_ideal(z(), {3}));
  ASSERT_TRUE(v.is_fails());
  EXPECT_EQ(v.counterexample, (std::vector<ArithElement>{{3}, {1}}));
}

TEST(ArithR, Examples) {
  EXPECT_TRUE(arith_is_r_ideal(make_arith_ideal(zz(), {0, 2})).is_fails());
  EXPECT_TRUE(arith_is_r_ideal(make_arith_ideal(z(), {0})).is_holds());
}

TEST(ArithSR, ZxZWitnessOneZero) {
  const auto a = make_arith_ideal(zz(), {0, 2});
  const auto s = make_arith_mcs(zz(), {units(), everything()});
  const auto v = arith_is_S_r_ideal(a, s);
  ASSERT_TRUE(v.is_holds());
  EXPECT_EQ(*v.witness, (ArithElement{1, 0}));
  EXPECT_TRUE(uniform_s_works(a, {1, 0}, 6));
  EXPECT_FALSE(uniform_s_works(a, {1, 1}, 6));
}

TEST(ArithSR, ThreeZUnitsFails) {
  const auto a = make_arith_ideal(z(), {3});
  const auto s = make_arith_mcs(z(), {units()});
  EXPECT_TRUE(arith_is_S_r_ideal(a, s).is_fails());
  EXPECT_FALSE(uniform_s_works(a, {1}, 6));
  EXPECT_FALSE(uniform_s_works(a, {-1}, 6));
}

TEST(ArithSR, ZeroIdealHoldsWithOne) {
  const auto a = make_arith_ideal(z(), {0});
  const auto v = arith_is_S_r_ideal(a, make_arith_mcs(z(), {units()}));
  ASSERT_TRUE(v.is_holds());
  EXPECT_EQ(*v.witness, ArithElement{1});
}

TEST(ArithSR, Disjointness) {
  const auto a = make_arith_ideal(z(), {3});
  const auto v = arith_is_S_r_ideal(a, make_arith_mcs(z(), {everything()}));
  EXPECT_TRUE(v.is_na());
  EXPECT_EQ(v.reason, reason::kDisjointness);
}

TEST(ArithSR, VerdictsMatchWindowSearch) {
  // Every ideal d1 Z x d2 Z with d in {0, 2, 3} and S built from small descriptors.
  const std::vector<std::vector<McsDescriptor>> sets{
      {units(), units()}, {units(), everything()}, {everything(), units()}, {fin({1}), fin({1, -1})}};
  for (long long d1 : {0, 2, 3})
    for (long long d2 : {0, 2, 3})
      for (const auto& sd : sets) {
        const auto a = make_arith_ideal(zz(), {d1, d2});
        const auto s = make_arith_mcs(zz(), sd);
        const auto v = arith_is_S_r_ideal(a, s, 4);
        if (v.is_na()) continue;
        bool any = false;
        for (const auto& cand : box(zz(), 4))
          if (s.contains(cand) && uniform_s_works(a, cand, 4)) any = true;
        EXPECT_EQ(v.is_holds(), any) << a.text() << " " << s.text();
        if (v.is_holds()) EXPECT_TRUE(uniform_s_works(a, *v.witness, 4));
      }
}

TEST(ArithOracle, Examples) {
  const auto a = make_arith_ideal(zz(), {0, 2});
  const auto s = make_arith_mcs(zz(), {units(), everything()});
  EXPECT_TRUE(arith_oracle_check(a, &s, 8));
  const auto three = make_arith_ideal(z(), {3});
  OracleClaim claim;
  claim.r_ideal = Outcome::Holds;
  std::string detail;
  EXPECT_FALSE(arith_oracle_check(three, nullptr, 10, claim, &detail));
  EXPECT_NE(detail.find("(3,1)"), std::string::npos) << detail;
  EXPECT_TRUE(arith_oracle_check(make_arith_ideal(z(), {0}), nullptr, 8));
}

TEST(ArithOracle, ConfirmsClosedFormsAtBoundTen) {
  for (const auto& r : {z(), zz(), make_arith_ring({Factor::integers(), Factor::mod(4)})})
    for (long long d1 : {0, 2, 3, 5})
      for (long long d2 : {0, 1, 2, 3}) {
        std::vector<long long> desc{d1};
        if (r.arity() == 2) desc.push_back(r.factors[1].is_int() ? d2 : (d2 == 0 ? 4 : d2 == 3 ? 1 : d2));
        const auto a = make_arith_ideal(r, desc);
        if (!a.is_proper()) continue;
        std::vector<McsDescriptor> ud(r.arity(), units());
        const auto s = make_arith_mcs(r, ud);
        std::string detail;
        EXPECT_TRUE(arith_oracle_check(a, &s, 10, &detail)) << a.text() << ": " << detail;
        if (r.arity() == 1) break;
      }
}

TEST(ArithPrimeCriterion, ClosedForms) {
  const auto r = zz();
  const std::vector<std::vector<McsDescriptor>> sets{{units(), units()}, {fin({1}), fin({1})}, {units(), fin({1, -1})}};
  for (long long d1 : {0, 1, 2, 3, 5})
    for (long long d2 : {0, 1, 2, 3, 5}) {
      const auto a = make_arith_ideal(r, {d1, d2});
      if (!a.is_proper() || !arith_is_prime(a)) continue;
      for (const auto& sd : sets) {
        const auto s = make_arith_mcs(r, sd);
        if (!arith_disjoint(a, s)) continue;
        EXPECT_EQ(arith_is_S_r_ideal(a, s).is_holds(), arith_subset_zd(a)) << a.text();
      }
    }
}

TEST(PureModEmbedding, MatchesFinitePipeline) {
  for (const auto& [m1, m2] : std::vector<std::pair<long long, long long>>{{4, 6}, {2, 8}, {3, 9}, {6, 1}}) {
    const auto ar = make_arith_ring({Factor::mod(m1), Factor::mod(m2)});
    auto fr = make_product(make_zn(static_cast<std::size_t>(m1)), make_zn(static_cast<std::size_t>(m2)));
    const auto idx = [&](long long x, long long y) { return static_cast<Elem>(x * m2 + y); };
    const std::vector<std::vector<McsDescriptor>> sets{
        {units(), units()}, {fin({1}), fin({1})}, {units(), fin({1})}, {everything(), units()}};
    for (long long d1 = 1; d1 <= m1; ++d1)
      for (long long d2 = 1; d2 <= m2; ++d2) {
        if (m1 % d1 || m2 % d2) continue;
        const auto a = make_arith_ideal(ar, {d1, d2});
        if (!a.is_proper()) continue;
        const auto fa = ideal_generate(fr, std::vector<Elem>{idx(d1 % m1, 0), idx(0, d2 % m2)});
        EXPECT_EQ(arith_is_prime(a), is_prime(fa)) << a.text();
        EXPECT_EQ(arith_is_r_ideal(a).outcome, is_r_ideal(fa).outcome) << a.text();
        EXPECT_EQ(arith_subset_zd(a), fa.members().subset_of(fr->zero_divisors())) << a.text();
        for (const auto& sd : sets) {
          const auto s = make_arith_mcs(ar, sd);
          std::vector<Elem> members;
          for (long long x = 0; x < m1; ++x)
            for (long long y = 0; y < m2; ++y)
              if (s.contains({x, y})) members.push_back(idx(x, y));
          const auto fs = mcs_from_members(fr, ElementSet::of(fr->size(), members));
          EXPECT_EQ(arith_is_S_r_ideal(a, s).outcome, is_S_r_ideal(fa, fs).outcome) << a.text() << " " << s.text();
        }
      }
  }
}

TEST(ArithMcs, RejectsNonClosedSets) {
  EXPECT_THROW(make_arith_mcs(z(), {fin({1, 2})}), Error);
  EXPECT_THROW(make_arith_mcs(z(), {fin({2})}), Error);
  EXPECT_NO_THROW(make_arith_mcs(z(), {fin({1, -1})}));
}

TEST(ArithColon, IdealPairExample) {
  // A = 0 x 2Z is inside the zero divisors and not S-r for S = {1} x {1}.
  const auto a = make_arith_ideal(zz(), {0, 2});
  const auto s = make_arith_mcs(zz(), {fin({1}), fin({1})});
  const auto v = arith_is_S_r_ideal(a, s);
  ASSERT_TRUE(v.is_fails());
  ASSERT_TRUE(v.defeated);
  const auto sz = multiply(zz(), *v.defeated, v.counterexample.at(1));
  const auto b = arith_colon(a, sz);
  const auto k = arith_colon(a, b);
  EXPECT_TRUE(arith_meets_regular(b));
  EXPECT_TRUE(arith_subset(a, b) && !(a == b));
  EXPECT_TRUE(arith_subset(a, k) && !(a == k));
  EXPECT_TRUE(arith_subset(arith_product(b, k), a));
}
