#include <gtest/gtest.h>

#include <cstdlib>

#include "oracle.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ideal.hpp"

using namespace ringlab;

namespace {

// Elements of Z_a x Z_b are laid out row-major.
Elem pair_of(std::size_t b, Elem x, Elem y) { return static_cast<Elem>(x * b + y); }

}  // namespace

TEST(MakeZn, ZeroRing) {
  auto r = make_zn(1);
  EXPECT_EQ(r->size(), 1U);
  EXPECT_EQ(r->zero(), r->one());
}

TEST(MakeZn, MatchesModularArithmetic) {
  for (std::size_t n = 1; n <= 30; ++n) {
    auto r = make_zn(n);
    ASSERT_EQ(r->size(), n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        EXPECT_EQ(r->add(a, b), (a + b) % n);
        EXPECT_EQ(r->mul(a, b), (a * b) % n);
      }
  }
}

TEST(MakeZn, Examples) {
  auto z12 = make_zn(12);
  EXPECT_EQ(z12->mul(5, 5), 1U);
  auto z6 = make_zn(6);
  EXPECT_EQ(z6->mul(2, 3), 0U);
}

TEST(MakeZn, RejectsZero) { EXPECT_THROW(make_zn(0), Error); }

TEST(MakeProduct, OrthogonalIdempotents) {
  auto r = make_product(make_zn(2), make_zn(2));
  ASSERT_EQ(r->size(), 4U);
  EXPECT_EQ(r->mul(pair_of(2, 1, 0), pair_of(2, 0, 1)), pair_of(2, 0, 0));
}

TEST(MakeProduct, CrtIsomorphicToZ12) {
  auto p = make_product(make_zn(3), make_zn(4));
  auto z12 = make_zn(12);
  auto h = find_isomorphism(z12, p);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(oracle::iso(*z12, *p, h->image));
  EXPECT_TRUE(oracle::is_cyclic_of_order(*p, 12));
}

TEST(MakeProduct, UnitCountIsComponentwise) {
  auto r = make_product(make_zn(5), make_zn(4));
  EXPECT_EQ(r->size(), 20U);
  EXPECT_EQ(r->units().count(), 8U);
  std::size_t brute = 0;
  for (Elem e : oracle::all(*r)) brute += oracle::unit(*r, e);
  EXPECT_EQ(brute, 8U);
}

TEST(MakeProduct, SizeLimit) {
  EXPECT_THROW(make_product(make_zn(20), make_zn(20), 256), Error);
  try {
    make_product(make_zn(20), make_zn(20), 256);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(MakeQuotient, Z12ModFourIsZ4) {
  auto z12 = make_zn(12);
  auto [q, pi] = make_quotient(ideal_generate(z12, std::vector<Elem>{4}));
  EXPECT_TRUE(oracle::is_cyclic_of_order(*q, 4));
  EXPECT_NO_THROW(check_hom(pi));
  EXPECT_FALSE(is_isomorphism(pi));
}

TEST(MakeQuotient, ZeroIdealGivesIsomorphicCopy) {
  auto z12 = make_zn(12);
  auto [q, pi] = make_quotient(zero_ideal(z12));
  EXPECT_TRUE(is_isomorphism(pi));
  EXPECT_TRUE(oracle::iso(*z12, *q, pi.image));
}

TEST(MakeQuotient, UnitIdealGivesZeroRing) {
  auto z12 = make_zn(12);
  auto [q, pi] = make_quotient(unit_ideal(z12));
  EXPECT_EQ(q->size(), 1U);
}

TEST(MakeQuotient, RejectsNonIdeal) {
  auto z12 = make_zn(12);
  const std::vector<Elem> bad{0, 1};
  EXPECT_THROW(make_quotient(z12, ElementSet::of(12, bad), bad), Error);
}

TEST(ElementPartition, Z12) {
  auto p = element_partition(*make_zn(12));
  EXPECT_EQ(oracle::to_set(p.units), (oracle::Set{1, 5, 7, 11}));
  EXPECT_EQ(p.units, p.regulars);
  EXPECT_EQ(p.zero_divisors.count(), 8U);
}

TEST(ElementPartition, Z6ZeroDivisorsIncludeZero) {
  auto p = element_partition(*make_zn(6));
  EXPECT_EQ(oracle::to_set(p.zero_divisors), (oracle::Set{0, 2, 3, 4}));
}

TEST(IdempotentPower, Examples) {
  auto z6 = make_zn(6);
  auto z12 = make_zn(12);
  EXPECT_EQ(idempotent_power(*z12, 1), (std::pair<Elem, std::size_t>{1, 1}));
  EXPECT_EQ(idempotent_power(*z6, 3), (std::pair<Elem, std::size_t>{3, 1}));
  EXPECT_EQ(idempotent_power(*z12, 2), (std::pair<Elem, std::size_t>{4, 2}));
}

TEST(IdempotentPower, ResultIsIdempotentAndMinimal) {
  for (std::size_t n : {8U, 12U, 18U, 24U, 30U}) {
    auto r = make_zn(n);
    for (Elem t : oracle::all(*r)) {
      auto [e, k] = idempotent_power(*r, t);
      EXPECT_EQ(r->mul(e, e), e);
      EXPECT_EQ(r->pow(t, k), e);
      for (std::size_t j = 1; j < k; ++j) EXPECT_NE(r->pow(t, j), r->pow(t, 2 * j));
    }
  }
}

TEST(CheckHom, IdentityAndProjection) {
  auto z12 = make_zn(12);
  EXPECT_TRUE(is_isomorphism(check_hom(identity_hom(z12))));
}

TEST(CheckHom, RejectsZ3ToZ6) {
  RingHom h{make_zn(3), make_zn(6), {0, 1, 2}};
  try {
    check_hom(h);
    FAIL() << "expected NotAHomomorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(AnnPushforward, Examples) {
  auto z12 = make_zn(12);
  for (Elem w : oracle::all(*z12)) EXPECT_TRUE(ann_pushforward_check(identity_hom(z12), w));

  auto v = make_product(make_zn(2), make_zn(2));
  RingHom swap{v, v, {pair_of(2, 0, 0), pair_of(2, 1, 0), pair_of(2, 0, 1), pair_of(2, 1, 1)}};
  check_hom(swap);
  EXPECT_TRUE(ann_pushforward_check(swap, pair_of(2, 1, 0)));

  auto p = make_product(make_zn(3), make_zn(4));
  RingHom crt{z12, p, {}};
  for (Elem a = 0; a < 12; ++a) crt.image.push_back(pair_of(4, a % 3, a % 4));
  check_hom(crt);
  EXPECT_TRUE(is_isomorphism(crt));
  EXPECT_TRUE(ann_pushforward_check(crt, 4));
}

TEST(Axioms, EveryConstructedRingPassesBruteForce) {
  std::vector<RingPtr> rings{make_zn(1), make_zn(9), make_product(make_zn(2), make_zn(6)),
                             dsl::parse_ring("Z12/(4)"), dsl::parse_ring("triv(Z2, free(1))"),
                             dsl::parse_ring("amalg(Z4, Z4, id, (2))")};
  for (const auto& rp : rings) {
    const auto& r = *rp;
    const auto el = oracle::all(r);
    for (Elem a : el) {
      EXPECT_EQ(r.add(a, 0), a);
      EXPECT_EQ(r.mul(a, r.one()), a);
      EXPECT_EQ(r.add(a, r.neg(a)), 0U);
      for (Elem b : el) {
        EXPECT_EQ(r.add(a, b), r.add(b, a));
        EXPECT_EQ(r.mul(a, b), r.mul(b, a));
        for (Elem c : el) {
          ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
          ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
          ASSERT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        }
      }
    }
  }
}

TEST(Axioms, RegularsEqualUnits) {
  for (const char* expr : {"Z24", "Z4 x Z6", "Z30/(10)", "triv(Z3, free(2))", "amalg(Z2 x Z2, Z2 x Z2, id, ((1,0)))"}) {
    auto r = dsl::parse_ring(expr);
    EXPECT_EQ(r->regulars(), r->units()) << expr;
    for (Elem e : oracle::all(*r)) EXPECT_EQ(r->is_regular(e), oracle::regular(*r, e)) << expr;
  }
}

TEST(Isomorphism, AnnPushforwardForEveryAutomorphismSample) {
  auto a = make_product(make_zn(3), make_zn(4));
  auto b = make_zn(12);
  auto h = find_isomorphism(a, b);
  ASSERT_TRUE(h);
  for (Elem w : oracle::all(*a)) EXPECT_TRUE(ann_pushforward_check(*h, w));
}

TEST(Isomorphism, NonIsomorphicRings) {
  EXPECT_FALSE(find_isomorphism(make_zn(4), make_product(make_zn(2), make_zn(2))).has_value());
  EXPECT_FALSE(find_isomorphism(make_zn(8), dsl::parse_ring("triv(Z2, free(2))")).has_value());
}

TEST(Quotient, KernelRecovery) {
  for (std::size_t n : {6U, 8U, 12U, 18U}) {
    auto r = make_zn(n);
    for (const auto& i : all_ideals(r)) {
      auto [q, pi] = make_quotient(i);
      EXPECT_EQ(kernel(pi), i);
      EXPECT_EQ(q->size() * i.size(), n);
    }
  }
}

TEST(Recipe, RoundTrip) {
  for (const char* expr : {"Z12", "Z2 x Z6", "Z12/(4)", "(Z4 x Z6)/((2,0))", "triv(Z2, free(2))",
                           "amalg(Z4, Z4, id, (2))", "Z2 x Z2 x Z3"}) {
    auto r = dsl::parse_ring(expr);
    auto again = dsl::parse_ring(r->recipe());
    if (r->size() <= 16) {
      EXPECT_TRUE(find_isomorphism(r, again).has_value()) << expr << " -> " << r->recipe();
    } else {
      EXPECT_EQ(fingerprint(*r), fingerprint(*again)) << expr;
    }
  }
}

TEST(Labels, DerivedFromRecipe) {
  auto p = make_product(make_zn(2), make_zn(3));
  EXPECT_EQ(p->label(pair_of(3, 1, 2)), "(1,2)");
  auto q = dsl::parse_ring("Z12/(4)");
  EXPECT_EQ(q->label(1), "1+(4)");
}

TEST(SizeLimit, EnvironmentOverride) {
  // size_limit() reads the variable once; the default applies in this process.
  if (std::getenv("RINGLAB_SIZE_LIMIT") == nullptr) EXPECT_EQ(size_limit(), kDefaultSizeLimit);
}
