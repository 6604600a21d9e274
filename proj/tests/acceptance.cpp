// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "ringlab/arith.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t0));
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << n << "  " << name << "  (" << buf << ")";
  if (!c.ok) {
    std::cout << "  " << c.detail;
    ++failures;
  }
  std::cout << std::endl;
}

int run_cli(std::vector<std::string> args, std::string& out) {
  std::ostringstream o, e;
  const int rc = cli::run(args, o, e);
  out = o.str() + e.str();
  return rc;
}

std::string json_of(const std::vector<ReportRecord>& recs) {
  std::ostringstream os;
  write_json_lines(os, recs);
  return os.str();
}

}  // namespace

int main() {
  const auto corpus = default_corpus();
  std::vector<ReportRecord> full;

  report(1, "Z12 regression", [](Check& c) {
    const auto t0 = Clock::now();
    std::string out;
    c.require(run_cli({"ideals", "Z12"}, out) == 0, "ideals exit code");
    c.require(out.find("6 ideals") != std::string::npos, "ideals output: " + out);
    auto z12 = dsl::parse_ring("Z12");
    const auto ids = all_ideals(z12);
    c.require(ids.size() == 6 && oracle::ideals_exhaustive(*z12).size() == 6, "ideal count");
    std::size_t proper = 0;
    for (const auto& a : ids) {
      if (!a.is_proper()) continue;
      ++proper;
      c.require(is_r_ideal(a).is_holds(), "not r: " + a.text());
    }
    c.require(proper == 5, "proper ideal count");
    c.require(seconds_since(t0) < 1.0, "slower than 1 s");
  });

  report(2, "Z6 zero ideal", [](Check& c) {
    auto z6 = make_zn(6);
    const auto zero = zero_ideal(z6);
    c.require(is_r_ideal(zero).is_holds(), "(0) not r");
    const auto v = prime_verdict(zero);
    c.require(v.is_fails() && v.counterexample == std::vector<Elem>{2, 3}, "prime counterexample");
    c.require(z6->mul(2, 3) == 0 && !oracle::prime(*z6, {0}), "oracle");
  });

  report(3, "arith examples", [](Check& c) {
    using namespace arith;
    const auto z = make_arith_ring({Factor::integers()});
    const auto three = make_arith_ideal(z, {3});
    c.require(arith_is_prime(three), "3Z prime");
    const auto rv = arith_is_r_ideal(three);
    c.require(rv.is_fails() && rv.counterexample == std::vector<ArithElement>{{3}, {1}}, "3Z r counterexample");
    c.require(arith_oracle_check(three, nullptr, 10), "3Z oracle");

    const auto zz = make_arith_ring({Factor::integers(), Factor::integers()});
    const auto a = make_arith_ideal(zz, {0, 2});
    const auto s = make_arith_mcs(zz, {{McsDescriptor::Kind::Units, {}}, {McsDescriptor::Kind::All, {}}});
    c.require(arith_is_r_ideal(a).is_fails(), "0 x 2Z r");
    const auto sv = arith_is_S_r_ideal(a, s);
    c.require(sv.is_holds() && sv.witness == ArithElement{1, 0}, "witness (1,0)");
    c.require(arith_oracle_check(a, &s, 10), "Z x Z oracle");
    // Direct window check of the uniform witness.
    bool ok = true;
    for (long long w1 = -10; w1 <= 10; ++w1)
      for (long long w2 = -10; w2 <= 10; ++w2) {
        if (w1 == 0 || w2 == 0) continue;
        for (long long z1 = -10; z1 <= 10; ++z1)
          for (long long z2 = -10; z2 <= 10; ++z2)
            if (w1 * z1 == 0 && (w2 * z2) % 2 == 0 && !(1 * z1 == 0 && (0 * z2) % 2 == 0)) ok = false;
      }
    c.require(ok, "window witness check");
  });

  report(4, "F[x] example", [](Check& c) {
    const auto t0 = Clock::now();
    for (std::size_t p : {2U, 3U}) {
      auto f = make_zn(p);
      const auto s = mcs_from_members(f, f->units());
      const auto spec = PolyIdealSpec::kernel(1, zero_ideal(f));
      const auto v = bounded_S_r_search(spec, s, 3);
      c.require(v.outcome == PolyOutcome::No && v.degree <= 1, "no counterexample over Z" + std::to_string(p));
      if (v.counterexample) {
        const auto& [w, z] = *v.counterexample;
        c.require(mccoy_regular(w) && spec.contains(poly_mul(w, z)), "pair not in M");
        s.members().for_each([&](Elem sv) { c.require(!spec.contains(poly_scale(sv, z)), "s z in M"); });
      }
      c.require(poly_s_unit_check(Poly::x(f), s, 3).kind == SUnitResult::Kind::AnalyticNo, "x S-unit");
      c.require(mccoy_regular(Poly::x(f)), "x regular");
    }
    c.require(seconds_since(t0) < 5.0, "slower than 5 s");
  });

  report(5, "theorem suite", [&](Check& c) {
    const auto t0 = Clock::now();
    full = verify({}, corpus);
    const double single = seconds_since(t0);
    std::size_t unexpected = 0;
    for (const auto& r : full) unexpected += r.unexpected_violation();
    c.require(unexpected == 0, std::to_string(unexpected) + " unexpected violations");
    const auto t = tally(full);
    std::set<std::string> ids;
    for (const auto& x : t) ids.insert(x.theorem);
    for (const auto& th : theorem_registry()) c.require(ids.count(th.id) == 1, "no records for " + th.id);
    for (const char* id : {"T2.7", "T2.12", "P2.8", "P-suz", "L3.1", "DM", "DEGEN"}) {
      bool any = false;
      for (const auto& x : t) any = any || (x.theorem == id && x.verified > 0);
      c.require(any, std::string("no VERIFIED for ") + id);
    }
    c.require(single < 600, "single-threaded over 10 min");
    RunOptions four;
    four.jobs = 4;
    const auto t1 = Clock::now();
    const auto par = verify({}, corpus, four);
    c.require(seconds_since(t1) < 180, "4-way over 3 min");
    c.require(json_of(par) == json_of(full), "parallel report differs");
  });

  report(6, "localization oracle", [&](Check& c) {
    std::size_t pairs = 0;
    for (const auto& e : corpus.entries) {
      if (e.ring.kind != dsl::RingKind::Finite || e.ring.finite->size() > 24) continue;
      for (const auto& s : mcs_candidates(e.ring.finite)) {
        const auto loc = localize(e.ring.finite, s);
        const auto frac = localize_oracle(e.ring.finite, s);
        const auto h = find_isomorphism(loc.localized, frac);
        c.require(h && oracle::iso(*loc.localized, *frac, h->image), e.expr + " at " + s.text());
        ++pairs;
      }
    }
    c.require(pairs > 0, "no pairs");
  });

  report(7, "Dedekind-Mertens", [](Check& c) {
    const auto t0 = Clock::now();
    for (const char* expr : {"Z6", "Z12", "Z2 x Z2"}) {
      auto r = dsl::parse_ring(expr);
      std::mt19937_64 rng(kDefaultSeed);
      for (int i = 0; i < 1000; ++i) {
        std::vector<Elem> a(1 + rng() % 5), b(1 + rng() % 5);
        for (auto& x : a) x = static_cast<Elem>(rng() % r->size());
        for (auto& x : b) x = static_cast<Elem>(rng() % r->size());
        const Poly w(r, a), z(r, b);
        // Both sides built here from generator lists.
        const int m = std::max(w.degree(), 0);
        const auto cz = content_ideal(z);
        const auto lhs = ideal_product(ideal_power(cz, static_cast<std::size_t>(m + 1)), content_ideal(w));
        const auto rhs = ideal_product(ideal_power(cz, static_cast<std::size_t>(m)), content_ideal(poly_mul(w, z)));
        c.require(lhs == rhs, std::string("identity fails over ") + expr + " at " + w.text() + ", " + z.text());
        c.require(dedekind_mertens_check(w, z), std::string("checker disagrees over ") + expr);
      }
    }
    c.require(seconds_since(t0) < 30, "slower than 30 s");
  });

  report(8, "degeneracy", [&](Check& c) {
    bool arith_non_r = false, poly_non_r = false;
    for (const auto& e : corpus.entries) {
      switch (e.ring.kind) {
        case dsl::RingKind::Finite: {
          const auto& r = e.ring.finite;
          c.require(is_uz_ring(r).is_holds(), e.expr + " not uz");
          for (const auto& a : all_ideals(r))
            if (a.is_proper()) c.require(is_r_ideal(a).is_holds(), e.expr + " " + a.text() + " not r");
          break;
        }
        case dsl::RingKind::Arith:
          if (e.ideal) {
            const auto a = dsl::parse_arith_ideal(e.ring.arith, *e.ideal);
            if (a.is_proper() && arith::arith_is_r_ideal(a).is_fails()) arith_non_r = true;
          }
          break;
        case dsl::RingKind::Poly:
          if (e.ideal) {
            const auto spec = dsl::parse_poly_spec(e.ring.finite, *e.ideal);
            const auto one = mcs_generate(e.ring.finite, std::vector<Elem>{});
            if (bounded_S_r_search(spec, one, poly_search_degree(e.ring.finite->size())).outcome == PolyOutcome::No)
              poly_non_r = true;
          }
          break;
        default: break;
      }
    }
    c.require(arith_non_r, "no arith entry with a non-r ideal");
    c.require(poly_non_r, "no poly entry with a non-r ideal");
  });

  report(9, "hypothesis hunts and determinism", [&](Check& c) {
    for (const auto& [id, hyp] : std::vector<std::pair<std::string, std::string>>{{"T2.12", "prime"}, {"P2.10", "reduced"}}) {
      std::string out;
      const int rc = run_cli({"hunt", id, "--drop", hyp}, out);
      c.require(rc == 0, "hunt " + id + " exit " + std::to_string(rc));
      for (const auto& r : counterexample_search(id, corpus, {hyp}))
        c.require(r.outcome != RecordOutcome::Violation || r.expected, "unflagged violation in " + id);
    }
    if (full.empty()) full = verify({}, corpus);
    const auto again = verify({}, corpus);
    c.require(json_of(full) == json_of(again), "consecutive runs differ");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
