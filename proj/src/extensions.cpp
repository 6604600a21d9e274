#include "ringlab/extensions.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

namespace {

std::size_t checked_power(std::size_t base, std::size_t k, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= base;
    if (out > limit)
      throw Error(ErrorKind::SizeLimit, "module of size " + std::to_string(base) + "^" + std::to_string(k) +
                                            " exceeds limit " + std::to_string(limit));
  }
  return out;
}

}  // namespace

FiniteModule make_module_free(const RingPtr& r, std::size_t k, std::size_t limit) {
  const std::size_t n = r->size();
  const std::size_t size = checked_power(n, k, limit);
  auto digits = [n, k](Elem m) {
    std::vector<Elem> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Elem>(m % n);
      m /= static_cast<Elem>(n);
    }
    return d;
  };
  auto pack = [n](const std::vector<Elem>& d) {
    Elem m = 0;
    for (Elem x : d) m = static_cast<Elem>(m * n + x);
    return m;
  };

  FiniteModule mod;
  mod.ring = r;
  mod.size = size;
  mod.add.resize(size * size);
  mod.act.resize(n * size);
  mod.literals.resize(size);
  for (Elem a = 0; a < size; ++a) {
    const auto da = digits(a);
    for (Elem b = 0; b < size; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < k; ++i) db[i] = r->add(da[i], db[i]);
      mod.add[a * size + b] = pack(db);
    }
    for (Elem x = 0; x < n; ++x) {
      auto d = da;
      for (auto& c : d) c = r->mul(x, c);
      mod.act[x * size + a] = pack(d);
    }
    if (k == 0) {
      mod.literals[a] = "0";
    } else if (k == 1) {
      mod.literals[a] = r->literal(da[0]);
    } else {
      std::string lit = "(";
      for (std::size_t i = 0; i < k; ++i) lit += (i ? "," : "") + r->literal(da[i]);
      mod.literals[a] = lit + ")";
    }
  }
  mod.recipe = "free(" + std::to_string(k) + ")";
  mod.resolve = [r, k, pack](const ElemLiteral& lit) -> std::optional<Elem> {
    if (k == 0) {
      if (!lit.is_tuple() && *lit.value == 0) return Elem{0};
      return std::nullopt;
    }
    if (k == 1) return r->resolve(lit);
    if (!lit.is_tuple() || lit.parts.size() != k) return std::nullopt;
    std::vector<Elem> d;
    for (const auto& p : lit.parts) {
      auto e = r->resolve(p);
      if (!e) return std::nullopt;
      d.push_back(*e);
    }
    return pack(d);
  };
  validate_module(mod);
  return mod;
}

FiniteModule make_module_quotient(const Ideal& j) {
  auto [q, proj] = make_quotient(j);
  const RingPtr& r = j.ring();
  FiniteModule mod;
  mod.ring = r;
  mod.size = q->size();
  mod.add.resize(mod.size * mod.size);
  mod.act.resize(r->size() * mod.size);
  for (Elem a = 0; a < mod.size; ++a)
    for (Elem b = 0; b < mod.size; ++b) mod.add[a * mod.size + b] = q->add(a, b);
  for (Elem x = 0; x < r->size(); ++x)
    for (Elem a = 0; a < mod.size; ++a) mod.act[x * mod.size + a] = q->mul(proj(x), a);
  for (Elem a = 0; a < mod.size; ++a) mod.literals.push_back(q->literal(a));
  std::string gens;
  for (std::size_t i = 0; i < j.generators().size(); ++i) gens += (i ? "," : "") + r->literal(j.generators()[i]);
  mod.recipe = "quot(" + gens + ")";
  RingPtr qr = q;
  mod.resolve = [qr](const ElemLiteral& lit) { return qr->resolve(lit); };
  validate_module(mod);
  return mod;
}

void validate_module(const FiniteModule& m) {
  const FiniteRing& r = *m.ring;
  auto bug = [](const std::string& what) { throw Error(ErrorKind::ConstructionBug, "module axiom failed: " + what); };
  for (Elem a = 0; a < m.size; ++a) {
    if (m.plus(a, 0) != a) bug("zero is not neutral");
    if (m.scale(r.one(), a) != a) bug("1.m != m");
    bool has_neg = false;
    for (Elem b = 0; b < m.size; ++b) {
      if (m.plus(a, b) != m.plus(b, a)) bug("addition not commutative");
      if (m.plus(a, b) == 0) has_neg = true;
      for (Elem c = 0; c < m.size; ++c)
        if (m.plus(m.plus(a, b), c) != m.plus(a, m.plus(b, c))) bug("addition not associative");
      for (Elem x = 0; x < r.size(); ++x)
        if (m.scale(x, m.plus(a, b)) != m.plus(m.scale(x, a), m.scale(x, b))) bug("action not additive in m");
    }
    if (!has_neg) bug("missing additive inverse");
    for (Elem x = 0; x < r.size(); ++x)
      for (Elem y = 0; y < r.size(); ++y) {
        if (m.scale(r.add(x, y), a) != m.plus(m.scale(x, a), m.scale(y, a))) bug("action not additive in r");
        if (m.scale(r.mul(x, y), a) != m.scale(x, m.scale(y, a))) bug("action not associative");
      }
  }
}

bool module_is_torsion_free(const FiniteModule& m) {
  for (Elem x = 1; x < m.ring->size(); ++x)
    for (Elem a = 1; a < m.size; ++a)
      if (m.scale(x, a) == 0) return false;
  return true;
}

Ideal module_ann(const FiniteModule& m) {
  ElementSet ann(m.ring->size());
  for (Elem x = 0; x < m.ring->size(); ++x) {
    bool kills = true;
    for (Elem a = 0; a < m.size && kills; ++a) kills = m.scale(x, a) == 0;
    if (kills) ann.insert(x);
  }
  return ideal_from_members(m.ring, ann);
}

bool is_submodule(const FiniteModule& m, const ElementSet& n) {
  if (n.universe() != m.size || !n.contains(0)) return false;
  const auto elems = n.elements();
  for (Elem a : elems) {
    for (Elem b : elems)
      if (!n.contains(m.plus(a, b))) return false;
    for (Elem x = 0; x < m.ring->size(); ++x)
      if (!n.contains(m.scale(x, a))) return false;
  }
  return true;
}

TrivExtRing make_trivial_extension(const RingPtr& r, FiniteModule m, std::size_t limit) {
  const std::size_t nr = r->size(), nm = m.size, n = nr * nm;
  if (n > limit)
    throw Error(ErrorKind::SizeLimit, "trivial extension of size " + std::to_string(n) + " exceeds limit " +
                                          std::to_string(limit));
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem ra = a / nm, ma = a % nm;
    for (Elem b = 0; b < n; ++b) {
      const Elem rb = b / nm, mb = b % nm;
      t.add[a * n + b] = static_cast<Elem>(r->add(ra, rb) * nm + m.plus(ma, mb));
      t.mul[a * n + b] = static_cast<Elem>(r->mul(ra, rb) * nm + m.plus(m.scale(ra, mb), m.scale(rb, ma)));
    }
  }
  t.one = static_cast<Elem>(r->one() * nm);
  for (Elem a = 0; a < n; ++a) {
    t.labels.push_back("(" + r->label(a / nm) + "," + m.literals[a % nm] + ")");
    t.literals.push_back("(" + r->literal(a / nm) + "," + m.literals[a % nm] + ")");
  }
  t.recipe = "triv(" + r->recipe() + ", " + m.recipe + ")";
  auto mres = m.resolve;
  t.resolve = [r, mres, nm](const ElemLiteral& lit) -> std::optional<Elem> {
    if (!lit.is_tuple() || lit.parts.size() != 2) return std::nullopt;
    auto a = r->resolve(lit.parts[0]);
    auto b = mres(lit.parts[1]);
    if (!a || !b) return std::nullopt;
    return static_cast<Elem>(*a * nm + *b);
  };
  TrivExtRing out{r, std::move(m), nullptr};
  out.ring = FiniteRing::make(std::move(t));
  return out;
}

Ideal triv_ideal(const TrivExtRing& t, const Ideal& a, const ElementSet& n) {
  const FiniteModule& m = t.module;
  if (!is_submodule(m, n)) throw Error(ErrorKind::NotAnIdeal, "second component is not a submodule");
  for (Elem x : a.members().elements())
    for (Elem e = 0; e < m.size; ++e)
      if (!n.contains(m.scale(x, e)))
        throw Error(ErrorKind::NotAnIdeal, "(" + t.base->literal(x) + ", " + m.literals[e] + "): product " +
                                               m.literals[m.scale(x, e)] + " leaves the submodule");
  ElementSet members(t.ring->size());
  a.members().for_each([&](Elem x) { n.for_each([&](Elem e) { members.insert(t.embed(x, e)); }); });
  return ideal_from_members(t.ring, members);
}

MulClosedSet lift_mcs_triv(const TrivExtRing& t, const MulClosedSet& s, LiftMode mode) {
  ElementSet members(t.ring->size());
  s.members().for_each([&](Elem x) {
    if (mode == LiftMode::SZero)
      members.insert(t.embed(x, 0));
    else
      for (Elem e = 0; e < t.module.size; ++e) members.insert(t.embed(x, e));
  });
  return mcs_from_members(t.ring, members);
}

std::string TrivEquivalenceReport::pattern() const {
  auto bit = [](Outcome o) { return o == Outcome::Holds ? '1' : '0'; };
  return {bit(base), bit(s_zero), bit(s_full)};
}

bool TrivEquivalenceReport::consistent() const {
  if (!hypotheses_met()) return true;
  const std::string p = pattern();
  return p == "000" || p == "111";
}

TrivEquivalenceReport triv_equivalence_check(const TrivExtRing& t, const Ideal& a, const MulClosedSet& s) {
  const FiniteRing& r = *t.base;
  TrivEquivalenceReport rep;
  rep.disjoint = !a.members().intersects(s.members());
  rep.torsion_free = module_is_torsion_free(t.module);
  const Ideal ann_m = module_ann(t.module);
  rep.ann_union_nonzero = true;
  rep.ann_union_literal = true;
  for (Elem x = 0; x < r.size(); ++x) {
    const bool inside = r.annihilator_of(x).subset_of(ann_m.members());
    if (!inside) {
      rep.ann_union_literal = false;
      if (x != 0) rep.ann_union_nonzero = false;
    }
  }

  ClassifyOptions opt;
  opt.enforce_disjoint = false;
  const Ideal lifted = triv_ideal(t, a, ElementSet::full(t.module.size));
  rep.base = is_S_r_ideal(a, s, opt).outcome;
  rep.s_zero = is_S_r_ideal(lifted, lift_mcs_triv(t, s, LiftMode::SZero), opt).outcome;
  rep.s_full = is_S_r_ideal(lifted, lift_mcs_triv(t, s, LiftMode::SFull), opt).outcome;
  return rep;
}

TrivEquivalenceReport triv_equivalence_check(const Ideal& a, const MulClosedSet& s, const FiniteModule& m) {
  return triv_equivalence_check(make_trivial_extension(a.ring(), m), a, s);
}

std::optional<Elem> AmalgRing::index_of(Elem w, Elem y) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), std::make_pair(w, y));
  if (it == carrier.end() || *it != std::make_pair(w, y)) return std::nullopt;
  return static_cast<Elem>(it - carrier.begin());
}

AmalgRing make_amalgamation(const RingHom& f, const Ideal& j, const std::string& hom_name, std::size_t limit) {
  check_hom(f);
  const RingPtr& h1 = f.domain;
  const RingPtr& h2 = f.codomain;
  if (j.ring() != h2) throw Error(ErrorKind::TypeMismatch, "amalgamation ideal must live in the codomain");

  std::vector<std::pair<Elem, Elem>> carrier;
  for (Elem w = 0; w < h1->size(); ++w)
    j.members().for_each([&](Elem x) { carrier.emplace_back(w, h2->add(f(w), x)); });
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  const std::size_t n = carrier.size();
  if (n > limit)
    throw Error(ErrorKind::SizeLimit, "amalgamation of size " + std::to_string(n) + " exceeds limit " +
                                          std::to_string(limit));

  AmalgRing am{f, j, nullptr, std::move(carrier)};
  auto idx = [&](Elem w, Elem y) {
    auto i = am.index_of(w, y);
    if (!i) throw Error(ErrorKind::ConstructionBug, "amalgamation carrier not closed");
    return *i;
  };
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto [wa, ya] = am.carrier[a];
      const auto [wb, yb] = am.carrier[b];
      t.add[a * n + b] = idx(h1->add(wa, wb), h2->add(ya, yb));
      t.mul[a * n + b] = idx(h1->mul(wa, wb), h2->mul(ya, yb));
    }
  t.one = idx(h1->one(), h2->one());
  for (const auto& [w, y] : am.carrier) {
    t.labels.push_back("(" + h1->label(w) + "," + h2->label(y) + ")");
    t.literals.push_back("(" + h1->literal(w) + "," + h2->literal(y) + ")");
  }
  t.recipe = "amalg(" + h1->recipe() + ", " + h2->recipe() + ", " + hom_name + ", " + j.text() + ")";
  auto carrier_copy = am.carrier;
  t.resolve = [h1, h2, carrier_copy](const ElemLiteral& lit) -> std::optional<Elem> {
    if (!lit.is_tuple() || lit.parts.size() != 2) return std::nullopt;
    auto w = h1->resolve(lit.parts[0]);
    auto y = h2->resolve(lit.parts[1]);
    if (!w || !y) return std::nullopt;
    auto it = std::lower_bound(carrier_copy.begin(), carrier_copy.end(), std::make_pair(*w, *y));
    if (it == carrier_copy.end() || *it != std::make_pair(*w, *y)) return std::nullopt;
    return static_cast<Elem>(it - carrier_copy.begin());
  };
  am.ring = FiniteRing::make(std::move(t));
  return am;
}

namespace {

ElementSet amalg_lift(const AmalgRing& am, const ElementSet& base) {
  ElementSet out(am.ring->size());
  base.for_each([&](Elem a) {
    am.j.members().for_each([&](Elem x) { out.insert(*am.index_of(a, am.h2()->add(am.f(a), x))); });
  });
  return out;
}

}  // namespace

Ideal amalg_ideal(const AmalgRing& am, const Ideal& a) { return ideal_from_members(am.ring, amalg_lift(am, a.members())); }

MulClosedSet amalg_mcs(const AmalgRing& am, const MulClosedSet& s) {
  return mcs_from_members(am.ring, amalg_lift(am, s.members()));
}

bool AmalgTransferReport::hypotheses_met() const {
  if (!disjoint) return false;
  if (direction == Direction::Forward) return epimorphism && domain && j_in_zd;
  return isomorphism;
}

bool AmalgTransferReport::violated() const {
  if (!hypotheses_met()) return false;
  const Outcome ante = direction == Direction::Forward ? base : amalg;
  const Outcome cons = direction == Direction::Forward ? amalg : base;
  return ante == Outcome::Holds && cons == Outcome::Fails;
}

AmalgTransferReport amalg_transfer_check(const Ideal& a, const MulClosedSet& s, const AmalgRing& am, Direction dir) {
  const FiniteRing& h1 = *am.h1();
  const FiniteRing& h2 = *am.h2();
  AmalgTransferReport rep;
  rep.direction = dir;
  rep.disjoint = !a.members().intersects(s.members());
  ElementSet image(h2.size());
  for (Elem w = 0; w < h1.size(); ++w) image.insert(am.f(w));
  rep.epimorphism = image.count() == h2.size();
  rep.domain = h1.size() > 1 && h1.zero_divisors().count() == 1;
  rep.j_in_zd = am.j.is_zero() || am.j.members().subset_of(h2.zero_divisors());
  rep.isomorphism = is_isomorphism(am.f);

  rep.base = is_S_r_ideal(a, s).outcome;
  rep.amalg = is_S_r_ideal(amalg_ideal(am, a), amalg_mcs(am, s)).outcome;
  return rep;
}

namespace {

long long mod_n(long long x, long long n) { return ((x % n) + n) % n; }

}  // namespace

IntAmalgReport int_amalg_zero_forward(long long n, long long d, const arith::ArithMCS& s, int bound) {
  if (n < 1) throw Error(ErrorKind::InvalidConstruction, "modulus must be at least 1");
  if (s.ring.arity() != 1 || !s.ring.factors[0].is_int())
    throw Error(ErrorKind::TypeMismatch, "multiplicative set must live in Z");
  d = std::gcd(std::llabs(d), n);
  IntAmalgReport rep;
  rep.n = n;
  rep.d = d;
  rep.j_in_zd = d != 1 || n == 1;
  rep.disjoint = !s.contains({0});

  // Regular (k, y): k != 0 and Ann_{Z_n}(y) meets J only in 0.
  std::vector<long long> j_members;
  for (long long x = 0; x < n; x += d) j_members.push_back(x);
  auto closed_regular = [&](long long k, long long y) {
    if (k == 0) return false;
    for (long long x : j_members)
      if (x != 0 && mod_n(x * y, n) == 0) return false;
    return true;
  };

  if (rep.disjoint) {
    // w z in 0 x J with k_w != 0 forces k_z = 0, so z already lies in the
    // ideal and the identity of S x J is a uniform witness.
    rep.outcome = Outcome::Holds;
    rep.witness = std::make_pair(1LL, mod_n(1, n));
  }

  // Window: (k, k mod n + j), |k| <= bound with bound >= n.
  const long long b = std::max<long long>(bound, n);
  std::vector<std::pair<long long, long long>> elems;
  for (long long k = -b; k <= b; ++k)
    for (long long x : j_members) elems.emplace_back(k, mod_n(k + x, n));
  auto in_ideal = [](const std::pair<long long, long long>& e) { return e.first == 0; };
  auto brute_regular = [&](const std::pair<long long, long long>& w) {
    for (const auto& z : elems)
      if ((z.first != 0 || z.second != 0) && w.first * z.first == 0 && mod_n(w.second * z.second, n) == 0) return false;
    return true;
  };
  bool agrees = true;
  for (const auto& w : elems) {
    const bool reg = brute_regular(w);
    if (reg != closed_regular(w.first, w.second)) agrees = false;
    if (!reg || !rep.witness) continue;
    for (const auto& z : elems) {
      const std::pair<long long, long long> wz{w.first * z.first, mod_n(w.second * z.second, n)};
      const std::pair<long long, long long> sz{rep.witness->first * z.first, mod_n(rep.witness->second * z.second, n)};
      if (in_ideal(wz) && !in_ideal(sz)) agrees = false;
    }
  }
  bool window_disjoint = true;
  for (const auto& e : elems)
    if (s.contains({e.first}) && in_ideal(e)) window_disjoint = false;
  if (window_disjoint != rep.disjoint) agrees = false;
  rep.oracle_agrees = agrees;
  return rep;
}

}  // namespace ringlab
