#include "ringlab/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlab {

namespace {

ElementSet principal(const FiniteRing& r, Elem g) {
  ElementSet s(r.size());
  for (Elem x = 0; x < r.size(); ++x) s.insert(r.mul(x, g));
  return s;
}

ElementSet set_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  ElementSet out(r.size());
  const auto bs = b.elements();
  a.for_each([&](Elem x) {
    for (Elem y : bs) out.insert(r.add(x, y));
  });
  return out;
}

/// Greedy generators: walk members in index order and keep each one not
/// already in the ideal generated by the earlier picks.
std::vector<Elem> greedy_generators(const FiniteRing& r, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet cur(r.size());
  cur.insert(0);
  members.for_each([&](Elem m) {
    if (cur.contains(m)) return;
    gens.push_back(m);
    cur = set_sum(r, cur, principal(r, m));
  });
  return gens;
}

std::vector<Elem> greedy_mcs_generators(const FiniteRing& r, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet cur(r.size());
  cur.insert(r.one());
  members.for_each([&](Elem m) {
    if (cur.contains(m)) return;
    gens.push_back(m);
    // Close cur under multiplication by the new generator.
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem x : cur.elements()) {
        const Elem y = r.mul(x, m);
        if (!cur.contains(y)) {
          cur.insert(y);
          grew = true;
        }
      }
    }
  });
  return gens;
}

}  // namespace

std::string join_literals(const FiniteRing& r, std::span<const Elem> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += r.literal(elems[i]);
  }
  return out;
}

std::string join_labels(const FiniteRing& r, std::span<const Elem> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += r.label(elems[i]);
  }
  return out;
}

std::string Ideal::text() const {
  if (generators_.empty()) return "(" + ring_->literal(0) + ")";
  return "(" + join_literals(*ring_, generators_) + ")";
}

Elem MulClosedSet::product() const {
  Elem p = ring_->one();
  members_.for_each([&](Elem s) { p = ring_->mul(p, s); });
  return p;
}

std::string MulClosedSet::text() const {
  return "S<" + join_literals(*ring_, generators_) + ">";
}

bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.size() || !s.contains(0)) return false;
  const auto m = s.elements();
  for (Elem a : m) {
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
    for (Elem x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(x, a))) return false;
  }
  return true;
}

Ideal ideal_generate(const RingPtr& r, std::span<const Elem> gens) {
  ElementSet cur(r->size());
  cur.insert(0);
  for (Elem g : gens) {
    if (g >= r->size()) throw Error(ErrorKind::TypeMismatch, "generator index out of range");
    if (!cur.contains(g)) cur = set_sum(*r, cur, principal(*r, g));
  }
  return Ideal(r, std::move(cur), std::vector<Elem>(gens.begin(), gens.end()));
}

Ideal ideal_from_members(const RingPtr& r, const ElementSet& members) {
  if (!is_ideal_set(*r, members)) throw Error(ErrorKind::TypeMismatch, "set is not an ideal of " + r->recipe());
  return Ideal(r, members, greedy_generators(*r, members));
}

Ideal zero_ideal(const RingPtr& r) {
  ElementSet s(r->size());
  s.insert(0);
  return Ideal(r, std::move(s), {});
}

Ideal unit_ideal(const RingPtr& r) {
  return Ideal(r, ElementSet::full(r->size()), {r->one()});
}

std::vector<Ideal> all_ideals(const RingPtr& r) {
  if (r->size() > size_limit()) throw Error(ErrorKind::SizeLimit, "ideal enumeration over " + r->recipe());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> principals;
  for (Elem g = 0; g < r->size(); ++g) {
    ElementSet p = principal(*r, g);
    if (seen.insert(p).second) principals.push_back(std::move(p));
  }
  std::vector<ElementSet> found = principals;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const ElementSet& p : principals) {
      if (p.subset_of(found[i])) continue;
      ElementSet s = set_sum(*r, found[i], p);
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) {
    auto gens = greedy_generators(*r, s);
    out.emplace_back(r, std::move(s), std::move(gens));
  }
  return out;
}

Ideal annihilator(const RingPtr& r, const ElementSet& t) {
  ElementSet s(r->size());
  const auto ts = t.elements();
  for (Elem y = 0; y < r->size(); ++y) {
    bool ok = true;
    for (Elem x : ts)
      if (r->mul(y, x) != 0) {
        ok = false;
        break;
      }
    if (ok) s.insert(y);
  }
  auto gens = greedy_generators(*r, s);
  return Ideal(r, std::move(s), std::move(gens));
}

Ideal colon(const Ideal& a, const ElementSet& k) {
  const RingPtr& r = a.ring();
  ElementSet s(r->size());
  const auto ks = k.elements();
  for (Elem w = 0; w < r->size(); ++w) {
    bool ok = true;
    for (Elem x : ks)
      if (!a.contains(r->mul(w, x))) {
        ok = false;
        break;
      }
    if (ok) s.insert(w);
  }
  auto gens = greedy_generators(*r, s);
  return Ideal(r, std::move(s), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& k) {
  // For an ideal A, w*K in A iff w*g in A for every generator g of K.
  ElementSet gens(a.ring()->size());
  for (Elem g : k.generators()) gens.insert(g);
  return colon(a, gens);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  const RingPtr& r = a.ring();
  ElementSet s = set_sum(*r, a.members(), b.members());
  auto gens = greedy_generators(*r, s);
  return Ideal(r, std::move(s), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const RingPtr& r = a.ring();
  std::vector<Elem> prods;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) prods.push_back(r->mul(x, y));
  Ideal gen = ideal_generate(r, prods);
  auto gens = greedy_generators(*r, gen.members());
  return Ideal(r, gen.members(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::size_t k) {
  Ideal acc = unit_ideal(a.ring());
  for (std::size_t i = 0; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  const RingPtr& r = a.ring();
  ElementSet s = a.members() & b.members();
  auto gens = greedy_generators(*r, s);
  return Ideal(r, std::move(s), std::move(gens));
}

bool is_prime(const Ideal& a) {
  if (!a.is_proper()) return false;
  const FiniteRing& r = *a.ring();
  const auto outside = a.members().complement().elements();
  for (Elem w : outside)
    for (Elem z : outside)
      if (a.contains(r.mul(w, z))) return false;
  return true;
}

bool is_maximal(const Ideal& a) {
  if (!a.is_proper()) return false;
  for (const Ideal& i : all_ideals(a.ring()))
    if (i.is_proper() && a.members().subset_of(i.members()) && !(i.members() == a.members())) return false;
  return true;
}

std::vector<Ideal> prime_ideals(const RingPtr& r) {
  std::vector<Ideal> out;
  for (Ideal& i : all_ideals(r))
    if (is_prime(i)) out.push_back(std::move(i));
  return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& r) {
  const auto ideals = all_ideals(r);
  std::vector<Ideal> out;
  for (const Ideal& a : ideals) {
    if (!a.is_proper()) continue;
    bool maximal = true;
    for (const Ideal& b : ideals)
      if (b.is_proper() && a.members().subset_of(b.members()) && !(a.members() == b.members())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<Ideal> min_primes_over(const Ideal& a) {
  if (!a.is_proper()) throw Error(ErrorKind::NotProper, "Min(A) of the unit ideal");
  std::vector<Ideal> over;
  for (Ideal& p : prime_ideals(a.ring()))
    if (a.members().subset_of(p.members())) over.push_back(std::move(p));
  std::vector<Ideal> out;
  for (const Ideal& p : over) {
    bool minimal = true;
    for (const Ideal& q : over)
      if (q.members().subset_of(p.members()) && !(q.members() == p.members())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  return out;
}

Ideal jacobson_radical(const RingPtr& r) {
  ElementSet s = ElementSet::full(r->size());
  for (const Ideal& m : maximal_ideals(r)) s &= m.members();
  auto gens = greedy_generators(*r, s);
  return Ideal(r, std::move(s), std::move(gens));
}

Ideal kernel(const RingHom& h) {
  ElementSet s(h.domain->size());
  for (Elem a = 0; a < h.domain->size(); ++a)
    if (h(a) == h.codomain->zero()) s.insert(a);
  auto gens = greedy_generators(*h.domain, s);
  return Ideal(h.domain, std::move(s), std::move(gens));
}

Ideal ideal_preimage(const RingHom& h, const Ideal& b) {
  ElementSet s(h.domain->size());
  for (Elem a = 0; a < h.domain->size(); ++a)
    if (b.contains(h(a))) s.insert(a);
  auto gens = greedy_generators(*h.domain, s);
  return Ideal(h.domain, std::move(s), std::move(gens));
}

std::pair<RingPtr, RingHom> make_quotient(const Ideal& a) {
  return make_quotient(a.ring(), a.members(), a.generators());
}

MulClosedSet mcs_generate(const RingPtr& r, std::span<const Elem> gens) {
  ElementSet s(r->size());
  s.insert(r->one());
  std::vector<Elem> frontier{r->one()};
  for (Elem g : gens) {
    if (g >= r->size()) throw Error(ErrorKind::TypeMismatch, "generator index out of range");
    if (!s.contains(g)) {
      s.insert(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<Elem> next;
    const auto current = s.elements();
    for (Elem x : frontier)
      for (Elem y : current) {
        const Elem p = r->mul(x, y);
        if (!s.contains(p)) {
          s.insert(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return MulClosedSet(r, std::move(s), std::vector<Elem>(gens.begin(), gens.end()));
}

MulClosedSet mcs_from_members(const RingPtr& r, const ElementSet& members) {
  if (members.universe() != r->size() || !members.contains(r->one()))
    throw Error(ErrorKind::InvalidConstruction, "multiplicative set must contain 1");
  const auto m = members.elements();
  for (Elem a : m)
    for (Elem b : m)
      if (!members.contains(r->mul(a, b)))
        throw Error(ErrorKind::InvalidConstruction, "set is not multiplicatively closed");
  return MulClosedSet(r, members, greedy_mcs_generators(*r, members));
}

MulClosedSet mcs_complement(const Ideal& p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidConstruction, "complement of a non-prime ideal is not multiplicatively closed");
  return mcs_from_members(p.ring(), p.members().complement());
}

ElementSet s_units(const RingPtr& r, const MulClosedSet& s) {
  ElementSet out(r->size());
  for (Elem a = 0; a < r->size(); ++a)
    for (Elem h = 0; h < r->size(); ++h)
      if (s.contains(r->mul(h, a))) {
        out.insert(a);
        break;
      }
  return out;
}

LocalizationResult localize(const RingPtr& r, const MulClosedSet& s) {
  const Elem t = s.product();
  const Elem e = idempotent_power(*r, t).first;
  const std::size_t n = r->size();

  ElementSet image(n);
  for (Elem a = 0; a < n; ++a) image.insert(r->mul(e, a));
  const auto elems = image.elements();
  constexpr Elem kNone = static_cast<Elem>(-1);
  std::vector<Elem> local(n, kNone);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Elem>(i);

  const std::size_t m = elems.size();
  RingTables tab;
  tab.size = m;
  tab.add.resize(m * m);
  tab.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      tab.add[i * m + j] = local[r->add(elems[i], elems[j])];
      tab.mul[i * m + j] = local[r->mul(elems[i], elems[j])];
    }
  tab.one = local[e];
  for (Elem x : elems) {
    tab.labels.push_back(r->label(x));
    tab.literals.push_back(r->literal(x));
  }
  const Elem one_minus_e = r->sub(r->one(), e);
  tab.recipe = (recipe_needs_parens(r->recipe()) ? "(" + r->recipe() + ")" : r->recipe()) + "/(" +
               r->literal(one_minus_e) + ")";
  tab.resolve = [r, e, local](const ElemLiteral& lit) -> std::optional<Elem> {
    auto a = r->resolve(lit);
    if (!a) return std::nullopt;
    return local[r->mul(e, *a)];
  };
  RingPtr loc = FiniteRing::make(std::move(tab));

  std::vector<Elem> img(n);
  for (Elem a = 0; a < n; ++a) img[a] = local[r->mul(e, a)];
  RingHom pi{r, loc, std::move(img)};
  check_hom(pi);
  s.members().for_each([&](Elem x) {
    if (!loc->is_unit(pi(x)))
      throw Error(ErrorKind::ConstructionBug, "image of " + r->label(x) + " is not a unit after localization");
  });
  Ideal ker = kernel(pi);
  return LocalizationResult{loc, std::move(pi), std::move(ker), e};
}

RingPtr localize_oracle(const RingPtr& r, const MulClosedSet& s, std::size_t limit) {
  const std::size_t n = r->size();
  if (n * s.size() > limit * limit) throw Error(ErrorKind::SizeLimit, "fraction table too large");
  std::vector<Elem> denoms{r->one()};
  s.members().for_each([&](Elem x) {
    if (x != r->one()) denoms.push_back(x);
  });
  const std::size_t k = denoms.size();
  constexpr Elem kNone = static_cast<Elem>(-1);
  std::vector<Elem> denom_index(n, kNone);
  for (std::size_t i = 0; i < k; ++i) denom_index[denoms[i]] = static_cast<Elem>(i);

  auto equivalent = [&](Elem a, Elem sa, Elem b, Elem sb) {
    const Elem diff = r->sub(r->mul(sb, a), r->mul(sa, b));
    for (Elem v : denoms)
      if (r->mul(v, diff) == 0) return true;
    return false;
  };

  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<Elem> class_of(n * k, kNone);
  for (Elem a = 0; a < n; ++a)
    for (std::size_t si = 0; si < k; ++si) {
      const Elem sv = denoms[si];
      Elem cls = kNone;
      for (std::size_t c = 0; c < reps.size(); ++c)
        if (equivalent(a, sv, reps[c].first, reps[c].second)) {
          cls = static_cast<Elem>(c);
          break;
        }
      if (cls == kNone) {
        cls = static_cast<Elem>(reps.size());
        reps.emplace_back(a, sv);
      }
      class_of[a * k + si] = cls;
    }
  auto cls = [&](Elem a, Elem sv) { return class_of[a * k + denom_index[sv]]; };

  const std::size_t m = reps.size();
  RingTables tab;
  tab.size = m;
  tab.add.resize(m * m);
  tab.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a, sa] = reps[i];
      const auto [b, sb] = reps[j];
      const Elem den = r->mul(sa, sb);
      tab.add[i * m + j] = cls(r->add(r->mul(sb, a), r->mul(sa, b)), den);
      tab.mul[i * m + j] = cls(r->mul(a, b), den);
    }
  tab.one = cls(r->one(), r->one());
  for (const auto& [a, sv] : reps) {
    tab.labels.push_back(r->label(a) + "/" + r->label(sv));
    tab.literals.push_back(r->literal(a));
  }
  tab.recipe = r->recipe() + " localized at " + s.text();
  tab.resolve = [r, class_of, k](const ElemLiteral& lit) -> std::optional<Elem> {
    auto a = r->resolve(lit);
    if (!a) return std::nullopt;
    return class_of[*a * k];
  };
  return FiniteRing::make(std::move(tab));
}

Ideal ideal_pushforward(const LocalizationResult& loc, const Ideal& a) {
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(loc.map(g));
  Ideal gen = ideal_generate(loc.localized, gens);
  return Ideal(loc.localized, gen.members(), greedy_generators(*loc.localized, gen.members()));
}

}  // namespace ringlab
