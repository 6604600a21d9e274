#include "ringlab/classify.hpp"

#include <unordered_map>

namespace ringlab {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

using Pair = std::pair<Elem, Elem>;

std::optional<Verdict> gate(const Ideal& a, const MulClosedSet* s, const ClassifyOptions& opt) {
  if (opt.enforce_proper && !a.is_proper()) return Verdict::not_applicable(reason::kNotProper);
  if (s && opt.enforce_disjoint && a.members().intersects(s->members()))
    return Verdict::not_applicable(reason::kDisjointness);
  return std::nullopt;
}

/// Pairs (w, z), w-major, with w regular, wz in A and z not in A. These are
/// exactly the pairs an S-r witness has to repair.
std::vector<Pair> regular_pairs_outside(const Ideal& a) {
  const FiniteRing& r = *a.ring();
  std::vector<Pair> out;
  r.regulars().for_each([&](Elem w) {
    for (Elem z = 0; z < r.size(); ++z)
      if (a.contains(r.mul(w, z)) && !a.contains(z)) out.emplace_back(w, z);
  });
  return out;
}

/// Uniform-s search shared by the S-indexed predicates. `repairs(s, pair)`
/// says whether s handles the pair.
template <class Repairs>
Verdict uniform_s_search(const MulClosedSet& s, const std::vector<Pair>& pairs, const ClassifyOptions& opt,
                         Repairs repairs) {
  const auto candidates = s.members().elements();
  if (opt.per_pair_s) {
    for (const Pair& p : pairs) {
      bool ok = false;
      for (Elem c : candidates)
        if (repairs(c, p)) {
          ok = true;
          break;
        }
      if (!ok) return Verdict::fails({p.first, p.second}, candidates.empty() ? std::nullopt : std::optional<Elem>(candidates.back()));
    }
    return Verdict::holds(candidates.empty() ? std::nullopt : std::optional<Elem>(candidates.front()));
  }
  std::optional<Pair> last_defeat;
  for (Elem c : candidates) {
    std::optional<Pair> defeat;
    for (const Pair& p : pairs)
      if (!repairs(c, p)) {
        defeat = p;
        break;
      }
    if (!defeat) return Verdict::holds(c);
    last_defeat = defeat;
  }
  if (!last_defeat) return Verdict::fails({}, std::nullopt);
  return Verdict::fails({last_defeat->first, last_defeat->second}, candidates.back());
}

std::vector<ElementSet> all_annihilators(const FiniteRing& r) {
  std::vector<ElementSet> anns;
  anns.reserve(r.size());
  for (Elem a = 0; a < r.size(); ++a) anns.push_back(r.annihilator_of(a));
  return anns;
}

/// Pairs (w, z) with w in A, Ann(w) = Ann(z), z not in A.
std::vector<Pair> z0_pairs(const Ideal& a) {
  const FiniteRing& r = *a.ring();
  const auto anns = all_annihilators(r);
  std::vector<Pair> out;
  a.members().for_each([&](Elem w) {
    for (Elem z = 0; z < r.size(); ++z)
      if (!a.contains(z) && anns[z] == anns[w]) out.emplace_back(w, z);
  });
  return out;
}

}  // namespace

Verdict is_r_ideal(const Ideal& a, const ClassifyOptions& opt) {
  if (auto g = gate(a, nullptr, opt)) return *g;
  const auto pairs = regular_pairs_outside(a);
  if (!pairs.empty()) return Verdict::fails({pairs.front().first, pairs.front().second});
  return Verdict::holds();
}

Verdict is_pr_ideal(const Ideal& a, const ClassifyOptions& opt) {
  if (auto g = gate(a, nullptr, opt)) return *g;
  const FiniteRing& r = *a.ring();
  for (const Pair& p : regular_pairs_outside(a)) {
    // Powers of z cycle within |R| steps.
    bool some_power = false;
    Elem zn = p.second;
    for (std::size_t n = 1; n <= r.size() && !some_power; ++n) {
      if (a.contains(zn)) some_power = true;
      zn = r.mul(zn, p.second);
    }
    if (!some_power) return Verdict::fails({p.first, p.second});
  }
  return Verdict::holds();
}

Verdict is_S_r_ideal(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt) {
  if (auto g = gate(a, &s, opt)) return *g;
  const FiniteRing& r = *a.ring();
  return uniform_s_search(s, regular_pairs_outside(a), opt,
                          [&](Elem c, const Pair& p) { return a.contains(r.mul(c, p.second)); });
}

Verdict is_S_prime(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt) {
  if (auto g = gate(a, &s, opt)) return *g;
  const FiniteRing& r = *a.ring();
  std::vector<Pair> pairs;
  for (Elem w = 0; w < r.size(); ++w)
    for (Elem z = 0; z < r.size(); ++z)
      if (a.contains(r.mul(w, z)) && !a.contains(w) && !a.contains(z)) pairs.emplace_back(w, z);
  return uniform_s_search(s, pairs, opt, [&](Elem c, const Pair& p) {
    return a.contains(r.mul(c, p.first)) || a.contains(r.mul(c, p.second));
  });
}

Verdict prime_verdict(const Ideal& a) {
  if (!a.is_proper()) return Verdict::not_applicable(reason::kNotProper);
  const FiniteRing& r = *a.ring();
  for (Elem w = 0; w < r.size(); ++w) {
    if (a.contains(w)) continue;
    for (Elem z = 0; z < r.size(); ++z)
      if (!a.contains(z) && a.contains(r.mul(w, z))) return Verdict::fails({w, z});
  }
  return Verdict::holds();
}

Verdict is_z0_ideal(const Ideal& a, const ClassifyOptions& opt) {
  if (opt.enforce_reduced && !a.ring()->is_reduced()) return Verdict::not_applicable(reason::kNotReduced);
  const auto pairs = z0_pairs(a);
  if (!pairs.empty()) return Verdict::fails({pairs.front().first, pairs.front().second});
  return Verdict::holds();
}

Verdict is_S_z0_ideal(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt) {
  if (opt.enforce_reduced && !a.ring()->is_reduced()) return Verdict::not_applicable(reason::kNotReduced);
  if (opt.enforce_disjoint && a.members().intersects(s.members())) return Verdict::not_applicable(reason::kDisjointness);
  const FiniteRing& r = *a.ring();
  return uniform_s_search(s, z0_pairs(a), opt,
                          [&](Elem c, const Pair& p) { return a.contains(r.mul(c, p.second)); });
}

Verdict is_uz_ring(const RingPtr& r) {
  for (Elem a = 0; a < r->size(); ++a)
    if (!r->is_unit(a) && !r->zero_divisors().contains(a)) return Verdict::fails({a});
  return Verdict::holds();
}

Verdict is_S_uz_ring(const RingPtr& r, const MulClosedSet& s) {
  const ElementSet su = s_units(r, s);
  for (Elem a = 0; a < r->size(); ++a)
    if (!su.contains(a) && !r->zero_divisors().contains(a)) return Verdict::fails({a});
  return Verdict::holds();
}

Verdict has_property_A(const RingPtr& r) {
  for (const Ideal& b : all_ideals(r)) {
    if (!b.members().subset_of(r->zero_divisors())) continue;
    if (annihilator(r, b.members()).is_zero()) return Verdict::fails(b.generators());
  }
  return Verdict::holds();
}

Verdict has_ac(const RingPtr& r) {
  const auto anns = all_annihilators(*r);
  for (const Ideal& a : all_ideals(r)) {
    ElementSet ann = ElementSet::full(r->size());
    a.members().for_each([&](Elem x) { ann &= anns[x]; });
    bool found = false;
    for (const auto& az : anns)
      if (az == ann) {
        found = true;
        break;
      }
    if (!found) return Verdict::fails(a.generators());
  }
  return Verdict::holds();
}

Verdict has_fac(const RingPtr& r, int cap) {
  const auto anns = all_annihilators(*r);
  const Elem n = static_cast<Elem>(r->size());
  std::vector<Elem> subset;
  // Subsets of size 2..cap, smallest size first and lexicographic within a
  // size, carrying the running annihilator.
  std::optional<Verdict> failure;
  std::size_t target = 2;
  auto rec = [&](auto&& self, Elem start, const ElementSet& ann) -> void {
    if (failure) return;
    if (subset.size() == target) {
      for (Elem w : subset)
        if (anns[w] == ann) return;
      failure = Verdict::fails(subset);
      return;
    }
    for (Elem e = start; e < n && !failure; ++e) {
      subset.push_back(e);
      self(self, e + 1, ann & anns[e]);
      subset.pop_back();
    }
  };
  for (; static_cast<int>(target) <= cap && !failure; ++target) rec(rec, 0, ElementSet::full(r->size()));
  if (failure) return *failure;
  return Verdict::holds();
}

std::vector<Elem> s_idempotents(const RingPtr& r, const MulClosedSet& s) {
  const Elem sp = s.product();
  std::vector<Elem> out;
  for (Elem a = 0; a < r->size(); ++a)
    if (r->mul(a, a) == r->mul(sp, a)) out.push_back(a);
  return out;
}

Verdict s_idempotent_ideal_check(const RingPtr& r, const MulClosedSet& s, std::span<const Elem> gens) {
  const Elem sp = s.product();
  for (Elem a : gens)
    if (r->mul(a, a) != r->mul(sp, a)) {
      Verdict v = Verdict::not_applicable(reason::kNotSIdempotent);
      v.counterexample = {a};
      return v;
    }
  const Ideal a = ideal_generate(r, gens);
  return is_S_r_ideal(a, s);
}

}  // namespace ringlab
