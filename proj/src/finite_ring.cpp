#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ringlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConstruction: return "InvalidConstruction";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::ConstructionBug: return "ConstructionBug";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::DegreeLimit: return "DegreeLimit";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::UnknownHypothesis: return "UnknownHypothesis";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::size_t size_limit() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("RINGLAB_SIZE_LIMIT")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultSizeLimit;
  }();
  return limit;
}

std::string ElemLiteral::text() const {
  if (value) return std::to_string(*value);
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i].text();
  }
  return out + ")";
}

namespace {

std::string axiom_failure(const char* what, const RingTables& t, std::initializer_list<Elem> elems) {
  std::ostringstream os;
  os << what << " fails at (";
  bool first = true;
  for (Elem e : elems) {
    if (!first) os << ", ";
    os << (e < t.labels.size() ? t.labels[e] : std::to_string(e));
    first = false;
  }
  os << ") in " << t.recipe;
  return os.str();
}

}  // namespace

RingPtr FiniteRing::make(RingTables t) {
  const std::size_t n = t.size;
  if (n == 0) throw Error(ErrorKind::InvalidConstruction, "ring must have at least one element");
  if (t.add.size() != n * n || t.mul.size() != n * n)
    throw Error(ErrorKind::InvalidConstruction, "operation tables have the wrong shape");
  if (t.one >= n) throw Error(ErrorKind::InvalidConstruction, "identity index out of range");
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n)
      throw Error(ErrorKind::InvalidConstruction, "table entry out of range");
  if (t.labels.size() != n) {
    t.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.labels[i] = std::to_string(i);
  }
  if (t.literals.size() != n) t.literals = t.labels;

  auto A = [&](Elem a, Elem b) { return t.add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return t.mul[a * n + b]; };

  std::vector<Elem> neg(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (A(0, a) != a) throw Error(ErrorKind::InvalidConstruction, axiom_failure("additive identity", t, {a}));
    if (M(t.one, a) != a) throw Error(ErrorKind::InvalidConstruction, axiom_failure("multiplicative identity", t, {a}));
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw Error(ErrorKind::InvalidConstruction, axiom_failure("additive commutativity", t, {a, b}));
      if (M(a, b) != M(b, a)) throw Error(ErrorKind::InvalidConstruction, axiom_failure("multiplicative commutativity", t, {a, b}));
      if (!found && A(a, b) == 0) {
        neg[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidConstruction, axiom_failure("additive inverse", t, {a}));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_add = A(a, b), ab_mul = M(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (A(ab_add, c) != A(a, A(b, c)))
          throw Error(ErrorKind::InvalidConstruction, axiom_failure("additive associativity", t, {a, b, c}));
        if (M(ab_mul, c) != M(a, M(b, c)))
          throw Error(ErrorKind::InvalidConstruction, axiom_failure("multiplicative associativity", t, {a, b, c}));
        if (M(a, A(b, c)) != A(ab_mul, M(a, c)))
          throw Error(ErrorKind::InvalidConstruction, axiom_failure("distributivity", t, {a, b, c}));
      }
    }

  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->n_ = n;
  r->one_ = t.one;
  r->add_ = std::move(t.add);
  r->mul_ = std::move(t.mul);
  r->neg_ = std::move(neg);
  r->labels_ = std::move(t.labels);
  r->literals_ = std::move(t.literals);
  r->recipe_ = std::move(t.recipe);
  r->resolve_ = std::move(t.resolve);

  r->units_ = ElementSet(n);
  r->regulars_ = ElementSet(n);
  r->zero_divisors_ = ElementSet(n);
  for (Elem a = 0; a < n; ++a) {
    bool unit = false, ann_zero = true;
    for (Elem b = 0; b < n; ++b) {
      const Elem p = r->mul(a, b);
      if (p == r->one_) unit = true;
      if (p == 0 && b != 0) ann_zero = false;
    }
    if (unit) r->units_.insert(a);
    if (ann_zero)
      r->regulars_.insert(a);
    else
      r->zero_divisors_.insert(a);
  }
  // Multiplication by a regular element is injective, hence bijective on a
  // finite set; the two sets must coincide.
  if (!(r->units_ == r->regulars_))
    throw Error(ErrorKind::ConstructionBug, "regular elements differ from units in " + r->recipe_);

  for (Elem a = 1; a < n && r->reduced_; ++a) {
    Elem p = a;
    for (std::size_t k = 0; k < n && p != 0; ++k) p = r->mul(p, a);
    if (p == 0) r->reduced_ = false;
  }
  return r;
}

Elem FiniteRing::pow(Elem a, std::size_t k) const noexcept {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::optional<Elem> FiniteRing::resolve(const ElemLiteral& lit) const {
  if (!resolve_) return std::nullopt;
  return resolve_(lit);
}

std::optional<Elem> FiniteRing::inverse(Elem e) const noexcept {
  for (Elem b = 0; b < n_; ++b)
    if (mul(e, b) == one_) return b;
  return std::nullopt;
}

std::size_t FiniteRing::characteristic() const noexcept {
  std::size_t k = 1;
  for (Elem acc = one_; acc != 0; acc = add(acc, one_)) ++k;
  return n_ == 1 ? 1 : k;
}

ElementSet FiniteRing::idempotents() const {
  ElementSet s(n_);
  for (Elem a = 0; a < n_; ++a)
    if (mul(a, a) == a) s.insert(a);
  return s;
}

ElementSet FiniteRing::annihilator_of(Elem w) const {
  ElementSet s(n_);
  for (Elem y = 0; y < n_; ++y)
    if (mul(y, w) == 0) s.insert(y);
  return s;
}

bool recipe_needs_parens(const std::string& recipe) {
  int depth = 0;
  for (std::size_t i = 0; i < recipe.size(); ++i) {
    const char c = recipe[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == 'x' && i > 0 && i + 1 < recipe.size() && recipe[i - 1] == ' ' && recipe[i + 1] == ' ')
      return true;
  }
  return false;
}

namespace {

std::string wrap(const std::string& recipe) {
  return recipe_needs_parens(recipe) ? "(" + recipe + ")" : recipe;
}

}  // namespace

RingPtr make_zn(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidConstruction, "Z0 is not a finite ring");
  if (n > size_limit()) throw Error(ErrorKind::SizeLimit, "Z" + std::to_string(n) + " exceeds size limit");
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  t.one = static_cast<Elem>(1 % n);
  t.labels.resize(n);
  for (std::size_t a = 0; a < n; ++a) t.labels[a] = std::to_string(a);
  t.literals = t.labels;
  t.recipe = "Z" + std::to_string(n);
  t.resolve = [n](const ElemLiteral& lit) -> std::optional<Elem> {
    if (!lit.value) return std::nullopt;
    const long long m = static_cast<long long>(n);
    return static_cast<Elem>(((*lit.value % m) + m) % m);
  };
  return FiniteRing::make(std::move(t));
}

RingPtr make_product(const RingPtr& r1, const RingPtr& r2, std::size_t limit) {
  const std::size_t n1 = r1->size(), n2 = r2->size(), n = n1 * n2;
  if (n > limit)
    throw Error(ErrorKind::SizeLimit, "product of size " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
      t.add[a * n + b] = r1->add(a1, b1) * n2 + r2->add(a2, b2);
      t.mul[a * n + b] = r1->mul(a1, b1) * n2 + r2->mul(a2, b2);
    }
  t.one = r1->one() * n2 + r2->one();
  t.labels.resize(n);
  t.literals.resize(n);
  for (Elem a = 0; a < n; ++a) {
    t.labels[a] = "(" + r1->label(a / n2) + "," + r2->label(a % n2) + ")";
    t.literals[a] = "(" + r1->literal(a / n2) + "," + r2->literal(a % n2) + ")";
  }
  t.recipe = r1->recipe() + " x " + wrap(r2->recipe());
  t.resolve = [r1, r2](const ElemLiteral& lit) -> std::optional<Elem> {
    if (!lit.is_tuple() || lit.parts.size() != 2) return std::nullopt;
    auto a = r1->resolve(lit.parts[0]);
    auto b = r2->resolve(lit.parts[1]);
    if (!a || !b) return std::nullopt;
    return static_cast<Elem>(*a * r2->size() + *b);
  };
  return FiniteRing::make(std::move(t));
}

std::pair<RingPtr, RingHom> make_quotient(const RingPtr& r, const ElementSet& ideal_members,
                                          std::span<const Elem> generators) {
  const std::size_t n = r->size();
  if (ideal_members.universe() != n || !ideal_members.contains(0))
    throw Error(ErrorKind::TypeMismatch, "quotient by a set that is not an ideal of " + r->recipe());
  const auto members = ideal_members.elements();
  for (Elem a : members) {
    for (Elem b : members)
      if (!ideal_members.contains(r->add(a, b)))
        throw Error(ErrorKind::TypeMismatch, "quotient set not closed under addition in " + r->recipe());
    for (Elem x = 0; x < n; ++x)
      if (!ideal_members.contains(r->mul(x, a)))
        throw Error(ErrorKind::TypeMismatch, "quotient set does not absorb multiplication in " + r->recipe());
  }

  constexpr Elem kUnassigned = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(n, kUnassigned);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset_of[a] != kUnassigned) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem i : members) coset_of[r->add(a, i)] = id;
  }
  const std::size_t q = reps.size();

  std::string gens_text;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) gens_text += ",";
    gens_text += r->literal(generators[i]);
  }

  RingTables t;
  t.size = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (Elem c = 0; c < q; ++c)
    for (Elem d = 0; d < q; ++d) {
      t.add[c * q + d] = coset_of[r->add(reps[c], reps[d])];
      t.mul[c * q + d] = coset_of[r->mul(reps[c], reps[d])];
    }
  t.one = coset_of[r->one()];
  t.labels.resize(q);
  t.literals.resize(q);
  for (Elem c = 0; c < q; ++c) {
    t.labels[c] = r->label(reps[c]) + "+(" + gens_text + ")";
    t.literals[c] = r->literal(reps[c]);
  }
  t.recipe = wrap(r->recipe()) + "/(" + gens_text + ")";
  t.resolve = [r, coset_of](const ElemLiteral& lit) -> std::optional<Elem> {
    auto a = r->resolve(lit);
    if (!a) return std::nullopt;
    return coset_of[*a];
  };
  RingPtr quotient = FiniteRing::make(std::move(t));
  RingHom proj{r, quotient, coset_of};
  return {quotient, proj};
}

ElementPartition element_partition(const FiniteRing& r) {
  return {r.units(), r.regulars(), r.zero_divisors()};
}

std::pair<Elem, std::size_t> idempotent_power(const FiniteRing& r, Elem t) {
  Elem tk = t;
  for (std::size_t k = 1;; ++k) {
    if (r.mul(tk, tk) == tk) return {tk, k};
    tk = r.mul(tk, t);
    if (k > r.size() + 1) throw Error(ErrorKind::ConstructionBug, "no idempotent power found");
  }
}

const RingHom& check_hom(const RingHom& h) {
  const FiniteRing& d = *h.domain;
  const FiniteRing& c = *h.codomain;
  if (h.image.size() != d.size())
    throw Error(ErrorKind::NotAHomomorphism, "image table has the wrong length");
  for (Elem e : h.image)
    if (e >= c.size()) throw Error(ErrorKind::NotAHomomorphism, "image out of range");
  if (h(d.one()) != c.one())
    throw Error(ErrorKind::NotAHomomorphism, "identity maps to " + c.label(h(d.one())));
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = a; b < d.size(); ++b) {
      if (h(d.add(a, b)) != c.add(h(a), h(b)))
        throw Error(ErrorKind::NotAHomomorphism,
                    "additivity fails at (" + d.label(a) + "," + d.label(b) + ")");
      if (h(d.mul(a, b)) != c.mul(h(a), h(b)))
        throw Error(ErrorKind::NotAHomomorphism,
                    "multiplicativity fails at (" + d.label(a) + "," + d.label(b) + ")");
    }
  return h;
}

bool is_isomorphism(const RingHom& h) {
  check_hom(h);
  if (h.domain->size() != h.codomain->size()) return false;
  ElementSet seen(h.codomain->size());
  for (Elem e : h.image) {
    if (seen.contains(e)) return false;
    seen.insert(e);
  }
  return true;
}

bool ann_pushforward_check(const RingHom& h, Elem w) {
  if (!is_isomorphism(h)) throw Error(ErrorKind::NotApplicable, "annihilator pushforward needs an isomorphism");
  ElementSet pushed(h.codomain->size());
  h.domain->annihilator_of(w).for_each([&](Elem y) { pushed.insert(h(y)); });
  return pushed == h.codomain->annihilator_of(h(w));
}

RingHom identity_hom(const RingPtr& r) {
  std::vector<Elem> image(r->size());
  std::iota(image.begin(), image.end(), Elem{0});
  return RingHom{r, r, std::move(image)};
}

RingFingerprint fingerprint(const FiniteRing& r) {
  return {r.size(), r.units().count(), r.idempotents().count(), r.characteristic()};
}

namespace {

struct ElemInvariant {
  std::size_t add_order = 0;
  std::size_t ann_size = 0;
  std::size_t nil_index = 0;  // 0 when not nilpotent
  bool idempotent = false;
  bool unit = false;
  friend bool operator==(const ElemInvariant&, const ElemInvariant&) = default;
};

std::vector<ElemInvariant> invariants(const FiniteRing& r) {
  std::vector<ElemInvariant> inv(r.size());
  for (Elem a = 0; a < r.size(); ++a) {
    ElemInvariant& v = inv[a];
    v.add_order = 1;
    for (Elem acc = a; acc != 0; acc = r.add(acc, a)) ++v.add_order;
    v.ann_size = r.annihilator_of(a).count();
    Elem p = a;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (p == 0) {
        v.nil_index = k;
        break;
      }
      p = r.mul(p, a);
    }
    v.idempotent = r.mul(a, a) == a;
    v.unit = r.is_unit(a);
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const RingPtr& r1, const RingPtr& r2) : r1_(r1), r2_(r2), inv1_(invariants(*r1)), inv2_(invariants(*r2)) {
    const std::size_t n = r1->size();
    // Greedy additive generating set, identity first.
    ElementSet sub(n);
    sub.insert(0);
    auto extend = [&](Elem g) {
      gens_.push_back(g);
      std::vector<Elem> frontier = sub.elements();
      while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem x : frontier)
          for (Elem h : gens_) {
            const Elem y = r1->add(x, h);
            if (!sub.contains(y)) {
              sub.insert(y);
              next.push_back(y);
            }
          }
        frontier = std::move(next);
      }
    };
    if (n > 1) extend(r1->one());
    for (Elem e = 0; e < n; ++e)
      if (!sub.contains(e)) extend(e);
  }

  std::optional<RingHom> run() {
    if (r1_->size() != r2_->size()) return std::nullopt;
    if (!(fingerprint(*r1_) == fingerprint(*r2_))) return std::nullopt;
    assigned_.clear();
    if (!search(0)) return std::nullopt;
    return RingHom{r1_, r2_, map_};
  }

 private:
  static constexpr Elem kNone = static_cast<Elem>(-1);

  bool search(std::size_t depth) {
    if (depth == gens_.size()) return extend_and_check(true);
    const Elem g = gens_[depth];
    for (Elem cand = 0; cand < r2_->size(); ++cand) {
      if (!(inv1_[g] == inv2_[cand])) continue;
      if (g == r1_->one() && cand != r2_->one()) continue;
      assigned_.push_back(cand);
      if (extend_and_check(false) && search(depth + 1)) return true;
      assigned_.pop_back();
    }
    return false;
  }

  // Extends the partial assignment additively over the subgroup generated
  // so far and checks consistency, injectivity and multiplicativity there.
  bool extend_and_check(bool complete) {
    const std::size_t n = r1_->size();
    map_.assign(n, kNone);
    std::vector<char> used(n, 0);
    map_[0] = 0;
    used[0] = 1;
    std::vector<Elem> order{0};
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      const Elem x = order[qi];
      for (std::size_t i = 0; i < assigned_.size(); ++i) {
        const Elem y = r1_->add(x, gens_[i]);
        const Elem img = r2_->add(map_[x], assigned_[i]);
        if (map_[y] == kNone) {
          if (used[img]) return false;
          map_[y] = img;
          used[img] = 1;
          order.push_back(y);
        } else if (map_[y] != img) {
          return false;
        }
      }
    }
    for (Elem a : order)
      for (Elem b : order) {
        const Elem ab = r1_->mul(a, b);
        if (map_[ab] != kNone && map_[ab] != r2_->mul(map_[a], map_[b])) return false;
      }
    if (complete) return order.size() == n;
    return true;
  }

  RingPtr r1_, r2_;
  std::vector<ElemInvariant> inv1_, inv2_;
  std::vector<Elem> gens_;
  std::vector<Elem> assigned_;
  std::vector<Elem> map_;
};

}  // namespace

std::optional<RingHom> find_isomorphism(const RingPtr& r1, const RingPtr& r2) {
  IsoSearch search(r1, r2);
  auto h = search.run();
  if (h && !is_isomorphism(*h)) throw Error(ErrorKind::ConstructionBug, "isomorphism search returned a non-isomorphism");
  return h;
}

}  // namespace ringlab
