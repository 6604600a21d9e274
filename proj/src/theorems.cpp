#include "ringlab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

namespace ringlab {
namespace {

using Hyps = std::vector<std::pair<std::string, bool>>;

constexpr unsigned F = static_cast<unsigned>(Scope::Finite);
constexpr unsigned A = static_cast<unsigned>(Scope::Arith);
constexpr unsigned P = static_cast<unsigned>(Scope::Poly);
constexpr unsigned E = static_cast<unsigned>(Scope::Extension);

const std::vector<TheoremCase> kRegistry = {
    {"T2.3", {"S1-r", "disjoint", "subset", "S2-r", "multiplier"}, F,
     "S1 in S2, A S1-r and A misses S2 => A S2-r; converse when every s in S2 has rs in S1"},
    {"T2.5", {"S-regular", "pushforward-r"}, F, "S finite in reg, S^-1 A an r-ideal => A S-r"},
    {"P2.6", {"zd", "not-S-r"}, F | A, "A in zd, not S-r => B=(A:sz), K=(A:B) with B meeting reg, A<B, A<K, BK<=A"},
    {"T2.7", {"S=reg", "disjoint", "proper"}, F, "S-r <=> s[rH cap A]<=rA <=> s(A:r)<=A <=> s pi^-1(S^-1 A)<=A"},
    {"P2.8", {"S-r", "S-regular"}, F, "A S-r, S in reg => (A:s)=(A:s^n) for all n>=2"},
    {"P2.10", {"reduced", "disjoint", "S-z0"}, F, "reduced ring, A S-z0 => A S-r"},
    {"T2.11", {"S-r", "disjoint"}, F, "A S-r, L in Min(A) missing S => L S-r"},
    {"T2.12", {"prime", "disjoint"}, F | A, "prime A missing S: S-r <=> A in zd"},
    {"C-zd", {"S-r"}, F | A, "A S-r => A in zd"},
    {"P-jac", {"proper", "in-jacobson"}, F, "A in J(H): r-ideal <=> (H\\M)-r for every maximal M"},
    {"P-zero", {"disjoint"}, F | A, "0 missing S => 0 is S-r"},
    {"P-colon", {"S-r", "K-not-in-A", "disjoint"}, F, "A S-r, K not in A, (A:K) missing S => (A:K) S-r"},
    {"P-annsum", {"principal-sum", "disjoint"}, F, "K1+K2=Ht, t in S, Ann(K1)+Ann(K2) missing S => it is S-r"},
    {"P-minidem", {"reduced", "disjoint"}, F, "reduced, P minimal, e idempotent, s in S: P+Ann(se) missing S => S-r"},
    {"P-sidem", {"s-idempotent-gens", "disjoint"}, F, "A generated by a with a^2=sa, A missing S => A S-r"},
    {"P-suz", {"finite-S"}, F, "every A missing S is S-r <=> H is S-uz"},
    {"P-suzmax", {"finite-S", "S-avoids-max", "M-maximal"}, F | P,
     "S-uz <=> every prime missing S is S-r <=> every maximal is S-r"},
    {"L3.1", {"isomorphism"}, F, "f(Ann(w)) = Ann(f(w))"},
    {"P3.2", {"epimorphism", "domain", "J-in-zd", "isomorphism"}, E,
     "forward: A S-r => A x_f J is (S x_f J)-r; backward under an isomorphism"},
    {"P3.3", {"disjoint", "torsion-free", "ann-union"}, E, "A S-r <=> A x M (S x 0)-r <=> A x M (S x M)-r"},
    {"T4.1", {"property-A", "S-regular", "disjoint"}, P, "property A, S in reg: A S-r <=> A[x] S-r"},
    {"T4.2", {"fac", "disjoint"}, P, "f.a.c.: A S-r <=> A[x] S-r"},
    {"DM", {}, F, "c(z)^(m+1) c(w) = c(z)^m c(wz)"},
    {"DEGEN", {"finite"}, F, "finite => uz-ring, every proper ideal an r-ideal"},
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Json lit(const FiniteRing& r, Elem e) { return r.literal(e); }

Json lits(const FiniteRing& r, const std::vector<Elem>& es) {
  Json j = Json::array();
  for (Elem e : es) j.push_back(r.literal(e));
  return j;
}

Json arith_lit(const arith::ArithElement& x) { return arith::element_text(x); }

struct Eval {
  bool holds = true;
  Json witness;
  Json counterexample;
  std::string note;
};

// Folds the combinations of one focus annotation into a record.
class Group {
 public:
  Group(const TheoremCase& t, const CorpusEntry& e, std::string recipe, Json annotations, const RunOptions& opt)
      : opt_(opt), start_(std::chrono::steady_clock::now()) {
    rec_.theorem = t.id;
    rec_.entry = e.line;
    rec_.recipe = std::move(recipe);
    rec_.annotations = std::move(annotations);
    rec_.dropped = opt.drop;
  }

  bool dropped(std::string_view h) const {
    return std::find(opt_.drop.begin(), opt_.drop.end(), h) != opt_.drop.end();
  }

  template <class Fn>
  void add(Json ann, Hyps hyps, Fn&& statement) {
    bool met = true;
    for (const auto& [name, v] : hyps) met = met && (v || dropped(name));
    if (!met) {
      ++rec_.vacuous;
      if (rank_ < 1) take(1, std::move(ann), std::move(hyps), {});
      return;
    }
    Eval ev = statement();
    if (ev.holds) {
      ++rec_.verified;
      if (rank_ < 2) take(2, std::move(ann), std::move(hyps), std::move(ev));
    } else {
      ++violations_;
      if (rank_ < 3) take(3, std::move(ann), std::move(hyps), std::move(ev));
    }
  }

  void note(std::string n) { extra_note_ = std::move(n); }

  ReportRecord finish() {
    if (violations_ > 0) {
      rec_.outcome = RecordOutcome::Violation;
      rec_.expected = opt_.hunt;
    } else if (rec_.verified > 0) {
      rec_.outcome = RecordOutcome::Verified;
    } else {
      rec_.outcome = RecordOutcome::Vacuous;
    }
    if (!extra_note_.empty()) rec_.note = rec_.note.empty() ? extra_note_ : rec_.note + "; " + extra_note_;
    const auto dt = std::chrono::steady_clock::now() - start_;
    rec_.millis = std::chrono::duration<double, std::milli>(dt).count();
    return std::move(rec_);
  }

 private:
  void take(int rank, Json ann, Hyps hyps, Eval ev) {
    rank_ = rank;
    for (auto& [k, v] : ann.items()) rec_.annotations[k] = v;
    rec_.hypotheses = std::move(hyps);
    rec_.witness = std::move(ev.witness);
    rec_.counterexample = std::move(ev.counterexample);
    rec_.note = std::move(ev.note);
  }

  const RunOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  ReportRecord rec_;
  int rank_ = 0;
  std::size_t violations_ = 0;
  std::string extra_note_;
};

// Ideal lattice, m.c.s. sweep and S-r verdict caches for one finite ring.
struct FiniteCtx {
  RingPtr r;
  std::vector<Ideal> ideals;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> at;
  std::vector<std::size_t> focus;
  std::vector<MulClosedSet> mcs;
  std::optional<std::uint64_t> subsample_seed;
  std::size_t mcs_total = 0;
  std::vector<std::vector<std::optional<Verdict>>> gated, body;
  std::vector<std::optional<LocalizationResult>> loc;

  FiniteCtx(RingPtr ring, const CorpusEntry* e, const RunOptions& opt) : r(std::move(ring)) {
    ideals = all_ideals(r);
    for (std::size_t i = 0; i < ideals.size(); ++i) at.emplace(ideals[i].members(), i);
    if (e && e->ideal) {
      focus.push_back(idx(dsl::parse_ideal(r, *e->ideal)));
    } else {
      focus.resize(ideals.size());
      std::iota(focus.begin(), focus.end(), 0);
    }
    if (e && e->mcs) {
      mcs.push_back(dsl::parse_mcs(r, *e->mcs));
      mcs_total = 1;
    } else {
      mcs = mcs_candidates(r);
      mcs_total = mcs.size();
      subsample(opt);
    }
    gated.assign(ideals.size(), std::vector<std::optional<Verdict>>(mcs.size()));
    body = gated;
    loc.resize(mcs.size());
  }

  // Keeps {1} and the units, then a seeded sample of the rest in sweep order.
  void subsample(const RunOptions& opt) {
    const std::size_t cap = std::max<std::size_t>(opt.combo_cap / std::max<std::size_t>(focus.size(), 1), 2);
    if (mcs.size() <= cap) return;
    const std::uint64_t seed = opt.seed ^ fnv1a(r->recipe());
    std::vector<std::size_t> rest(mcs.size() - 2);
    std::iota(rest.begin(), rest.end(), 2);
    std::mt19937_64 rng(seed);
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng() % i]);
    rest.resize(cap - 2);
    std::sort(rest.begin(), rest.end());
    std::vector<MulClosedSet> kept{mcs[0], mcs[1]};
    for (std::size_t i : rest) kept.push_back(mcs[i]);
    mcs = std::move(kept);
    subsample_seed = seed;
  }

  std::size_t idx(const Ideal& a) const { return at.at(a.members()); }

  const Verdict& sr(std::size_t a, std::size_t s, bool gate) {
    auto& slot = (gate ? gated : body)[a][s];
    if (!slot) {
      ClassifyOptions o;
      o.enforce_disjoint = gate;
      slot = is_S_r_ideal(ideals[a], mcs[s], o);
    }
    return *slot;
  }
  bool disjoint(std::size_t a, std::size_t s) const { return !ideals[a].members().intersects(mcs[s].members()); }

  const LocalizationResult& localization(std::size_t s) {
    if (!loc[s]) loc[s] = localize(r, mcs[s]);
    return *loc[s];
  }

  Json mcs_ann(std::size_t s) const { return mcs[s].text(); }
  Json ideal_ann(std::size_t a) const { return ideals[a].text(); }

  Json base_annotations(std::size_t a) const {
    Json j = Json::object();
    j["ideal"] = ideals[a].text();
    if (subsample_seed) j["subsample_seed"] = *subsample_seed;
    return j;
  }
  Json ring_annotations() const {
    Json j = Json::object();
    if (subsample_seed) j["subsample_seed"] = *subsample_seed;
    return j;
  }
};

Eval sr_eval(const Verdict& v, const FiniteRing& r) {
  Eval ev;
  ev.holds = v.is_holds();
  if (v.witness) ev.witness = {{"s", lit(r, *v.witness)}};
  if (v.is_fails()) {
    ev.counterexample = {{"pair", lits(r, v.counterexample)}};
    if (v.defeated) ev.counterexample["defeated_s"] = lit(r, *v.defeated);
  }
  if (v.is_na()) ev.note = v.reason;
  return ev;
}

bool set_subset_zd(const FiniteRing& r, const Ideal& a) { return a.members().subset_of(r.zero_divisors()); }

ElementSet scaled(const FiniteRing& r, Elem s, const ElementSet& x) {
  ElementSet out(r.size());
  x.for_each([&](Elem e) { out.insert(r.mul(s, e)); });
  return out;
}

// Hom-independent f(Ann(w)) == Ann(f(w)).
bool ann_image_matches(const RingHom& h, Elem w) {
  ElementSet img(h.codomain->size());
  h.domain->annihilator_of(w).for_each([&](Elem a) { img.insert(h(a)); });
  return img == h.codomain->annihilator_of(h(w));
}

std::optional<std::pair<std::string, std::string>> two_factor_split(const std::string& expr) {
  if (expr.find('(') != std::string::npos || expr.find('/') != std::string::npos) return std::nullopt;
  const auto pos = expr.find(" x ");
  if (pos == std::string::npos || expr.find(" x ", pos + 1) != std::string::npos) return std::nullopt;
  return std::make_pair(expr.substr(0, pos), expr.substr(pos + 3));
}

std::vector<std::pair<std::string, RingHom>> sample_homs(const CorpusEntry& e, const RingPtr& r) {
  std::vector<std::pair<std::string, RingHom>> out;
  out.emplace_back("id", identity_hom(r));
  if (auto parts = two_factor_split(e.expr)) {
    const RingPtr target = parts->first == parts->second ? r : dsl::parse_ring(parts->second + " x " + parts->first);
    RingHom h{r, target, std::vector<Elem>(r->size())};
    for (Elem x = 0; x < r->size(); ++x) {
      ElemLiteral l = dsl::parse_element(r->literal(x));
      std::swap(l.parts[0], l.parts[1]);
      h.image[x] = dsl::resolve_element(*target, l);
    }
    out.emplace_back("swap", check_hom(h));
  }
  if (r->size() > 1 && r->characteristic() == r->size()) {
    const RingPtr zn = make_zn(r->size());
    RingHom h{zn, r, std::vector<Elem>(r->size())};
    for (Elem k = 1; k < r->size(); ++k) h.image[k] = r->add(h.image[k - 1], r->one());
    out.emplace_back("cyclic", check_hom(h));
  }
  for (const auto& m : maximal_ideals(r)) out.emplace_back("quotient" + m.text(), make_quotient(m).second);
  return out;
}

// The poly-layer entry: base ring, sweeps and cached A[x] searches.
struct PolyCtx {
  RingPtr base;
  std::optional<PolyIdealSpec> spec;
  std::unique_ptr<FiniteCtx> fin;
  int degree = 0;
  std::map<std::pair<std::size_t, std::size_t>, PolyVerdict> searches;

  const PolyVerdict& content_search(std::size_t a, std::size_t s) {
    auto key = std::make_pair(a, s);
    auto it = searches.find(key);
    if (it == searches.end())
      it = searches.emplace(key, bounded_S_r_search(PolyIdealSpec::content(fin->ideals[a]), fin->mcs[s], degree)).first;
    return it->second;
  }
};

Json poly_pair(const PolyVerdict& v) {
  if (!v.counterexample) return nullptr;
  return {{"w", v.counterexample->first.text()}, {"z", v.counterexample->second.text()}, {"degree", v.degree}};
}

class EntryRunner {
 public:
  EntryRunner(const CorpusEntry& e, const CorpusSpec& corpus, const RunOptions& opt)
      : e_(e), corpus_(corpus), opt_(opt) {}

  std::vector<ReportRecord> run(const TheoremCase& t) {
    out_.clear();
    const auto kind = e_.ring.kind;
    const bool finite = kind == dsl::RingKind::Finite;
    const bool extension = kind == dsl::RingKind::IntAmalg || e_.ring.triv || e_.ring.amalg;
    const std::string& id = t.id;

    if (finite && t.in_scope(Scope::Finite)) run_finite(id);
    if (kind == dsl::RingKind::Arith && t.in_scope(Scope::Arith)) run_arith(id);
    if (kind == dsl::RingKind::Poly && t.in_scope(Scope::Poly)) run_poly(id);
    if (extension && t.in_scope(Scope::Extension)) run_extension(id);
    for (auto& rec : out_) {
      if (!opt_.timings) rec.millis.reset();
    }
    return std::move(out_);
  }

 private:
  const TheoremCase& theorem(const std::string& id) const { return find_theorem(id); }

  Group group(const std::string& id, std::string recipe, Json ann) {
    return Group(theorem(id), e_, std::move(recipe), std::move(ann), opt_);
  }

  FiniteCtx& fin() {
    if (!fin_) fin_ = std::make_unique<FiniteCtx>(e_.ring.finite, &e_, opt_);
    return *fin_;
  }

  bool drop(std::string_view h) const { return std::find(opt_.drop.begin(), opt_.drop.end(), h) != opt_.drop.end(); }

  // ---- finite rings ----

  void run_finite(const std::string& id) {
    static const std::map<std::string, void (EntryRunner::*)()> table = {
        {"T2.3", &EntryRunner::t2_3},       {"T2.5", &EntryRunner::t2_5},     {"P2.6", &EntryRunner::p2_6},
        {"T2.7", &EntryRunner::t2_7},       {"P2.8", &EntryRunner::p2_8},     {"P2.10", &EntryRunner::p2_10},
        {"T2.11", &EntryRunner::t2_11},     {"T2.12", &EntryRunner::t2_12},   {"C-zd", &EntryRunner::c_zd},
        {"P-jac", &EntryRunner::p_jac},     {"P-zero", &EntryRunner::p_zero}, {"P-colon", &EntryRunner::p_colon},
        {"P-annsum", &EntryRunner::p_annsum}, {"P-minidem", &EntryRunner::p_minidem},
        {"P-sidem", &EntryRunner::p_sidem}, {"P-suz", &EntryRunner::p_suz},   {"P-suzmax", &EntryRunner::p_suzmax},
        {"L3.1", &EntryRunner::l3_1},       {"DM", &EntryRunner::dm},         {"DEGEN", &EntryRunner::degen},
    };
    auto it = table.find(id);
    if (it != table.end()) (this->*(it->second))();
  }

  template <class Body>
  void per_ideal(const std::string& id, Body&& body) {
    auto& c = fin();
    for (std::size_t a : c.focus) {
      Group g = group(id, c.r->recipe(), c.base_annotations(a));
      body(g, a);
      out_.push_back(g.finish());
    }
  }

  void t2_3() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    std::map<std::pair<std::size_t, std::size_t>, bool> multiplier;
    auto has_multiplier = [&](std::size_t s1, std::size_t s2) {
      auto [it, fresh] = multiplier.try_emplace({s1, s2}, true);
      if (fresh) {
        c.mcs[s2].members().for_each([&](Elem s) {
          bool ok = false;
          for (Elem x = 0; x < r.size() && !ok; ++x) ok = c.mcs[s1].contains(r.mul(x, s));
          it->second = it->second && ok;
        });
      }
      return it->second;
    };
    for (const char* dir : {"forward", "converse"}) {
      const bool fwd = std::string_view(dir) == "forward";
      for (std::size_t a : c.focus) {
        Json ann = c.base_annotations(a);
        ann["direction"] = dir;
        Group g = group("T2.3", r.recipe(), ann);
        for (std::size_t s1 = 0; s1 < c.mcs.size(); ++s1) {
          for (std::size_t s2 = 0; s2 < c.mcs.size(); ++s2) {
            const bool subset = c.mcs[s1].members().subset_of(c.mcs[s2].members());
            if (!subset && !drop("subset")) continue;
            Json inner = {{"S1", c.mcs_ann(s1)}, {"S2", c.mcs_ann(s2)}};
            if (fwd) {
              g.add(inner,
                    {{"S1-r", c.sr(a, s1, true).is_holds()}, {"disjoint", c.disjoint(a, s2)}, {"subset", subset}},
                    [&] { return sr_eval(c.sr(a, s2, !drop("disjoint")), r); });
            } else {
              g.add(inner,
                    {{"S2-r", c.sr(a, s2, true).is_holds()}, {"subset", subset},
                     {"multiplier", has_multiplier(s1, s2)}},
                    [&] { return sr_eval(c.sr(a, s1, !drop("subset")), r); });
            }
          }
        }
        out_.push_back(g.finish());
      }
    }
  }

  void t2_5() {
    auto& c = fin();
    per_ideal("T2.5", [&](Group& g, std::size_t a) {
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const bool regular = c.mcs[s].members().subset_of(c.r->regulars());
        bool push_r = false;
        if (regular || drop("S-regular")) {
          const auto& loc = c.localization(s);
          push_r = is_r_ideal(ideal_pushforward(loc, c.ideals[a])).is_holds();
        }
        g.add({{"mcs", c.mcs_ann(s)}}, {{"S-regular", regular}, {"pushforward-r", push_r}},
              [&] { return sr_eval(c.sr(a, s, true), *c.r); });
      }
    });
  }

  void p2_6() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    per_ideal("P2.6", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const Verdict& v = c.sr(a, s, false);
        g.add({{"mcs", c.mcs_ann(s)}}, {{"zd", set_subset_zd(r, A)}, {"not-S-r", v.is_fails()}}, [&] {
          Eval ev;
          if (!v.is_fails() || !v.defeated) {
            ev.holds = false;
            ev.note = "no defeating pair available";
            return ev;
          }
          const Elem z = v.counterexample[1];
          const Elem sz = r.mul(*v.defeated, z);
          ElementSet one(r.size());
          one.insert(sz);
          const Ideal B = colon(A, one);
          const Ideal K = colon(A, B);
          const bool meets_reg = B.members().intersects(r.regulars());
          const bool strict = A.members().subset_of(B.members()) && !(A == B);
          const bool in_k = A.members().subset_of(K.members()) && !(A == K);
          const bool product = ideal_product(B, K).members().subset_of(A.members());
          ev.holds = meets_reg && strict && in_k && product;
          ev.witness = {{"s", lit(r, *v.defeated)}, {"B", B.text()}, {"K", K.text()}};
          return ev;
        });
      }
    });
  }

  void t2_7() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    const auto reg = r.regulars().elements();
    per_ideal("T2.7", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const bool is_reg = c.mcs[s].members() == r.regulars();
        if (!is_reg && !drop("S=reg")) continue;
        g.add({{"mcs", c.mcs_ann(s)}}, {{"S=reg", is_reg}, {"disjoint", c.disjoint(a, s)}, {"proper", A.is_proper()}},
              [&] {
                const auto members = c.mcs[s].members().elements();
                auto first = [&](auto&& pred) -> std::optional<Elem> {
                  for (Elem x : members)
                    if (pred(x)) return x;
                  return std::nullopt;
                };
                const Verdict& va = c.sr(a, s, !drop("disjoint"));
                std::optional<Elem> sa;
                if (va.is_holds()) sa = va.witness.value_or(r.one());
                const auto sb = first([&](Elem x) {
                  for (Elem rr : reg) {
                    ElementSet rh(r.size()), ra(r.size());
                    for (Elem h = 0; h < r.size(); ++h) rh.insert(r.mul(rr, h));
                    A.members().for_each([&](Elem y) { ra.insert(r.mul(rr, y)); });
                    bool ok = true;
                    (rh & A.members()).for_each([&](Elem y) { ok = ok && ra.contains(r.mul(x, y)); });
                    if (!ok) return false;
                  }
                  return true;
                });
                const auto sc = first([&](Elem x) {
                  for (Elem rr : reg) {
                    ElementSet one(r.size());
                    one.insert(rr);
                    if (!scaled(r, x, colon(A, one).members()).subset_of(A.members())) return false;
                  }
                  return true;
                });
                const auto& loc = c.localization(s);
                const Ideal pulled = ideal_preimage(loc.map, ideal_pushforward(loc, A));
                const auto sd = first([&](Elem x) { return scaled(r, x, pulled.members()).subset_of(A.members()); });
                Eval ev;
                const bool ba = sa.has_value(), bb = sb.has_value(), bc = sc.has_value(), bd = sd.has_value();
                ev.holds = ba == bb && bb == bc && bc == bd;
                auto opt_lit = [&](const std::optional<Elem>& x) -> Json { return x ? lit(r, *x) : Json(nullptr); };
                ev.witness = {{"a", opt_lit(sa)}, {"b", opt_lit(sb)}, {"c", opt_lit(sc)}, {"d", opt_lit(sd)}};
                if (!ev.holds) ev.counterexample = {{"a", ba}, {"b", bb}, {"c", bc}, {"d", bd}};
                return ev;
              });
      }
    });
  }

  void p2_8() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    per_ideal("P2.8", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const bool regular = c.mcs[s].members().subset_of(r.regulars());
        g.add({{"mcs", c.mcs_ann(s)}}, {{"S-r", c.sr(a, s, true).is_holds()}, {"S-regular", regular}}, [&] {
          Eval ev;
          ev.holds = false;
          for (Elem x : c.mcs[s].members().elements()) {
            auto col = [&](Elem y) {
              ElementSet one(r.size());
              one.insert(y);
              return colon(A, one).members();
            };
            const ElementSet base = col(x);
            bool ok = true;
            Elem p = r.mul(x, x);
            for (std::size_t n = 2; n <= r.size() + 1 && ok; ++n, p = r.mul(p, x)) ok = col(p) == base;
            if (ok) {
              ev.holds = true;
              ev.witness = {{"s", lit(r, x)}};
              break;
            }
          }
          return ev;
        });
      }
    });
  }

  void p2_10() {
    auto& c = fin();
    per_ideal("P2.10", [&](Group& g, std::size_t a) {
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        ClassifyOptions o;
        o.enforce_reduced = !drop("reduced");
        o.enforce_disjoint = !drop("disjoint");
        const bool z0 = is_S_z0_ideal(c.ideals[a], c.mcs[s], o).is_holds();
        g.add({{"mcs", c.mcs_ann(s)}},
              {{"reduced", c.r->is_reduced()}, {"disjoint", c.disjoint(a, s)}, {"S-z0", z0}},
              [&] { return sr_eval(c.sr(a, s, !drop("disjoint")), *c.r); });
      }
    });
  }

  void t2_11() {
    auto& c = fin();
    per_ideal("T2.11", [&](Group& g, std::size_t a) {
      if (!c.ideals[a].is_proper()) {
        g.note("unit ideal has no minimal primes");
        return;
      }
      const auto mins = min_primes_over(c.ideals[a]);
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        for (const auto& l : mins) {
          const std::size_t li = c.idx(l);
          g.add({{"mcs", c.mcs_ann(s)}, {"L", l.text()}},
                {{"S-r", c.sr(a, s, true).is_holds()}, {"disjoint", c.disjoint(li, s)}},
                [&] { return sr_eval(c.sr(li, s, !drop("disjoint")), *c.r); });
        }
      }
    });
  }

  void t2_12() {
    auto& c = fin();
    per_ideal("T2.12", [&](Group& g, std::size_t a) {
      const bool prime = c.ideals[a].is_proper() && is_prime(c.ideals[a]);
      const bool zd = set_subset_zd(*c.r, c.ideals[a]);
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        // Definitional S-r: an ideal meeting S is not S-r, so a dropped
        // disjointness gate turns those combinations into live failures.
        g.add({{"mcs", c.mcs_ann(s)}}, {{"prime", prime}, {"disjoint", c.disjoint(a, s)}}, [&] {
          Eval ev = sr_eval(c.sr(a, s, true), *c.r);
          const bool sr = ev.holds;
          ev.holds = sr == zd;
          if (!ev.holds) ev.counterexample["S-r"] = sr, ev.counterexample["in-zd"] = zd;
          return ev;
        });
      }
    });
  }

  void c_zd() {
    auto& c = fin();
    per_ideal("C-zd", [&](Group& g, std::size_t a) {
      const bool zd = set_subset_zd(*c.r, c.ideals[a]);
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const Verdict& v = c.sr(a, s, true);
        g.add({{"mcs", c.mcs_ann(s)}}, {{"S-r", v.is_holds()}}, [&] {
          Eval ev;
          ev.holds = zd;
          if (v.witness) ev.witness = {{"s", lit(*c.r, *v.witness)}};
          return ev;
        });
      }
    });
  }

  void p_jac() {
    auto& c = fin();
    const Ideal jac = jacobson_radical(c.r);
    std::vector<MulClosedSet> complements;
    for (const auto& m : maximal_ideals(c.r)) complements.push_back(mcs_complement(m));
    per_ideal("P-jac", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      g.add(Json::object(), {{"proper", A.is_proper()}, {"in-jacobson", A.members().subset_of(jac.members())}}, [&] {
        Eval ev;
        const bool r_ideal = is_r_ideal(A).is_holds();
        bool every = true;
        Json fails = Json::array();
        for (const auto& s : complements) {
          if (!is_S_r_ideal(A, s).is_holds()) {
            every = false;
            fails.push_back(s.text());
          }
        }
        ev.holds = r_ideal == every;
        ev.witness = {{"r-ideal", r_ideal}, {"maximal-complements", complements.size()}};
        if (!ev.holds) ev.counterexample = {{"failing", fails}};
        return ev;
      });
    });
  }

  void p_zero() {
    auto& c = fin();
    Group g = group("P-zero", c.r->recipe(), c.ring_annotations());
    g.note("ideal (0)");
    for (std::size_t s = 0; s < c.mcs.size(); ++s)
      g.add({{"mcs", c.mcs_ann(s)}}, {{"disjoint", c.disjoint(0, s)}},
            [&] { return sr_eval(c.sr(0, s, !drop("disjoint")), *c.r); });
    out_.push_back(g.finish());
  }

  void p_colon() {
    auto& c = fin();
    per_ideal("P-colon", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      std::vector<std::size_t> colons(c.ideals.size());
      for (std::size_t k = 0; k < c.ideals.size(); ++k) colons[k] = c.idx(colon(A, c.ideals[k]));
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const bool a_sr = c.sr(a, s, true).is_holds();
        for (std::size_t k = 0; k < c.ideals.size(); ++k) {
          const bool k_out = !c.ideals[k].members().subset_of(A.members());
          g.add({{"mcs", c.mcs_ann(s)}, {"K", c.ideal_ann(k)}, {"colon", c.ideal_ann(colons[k])}},
                {{"S-r", a_sr}, {"K-not-in-A", k_out}, {"disjoint", c.disjoint(colons[k], s)}},
                [&] { return sr_eval(c.sr(colons[k], s, !drop("disjoint")), *c.r); });
        }
      }
    });
  }

  void p_annsum() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    std::vector<ElementSet> principal(r.size());
    for (Elem t = 0; t < r.size(); ++t) {
      const Elem gens[] = {t};
      principal[t] = ideal_generate(c.r, gens).members();
    }
    auto ann_of = [&](const ElementSet& x) { return annihilator(c.r, x); };

    {
      Json ann = c.ring_annotations();
      ann["form"] = "ideals";
      Group g = group("P-annsum", r.recipe(), ann);
      for (std::size_t k1 = 0; k1 < c.ideals.size(); ++k1) {
        for (std::size_t k2 = k1; k2 < c.ideals.size(); ++k2) {
          const ElementSet sum = ideal_sum(c.ideals[k1], c.ideals[k2]).members();
          const std::size_t k = c.idx(ideal_sum(ann_of(c.ideals[k1].members()), ann_of(c.ideals[k2].members())));
          for (std::size_t s = 0; s < c.mcs.size(); ++s) {
            std::optional<Elem> t;
            c.mcs[s].members().for_each([&](Elem x) {
              if (!t && principal[x] == sum) t = x;
            });
            if (!t && !drop("principal-sum")) continue;
            g.add({{"mcs", c.mcs_ann(s)}, {"K1", c.ideal_ann(k1)}, {"K2", c.ideal_ann(k2)}, {"K", c.ideal_ann(k)}},
                  {{"principal-sum", t.has_value()}, {"disjoint", c.disjoint(k, s)}}, [&] {
                    Eval ev = sr_eval(c.sr(k, s, !drop("disjoint")), r);
                    if (t) ev.witness["t"] = lit(r, *t);
                    return ev;
                  });
          }
        }
      }
      out_.push_back(g.finish());
    }
    {
      Json ann = c.ring_annotations();
      ann["form"] = "elements";
      Group g = group("P-annsum", r.recipe(), ann);
      std::map<std::pair<Elem, Elem>, std::size_t> sums;
      auto ann_sum = [&](Elem w, Elem z) {
        auto [it, fresh] = sums.try_emplace({w, z}, 0);
        if (fresh) it->second = c.idx(ideal_sum(annihilator(c.r, ElementSet::of(r.size(), std::span<const Elem>(&w, 1))),
                                                annihilator(c.r, ElementSet::of(r.size(), std::span<const Elem>(&z, 1)))));
        return it->second;
      };
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        for (Elem w = 0; w < r.size(); ++w) {
          for (Elem z = w; z < r.size(); ++z) {
            const bool in_s = c.mcs[s].contains(r.add(w, z));
            if (!in_s && !drop("principal-sum")) continue;
            const std::size_t k = ann_sum(w, z);
            g.add({{"mcs", c.mcs_ann(s)}, {"w", lit(r, w)}, {"z", lit(r, z)}, {"K", c.ideal_ann(k)}},
                  {{"principal-sum", in_s}, {"disjoint", c.disjoint(k, s)}},
                  [&] { return sr_eval(c.sr(k, s, !drop("disjoint")), r); });
          }
        }
      }
      out_.push_back(g.finish());
    }
  }

  void p_minidem() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    Group g = group("P-minidem", r.recipe(), c.ring_annotations());
    const Ideal zero = zero_ideal(c.r);
    if (!zero.is_proper()) {
      g.note("zero ring has no minimal primes");
      out_.push_back(g.finish());
      return;
    }
    const auto mins = min_primes_over(zero);
    const auto idem = r.idempotents().elements();
    std::map<std::pair<std::size_t, Elem>, std::size_t> built;
    for (const auto& p : mins) {
      const std::size_t pi = c.idx(p);
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        for (Elem e : idem) {
          for (Elem x : c.mcs[s].members().elements()) {
            const Elem se = r.mul(x, e);
            auto [it, fresh] = built.try_emplace({pi, se}, 0);
            if (fresh) it->second = c.idx(ideal_sum(p, annihilator(c.r, ElementSet::of(r.size(), std::span<const Elem>(&se, 1)))));
            const std::size_t a = it->second;
            g.add({{"mcs", c.mcs_ann(s)}, {"P", p.text()}, {"e", lit(r, e)}, {"s", lit(r, x)}, {"A", c.ideal_ann(a)}},
                  {{"reduced", r.is_reduced()}, {"disjoint", c.disjoint(a, s)}},
                  [&] { return sr_eval(c.sr(a, s, !drop("disjoint")), r); });
          }
        }
      }
    }
    out_.push_back(g.finish());
  }

  void p_sidem() {
    auto& c = fin();
    std::vector<ElementSet> sidem;
    for (const auto& s : c.mcs) sidem.push_back(ElementSet::of(c.r->size(), s_idempotents(c.r, s)));
    per_ideal("P-sidem", [&](Group& g, std::size_t a) {
      const Ideal& A = c.ideals[a];
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const auto gens = (A.members() & sidem[s]).elements();
        const bool generated = ideal_generate(c.r, gens) == A;
        g.add({{"mcs", c.mcs_ann(s)}, {"s", lit(*c.r, c.mcs[s].product())}},
              {{"s-idempotent-gens", generated}, {"disjoint", c.disjoint(a, s)}}, [&] {
                Eval ev = sr_eval(c.sr(a, s, !drop("disjoint")), *c.r);
                ev.witness["generators"] = lits(*c.r, gens);
                return ev;
              });
      }
    });
  }

  void p_suz() {
    auto& c = fin();
    Group g = group("P-suz", c.r->recipe(), c.ring_annotations());
    for (std::size_t s = 0; s < c.mcs.size(); ++s) {
      g.add({{"mcs", c.mcs_ann(s)}}, {{"finite-S", true}}, [&] {
        Eval ev;
        std::optional<std::size_t> bad;
        for (std::size_t a = 0; a < c.ideals.size() && !bad; ++a)
          if (c.disjoint(a, s) && !c.sr(a, s, true).is_holds()) bad = a;
        const Verdict uz = is_S_uz_ring(c.r, c.mcs[s]);
        ev.holds = !bad.has_value() == uz.is_holds();
        ev.witness = {{"S-uz", uz.is_holds()}};
        if (bad) ev.counterexample["ideal"] = c.ideal_ann(*bad);
        if (uz.is_fails()) ev.counterexample["element"] = lits(*c.r, uz.counterexample);
        return ev;
      });
    }
    out_.push_back(g.finish());
  }

  void p_suzmax() {
    auto& c = fin();
    const auto maxes = maximal_ideals(c.r);
    const auto primes = prime_ideals(c.r);
    Group g = group("P-suzmax", c.r->recipe(), c.ring_annotations());
    for (std::size_t s = 0; s < c.mcs.size(); ++s) {
      bool avoids = true;
      for (const auto& m : maxes) avoids = avoids && !m.members().intersects(c.mcs[s].members());
      g.add({{"mcs", c.mcs_ann(s)}}, {{"finite-S", true}, {"S-avoids-max", avoids}, {"M-maximal", true}}, [&] {
        Eval ev;
        const bool sa = is_S_uz_ring(c.r, c.mcs[s]).is_holds();
        bool sb = true, sc = true;
        for (const auto& p : primes)
          if (!p.members().intersects(c.mcs[s].members())) sb = sb && c.sr(c.idx(p), s, true).is_holds();
        for (const auto& m : maxes) sc = sc && c.sr(c.idx(m), s, true).is_holds();
        ev.holds = sa == sb && sb == sc;
        ev.witness = {{"a", sa}, {"b", sb}, {"c", sc}};
        return ev;
      });
    }
    out_.push_back(g.finish());
  }

  void l3_1() {
    auto& c = fin();
    const FiniteRing& r = *c.r;
    Group g = group("L3.1", r.recipe(), Json::object());
    for (const auto& [name, h] : sample_homs(e_, c.r)) {
      const bool iso = is_isomorphism(h);
      for (Elem w = 0; w < h.domain->size(); ++w) {
        g.add({{"hom", name}, {"w", lit(*h.domain, w)}}, {{"isomorphism", iso}}, [&] {
          Eval ev;
          ev.holds = ann_image_matches(h, w) && (!iso || ann_pushforward_check(h, w));
          ev.witness = {{"f(w)", lit(*h.codomain, h(w))}};
          return ev;
        });
      }
    }
    out_.push_back(g.finish());
  }

  void dm() {
    const RingPtr& r = e_.ring.finite;
    Group g = group("DM", r->recipe(), {{"pairs", opt_.dm_pairs}, {"max_degree", 4}});
    std::mt19937_64 rng(opt_.seed ^ fnv1a(r->recipe()));
    auto random_poly = [&] {
      const std::size_t deg = rng() % 5;
      std::vector<Elem> cs(deg + 1);
      for (auto& x : cs) x = static_cast<Elem>(rng() % r->size());
      return Poly(r, std::move(cs));
    };
    for (std::size_t i = 0; i < opt_.dm_pairs; ++i) {
      const Poly w = random_poly();
      const Poly z = random_poly();
      g.add({{"w", w.text()}, {"z", z.text()}}, {}, [&] {
        Eval ev;
        ev.holds = dedekind_mertens_check(w, z);
        return ev;
      });
    }
    out_.push_back(g.finish());
  }

  void degen() {
    auto& c = fin();
    Group g = group("DEGEN", c.r->recipe(), Json::object());
    g.add(Json::object(), {{"finite", true}}, [&] {
      Eval ev;
      const Verdict uz = is_uz_ring(c.r);
      const Verdict suz = is_S_uz_ring(c.r, mcs_generate(c.r, {}));
      std::size_t proper = 0;
      Json non_r = Json::array();
      for (const auto& a : c.ideals) {
        if (!a.is_proper()) continue;
        ++proper;
        if (!is_r_ideal(a).is_holds()) non_r.push_back(a.text());
      }
      ev.holds = uz.is_holds() && suz.is_holds() && non_r.empty();
      ev.witness = {{"uz", uz.is_holds()}, {"S-uz at {1}", suz.is_holds()}, {"proper_ideals", proper}};
      if (!ev.holds) ev.counterexample = {{"non_r_ideals", non_r}, {"element", lits(*c.r, uz.counterexample)}};
      return ev;
    });
    out_.push_back(g.finish());
  }

  // ---- arithmetic rings ----

  void run_arith(const std::string& id) {
    const auto& ar = e_.ring.arith;
    const auto a = dsl::parse_arith_ideal(ar, *e_.ideal);
    arith::ArithMCS s;
    if (e_.mcs) {
      s = dsl::parse_arith_mcs(ar, *e_.mcs);
    } else {
      s = arith::make_arith_mcs(ar, std::vector<arith::McsDescriptor>(ar.arity()));
    }
    const int bound = kDefaultWitnessBound;
    Json ann = {{"ideal", a.text()}, {"mcs", s.text()}};
    Group g = group(id, ar.text(), ann);

    auto sr = [&](const arith::ArithIdeal& x) -> arith::ArithVerdict {
      try {
        return arith::arith_is_S_r_ideal(x, s, bound);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotProper) throw;
        return arith::ArithVerdict::not_applicable(reason::kNotProper);
      }
    };
    auto sr_json = [&](const arith::ArithVerdict& v) {
      Eval ev;
      ev.holds = v.is_holds();
      if (v.witness) ev.witness = {{"s", arith_lit(*v.witness)}};
      if (v.is_fails()) {
        Json pair = Json::array();
        for (const auto& x : v.counterexample) pair.push_back(arith_lit(x));
        ev.counterexample = {{"pair", pair}};
        if (v.defeated) ev.counterexample["defeated_s"] = arith_lit(*v.defeated);
      }
      if (v.is_na()) ev.note = v.reason;
      return ev;
    };

    if (id == "P2.6") {
      const auto v = sr(a);
      g.add(Json::object(), {{"zd", arith::arith_subset_zd(a)}, {"not-S-r", v.is_fails()}}, [&] {
        Eval ev;
        if (!v.is_fails() || !v.defeated) {
          ev.holds = false;
          ev.note = "no defeating pair available";
          return ev;
        }
        const auto& z = v.counterexample.at(1);
        const auto sz = arith::multiply(ar, *v.defeated, z);
        const auto b = arith::arith_colon(a, sz);
        const auto k = arith::arith_colon(a, b);
        const bool strict = arith::arith_subset(a, b) && !(a == b);
        ev.holds = arith::arith_meets_regular(b) && strict && arith::arith_subset(a, k) && !(a == k) &&
                   arith::arith_subset(arith::arith_product(b, k), a);
        ev.witness = {{"s", arith_lit(*v.defeated)}, {"B", b.text()}, {"K", k.text()}};
        return ev;
      });
    } else if (id == "T2.12") {
      const bool prime = a.is_proper() && arith::arith_is_prime(a);
      g.add(Json::object(), {{"prime", prime}, {"disjoint", arith::arith_disjoint(a, s)}}, [&] {
        Eval ev = sr_json(sr(a));
        const bool zd = arith::arith_subset_zd(a);
        const bool srv = ev.holds;
        ev.holds = srv == zd;
        if (!ev.holds) ev.counterexample["S-r"] = srv, ev.counterexample["in-zd"] = zd;
        return ev;
      });
    } else if (id == "C-zd") {
      const auto v = sr(a);
      g.add(Json::object(), {{"S-r", v.is_holds()}}, [&] {
        Eval ev = sr_json(v);
        ev.holds = arith::arith_subset_zd(a);
        return ev;
      });
    } else if (id == "P-zero") {
      std::vector<long long> zeros;
      for (const auto& f : ar.factors) zeros.push_back(f.is_int() ? 0 : f.modulus);
      const auto zero = arith::make_arith_ideal(ar, zeros);
      g.note("ideal " + zero.text());
      g.add({{"ideal", zero.text()}}, {{"disjoint", arith::arith_disjoint(zero, s)}}, [&] {
        Eval ev = sr_json(sr(zero));
        ev.holds = ev.holds && arith::arith_oracle_check(zero, &s, bound);
        return ev;
      });
    } else {
      return;
    }
    out_.push_back(g.finish());
  }

  // ---- polynomial rings ----

  PolyCtx& poly() {
    if (!poly_) {
      poly_ = std::make_unique<PolyCtx>();
      poly_->base = e_.ring.finite;
      if (e_.ideal) poly_->spec = dsl::parse_poly_spec(poly_->base, *e_.ideal);
      CorpusEntry view = e_;
      if (poly_->spec) {
        if (poly_->spec->kind == PolyIdealSpec::Kind::Content)
          view.ideal = poly_->spec->ideal.text();
        else
          view.ideal.reset();
      }
      poly_->fin = std::make_unique<FiniteCtx>(poly_->base, &view, opt_);
      poly_->degree = std::min(corpus_.degree_bound, poly_search_degree(poly_->base->size()));
    }
    return *poly_;
  }

  void run_poly(const std::string& id) {
    auto& p = poly();
    if (id == "P-suzmax") {
      if (!p.spec || p.spec->kind != PolyIdealSpec::Kind::EvalKernel) return;
      poly_suzmax();
      return;
    }
    if (id != "T4.1" && id != "T4.2") return;
    if (p.spec && p.spec->kind != PolyIdealSpec::Kind::Content) return;
    auto& c = *p.fin;
    const bool prop_a = has_property_A(p.base).is_holds();
    const bool fac = has_fac(p.base, corpus_.fac_cap).is_holds();
    for (std::size_t a : c.focus) {
      Json ann = c.base_annotations(a);
      ann["ideal"] = "content(" + c.ideals[a].text() + ")";
      ann["degree_bound"] = p.degree;
      Group g = group(id, p.base->recipe() + "[x]", ann);
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        Hyps hyps;
        if (id == "T4.1")
          hyps = {{"property-A", prop_a},
                  {"S-regular", c.mcs[s].members().subset_of(p.base->regulars())},
                  {"disjoint", c.disjoint(a, s)}};
        else
          hyps = {{"fac", fac}, {"disjoint", c.disjoint(a, s)}};
        g.add({{"mcs", c.mcs_ann(s)}}, hyps, [&] {
          Eval ev = sr_eval(c.sr(a, s, !drop("disjoint")), *p.base);
          const bool base_sr = ev.holds;
          const PolyVerdict& pv = p.content_search(a, s);
          const bool lifted = pv.outcome != PolyOutcome::No;
          ev.holds = base_sr == lifted;
          ev.note = pv.text();
          if (pv.counterexample) ev.counterexample["poly_pair"] = poly_pair(pv);
          return ev;
        });
      }
      out_.push_back(g.finish());
    }
  }

  void poly_suzmax() {
    auto& p = poly();
    auto& c = *p.fin;
    const PolyIdealSpec& spec = *p.spec;
    Json ann = {{"ideal", spec.text()}, {"degree_bound", p.degree}};
    Group g = group("P-suzmax", p.base->recipe() + "[x]", ann);
    const bool m_maximal = spec.ideal.is_proper() && is_maximal(spec.ideal);
    for (std::size_t s = 0; s < c.mcs.size(); ++s) {
      const bool avoids = c.mcs[s].members().subset_of(p.base->units());
      g.add({{"mcs", c.mcs_ann(s)}}, {{"finite-S", true}, {"S-avoids-max", avoids}, {"M-maximal", m_maximal}}, [&] {
        Eval ev;
        const Poly x = Poly::x(p.base);
        const SUnitResult su = poly_s_unit_check(x, c.mcs[s], p.degree);
        const bool x_regular = mccoy_regular(x);
        // S-uz fails when x is regular and provably no S-unit.
        const bool a_fails = x_regular && su.kind == SUnitResult::Kind::AnalyticNo;
        const PolyVerdict pv = bounded_S_r_search(spec, c.mcs[s], p.degree);
        const bool c_fails = pv.outcome == PolyOutcome::No;
        ev.holds = a_fails == c_fails;
        ev.witness = {{"x_s_unit", std::string(to_string(su.kind))}, {"x_regular", x_regular}, {"M", pv.text()}};
        if (pv.counterexample) ev.counterexample["poly_pair"] = poly_pair(pv);
        return ev;
      });
    }
    out_.push_back(g.finish());
  }

  // ---- extensions ----

  void run_extension(const std::string& id) {
    if (id == "P3.2" && e_.ring.kind == dsl::RingKind::IntAmalg) int_amalg();
    if (id == "P3.2" && e_.ring.amalg) amalg();
    if (id == "P3.3" && e_.ring.triv) triv();
  }

  void amalg() {
    const AmalgRing& am = *e_.ring.amalg;
    FiniteCtx c(am.h1(), nullptr, opt_);
    for (const Direction dir : {Direction::Forward, Direction::Backward}) {
      const bool fwd = dir == Direction::Forward;
      for (std::size_t a : c.focus) {
        Json ann = c.base_annotations(a);
        ann["direction"] = fwd ? "forward" : "backward";
        Group g = group("P3.2", am.ring->recipe(), ann);
        for (std::size_t s = 0; s < c.mcs.size(); ++s) {
          const AmalgTransferReport rep = amalg_transfer_check(c.ideals[a], c.mcs[s], am, dir);
          Hyps hyps = fwd ? Hyps{{"epimorphism", rep.epimorphism}, {"domain", rep.domain}, {"J-in-zd", rep.j_in_zd}}
                          : Hyps{{"isomorphism", rep.isomorphism}};
          g.add({{"mcs", c.mcs_ann(s)}}, hyps, [&] {
            Eval ev;
            const Outcome ante = fwd ? rep.base : rep.amalg;
            const Outcome cons = fwd ? rep.amalg : rep.base;
            ev.holds = !(ante == Outcome::Holds && cons != Outcome::Holds);
            ev.witness = {{"base", std::string(to_string(rep.base))}, {"amalg", std::string(to_string(rep.amalg))}};
            return ev;
          });
        }
        out_.push_back(g.finish());
      }
    }
  }

  void int_amalg() {
    const auto z = arith::make_arith_ring({arith::Factor::integers()});
    std::vector<arith::ArithMCS> sets;
    if (e_.mcs) {
      sets.push_back(dsl::parse_arith_mcs(z, *e_.mcs));
    } else {
      for (const char* t : {"units", "{1}", "all"}) sets.push_back(dsl::parse_arith_mcs(z, t));
    }
    const auto& spec = e_.ring.int_amalg;
    Group g = group("P3.2", e_.expr, {{"ideal", "(0)"}, {"direction", "forward"}});
    for (const auto& s : sets) {
      const IntAmalgReport rep = int_amalg_zero_forward(spec.n, spec.d, s, kDefaultWitnessBound);
      g.add({{"mcs", s.text()}}, {{"epimorphism", true}, {"domain", true}, {"J-in-zd", rep.j_in_zd}}, [&] {
        Eval ev;
        // 0 is S-r in Z exactly when 0 is outside S.
        const bool ante = rep.disjoint;
        ev.holds = (!ante || rep.outcome == Outcome::Holds) && rep.oracle_agrees;
        if (rep.witness)
          ev.witness = {{"s", std::to_string(rep.witness->first) + "," + std::to_string(rep.witness->second)}};
        ev.note = std::string("amalg outcome ") + std::string(to_string(rep.outcome));
        return ev;
      });
    }
    out_.push_back(g.finish());
  }

  void triv() {
    const TrivExtRing& t = *e_.ring.triv;
    FiniteCtx c(t.base, nullptr, opt_);
    for (std::size_t a : c.focus) {
      Group g = group("P3.3", t.ring->recipe(), c.base_annotations(a));
      for (std::size_t s = 0; s < c.mcs.size(); ++s) {
        const TrivEquivalenceReport rep = triv_equivalence_check(t, c.ideals[a], c.mcs[s]);
        g.add({{"mcs", c.mcs_ann(s)}},
              {{"disjoint", rep.disjoint}, {"torsion-free", rep.torsion_free}, {"ann-union", rep.ann_union_nonzero}},
              [&] {
                Eval ev;
                const std::string pat = rep.pattern();
                ev.holds = pat == "000" || pat == "111";
                ev.witness = {{"pattern", pat}, {"ann_union_literal", rep.ann_union_literal}};
                return ev;
              });
      }
      out_.push_back(g.finish());
    }
  }

  const CorpusEntry& e_;
  const CorpusSpec& corpus_;
  const RunOptions& opt_;
  std::unique_ptr<FiniteCtx> fin_;
  std::unique_ptr<PolyCtx> poly_;
  std::vector<ReportRecord> out_;
};

std::vector<const TheoremCase*> select(const std::vector<std::string>& ids) {
  std::vector<const TheoremCase*> out;
  if (ids.empty()) {
    for (const auto& t : kRegistry) out.push_back(&t);
    return out;
  }
  for (const auto& id : ids) find_theorem(id);
  for (const auto& t : kRegistry)
    if (std::find(ids.begin(), ids.end(), t.id) != ids.end()) out.push_back(&t);
  return out;
}

}  // namespace

const std::vector<TheoremCase>& theorem_registry() { return kRegistry; }

const TheoremCase& find_theorem(const std::string& id) {
  for (const auto& t : kRegistry)
    if (t.id == id) return t;
  throw Error(ErrorKind::UnknownTheorem, "'" + id + "'");
}

std::vector<ReportRecord> run_theorem(const TheoremCase& t, const CorpusEntry& e, const CorpusSpec& corpus,
                                      const RunOptions& opt) {
  return EntryRunner(e, corpus, opt).run(t);
}

std::vector<ReportRecord> verify(const std::vector<std::string>& ids, const CorpusSpec& corpus, const RunOptions& opt) {
  const auto theorems = select(ids);
  const std::size_t n = corpus.entries.size();
  // results[entry][theorem]
  std::vector<std::vector<std::vector<ReportRecord>>> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        EntryRunner runner(corpus.entries[i], corpus, opt);
        results[i].reserve(theorems.size());
        for (const auto* t : theorems) results[i].push_back(runner.run(*t));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<ReportRecord> out;
  for (std::size_t t = 0; t < theorems.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (auto& rec : results[i][t]) out.push_back(std::move(rec));
  return out;
}

std::vector<ReportRecord> counterexample_search(const std::string& id, const CorpusSpec& corpus,
                                                const std::vector<std::string>& drop, RunOptions opt) {
  const TheoremCase& t = find_theorem(id);
  for (const auto& h : drop)
    if (std::find(t.hypotheses.begin(), t.hypotheses.end(), h) == t.hypotheses.end())
      throw Error(ErrorKind::UnknownHypothesis, "'" + h + "' is not a hypothesis of " + id);
  opt.drop = drop;
  opt.hunt = true;
  return verify({id}, corpus, opt);
}

}  // namespace ringlab
