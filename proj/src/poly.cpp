#include "ringlab/poly.hpp"

#include <map>
#include <tuple>

namespace ringlab {

namespace {

void require_degree(const Poly& f) {
  if (f.degree() > kMaxDegree)
    throw Error(ErrorKind::DegreeLimit, "degree " + std::to_string(f.degree()) + " exceeds bound " +
                                            std::to_string(kMaxDegree));
}

void require_same_base(const Poly& a, const Poly& b) {
  if (a.base() != b.base()) throw Error(ErrorKind::TypeMismatch, "polynomials over different base rings");
}

std::vector<Elem> trim(std::vector<Elem> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Product without the degree gate.
Poly mul_raw(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.base(), {});
  const FiniteRing& r = *a.base();
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = r.add(out[i + j], r.mul(a.coeffs()[i], b.coeffs()[j]));
  return Poly(a.base(), std::move(out));
}

/// Ann(C(f)) == 0 with per-element annihilators supplied.
bool regular_with(const std::vector<ElementSet>& anns, const std::vector<Elem>& coeffs, std::size_t n) {
  ElementSet ann = ElementSet::full(n);
  for (Elem c : coeffs) ann &= anns[c];
  return ann.count() == 1;
}

std::vector<ElementSet> element_anns(const FiniteRing& r) {
  std::vector<ElementSet> anns;
  for (Elem a = 0; a < r.size(); ++a) anns.push_back(r.annihilator_of(a));
  return anns;
}

std::size_t count_up_to(std::size_t n, int d) {
  std::size_t c = 1;
  for (int i = 0; i <= d; ++i) c *= n;
  return c;
}

}  // namespace

Poly::Poly(RingPtr base, std::vector<Elem> coeffs) : base_(std::move(base)), coeffs_(trim(std::move(coeffs))) {
  for (Elem c : coeffs_)
    if (c >= base_->size()) throw Error(ErrorKind::TypeMismatch, "coefficient outside the base ring");
}

Poly Poly::x(RingPtr base) {
  const Elem one = base->one();
  return Poly(std::move(base), {0, one});
}

std::string Poly::text() const {
  if (coeffs_.empty()) return "0";
  const FiniteRing& r = *base_;
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    const std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i > 0 && c == r.one())
      out += mono;
    else
      out += r.literal(c) + mono;
  }
  return out;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  }
  return false;
}

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_base(a, b);
  require_degree(a);
  require_degree(b);
  const FiniteRing& r = *a.base();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(a.coeff(i), b.coeff(i));
  return Poly(a.base(), std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  require_same_base(a, b);
  require_degree(a);
  require_degree(b);
  const FiniteRing& r = *a.base();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.sub(a.coeff(i), b.coeff(i));
  return Poly(a.base(), std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_base(a, b);
  require_degree(a);
  require_degree(b);
  return mul_raw(a, b);
}

Poly poly_scale(Elem c, const Poly& a) {
  std::vector<Elem> out = a.coeffs();
  for (auto& x : out) x = a.base()->mul(c, x);
  return Poly(a.base(), std::move(out));
}

Elem poly_eval(const Poly& f, Elem a) {
  require_degree(f);
  const FiniteRing& r = *f.base();
  Elem acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = r.add(r.mul(acc, a), f.coeffs()[static_cast<std::size_t>(i)]);
  return acc;
}

std::vector<Poly> all_polys(const RingPtr& base, int d) {
  if (d > kMaxDegree) throw Error(ErrorKind::DegreeLimit, "enumeration degree above " + std::to_string(kMaxDegree));
  const Elem n = static_cast<Elem>(base->size());
  std::vector<Poly> out;
  out.emplace_back(base, std::vector<Elem>{});
  for (int k = 0; k <= d; ++k) {
    // Top coefficient nonzero, lower ones counted with the top as most significant.
    std::vector<Elem> c(static_cast<std::size_t>(k) + 1, 0);
    for (Elem top = 1; top < n; ++top) {
      c.assign(c.size(), 0);
      c[static_cast<std::size_t>(k)] = top;
      while (true) {
        out.emplace_back(base, c);
        int i = 0;
        while (i < k && c[static_cast<std::size_t>(i)] == n - 1) c[static_cast<std::size_t>(i++)] = 0;
        if (i == k) break;
        ++c[static_cast<std::size_t>(i)];
      }
    }
  }
  return out;
}

ElementSet content_set(const Poly& f) {
  ElementSet s(f.base()->size());
  if (f.is_zero()) s.insert(0);
  for (Elem c : f.coeffs()) s.insert(c);
  return s;
}

Ideal content_ideal(const Poly& f) {
  const auto elems = content_set(f).elements();
  return ideal_generate(f.base(), elems);
}

bool mccoy_regular(const Poly& f) { return annihilator(f.base(), content_set(f)).is_zero(); }

bool dedekind_mertens_check(const Poly& w, const Poly& z) {
  require_same_base(w, z);
  const std::size_t m = static_cast<std::size_t>(std::max(w.degree(), 0));
  const Ideal cz = content_ideal(z);
  const Ideal cw = content_ideal(w);
  const Ideal cwz = content_ideal(mul_raw(w, z));
  const Ideal lhs = ideal_product(ideal_power(cz, m + 1), cw);
  const Ideal rhs = ideal_product(ideal_power(cz, m), cwz);
  return lhs.members() == rhs.members();
}

bool PolyIdealSpec::contains(const Poly& f) const {
  if (kind == Kind::Content) {
    for (Elem c : f.coeffs())
      if (!ideal.contains(c)) return false;
    return true;
  }
  const FiniteRing& r = *ideal.ring();
  Elem acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = r.add(r.mul(acc, point), f.coeffs()[static_cast<std::size_t>(i)]);
  return ideal.contains(acc);
}

std::string PolyIdealSpec::text() const {
  if (kind == Kind::Content) return "content(" + ideal.text() + ")";
  return "kernel(" + ideal.ring()->literal(point) + "," + ideal.text() + ")";
}

std::string_view to_string(PolyOutcome o) {
  switch (o) {
    case PolyOutcome::YesByTheorem: return "YES_BY_THEOREM";
    case PolyOutcome::No: return "NO";
    case PolyOutcome::NoViolationUpTo: return "NO_VIOLATION_UP_TO";
  }
  return "?";
}

std::string_view to_string(PolyGate g) {
  switch (g) {
    case PolyGate::None: return "none";
    case PolyGate::PropertyA: return "PropertyA";
    case PolyGate::Fac: return "f.a.c.";
  }
  return "?";
}

std::string_view to_string(SUnitResult::Kind k) {
  switch (k) {
    case SUnitResult::Kind::Yes: return "yes";
    case SUnitResult::Kind::NoUpTo: return "no_up_to";
    case SUnitResult::Kind::AnalyticNo: return "analytic_no";
  }
  return "?";
}

std::string PolyVerdict::text() const {
  switch (outcome) {
    case PolyOutcome::YesByTheorem: return "YES by theorem (gate " + std::string(to_string(gate)) + ")";
    case PolyOutcome::No: {
      std::string out = "NO at degree " + std::to_string(degree);
      if (counterexample)
        out += ", counterexample (" + counterexample->first.text() + ", " + counterexample->second.text() + ")";
      if (gate != PolyGate::None) out += " (gate " + std::string(to_string(gate)) + ")";
      return out;
    }
    case PolyOutcome::NoViolationUpTo: return "NO_VIOLATION_UP_TO(" + std::to_string(bound) + ")";
  }
  return "?";
}

namespace {

/// Pair search over polynomials of bounded degree.
class PairSearch {
 public:
  PairSearch(const PolyIdealSpec& spec, const MulClosedSet& s, int d)
      : spec_(spec), r_(*spec.base()), n_(r_.size()), anns_(element_anns(r_)), polys_(all_polys(spec.base(), d)) {
    s_members_ = s.members().elements();
    regular_.reserve(polys_.size());
    for (const Poly& p : polys_) regular_.push_back(regular_with(anns_, p.coeffs(), n_));
  }

  PolyVerdict run(int d) {
    PolyVerdict v;
    v.bound = d;
    for (int k = 0; k <= d; ++k) {
      const std::size_t upto = count_up_to(n_, k);
      const std::size_t below = count_up_to(n_, k - 1);
      for (std::size_t zi = 0; zi < upto; ++zi) {
        const Poly& z = polys_[zi];
        if (!bad(z)) continue;
        // Pairs with both degrees below k were examined on earlier levels.
        const int min_w_degree = zi < below ? k : -1;
        if (auto w = find_w(z, min_w_degree, k)) {
          v.outcome = PolyOutcome::No;
          v.counterexample = std::make_pair(*w, z);
          v.degree = k;
          return v;
        }
      }
    }
    v.outcome = PolyOutcome::NoViolationUpTo;
    return v;
  }

 private:
  bool bad(const Poly& z) const {
    for (Elem s : s_members_)
      if (spec_.contains(poly_scale(s, z))) return false;
    return true;
  }

  std::optional<Poly> find_w(const Poly& z, int lo, int hi) {
    if (spec_.kind == PolyIdealSpec::Kind::EvalKernel) return find_w_kernel(z, lo, hi);
    for (int m = std::max(lo, -1); m <= hi; ++m)
      if (auto w = find_w_content(z, m)) return w;
    return std::nullopt;
  }

  std::optional<Poly> find_w_kernel(const Poly& z, int lo, int hi) {
    Elem v = 0;
    for (int i = z.degree(); i >= 0; --i) v = r_.add(r_.mul(v, spec_.point), z.coeffs()[static_cast<std::size_t>(i)]);
    const std::size_t begin = lo < 0 ? 0 : count_up_to(n_, lo - 1);
    const std::size_t end = count_up_to(n_, hi);
    const auto key = std::make_tuple(begin, end, v);
    auto it = kernel_cache_.find(key);
    if (it == kernel_cache_.end()) {
      std::optional<std::size_t> found;
      for (std::size_t wi = begin; wi < end && !found; ++wi) {
        if (!regular_[wi]) continue;
        const Poly& w = polys_[wi];
        Elem u = 0;
        for (int i = w.degree(); i >= 0; --i) u = r_.add(r_.mul(u, spec_.point), w.coeffs()[static_cast<std::size_t>(i)]);
        if (spec_.ideal.contains(r_.mul(u, v))) found = wi;
      }
      it = kernel_cache_.emplace(key, found).first;
    }
    if (!it->second) return std::nullopt;
    return polys_[*it->second];
  }

  /// Canonically first regular w of degree exactly m with w z in A[x].
  /// Coefficients are fixed from the top down; fixing w_i settles the
  /// product coefficient of x^{i + deg z}.
  std::optional<Poly> find_w_content(const Poly& z, int m) {
    if (m < 0) {
      // Only the zero ring has 0 regular.
      if (n_ == 1) return Poly(spec_.base(), {});
      return std::nullopt;
    }
    const auto& zc = z.coeffs();
    const int dz = z.degree();
    std::vector<Elem> w(static_cast<std::size_t>(m) + 1, 0);
    auto product_coeff = [&](int k) {
      Elem acc = 0;
      for (int j = std::max(0, k - dz); j <= std::min(m, k); ++j)
        acc = r_.add(acc, r_.mul(w[static_cast<std::size_t>(j)], zc[static_cast<std::size_t>(k - j)]));
      return acc;
    };
    std::optional<Poly> result;
    auto rec = [&](auto&& self, int i) -> void {
      if (result) return;
      if (i < 0) {
        for (int k = 0; k < dz; ++k)
          if (!spec_.ideal.contains(product_coeff(k))) return;
        if (regular_with(anns_, w, n_)) result = Poly(spec_.base(), w);
        return;
      }
      for (Elem c = (i == m ? 1 : 0); c < n_ && !result; ++c) {
        w[static_cast<std::size_t>(i)] = c;
        if (!spec_.ideal.contains(product_coeff(i + dz))) continue;
        self(self, i - 1);
      }
      w[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, m);
    return result;
  }

  const PolyIdealSpec& spec_;
  const FiniteRing& r_;
  std::size_t n_;
  std::vector<ElementSet> anns_;
  std::vector<Poly> polys_;
  std::vector<bool> regular_;
  std::vector<Elem> s_members_;
  std::map<std::tuple<std::size_t, std::size_t, Elem>, std::optional<std::size_t>> kernel_cache_;
};

}  // namespace

PolyVerdict bounded_S_r_search(const PolyIdealSpec& spec, const MulClosedSet& s, int d) {
  if (d < 0) throw Error(ErrorKind::InvalidConstruction, "negative degree bound");
  if (d > kMaxDegree) throw Error(ErrorKind::DegreeLimit, "search bound " + std::to_string(d) + " above " +
                                                              std::to_string(kMaxDegree));
  if (s.ring() != spec.base()) throw Error(ErrorKind::TypeMismatch, "multiplicative set over a different base");
  PairSearch search(spec, s, d);
  return search.run(d);
}

PolyVerdict decide_content_S_r(const Ideal& a, const MulClosedSet& s, int d, int fac_cap) {
  if (a.members().intersects(s.members())) throw Error(ErrorKind::NotApplicable, std::string(reason::kDisjointness));
  const RingPtr& r = a.ring();
  auto copied = [&](PolyGate gate) {
    const Verdict base = is_S_r_ideal(a, s);
    PolyVerdict v;
    v.gate = gate;
    v.bound = d;
    if (base.is_holds()) {
      v.outcome = PolyOutcome::YesByTheorem;
    } else {
      v.outcome = PolyOutcome::No;
      v.degree = 0;
      if (base.counterexample.size() == 2)
        v.counterexample = std::make_pair(Poly::constant(r, base.counterexample[0]), Poly::constant(r, base.counterexample[1]));
    }
    return v;
  };
  if (has_fac(r, fac_cap).is_holds()) return copied(PolyGate::Fac);
  if (has_property_A(r).is_holds() && s.members().subset_of(r->regulars())) return copied(PolyGate::PropertyA);
  return bounded_S_r_search(PolyIdealSpec::content(a), s, d);
}

SUnitResult poly_s_unit_check(const Poly& f, const MulClosedSet& s, int d) {
  require_degree(f);
  SUnitResult res;
  res.bound = d;
  const FiniteRing& r = *f.base();
  if (f.coeff(0) == 0 && !s.contains(0)) {
    res.kind = SUnitResult::Kind::AnalyticNo;
    res.note = "constant term of every multiple is 0, which is not in S";
    return res;
  }
  for (const Poly& g : all_polys(f.base(), d)) {
    const Poly p = mul_raw(f, g);
    if (p.degree() <= 0 && s.contains(p.coeff(0))) {
      res.kind = SUnitResult::Kind::Yes;
      res.witness = g;
      return res;
    }
  }
  res.kind = SUnitResult::Kind::NoUpTo;
  if (!s.contains(0))
    for (Elem a = 0; a < r.size(); ++a)
      if (poly_eval(f, a) == 0) {
        res.note = "root at " + r.literal(a) + ": every multiple vanishes there, no member of S does";
        break;
      }
  return res;
}

}  // namespace ringlab
