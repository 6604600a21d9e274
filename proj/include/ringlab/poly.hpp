#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/classify.hpp"

namespace ringlab {

/// Polynomial over a FiniteRing. Coefficient i belongs to x^i; trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly(RingPtr base, std::vector<Elem> coeffs);
  static Poly constant(RingPtr base, Elem c) { return Poly(std::move(base), {c}); }
  static Poly x(RingPtr base);

  const RingPtr& base() const noexcept { return base_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// e.g. "x^2+2x+1"; "0" for the zero polynomial.
  std::string text() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingPtr base_;
  std::vector<Elem> coeffs_;
};

/// Canonical order: degree first, then coefficients from the top down.
bool canonical_less(const Poly& a, const Poly& b);

/// Operands above kMaxDegree raise DegreeLimit.
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(Elem c, const Poly& a);
Elem poly_eval(const Poly& f, Elem a);

/// Every polynomial of degree <= d in canonical order.
std::vector<Poly> all_polys(const RingPtr& base, int d);

ElementSet content_set(const Poly& f);
Ideal content_ideal(const Poly& f);

/// f is regular in the full polynomial ring iff Ann(C(f)) = 0.
bool mccoy_regular(const Poly& f);

/// c(z)^{m+1} c(w) == c(z)^m c(wz) with m = deg w.
bool dedekind_mertens_check(const Poly& w, const Poly& z);

struct PolyIdealSpec {
  enum class Kind { Content, EvalKernel };
  Kind kind = Kind::Content;
  Ideal ideal;  // A for content(A), B for kernel(a, B)
  Elem point = 0;

  static PolyIdealSpec content(Ideal a) { return {Kind::Content, std::move(a), 0}; }
  static PolyIdealSpec kernel(Elem a, Ideal b) { return {Kind::EvalKernel, std::move(b), a}; }

  bool contains(const Poly& f) const;
  const RingPtr& base() const noexcept { return ideal.ring(); }
  std::string text() const;
};

enum class PolyOutcome { YesByTheorem, No, NoViolationUpTo };
enum class PolyGate { None, PropertyA, Fac };

std::string_view to_string(PolyOutcome o);
std::string_view to_string(PolyGate g);

struct PolyVerdict {
  PolyOutcome outcome = PolyOutcome::NoViolationUpTo;
  PolyGate gate = PolyGate::None;
  /// (w, z): w regular, w z in the ideal, s z outside for every s in S.
  std::optional<std::pair<Poly, Poly>> counterexample;
  /// Degree at which the counterexample appeared.
  int degree = -1;
  /// Search bound in force.
  int bound = 0;

  std::string text() const;
};

/// Constant-coefficient m.c.s. S; finds the first pair (w, z) of degree <= D
/// defeating every s. Throws DegreeLimit above kMaxDegree.
PolyVerdict bounded_S_r_search(const PolyIdealSpec& spec, const MulClosedSet& s, int d = kDefaultDegreeBound);

/// A[x] for A an ideal of the base: theorem gates first, bounded search
/// otherwise. Throws NotApplicable when A meets S.
PolyVerdict decide_content_S_r(const Ideal& a, const MulClosedSet& s, int d = kDefaultDegreeBound,
                               int fac_cap = kDefaultFacCap);

struct SUnitResult {
  enum class Kind { Yes, NoUpTo, AnalyticNo };
  Kind kind = Kind::NoUpTo;
  std::optional<Poly> witness;
  int bound = 0;
  std::string note;
};

std::string_view to_string(SUnitResult::Kind k);

/// Searches g of degree <= D with f g a constant in S.
SUnitResult poly_s_unit_check(const Poly& f, const MulClosedSet& s, int d = kDefaultDegreeBound);

}  // namespace ringlab
