#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"

namespace ringlab {

enum class Outcome { Holds, Fails, NotApplicable };

std::string_view to_string(Outcome o);

namespace reason {
inline constexpr std::string_view kDisjointness = "DISJOINTNESS_VIOLATED";
inline constexpr std::string_view kNotProper = "NOT_PROPER";
inline constexpr std::string_view kNotReduced = "NOT_REDUCED";
inline constexpr std::string_view kNotSIdempotent = "NOT_S_IDEMPOTENT";
}  // namespace reason

/// Three-valued classification result.
///
/// `witness` is the uniform s of an S-indexed predicate. `counterexample`
/// holds (w, z) for pair predicates, the offending element for ring-level
/// element predicates, or a generator list / subset for set predicates.
/// `defeated` names the candidate s the counterexample defeats, when the
/// predicate quantifies over S.
template <class E>
struct BasicVerdict {
  Outcome outcome = Outcome::NotApplicable;
  std::optional<E> witness;
  std::vector<E> counterexample;
  std::optional<E> defeated;
  std::string reason;

  static BasicVerdict holds(std::optional<E> w = std::nullopt) {
    BasicVerdict v;
    v.outcome = Outcome::Holds;
    v.witness = std::move(w);
    return v;
  }
  static BasicVerdict fails(std::vector<E> ce, std::optional<E> defeated = std::nullopt) {
    BasicVerdict v;
    v.outcome = Outcome::Fails;
    v.counterexample = std::move(ce);
    v.defeated = std::move(defeated);
    return v;
  }
  static BasicVerdict not_applicable(std::string_view why) {
    BasicVerdict v;
    v.outcome = Outcome::NotApplicable;
    v.reason = std::string(why);
    return v;
  }

  bool is_holds() const noexcept { return outcome == Outcome::Holds; }
  bool is_fails() const noexcept { return outcome == Outcome::Fails; }
  bool is_na() const noexcept { return outcome == Outcome::NotApplicable; }
};

using Verdict = BasicVerdict<Elem>;

/// Switches for the hypothesis gates. Turning a gate off evaluates the
/// predicate's body anyway (used by counterexample hunts).
struct ClassifyOptions {
  bool enforce_disjoint = true;
  bool enforce_proper = true;
  bool enforce_reduced = true;
  /// Nonstandard: allow a different s for every pair instead of one s for
  /// all pairs. Exploratory contrast only.
  bool per_pair_s = false;
  int fac_cap = kDefaultFacCap;
};

Verdict is_r_ideal(const Ideal& a, const ClassifyOptions& opt = {});
Verdict is_pr_ideal(const Ideal& a, const ClassifyOptions& opt = {});
Verdict is_S_r_ideal(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt = {});
Verdict is_S_prime(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt = {});
/// Primality with the first violating pair as counterexample.
Verdict prime_verdict(const Ideal& a);
Verdict is_z0_ideal(const Ideal& a, const ClassifyOptions& opt = {});
Verdict is_S_z0_ideal(const Ideal& a, const MulClosedSet& s, const ClassifyOptions& opt = {});

Verdict is_uz_ring(const RingPtr& r);
Verdict is_S_uz_ring(const RingPtr& r, const MulClosedSet& s);
Verdict has_property_A(const RingPtr& r);
Verdict has_ac(const RingPtr& r);
Verdict has_fac(const RingPtr& r, int cap = kDefaultFacCap);

/// Gate: every generator satisfies a^2 = s a for s the product of S, and the
/// generated ideal misses S. Then reports whether that ideal is S-r.
Verdict s_idempotent_ideal_check(const RingPtr& r, const MulClosedSet& s, std::span<const Elem> gens);

/// Elements a with a^2 = s a for s the product of all members of S.
std::vector<Elem> s_idempotents(const RingPtr& r, const MulClosedSet& s);

}  // namespace ringlab
