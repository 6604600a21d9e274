#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// An ideal of a FiniteRing: its member set plus the generators it was
/// built from. Members always equal the ideal generated by the generators.
class Ideal {
 public:
  Ideal(RingPtr ring, ElementSet members, std::vector<Elem> generators)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  bool contains(Elem e) const noexcept { return members_.contains(e); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_proper() const noexcept { return !members_.contains(ring_->one()); }
  bool is_zero() const noexcept { return members_.count() == 1; }

  /// Generator list in literal syntax, e.g. "(2,3)"; "(0)" for the zero ideal.
  std::string text() const;

  friend bool operator==(const Ideal& a, const Ideal& b) noexcept {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> generators_;
};

/// A multiplicatively closed subset containing 1. May contain 0.
class MulClosedSet {
 public:
  MulClosedSet(RingPtr ring, ElementSet members, std::vector<Elem> generators)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool contains(Elem e) const noexcept { return members_.contains(e); }
  std::size_t size() const noexcept { return members_.count(); }
  /// Product of all members.
  Elem product() const;
  /// "S<g1,g2>" literal form.
  std::string text() const;

  friend bool operator==(const MulClosedSet& a, const MulClosedSet& b) noexcept {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> generators_;
};

struct LocalizationResult {
  RingPtr localized;
  RingHom map;
  Ideal kernel;
  Elem absorbing_idempotent;
};

bool is_ideal_set(const FiniteRing& r, const ElementSet& s);

Ideal ideal_generate(const RingPtr& r, std::span<const Elem> gens);
/// Wraps an ideal given by members; picks greedy canonical generators.
/// Throws TypeMismatch when the set is not an ideal.
Ideal ideal_from_members(const RingPtr& r, const ElementSet& members);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);

/// Every ideal exactly once, ordered by (cardinality, member set).
std::vector<Ideal> all_ideals(const RingPtr& r);

Ideal annihilator(const RingPtr& r, const ElementSet& t);
Ideal colon(const Ideal& a, const ElementSet& k);
Ideal colon(const Ideal& a, const Ideal& k);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::size_t k);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

bool is_prime(const Ideal& a);
bool is_maximal(const Ideal& a);
std::vector<Ideal> prime_ideals(const RingPtr& r);
std::vector<Ideal> maximal_ideals(const RingPtr& r);
/// Throws NotProper for the unit ideal.
std::vector<Ideal> min_primes_over(const Ideal& a);
Ideal jacobson_radical(const RingPtr& r);

Ideal kernel(const RingHom& h);
/// {x : h(x) in b}
Ideal ideal_preimage(const RingHom& h, const Ideal& b);

std::pair<RingPtr, RingHom> make_quotient(const Ideal& a);

MulClosedSet mcs_generate(const RingPtr& r, std::span<const Elem> gens);
/// Throws InvalidConstruction unless 1 is a member and the set is closed.
MulClosedSet mcs_from_members(const RingPtr& r, const ElementSet& members);
/// R \ P; throws InvalidConstruction when P is not prime.
MulClosedSet mcs_complement(const Ideal& p);

ElementSet s_units(const RingPtr& r, const MulClosedSet& s);

/// Localization through the absorbing idempotent e of the product of S:
/// S^{-1}R is realised as eR with identity e.
LocalizationResult localize(const RingPtr& r, const MulClosedSet& s);
/// Formal-fraction construction; independent of `localize`.
RingPtr localize_oracle(const RingPtr& r, const MulClosedSet& s, std::size_t limit = size_limit());
Ideal ideal_pushforward(const LocalizationResult& loc, const Ideal& a);

/// Comma-separated literals of a list of elements.
std::string join_literals(const FiniteRing& r, std::span<const Elem> elems);
std::string join_labels(const FiniteRing& r, std::span<const Elem> elems);

}  // namespace ringlab
