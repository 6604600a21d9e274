#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/element_set.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

/// Parsed element literal: either an integer or a parenthesised tuple.
struct ElemLiteral {
  std::optional<long long> value;
  std::vector<ElemLiteral> parts;

  static ElemLiteral integer(long long v) { return ElemLiteral{v, {}}; }
  static ElemLiteral tuple(std::vector<ElemLiteral> ps) { return ElemLiteral{std::nullopt, std::move(ps)}; }
  bool is_tuple() const { return !value.has_value(); }
  std::string text() const;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Maps a literal onto an element index, or nullopt if the literal does
/// not denote an element of the ring.
using ElementResolver = std::function<std::optional<Elem>(const ElemLiteral&)>;

/// Raw material for a ring. Element 0 must be the additive identity.
struct RingTables {
  std::size_t size = 0;
  std::vector<Elem> add;  // size*size, row-major
  std::vector<Elem> mul;  // size*size, row-major
  Elem one = 0;
  std::vector<std::string> labels;
  std::vector<std::string> literals;
  std::string recipe;
  ElementResolver resolve;
};

/// A finite commutative ring with identity, stored as full Cayley tables.
///
/// Instances are immutable. `FiniteRing::make` validates every ring axiom
/// by exhaustive scan and precomputes the unit/regular partition, so any
/// RingPtr in circulation is known to be a genuine ring.
class FiniteRing {
 public:
  static RingPtr make(RingTables tables);

  std::size_t size() const noexcept { return n_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const noexcept;

  const std::string& label(Elem e) const { return labels_[e]; }
  const std::string& literal(Elem e) const { return literals_[e]; }
  const std::string& recipe() const noexcept { return recipe_; }
  std::optional<Elem> resolve(const ElemLiteral& lit) const;

  bool is_unit(Elem e) const noexcept { return units_.contains(e); }
  bool is_regular(Elem e) const noexcept { return regulars_.contains(e); }
  const ElementSet& units() const noexcept { return units_; }
  const ElementSet& regulars() const noexcept { return regulars_; }
  const ElementSet& zero_divisors() const noexcept { return zero_divisors_; }
  std::optional<Elem> inverse(Elem e) const noexcept;

  /// No nonzero nilpotent elements.
  bool is_reduced() const noexcept { return reduced_; }
  /// Additive order of the identity.
  std::size_t characteristic() const noexcept;
  ElementSet idempotents() const;

  /// Ann(w) as an element set (exhaustive scan).
  ElementSet annihilator_of(Elem w) const;

 private:
  FiniteRing() = default;

  std::size_t n_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<std::string> labels_, literals_;
  std::string recipe_;
  ElementResolver resolve_;
  ElementSet units_, regulars_, zero_divisors_;
  bool reduced_ = true;
};

struct RingHom {
  RingPtr domain;
  RingPtr codomain;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
};

struct ElementPartition {
  ElementSet units;
  ElementSet regulars;
  ElementSet zero_divisors;
};

/// Invariants used when exhaustive isomorphism search is too expensive.
struct RingFingerprint {
  std::size_t size = 0;
  std::size_t unit_count = 0;
  std::size_t idempotent_count = 0;
  std::size_t characteristic = 0;
  friend bool operator==(const RingFingerprint&, const RingFingerprint&) = default;
};

RingPtr make_zn(std::size_t n);
RingPtr make_product(const RingPtr& r1, const RingPtr& r2, std::size_t limit = size_limit());

/// R/I for I given by its member set and the generators used for labels.
/// Throws TypeMismatch when `ideal_members` is not an ideal of `r`.
std::pair<RingPtr, RingHom> make_quotient(const RingPtr& r, const ElementSet& ideal_members,
                                          std::span<const Elem> generators);

ElementPartition element_partition(const FiniteRing& r);

/// Smallest k >= 1 with t^k == t^{2k}; returns (t^k, k).
std::pair<Elem, std::size_t> idempotent_power(const FiniteRing& r, Elem t);

/// Validates the homomorphism laws; throws NotAHomomorphism naming the
/// offending pair.
const RingHom& check_hom(const RingHom& h);
bool is_isomorphism(const RingHom& h);

/// Whether h(Ann(w)) == Ann(h(w)). Requires h to be an isomorphism.
bool ann_pushforward_check(const RingHom& h, Elem w);

RingHom identity_hom(const RingPtr& r);

/// Exhaustive search for a ring isomorphism r1 -> r2.
std::optional<RingHom> find_isomorphism(const RingPtr& r1, const RingPtr& r2);

RingFingerprint fingerprint(const FiniteRing& r);

/// True iff the recipe contains a top-level product, i.e. it must be
/// parenthesised when used as an operand.
bool recipe_needs_parens(const std::string& recipe);

}  // namespace ringlab
