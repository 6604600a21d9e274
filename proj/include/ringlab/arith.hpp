#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"

namespace ringlab::arith {

/// One factor of a product of copies of Z and Z_n.
struct Factor {
  enum class Kind { Int, Mod };
  Kind kind = Kind::Int;
  long long modulus = 0;  // n for Mod factors

  static Factor integers() { return {Kind::Int, 0}; }
  static Factor mod(long long n) { return {Kind::Mod, n}; }
  bool is_int() const noexcept { return kind == Kind::Int; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ArithRing {
  std::vector<Factor> factors;

  std::size_t arity() const noexcept { return factors.size(); }
  bool has_int_factor() const noexcept;
  std::string text() const;
  friend bool operator==(const ArithRing&, const ArithRing&) = default;
};

using ArithElement = std::vector<long long>;

/// Product ideal: mZ per Int factor (m = 0 is the zero ideal, m = 1 all of
/// Z) and dZ_n per Mod factor with d a divisor of n (d = n is zero).
struct ArithIdeal {
  ArithRing ring;
  std::vector<long long> descriptors;

  bool is_proper() const noexcept;
  bool contains(const ArithElement& x) const;
  std::string text() const;
  friend bool operator==(const ArithIdeal&, const ArithIdeal&) = default;
};

struct McsDescriptor {
  enum class Kind { Units, All, FinSet };
  Kind kind = Kind::Units;
  std::vector<long long> set;  // FinSet members, reduced for Mod factors
  friend bool operator==(const McsDescriptor&, const McsDescriptor&) = default;
};

/// Product of per-factor multiplicatively closed sets.
struct ArithMCS {
  ArithRing ring;
  std::vector<McsDescriptor> factors;

  bool contains(const ArithElement& x) const;
  std::string text() const;
};

using ArithVerdict = BasicVerdict<ArithElement>;

ArithRing make_arith_ring(std::vector<Factor> factors);
/// Normalises descriptors (absolute value for Int, gcd with n for Mod).
ArithIdeal make_arith_ideal(const ArithRing& r, std::vector<long long> descriptors);
/// Validates closure and membership of 1 for FinSet descriptors.
ArithMCS make_arith_mcs(const ArithRing& r, std::vector<McsDescriptor> factors);

ArithElement reduce(const ArithRing& r, ArithElement x);
ArithElement multiply(const ArithRing& r, const ArithElement& a, const ArithElement& b);
std::string element_text(const ArithElement& x);

bool arith_ann_is_zero(const ArithRing& r, const ArithElement& w);
/// Throws NotProper.
bool arith_is_prime(const ArithIdeal& a);
/// Throws NotProper.
ArithVerdict arith_is_r_ideal(const ArithIdeal& a);
/// Throws NotProper; disjointness failure is a NotApplicable verdict.
ArithVerdict arith_is_S_r_ideal(const ArithIdeal& a, const ArithMCS& s, int witness_bound = kDefaultWitnessBound);

bool arith_disjoint(const ArithIdeal& a, const ArithMCS& s);
/// A contained in the zero divisors.
bool arith_subset_zd(const ArithIdeal& a);
bool arith_meets_regular(const ArithIdeal& a);
bool arith_subset(const ArithIdeal& a, const ArithIdeal& b);
ArithIdeal arith_colon(const ArithIdeal& a, const ArithElement& x);
ArithIdeal arith_colon(const ArithIdeal& a, const ArithIdeal& b);
ArithIdeal arith_product(const ArithIdeal& a, const ArithIdeal& b);

/// Candidate coordinates for one factor of S, smallest absolute value
/// first and positive before negative, capped by `bound` for infinite sets.
std::vector<long long> factor_candidates(const Factor& f, const McsDescriptor& d, int bound);
/// Tuple of the last per-factor candidates: the final s a bounded scan
/// examines.
ArithElement last_candidate(const ArithMCS& s, int bound);

/// Claimed verdicts to be confirmed on a finite window.
struct OracleClaim {
  std::optional<bool> prime;
  std::optional<Outcome> r_ideal;
  std::optional<Outcome> s_r_ideal;
  std::optional<ArithElement> witness;
};

/// Brute force over every w, z with Int coordinates in [-bound, bound] and
/// all Mod residues: true iff nothing in the window contradicts the claim.
/// Requires bound >= 2 * (largest Int descriptor).
bool arith_oracle_check(const ArithIdeal& a, const ArithMCS* s, int bound, const OracleClaim& claim,
                        std::string* detail = nullptr);
/// Same, claiming whatever the closed forms say.
bool arith_oracle_check(const ArithIdeal& a, const ArithMCS* s, int bound, std::string* detail = nullptr);

}  // namespace ringlab::arith
