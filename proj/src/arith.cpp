#include "ringlab/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace ringlab::arith {

namespace {

long long mod_reduce(long long x, long long n) { return ((x % n) + n) % n; }

long long gcd_ll(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

bool is_prime_number(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool factor_full(const Factor& f, long long d) { return d == 1 || (!f.is_int() && f.modulus == 1); }

bool factor_contains(const Factor& f, long long d, long long x) {
  if (f.is_int()) return d == 0 ? x == 0 : x % d == 0;
  return mod_reduce(x, f.modulus) % d == 0;
}

bool factor_regular(const Factor& f, long long x) {
  if (f.is_int()) return x != 0;
  return gcd_ll(mod_reduce(x, f.modulus), f.modulus) == 1;
}

/// A representative member of the factor ideal (the descriptor itself).
long long factor_member(const Factor& f, long long d) {
  if (f.is_int()) return d;
  return mod_reduce(d, f.modulus);
}

bool descriptor_in_set(const Factor& f, const McsDescriptor& d, long long x) {
  switch (d.kind) {
    case McsDescriptor::Kind::All: return true;
    case McsDescriptor::Kind::Units:
      return f.is_int() ? (x == 1 || x == -1) : gcd_ll(mod_reduce(x, f.modulus), f.modulus) == 1;
    case McsDescriptor::Kind::FinSet: {
      const long long v = f.is_int() ? x : mod_reduce(x, f.modulus);
      return std::find(d.set.begin(), d.set.end(), v) != d.set.end();
    }
  }
  return false;
}

void require_proper(const ArithIdeal& a) {
  if (!a.is_proper()) throw Error(ErrorKind::NotProper, "ideal " + a.text() + " is the whole ring");
}

std::vector<ArithElement> window(const ArithRing& r, int bound) {
  std::vector<ArithElement> out{{}};
  for (const Factor& f : r.factors) {
    std::vector<long long> coords;
    if (f.is_int())
      for (long long v = 0; v <= bound; ++v) {
        coords.push_back(v);
        if (v) coords.push_back(-v);
      }
    else
      for (long long v = 0; v < f.modulus; ++v) coords.push_back(v);
    std::vector<ArithElement> next;
    for (const auto& prefix : out)
      for (long long c : coords) {
        auto e = prefix;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool ArithRing::has_int_factor() const noexcept {
  return std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.is_int(); });
}

std::string ArithRing::text() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i].is_int() ? "Z" : "Z" + std::to_string(factors[i].modulus);
  }
  return out;
}

bool ArithIdeal::is_proper() const noexcept {
  for (std::size_t i = 0; i < descriptors.size(); ++i)
    if (!factor_full(ring.factors[i], descriptors[i])) return true;
  return false;
}

bool ArithIdeal::contains(const ArithElement& x) const {
  for (std::size_t i = 0; i < descriptors.size(); ++i)
    if (!factor_contains(ring.factors[i], descriptors[i], x[i])) return false;
  return true;
}

std::string ArithIdeal::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(descriptors[i]);
  }
  return out + ")";
}

bool ArithMCS::contains(const ArithElement& x) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!descriptor_in_set(ring.factors[i], factors[i], x[i])) return false;
  return true;
}

std::string ArithMCS::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    switch (factors[i].kind) {
      case McsDescriptor::Kind::Units: out += "units"; break;
      case McsDescriptor::Kind::All: out += "all"; break;
      case McsDescriptor::Kind::FinSet: {
        out += "{";
        for (std::size_t j = 0; j < factors[i].set.size(); ++j) {
          if (j) out += ",";
          out += std::to_string(factors[i].set[j]);
        }
        out += "}";
        break;
      }
    }
  }
  return out + ")";
}

ArithRing make_arith_ring(std::vector<Factor> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidConstruction, "arithmetic ring needs at least one factor");
  for (const Factor& f : factors)
    if (!f.is_int() && f.modulus < 1) throw Error(ErrorKind::InvalidConstruction, "modulus must be at least 1");
  return ArithRing{std::move(factors)};
}

ArithIdeal make_arith_ideal(const ArithRing& r, std::vector<long long> descriptors) {
  if (descriptors.size() != r.arity())
    throw Error(ErrorKind::TypeMismatch, "ideal needs one descriptor per factor of " + r.text());
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    const Factor& f = r.factors[i];
    descriptors[i] = f.is_int() ? std::llabs(descriptors[i]) : gcd_ll(descriptors[i], f.modulus);
  }
  return ArithIdeal{r, std::move(descriptors)};
}

ArithMCS make_arith_mcs(const ArithRing& r, std::vector<McsDescriptor> factors) {
  if (factors.size() != r.arity())
    throw Error(ErrorKind::TypeMismatch, "multiplicative set needs one descriptor per factor of " + r.text());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    McsDescriptor& d = factors[i];
    if (d.kind != McsDescriptor::Kind::FinSet) continue;
    const Factor& f = r.factors[i];
    for (auto& v : d.set)
      if (!f.is_int()) v = mod_reduce(v, f.modulus);
    std::sort(d.set.begin(), d.set.end());
    d.set.erase(std::unique(d.set.begin(), d.set.end()), d.set.end());
    const long long one = f.is_int() ? 1 : mod_reduce(1, f.modulus);
    if (!std::binary_search(d.set.begin(), d.set.end(), one))
      throw Error(ErrorKind::InvalidConstruction, "multiplicative set factor must contain 1");
    for (long long a : d.set)
      for (long long b : d.set) {
        if (f.is_int() && (std::llabs(a) > 1 && std::llabs(b) > 1))
          throw Error(ErrorKind::InvalidConstruction, "finite subset of Z is not multiplicatively closed");
        const long long p = f.is_int() ? a * b : mod_reduce(a * b, f.modulus);
        if (!std::binary_search(d.set.begin(), d.set.end(), p))
          throw Error(ErrorKind::InvalidConstruction, "finite set factor is not multiplicatively closed");
      }
  }
  return ArithMCS{r, std::move(factors)};
}

ArithElement reduce(const ArithRing& r, ArithElement x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!r.factors[i].is_int()) x[i] = mod_reduce(x[i], r.factors[i].modulus);
  return x;
}

ArithElement multiply(const ArithRing& r, const ArithElement& a, const ArithElement& b) {
  ArithElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return reduce(r, std::move(out));
}

std::string element_text(const ArithElement& x) {
  if (x.size() == 1) return std::to_string(x[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

bool arith_ann_is_zero(const ArithRing& r, const ArithElement& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!factor_regular(r.factors[i], w[i])) return false;
  return true;
}

bool arith_is_prime(const ArithIdeal& a) {
  require_proper(a);
  int prime_slots = 0;
  for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    if (factor_full(f, d)) continue;
    const bool prime_desc = f.is_int() ? (d == 0 || is_prime_number(d)) : is_prime_number(d);
    if (!prime_desc) return false;
    ++prime_slots;
  }
  return prime_slots == 1;
}

namespace {

/// (w, z) defeating every s whose coordinate in `slot` is not a multiple of
/// the descriptor there: w = m in the slot and 1 elsewhere; z = 1 in the
/// slot and an A-member elsewhere.
std::vector<ArithElement> obstruction_pair(const ArithIdeal& a, std::size_t slot) {
  const ArithRing& r = a.ring;
  ArithElement w(r.arity()), z(r.arity());
  for (std::size_t j = 0; j < r.arity(); ++j) {
    w[j] = j == slot ? a.descriptors[j] : 1;
    z[j] = j == slot ? 1 : factor_member(r.factors[j], a.descriptors[j]);
  }
  return {reduce(r, w), reduce(r, z)};
}

bool obstructs(const Factor& f, long long d) { return f.is_int() && d >= 2; }

}  // namespace

ArithVerdict arith_is_r_ideal(const ArithIdeal& a) {
  require_proper(a);
  for (std::size_t i = 0; i < a.descriptors.size(); ++i)
    if (obstructs(a.ring.factors[i], a.descriptors[i])) return ArithVerdict::fails(obstruction_pair(a, i));
  return ArithVerdict::holds();
}

std::vector<long long> factor_candidates(const Factor& f, const McsDescriptor& d, int bound) {
  std::vector<long long> out;
  if (f.is_int()) {
    switch (d.kind) {
      case McsDescriptor::Kind::Units: return {1, -1};
      case McsDescriptor::Kind::All:
        out.push_back(0);
        for (long long v = 1; v <= bound; ++v) {
          out.push_back(v);
          out.push_back(-v);
        }
        return out;
      case McsDescriptor::Kind::FinSet:
        out = d.set;
        std::sort(out.begin(), out.end(), [](long long x, long long y) {
          if (std::llabs(x) != std::llabs(y)) return std::llabs(x) < std::llabs(y);
          return x > y;
        });
        return out;
    }
  }
  for (long long v = 0; v < f.modulus; ++v)
    if (descriptor_in_set(f, d, v)) out.push_back(v);
  return out;
}

ArithElement last_candidate(const ArithMCS& s, int bound) {
  ArithElement out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) out.push_back(factor_candidates(s.ring.factors[i], s.factors[i], bound).back());
  return out;
}

bool arith_disjoint(const ArithIdeal& a, const ArithMCS& s) {
  for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    const McsDescriptor& sd = s.factors[i];
    bool meets = false;
    if (f.is_int() && sd.kind == McsDescriptor::Kind::All)
      meets = true;  // 0 is in both
    else if (f.is_int() && sd.kind == McsDescriptor::Kind::Units)
      meets = d == 1;
    else
      for (long long c : factor_candidates(f, sd, 0))
        if (factor_contains(f, d, c)) {
          meets = true;
          break;
        }
    if (!meets) return true;
  }
  return false;
}

ArithVerdict arith_is_S_r_ideal(const ArithIdeal& a, const ArithMCS& s, int witness_bound) {
  require_proper(a);
  if (!arith_disjoint(a, s)) return ArithVerdict::not_applicable(reason::kDisjointness);
  ArithElement witness(a.descriptors.size());
  for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    const auto cands = factor_candidates(f, s.factors[i], witness_bound);
    std::optional<long long> pick;
    for (long long c : cands)
      if (!obstructs(f, d) || c % d == 0) {
        pick = c;
        break;
      }
    if (!pick) return ArithVerdict::fails(obstruction_pair(a, i), last_candidate(s, witness_bound));
    witness[i] = *pick;
  }
  return ArithVerdict::holds(witness);
}

bool arith_subset_zd(const ArithIdeal& a) {
  for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    if (f.is_int() ? d == 0 : (d != 1 && f.modulus != 1)) return true;
  }
  return false;
}

bool arith_meets_regular(const ArithIdeal& a) { return !arith_subset_zd(a); }

bool arith_subset(const ArithIdeal& a, const ArithIdeal& b) {
  for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
    const long long da = a.descriptors[i], db = b.descriptors[i];
    if (a.ring.factors[i].is_int()) {
      if (db == 0 ? da != 0 : da % db != 0) return false;
    } else if (da % db != 0) {
      return false;
    }
  }
  return true;
}

ArithIdeal arith_colon(const ArithIdeal& a, const ArithElement& x) {
  std::vector<long long> out(a.descriptors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i];
    if (f.is_int())
      out[i] = d == 0 ? (x[i] == 0 ? 1 : 0) : d / gcd_ll(d, x[i]);
    else
      out[i] = d / gcd_ll(d, mod_reduce(x[i], f.modulus));
  }
  return make_arith_ideal(a.ring, std::move(out));
}

ArithIdeal arith_colon(const ArithIdeal& a, const ArithIdeal& b) {
  // (A : B) per factor; colon by the generator of each factor ideal.
  std::vector<long long> out(a.descriptors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Factor& f = a.ring.factors[i];
    const long long d = a.descriptors[i], e = b.descriptors[i];
    if (f.is_int())
      out[i] = d == 0 ? (e == 0 ? 1 : 0) : (e == 0 ? 1 : d / gcd_ll(d, e));
    else
      out[i] = d / gcd_ll(d, e % f.modulus);
  }
  return make_arith_ideal(a.ring, std::move(out));
}

ArithIdeal arith_product(const ArithIdeal& a, const ArithIdeal& b) {
  std::vector<long long> out(a.descriptors.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.descriptors[i] * b.descriptors[i];
  return make_arith_ideal(a.ring, std::move(out));
}

bool arith_oracle_check(const ArithIdeal& a, const ArithMCS* s, int bound, const OracleClaim& claim,
                        std::string* detail) {
  long long max_desc = 0;
  for (std::size_t i = 0; i < a.descriptors.size(); ++i)
    if (a.ring.factors[i].is_int()) max_desc = std::max(max_desc, a.descriptors[i]);
  if (bound < 2 * max_desc) throw Error(ErrorKind::NotApplicable, "oracle window smaller than twice the largest descriptor");

  const ArithRing& r = a.ring;
  const auto elems = window(r, bound);
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };

  if (claim.prime) {
    std::optional<std::pair<ArithElement, ArithElement>> violation;
    for (const auto& w : elems) {
      if (a.contains(w)) continue;
      for (const auto& z : elems)
        if (!a.contains(z) && a.contains(multiply(r, w, z))) {
          violation = {{w, z}};
          break;
        }
      if (violation) break;
    }
    if (*claim.prime && violation)
      return fail("prime claim contradicted by " + element_text(violation->first) + "*" + element_text(violation->second));
    if (!*claim.prime && !violation) return fail("non-prime claim has no violating pair in window");
  }

  // z's that some regular w pushes into A while z stays outside.
  std::vector<ArithElement> bad_z;
  std::optional<std::pair<ArithElement, ArithElement>> first_pair;
  for (const auto& z : elems) {
    if (a.contains(z)) continue;
    for (const auto& w : elems)
      if (arith_ann_is_zero(r, w) && a.contains(multiply(r, w, z))) {
        bad_z.push_back(z);
        if (!first_pair) first_pair = {{w, z}};
        break;
      }
  }

  if (claim.r_ideal) {
    if (*claim.r_ideal == Outcome::Holds && first_pair)
      return fail("r-ideal claim contradicted by (" + element_text(first_pair->first) + "," +
                  element_text(first_pair->second) + ")");
    if (*claim.r_ideal == Outcome::Fails && !first_pair) return fail("r-ideal failure not visible in window");
  }

  if (claim.s_r_ideal && s) {
    auto defeated = [&](const ArithElement& cand) {
      for (const auto& z : bad_z)
        if (!a.contains(multiply(r, cand, z))) return true;
      return false;
    };
    if (*claim.s_r_ideal == Outcome::Holds) {
      if (!claim.witness) return fail("S-r claim without witness");
      if (!s->contains(*claim.witness)) return fail("claimed witness not in S");
      if (defeated(*claim.witness)) return fail("witness " + element_text(*claim.witness) + " defeated in window");
    } else if (*claim.s_r_ideal == Outcome::Fails) {
      for (const auto& cand : elems)
        if (s->contains(cand) && !defeated(cand))
          return fail("candidate " + element_text(cand) + " survives every pair in window");
    }
  }
  return true;
}

bool arith_oracle_check(const ArithIdeal& a, const ArithMCS* s, int bound, std::string* detail) {
  OracleClaim claim;
  if (a.is_proper()) {
    claim.prime = arith_is_prime(a);
    claim.r_ideal = arith_is_r_ideal(a).outcome;
    if (s) {
      const auto v = arith_is_S_r_ideal(a, *s, bound);
      if (!v.is_na()) {
        claim.s_r_ideal = v.outcome;
        claim.witness = v.witness;
      }
    }
  }
  return arith_oracle_check(a, s, bound, claim, detail);
}

}  // namespace ringlab::arith
