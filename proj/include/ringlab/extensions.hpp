#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/arith.hpp"
#include "ringlab/classify.hpp"

namespace ringlab {

/// A finite module over a FiniteRing, stored as tables. Element 0 is zero.
struct FiniteModule {
  RingPtr ring;
  std::size_t size = 0;
  std::vector<Elem> add;  // size*size
  std::vector<Elem> act;  // ring->size()*size, act[r*size+m] = r.m
  std::vector<std::string> literals;
  std::string recipe;  // "free(k)", "quot(gens)"
  ElementResolver resolve;

  Elem plus(Elem a, Elem b) const { return add[a * size + b]; }
  Elem scale(Elem r, Elem m) const { return act[r * size + m]; }
};

/// R^k with componentwise action; k = 0 gives the zero module.
FiniteModule make_module_free(const RingPtr& r, std::size_t k, std::size_t limit = size_limit());
/// R/J with the induced action.
FiniteModule make_module_quotient(const Ideal& j);
/// Throws ConstructionBug on any failed module axiom.
void validate_module(const FiniteModule& m);

bool module_is_torsion_free(const FiniteModule& m);
Ideal module_ann(const FiniteModule& m);
/// Whether a set of module elements is a submodule.
bool is_submodule(const FiniteModule& m, const ElementSet& n);

struct TrivExtRing {
  RingPtr base;
  FiniteModule module;
  RingPtr ring;

  Elem embed(Elem r, Elem m) const { return static_cast<Elem>(r * module.size + m); }
  Elem base_part(Elem e) const { return static_cast<Elem>(e / module.size); }
  Elem module_part(Elem e) const { return static_cast<Elem>(e % module.size); }
};

TrivExtRing make_trivial_extension(const RingPtr& r, FiniteModule m, std::size_t limit = size_limit());

/// A x N as an ideal of the extension. Throws NotAnIdeal naming (a, m) with
/// a.m outside N.
Ideal triv_ideal(const TrivExtRing& t, const Ideal& a, const ElementSet& n);

enum class LiftMode { SZero, SFull };
MulClosedSet lift_mcs_triv(const TrivExtRing& t, const MulClosedSet& s, LiftMode mode);

struct TrivEquivalenceReport {
  Outcome base = Outcome::NotApplicable;    // A is S-r
  Outcome s_zero = Outcome::NotApplicable;  // A x M is (S x 0)-r
  Outcome s_full = Outcome::NotApplicable;  // A x M is (S x M)-r
  bool disjoint = false;
  bool torsion_free = false;
  /// Union of Ann(a) over nonzero a inside Ann(M); the reading in force.
  bool ann_union_nonzero = false;
  /// Same union taken over every a, zero included.
  bool ann_union_literal = false;

  std::string pattern() const;
  bool hypotheses_met() const { return disjoint && torsion_free && ann_union_nonzero; }
  /// Under met hypotheses the three statements agree.
  bool consistent() const;
};

TrivEquivalenceReport triv_equivalence_check(const TrivExtRing& t, const Ideal& a, const MulClosedSet& s);
TrivEquivalenceReport triv_equivalence_check(const Ideal& a, const MulClosedSet& s, const FiniteModule& m);

struct AmalgRing {
  RingHom f;
  Ideal j;
  RingPtr ring;
  std::vector<std::pair<Elem, Elem>> carrier;  // sorted, (0,0) first

  const RingPtr& h1() const { return f.domain; }
  const RingPtr& h2() const { return f.codomain; }
  std::optional<Elem> index_of(Elem w, Elem y) const;
};

/// {(w, f(w)+j)} as a subring of H1 x H2. `hom_name` only feeds the recipe.
AmalgRing make_amalgamation(const RingHom& f, const Ideal& j, const std::string& hom_name = "f",
                            std::size_t limit = size_limit());
/// A x_f J = {(a, f(a)+j) : a in A, j in J}.
Ideal amalg_ideal(const AmalgRing& am, const Ideal& a);
/// S x_f J likewise.
MulClosedSet amalg_mcs(const AmalgRing& am, const MulClosedSet& s);

enum class Direction { Forward, Backward };

struct AmalgTransferReport {
  Direction direction = Direction::Forward;
  Outcome base = Outcome::NotApplicable;   // A is S-r in H1
  Outcome amalg = Outcome::NotApplicable;  // A x_f J is (S x_f J)-r
  bool disjoint = false;
  bool epimorphism = false;
  bool domain = false;
  /// J inside zd(H2); J = 0 counts as satisfied.
  bool j_in_zd = false;
  bool isomorphism = false;

  bool hypotheses_met() const;
  /// Antecedent Holds and consequent Fails under met hypotheses.
  bool violated() const;
};

AmalgTransferReport amalg_transfer_check(const Ideal& a, const MulClosedSet& s, const AmalgRing& am, Direction dir);

/// Z x_f J for the canonical f: Z -> Z_n and J = dZ_n, with A = 0 and S an
/// m.c.s. of Z. Decided in closed form, confirmed on a window.
struct IntAmalgReport {
  long long n = 0;
  long long d = 0;
  bool j_in_zd = false;
  bool disjoint = false;
  Outcome outcome = Outcome::NotApplicable;
  std::optional<std::pair<long long, long long>> witness;  // (s, f(s)+j)
  bool oracle_agrees = false;
};

IntAmalgReport int_amalg_zero_forward(long long n, long long d, const arith::ArithMCS& s, int bound = kDefaultWitnessBound);

}  // namespace ringlab
