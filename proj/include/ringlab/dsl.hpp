#pragma once

// Ring-expression language.
//
//   ring    := term ('x' term)*
//   term    := atom ('/' ideal)*
//   atom    := 'Z' INT | 'Z' | '(' ring ')'
//            | 'triv' '(' ring ',' module ')'
//            | 'amalg' '(' ring ',' ring ',' ('id' | 'proj') ',' ideal ')'
//   module  := 'free' '(' INT ')' | 'quot' '(' elem (',' elem)* ')' | '0'
//   ideal   := '(' [elem (',' elem)*] ')'
//   elem    := INT | '(' elem (',' elem)* ')'
//
// A product whose factors include a bare `Z` is an arithmetic ring; a ring
// followed by `[x]` is a polynomial ring over it. Whitespace is ignored.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/arith.hpp"
#include "ringlab/extensions.hpp"
#include "ringlab/poly.hpp"

namespace ringlab::dsl {

enum class RingKind { Finite, Arith, IntAmalg, Poly };

std::string_view to_string(RingKind k);

/// Z x_f J with f: Z -> Z_n canonical and J = dZ_n.
struct IntAmalgSpec {
  long long n = 0;
  long long d = 0;
};

/// A parsed ring expression plus whatever construction data later checks
/// need (the module of a trivial extension, the map of an amalgamation).
struct ParsedRing {
  RingKind kind = RingKind::Finite;
  std::string source;
  RingPtr finite;  // Finite rings, and the base of Poly rings
  arith::ArithRing arith;
  IntAmalgSpec int_amalg;
  std::optional<TrivExtRing> triv;
  std::optional<AmalgRing> amalg;
};

ParsedRing parse_ring_expr(std::string_view text);
/// Finite ring only; anything else is a Parse error.
RingPtr parse_ring(std::string_view text);

ElemLiteral parse_element(std::string_view text);
/// "(g1,g2)", "g1,g2" or "" (empty list).
std::vector<ElemLiteral> parse_element_list(std::string_view text);
Elem resolve_element(const FiniteRing& r, const ElemLiteral& lit);
std::vector<Elem> resolve_elements(const FiniteRing& r, std::string_view text);

Ideal parse_ideal(const RingPtr& r, std::string_view text);
/// "S<g1,...>", "(g1,...)" or a bare list; 1 is always included.
MulClosedSet parse_mcs(const RingPtr& r, std::string_view text);

arith::ArithIdeal parse_arith_ideal(const arith::ArithRing& r, std::string_view text);
/// "(units,all)", "({1},{1,-1})", or a single descriptor for one factor.
arith::ArithMCS parse_arith_mcs(const arith::ArithRing& r, std::string_view text);

/// "content(A)" or "kernel(a, B)".
PolyIdealSpec parse_poly_spec(const RingPtr& base, std::string_view text);
/// Comma-separated coefficients, constant first.
Poly parse_poly(const RingPtr& base, std::string_view text);

}  // namespace ringlab::dsl
