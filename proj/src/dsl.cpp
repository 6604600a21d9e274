#include "ringlab/dsl.hpp"

#include <cctype>
#include <memory>

namespace ringlab::dsl {

std::string_view to_string(RingKind k) {
  switch (k) {
    case RingKind::Finite: return "finite";
    case RingKind::Arith: return "arith";
    case RingKind::IntAmalg: return "int-amalg";
    case RingKind::Poly: return "poly";
  }
  return "?";
}

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, End } kind = Kind::End;
  std::string text;
  long long value = 0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      // `Z` and the product `x` stand alone so "Z2xZ3" splits as written.
      if (c != 'Z' && c != 'x')
        while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = std::string(s.substr(i, j - i));
      if (t.text.size() > 15) throw Error(ErrorKind::Parse, "integer too large at offset " + std::to_string(i));
      t.value = std::stoll(t.text);
      i = j;
    } else if (std::string_view("()[]{}<>,/;=-").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Sym;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw Error(ErrorKind::Parse, std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct ModuleSpec {
  enum class Kind { Free, Quot, Zero } kind = Kind::Zero;
  long long k = 0;
  std::vector<ElemLiteral> gens;
};

struct Node {
  enum class Kind { Zn, ZInt, Product, Quotient, Triv, Amalg } kind = Kind::Zn;
  long long n = 0;
  std::vector<NodePtr> children;
  std::vector<ElemLiteral> gens;  // quotient / amalgamation ideal
  ModuleSpec module;
  std::string hom;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Sym && t.text[0] == c;
  }
  bool is_ident(std::string_view name, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Ident && t.text == name;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(peek().pos) + " in '" + std::string(src_) + "'");
  }

  void expect_sym(char c) {
    if (!is_sym(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected a name");
    return toks_[pos_++].text;
  }
  long long expect_int() {
    bool neg = false;
    if (is_sym('-')) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Token::Kind::Int) fail("expected an integer");
    const long long v = toks_[pos_++].value;
    return neg ? -v : v;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  ElemLiteral element() {
    if (is_sym('(')) {
      ++pos_;
      std::vector<ElemLiteral> parts{element()};
      while (is_sym(',')) {
        ++pos_;
        parts.push_back(element());
      }
      expect_sym(')');
      if (parts.size() == 1) return parts[0];
      return ElemLiteral::tuple(std::move(parts));
    }
    return ElemLiteral::integer(expect_int());
  }

  /// '(' [elem (',' elem)*] ')' or a single bare element.
  std::vector<ElemLiteral> element_list() {
    std::vector<ElemLiteral> out;
    if (!is_sym('(')) {
      out.push_back(element());
      return out;
    }
    ++pos_;
    if (is_sym(')')) {
      ++pos_;
      return out;
    }
    out.push_back(element());
    while (is_sym(',')) {
      ++pos_;
      out.push_back(element());
    }
    expect_sym(')');
    return out;
  }

  /// Comma-separated elements without surrounding parentheses.
  std::vector<ElemLiteral> bare_list() {
    std::vector<ElemLiteral> out;
    if (at_end()) return out;
    out.push_back(element());
    while (is_sym(',')) {
      ++pos_;
      out.push_back(element());
    }
    return out;
  }

  NodePtr ring() {
    NodePtr left = term();
    while (is_ident("x") && !is_sym(']', 1)) {
      ++pos_;
      auto prod = std::make_shared<Node>();
      prod->kind = Node::Kind::Product;
      prod->children = {left, term()};
      left = prod;
    }
    return left;
  }

  NodePtr term() {
    NodePtr node = atom();
    while (is_sym('/')) {
      ++pos_;
      auto q = std::make_shared<Node>();
      q->kind = Node::Kind::Quotient;
      q->children = {node};
      q->gens = element_list();
      node = q;
    }
    return node;
  }

  NodePtr atom() {
    auto node = std::make_shared<Node>();
    if (is_sym('(')) {
      ++pos_;
      NodePtr inner = ring();
      expect_sym(')');
      return inner;
    }
    if (is_ident("Z")) {
      ++pos_;
      if (peek().kind == Token::Kind::Int) {
        node->kind = Node::Kind::Zn;
        node->n = expect_int();
      } else {
        node->kind = Node::Kind::ZInt;
      }
      return node;
    }
    if (is_ident("triv")) {
      ++pos_;
      expect_sym('(');
      node->kind = Node::Kind::Triv;
      node->children = {ring()};
      expect_sym(',');
      node->module = module();
      expect_sym(')');
      return node;
    }
    if (is_ident("amalg")) {
      ++pos_;
      expect_sym('(');
      node->kind = Node::Kind::Amalg;
      NodePtr h1 = ring();
      expect_sym(',');
      NodePtr h2 = ring();
      node->children = {h1, h2};
      expect_sym(',');
      node->hom = expect_ident();
      if (node->hom != "id" && node->hom != "proj") fail("homomorphism must be 'id' or 'proj'");
      expect_sym(',');
      node->gens = element_list();
      expect_sym(')');
      return node;
    }
    fail("expected a ring expression");
  }

  ModuleSpec module() {
    ModuleSpec m;
    if (is_ident("free")) {
      ++pos_;
      expect_sym('(');
      m.kind = ModuleSpec::Kind::Free;
      m.k = expect_int();
      if (m.k < 0) fail("free module rank must be non-negative");
      expect_sym(')');
    } else if (is_ident("quot")) {
      ++pos_;
      m.kind = ModuleSpec::Kind::Quot;
      m.gens = element_list();
    } else if (peek().kind == Token::Kind::Int && peek().value == 0) {
      ++pos_;
      m.kind = ModuleSpec::Kind::Zero;
    } else {
      fail("expected free(k), quot(gens) or 0");
    }
    return m;
  }

  bool poly_suffix() {
    if (is_sym('[') && is_ident("x", 1) && is_sym(']', 2)) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::size_t& pos() { return pos_; }

 private:
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool mentions_int(const Node& n) {
  if (n.kind == Node::Kind::ZInt) return true;
  for (const auto& c : n.children)
    if (mentions_int(*c)) return true;
  return false;
}

void flatten_product(const NodePtr& n, std::vector<NodePtr>& out) {
  if (n->kind == Node::Kind::Product) {
    flatten_product(n->children[0], out);
    flatten_product(n->children[1], out);
  } else {
    out.push_back(n);
  }
}

std::vector<Elem> resolve_all(const FiniteRing& r, const std::vector<ElemLiteral>& lits) {
  std::vector<Elem> out;
  for (const auto& l : lits) out.push_back(resolve_element(r, l));
  return out;
}

struct Built {
  RingPtr ring;
  std::optional<TrivExtRing> triv;
  std::optional<AmalgRing> amalg;
};

Built build_finite(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Zn:
      if (n.n < 1) throw Error(ErrorKind::InvalidConstruction, "Z" + std::to_string(n.n) + " is not a finite ring");
      return {make_zn(static_cast<std::size_t>(n.n)), {}, {}};
    case Node::Kind::ZInt: throw Error(ErrorKind::Parse, "Z (the integers) is only allowed as a product factor");
    case Node::Kind::Product: {
      const RingPtr a = build_finite(*n.children[0]).ring;
      const RingPtr b = build_finite(*n.children[1]).ring;
      return {make_product(a, b), {}, {}};
    }
    case Node::Kind::Quotient: {
      const RingPtr r = build_finite(*n.children[0]).ring;
      const auto gens = resolve_all(*r, n.gens);
      return {make_quotient(ideal_generate(r, gens)).first, {}, {}};
    }
    case Node::Kind::Triv: {
      const RingPtr r = build_finite(*n.children[0]).ring;
      FiniteModule m;
      switch (n.module.kind) {
        case ModuleSpec::Kind::Free: m = make_module_free(r, static_cast<std::size_t>(n.module.k)); break;
        case ModuleSpec::Kind::Zero: m = make_module_free(r, 0); break;
        case ModuleSpec::Kind::Quot: {
          const auto gens = resolve_all(*r, n.module.gens);
          m = make_module_quotient(ideal_generate(r, gens));
          break;
        }
      }
      TrivExtRing t = make_trivial_extension(r, std::move(m));
      return {t.ring, t, {}};
    }
    case Node::Kind::Amalg: {
      const RingPtr h1 = build_finite(*n.children[0]).ring;
      const RingPtr h2 = build_finite(*n.children[1]).ring;
      RingHom f{h1, h2, {}};
      if (n.hom == "id") {
        if (h1->size() != h2->size()) throw Error(ErrorKind::NotAHomomorphism, "id between rings of different size");
        for (Elem a = 0; a < h1->size(); ++a) f.image.push_back(a);
      } else {
        for (Elem a = 0; a < h1->size(); ++a) {
          auto lit = parse_element(h1->literal(a));
          auto img = h2->resolve(lit);
          if (!img) throw Error(ErrorKind::NotAHomomorphism, "proj cannot map " + h1->literal(a));
          f.image.push_back(*img);
        }
      }
      check_hom(f);
      const auto gens = resolve_all(*h2, n.gens);
      AmalgRing am = make_amalgamation(f, ideal_generate(h2, gens), n.hom);
      return {am.ring, {}, am};
    }
  }
  throw Error(ErrorKind::Parse, "unreachable ring node");
}

}  // namespace

ElemLiteral parse_element(std::string_view text) {
  Parser p(text);
  ElemLiteral e = p.element();
  p.expect_end();
  return e;
}

std::vector<ElemLiteral> parse_element_list(std::string_view text) {
  Parser p(text);
  std::vector<ElemLiteral> out;
  if (p.at_end()) return out;
  if (p.is_sym('(')) {
    // "(a,b)" is a list; "((a,b))" a list holding one tuple.
    out = p.element_list();
    if (p.is_sym(',')) {
      // "(1,0),(0,1)": a bare list of tuples.
      p.pos() = 0;
      out = p.bare_list();
    }
  } else {
    out = p.bare_list();
  }
  p.expect_end();
  return out;
}

Elem resolve_element(const FiniteRing& r, const ElemLiteral& lit) {
  auto e = r.resolve(lit);
  if (!e) throw Error(ErrorKind::Parse, "'" + lit.text() + "' is not an element of " + r.recipe());
  return *e;
}

std::vector<Elem> resolve_elements(const FiniteRing& r, std::string_view text) {
  const auto lits = parse_element_list(text);
  bool all_resolve = true;
  for (const auto& l : lits) all_resolve = all_resolve && r.resolve(l).has_value();
  if (!all_resolve) {
    // "(1,0)" in a product ring means the single tuple, not two generators.
    try {
      const ElemLiteral single = parse_element(text);
      if (auto e = r.resolve(single)) return {*e};
    } catch (const Error&) {
    }
  }
  return resolve_all(r, lits);
}

ParsedRing parse_ring_expr(std::string_view text) {
  Parser p(text);
  NodePtr root = p.ring();
  const bool poly = p.poly_suffix();
  p.expect_end();

  ParsedRing out;
  out.source = std::string(text);
  if (poly) {
    if (mentions_int(*root)) throw Error(ErrorKind::Parse, "polynomial rings need a finite base");
    out.kind = RingKind::Poly;
    out.finite = build_finite(*root).ring;
    return out;
  }
  if (root->kind == Node::Kind::Amalg && root->children[0]->kind == Node::Kind::ZInt) {
    const Node& h2 = *root->children[1];
    if (h2.kind != Node::Kind::Zn || root->hom != "proj")
      throw Error(ErrorKind::Parse, "integer amalgamation must be amalg(Z, Zn, proj, (d))");
    if (root->gens.size() > 1 || (root->gens.size() == 1 && root->gens[0].is_tuple()))
      throw Error(ErrorKind::Parse, "integer amalgamation takes one generator");
    out.kind = RingKind::IntAmalg;
    out.int_amalg.n = h2.n;
    out.int_amalg.d = root->gens.empty() ? 0 : *root->gens[0].value;
    if (out.int_amalg.n < 1) throw Error(ErrorKind::InvalidConstruction, "modulus must be at least 1");
    return out;
  }
  if (mentions_int(*root)) {
    std::vector<NodePtr> factors;
    flatten_product(root, factors);
    std::vector<arith::Factor> fs;
    for (const auto& f : factors) {
      if (f->kind == Node::Kind::ZInt)
        fs.push_back(arith::Factor::integers());
      else if (f->kind == Node::Kind::Zn)
        fs.push_back(arith::Factor::mod(f->n));
      else
        throw Error(ErrorKind::Parse, "arithmetic rings allow only Z and Zn factors");
    }
    out.kind = RingKind::Arith;
    out.arith = arith::make_arith_ring(std::move(fs));
    return out;
  }
  Built b = build_finite(*root);
  out.kind = RingKind::Finite;
  out.finite = b.ring;
  out.triv = std::move(b.triv);
  out.amalg = std::move(b.amalg);
  return out;
}

RingPtr parse_ring(std::string_view text) {
  ParsedRing p = parse_ring_expr(text);
  if (p.kind != RingKind::Finite) throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a finite ring");
  return p.finite;
}

Ideal parse_ideal(const RingPtr& r, std::string_view text) {
  const auto gens = resolve_elements(*r, text);
  return ideal_generate(r, gens);
}

MulClosedSet parse_mcs(const RingPtr& r, std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.size() >= 2 && body[0] == 'S' && body[1] == '<') {
    if (body.back() != '>') throw Error(ErrorKind::Parse, "unterminated S<...> in '" + std::string(text) + "'");
    body = body.substr(2, body.size() - 3);
  }
  const auto gens = resolve_elements(*r, body);
  return mcs_generate(r, gens);
}

arith::ArithIdeal parse_arith_ideal(const arith::ArithRing& r, std::string_view text) {
  const auto lits = parse_element_list(text);
  std::vector<long long> desc;
  for (const auto& l : lits) {
    if (l.is_tuple()) throw Error(ErrorKind::Parse, "arithmetic ideal descriptors are integers");
    desc.push_back(*l.value);
  }
  if (desc.size() != r.arity())
    throw Error(ErrorKind::Parse, "ideal '" + std::string(text) + "' needs " + std::to_string(r.arity()) + " descriptors");
  return arith::make_arith_ideal(r, std::move(desc));
}

arith::ArithMCS parse_arith_mcs(const arith::ArithRing& r, std::string_view text) {
  Parser p(text);
  auto descriptor = [&]() {
    arith::McsDescriptor d;
    if (p.is_ident("units")) {
      ++p.pos();
      d.kind = arith::McsDescriptor::Kind::Units;
    } else if (p.is_ident("all")) {
      ++p.pos();
      d.kind = arith::McsDescriptor::Kind::All;
    } else if (p.is_sym('{')) {
      ++p.pos();
      d.kind = arith::McsDescriptor::Kind::FinSet;
      d.set.push_back(p.expect_int());
      while (p.is_sym(',')) {
        ++p.pos();
        d.set.push_back(p.expect_int());
      }
      p.expect_sym('}');
    } else {
      p.fail("expected units, all or {set}");
    }
    return d;
  };
  std::vector<arith::McsDescriptor> ds;
  if (p.is_sym('(')) {
    ++p.pos();
    ds.push_back(descriptor());
    while (p.is_sym(',')) {
      ++p.pos();
      ds.push_back(descriptor());
    }
    p.expect_sym(')');
  } else {
    ds.push_back(descriptor());
  }
  p.expect_end();
  if (ds.size() != r.arity())
    throw Error(ErrorKind::Parse, "m.c.s. '" + std::string(text) + "' needs " + std::to_string(r.arity()) + " descriptors");
  return arith::make_arith_mcs(r, std::move(ds));
}

PolyIdealSpec parse_poly_spec(const RingPtr& base, std::string_view text) {
  Parser p(text);
  if (p.is_ident("content")) {
    ++p.pos();
    p.expect_sym('(');
    const auto gens = p.element_list();
    // content(2,3) as well as content((2,3))
    std::vector<ElemLiteral> all = gens;
    while (p.is_sym(',')) {
      ++p.pos();
      all.push_back(p.element());
    }
    p.expect_sym(')');
    p.expect_end();
    return PolyIdealSpec::content(ideal_generate(base, resolve_all(*base, all)));
  }
  if (p.is_ident("kernel")) {
    ++p.pos();
    p.expect_sym('(');
    const ElemLiteral a = p.element();
    p.expect_sym(',');
    const auto gens = p.element_list();
    p.expect_sym(')');
    p.expect_end();
    return PolyIdealSpec::kernel(resolve_element(*base, a), ideal_generate(base, resolve_all(*base, gens)));
  }
  p.fail("expected content(...) or kernel(...)");
}

Poly parse_poly(const RingPtr& base, std::string_view text) {
  Parser p(text);
  const auto lits = p.bare_list();
  p.expect_end();
  return Poly(base, resolve_all(*base, lits));
}

}  // namespace ringlab::dsl
