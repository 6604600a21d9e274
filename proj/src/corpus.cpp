#include "ringlab/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

namespace ringlab {
namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Builds the annotation objects once so a bad line fails at load time.
void type_check(const CorpusEntry& e) {
  const auto& pr = e.ring;
  switch (pr.kind) {
    case dsl::RingKind::Finite:
      if (e.ideal) dsl::parse_ideal(pr.finite, *e.ideal);
      if (e.mcs) dsl::parse_mcs(pr.finite, *e.mcs);
      break;
    case dsl::RingKind::Arith:
      if (!e.ideal) throw Error(ErrorKind::Parse, "arithmetic entry '" + e.line + "' needs ideal=");
      dsl::parse_arith_ideal(pr.arith, *e.ideal);
      if (e.mcs) dsl::parse_arith_mcs(pr.arith, *e.mcs);
      break;
    case dsl::RingKind::IntAmalg: {
      if (e.ideal) {
        const auto z = arith::make_arith_ring({arith::Factor::integers()});
        const auto a = dsl::parse_arith_ideal(z, *e.ideal);
        if (a.descriptors[0] != 0) throw Error(ErrorKind::Parse, "integer amalgamation supports ideal=(0) only");
      }
      if (e.mcs) dsl::parse_arith_mcs(arith::make_arith_ring({arith::Factor::integers()}), *e.mcs);
      break;
    }
    case dsl::RingKind::Poly:
      if (e.ideal) dsl::parse_poly_spec(pr.finite, *e.ideal);
      if (e.mcs) dsl::parse_mcs(pr.finite, *e.mcs);
      break;
  }
}

}  // namespace

CorpusEntry parse_corpus_line(std::string_view line, std::size_t index) {
  CorpusEntry e;
  e.index = index;
  e.line = trim(line);
  const auto parts = split(e.line, ';');
  if (parts.empty() || parts[0].empty()) throw Error(ErrorKind::Parse, "empty corpus entry");
  e.expr = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected key=value in '" + parts[i] + "'");
    const std::string key = trim(std::string_view(parts[i]).substr(0, eq));
    const std::string value = trim(std::string_view(parts[i]).substr(eq + 1));
    if (key == "ideal")
      e.ideal = value;
    else if (key == "mcs")
      e.mcs = value;
    else
      throw Error(ErrorKind::Parse, "unknown annotation '" + key + "'");
  }
  e.ring = dsl::parse_ring_expr(e.expr);
  type_check(e);
  return e;
}

CorpusSpec parse_corpus(std::istream& in) {
  CorpusSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      spec.entries.push_back(parse_corpus_line(line, spec.entries.size()));
    } catch (const Error& err) {
      throw Error(err.kind(), "corpus line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return spec;
}

CorpusSpec load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

std::vector<std::string> default_corpus_lines() {
  std::vector<std::string> lines;
  for (int n = 1; n <= 30; ++n) lines.push_back("Z" + std::to_string(n));
  for (int a = 2; a <= 32; ++a)
    for (int b = a; a * b <= 64; ++b) lines.push_back("Z" + std::to_string(a) + " x Z" + std::to_string(b));
  for (const char* q : {"Z8/(4)", "Z12/(4)", "Z12/(6)", "Z18/(6)", "Z24/(8)", "Z30/(10)", "(Z4 x Z6)/((2,0))"})
    lines.emplace_back(q);
  for (const char* t : {"triv(Z2, free(1))", "triv(Z2, free(2))", "triv(Z3, free(1))", "triv(Z3, free(2))",
                        "triv(Z4, quot(2))", "triv(Z4, free(1))"})
    lines.emplace_back(t);
  for (const char* a : {"amalg(Z4, Z4, id, (2))", "amalg(Z2 x Z2, Z2 x Z2, id, ((1,0)))", "amalg(Z2, Z2, id, (0))",
                        "amalg(Z3, Z3, id, (0))", "amalg(Z, Z4, proj, (2)) ; mcs=units",
                        "amalg(Z, Z4, proj, (2)) ; mcs={1}", "amalg(Z, Z4, proj, (0)) ; mcs=units",
                        "amalg(Z, Z6, proj, (3)) ; mcs=all"})
    lines.emplace_back(a);
  for (const char* z : {"Z ; ideal=(3) ; mcs=units", "Z ; ideal=(0) ; mcs=units", "Z ; ideal=(0) ; mcs={1}",
                        "Z x Z ; ideal=(0,2) ; mcs=(units,all)", "Z x Z ; ideal=(0,2) ; mcs=({1},{1})",
                        "Z x Z ; ideal=(0,2) ; mcs=(units,units)", "Z x Z ; ideal=(0,0) ; mcs=(units,{1,-1})",
                        "Z x Z4 ; ideal=(0,2) ; mcs=(units,units)", "Z x Z4 ; ideal=(3,2) ; mcs=(units,{1,3})"})
    lines.emplace_back(z);
  for (const char* p : {"Z2[x]", "Z3[x]", "Z6[x]", "Z12[x]", "Z2[x] ; ideal=kernel(1,(0)) ; mcs=1",
                        "Z3[x] ; ideal=kernel(1,(0)) ; mcs=1,2", "Z6[x] ; ideal=content((2)) ; mcs=1",
                        "Z4[x] ; ideal=content((2)) ; mcs=1,3"})
    lines.emplace_back(p);
  return lines;
}

CorpusSpec default_corpus() {
  CorpusSpec spec;
  for (const auto& l : default_corpus_lines()) spec.entries.push_back(parse_corpus_line(l, spec.entries.size()));
  return spec;
}

std::vector<MulClosedSet> mcs_candidates(const RingPtr& r) {
  std::vector<MulClosedSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](MulClosedSet s) {
    if (seen.insert(s.members()).second) out.push_back(std::move(s));
  };
  add(mcs_generate(r, {}));
  add(mcs_from_members(r, r->units()));
  for (const auto& p : prime_ideals(r)) add(mcs_complement(p));
  for (Elem g = 0; g < r->size(); ++g) {
    const Elem gens[] = {g};
    add(mcs_generate(r, gens));
  }
  return out;
}

int poly_search_degree(std::size_t ring_size, std::size_t budget) {
  int best = 0;
  for (int d = 0; d <= kDefaultDegreeBound; ++d) {
    std::size_t total = 1;
    for (int i = 0; i <= d && total <= budget; ++i) total *= ring_size;
    if (total <= budget) best = d;
  }
  return best;
}

}  // namespace ringlab
