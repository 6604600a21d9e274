#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/dsl.hpp"

namespace ringlab {

/// One corpus line: `<ring-expr> [; ideal=<...>] [; mcs=<...>]`.
struct CorpusEntry {
  std::size_t index = 0;
  std::string line;
  std::string expr;
  std::optional<std::string> ideal;
  std::optional<std::string> mcs;
  dsl::ParsedRing ring;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  std::size_t size_limit = ringlab::size_limit();
  int degree_bound = kDefaultDegreeBound;
  int fac_cap = kDefaultFacCap;
};

/// Parses and type-checks one line; throws Parse on malformed input.
CorpusEntry parse_corpus_line(std::string_view line, std::size_t index = 0);
/// Blank lines and `#` comments are skipped.
CorpusSpec parse_corpus(std::istream& in);
CorpusSpec load_corpus(const std::string& path);

/// The corpus lines `default_corpus` is built from.
std::vector<std::string> default_corpus_lines();
CorpusSpec default_corpus();

/// Candidate multiplicatively closed sets swept when an entry carries no
/// m.c.s.: {1}, the units, R \ P for every prime P, and <g> for every g,
/// deduplicated in that order.
std::vector<MulClosedSet> mcs_candidates(const RingPtr& r);

/// Largest D <= kDefaultDegreeBound with |R|^(D+1) <= budget (at least 0).
int poly_search_degree(std::size_t ring_size, std::size_t budget = 2000);

}  // namespace ringlab
