#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/corpus.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

enum class Scope : unsigned {
  Finite = 1U << 0,
  Arith = 1U << 1,
  Poly = 1U << 2,
  Extension = 1U << 3,
};

struct TheoremCase {
  std::string id;
  std::vector<std::string> hypotheses;
  unsigned scope = 0;  // Scope bits
  std::string statement;

  bool in_scope(Scope s) const noexcept { return (scope & static_cast<unsigned>(s)) != 0; }
};

/// Every registered theorem in report order.
const std::vector<TheoremCase>& theorem_registry();
/// Throws UnknownTheorem.
const TheoremCase& find_theorem(const std::string& id);

struct RunOptions {
  /// Hypotheses evaluated but not enforced; violations become expected.
  std::vector<std::string> drop;
  bool hunt = false;
  unsigned jobs = 1;
  bool timings = false;
  std::uint64_t seed = kDefaultSeed;
  /// Number of random pairs per ring for DM.
  std::size_t dm_pairs = 1000;
  /// Cap on |ideals| * |m.c.s. candidates| per ring.
  std::size_t combo_cap = 4096;
};

/// Records for one theorem on one entry; empty when the entry is out of scope.
std::vector<ReportRecord> run_theorem(const TheoremCase& t, const CorpusEntry& e, const CorpusSpec& corpus,
                                      const RunOptions& opt = {});

/// Theorem-major, corpus order within a theorem; identical for any `jobs`.
/// An empty id list means the whole registry. Throws UnknownTheorem.
std::vector<ReportRecord> verify(const std::vector<std::string>& ids, const CorpusSpec& corpus,
                                 const RunOptions& opt = {});

/// `verify` for one theorem with the named hypotheses left unenforced.
/// Throws UnknownTheorem or UnknownHypothesis.
std::vector<ReportRecord> counterexample_search(const std::string& id, const CorpusSpec& corpus,
                                                const std::vector<std::string>& drop, RunOptions opt = {});

}  // namespace ringlab
