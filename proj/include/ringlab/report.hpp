#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ringlab {

using Json = nlohmann::ordered_json;

enum class RecordOutcome { Verified, Vacuous, Violation };

std::string_view to_string(RecordOutcome o);

/// Result of one theorem on one corpus entry and one focus annotation.
///
/// Inner quantifiers (the m.c.s. sweep, auxiliary ideals, element pairs)
/// are folded in: `verified` and `vacuous` count the combinations, and the
/// hypothesis flags, annotations, witness and counterexample describe the
/// representative one (the first violation, else the first verified, else
/// the first vacuous). A VIOLATION record therefore names the exact
/// combination that failed.
struct ReportRecord {
  std::string theorem;
  std::string entry;
  std::string recipe;
  Json annotations = Json::object();
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<std::string> dropped;
  RecordOutcome outcome = RecordOutcome::Vacuous;
  bool expected = false;
  std::size_t verified = 0;
  std::size_t vacuous = 0;
  Json witness;
  Json counterexample;
  std::string note;
  std::optional<double> millis;

  bool unexpected_violation() const { return outcome == RecordOutcome::Violation && !expected; }
  Json to_json(bool timings = false) const;
};

void write_json_lines(std::ostream& out, const std::vector<ReportRecord>& records, bool timings = false);

struct TheoremTally {
  std::string theorem;
  std::size_t verified = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t expected = 0;
  std::size_t checks = 0;
};

/// Per-theorem record counts in first-appearance order.
std::vector<TheoremTally> tally(const std::vector<ReportRecord>& records);

}  // namespace ringlab
