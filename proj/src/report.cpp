#include "ringlab/report.hpp"

#include <map>

namespace ringlab {

std::string_view to_string(RecordOutcome o) {
  switch (o) {
    case RecordOutcome::Verified: return "VERIFIED";
    case RecordOutcome::Vacuous: return "VACUOUS";
    case RecordOutcome::Violation: return "VIOLATION";
  }
  return "?";
}

Json ReportRecord::to_json(bool timings) const {
  Json j;
  j["theorem"] = theorem;
  j["entry"] = entry;
  j["recipe"] = recipe;
  j["annotations"] = annotations;
  Json hyps = Json::object();
  for (const auto& [name, met] : hypotheses) hyps[name] = met;
  j["hypotheses"] = hyps;
  if (!dropped.empty()) j["dropped"] = dropped;
  j["outcome"] = std::string(to_string(outcome));
  j["expected"] = expected;
  j["checks"] = {{"verified", verified}, {"vacuous", vacuous}};
  j["witness"] = witness;
  j["counterexample"] = counterexample;
  if (!note.empty()) j["note"] = note;
  if (timings && millis) j["millis"] = *millis;
  return j;
}

void write_json_lines(std::ostream& out, const std::vector<ReportRecord>& records, bool timings) {
  for (const auto& r : records) out << r.to_json(timings).dump() << '\n';
}

std::vector<TheoremTally> tally(const std::vector<ReportRecord>& records) {
  std::vector<TheoremTally> out;
  std::map<std::string, std::size_t> at;
  for (const auto& r : records) {
    auto [it, fresh] = at.try_emplace(r.theorem, out.size());
    if (fresh) out.push_back({r.theorem});
    auto& t = out[it->second];
    t.checks += r.verified + r.vacuous;
    switch (r.outcome) {
      case RecordOutcome::Verified: ++t.verified; break;
      case RecordOutcome::Vacuous: ++t.vacuous; break;
      case RecordOutcome::Violation:
        ++t.violations;
        if (r.expected) ++t.expected;
        break;
    }
  }
  return out;
}

}  // namespace ringlab
