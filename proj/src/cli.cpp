#include "ringlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/corpus.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::cli {
namespace {

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string describe(const Verdict& v, const FiniteRing& r) {
  std::string out(v.is_holds() ? "yes" : v.is_fails() ? "no" : "n/a");
  if (v.is_holds() && v.witness) out += "  witness s=" + r.literal(*v.witness);
  if (v.is_fails() && !v.counterexample.empty()) {
    out += "  counterexample (" + join_literals(r, v.counterexample) + ")";
    if (v.defeated) out += " defeats s=" + r.literal(*v.defeated);
  }
  if (v.is_na()) out += " (" + v.reason + ")";
  return out;
}

std::string describe(const arith::ArithVerdict& v) {
  std::string out(v.is_holds() ? "yes" : v.is_fails() ? "no" : "n/a");
  if (v.is_holds() && v.witness) out += "  witness s=" + arith::element_text(*v.witness);
  if (v.is_fails() && !v.counterexample.empty()) {
    std::vector<std::string> parts;
    for (const auto& x : v.counterexample) parts.push_back(arith::element_text(x));
    out += "  counterexample (" + join(parts) + ")";
  }
  if (v.is_na()) out += " (" + v.reason + ")";
  return out;
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

void classify_finite(std::ostream& out, const RingPtr& r, const std::string& ideal, const std::string& mcs,
                     bool all_predicates) {
  const FiniteRing& R = *r;
  row(out, "ring", R.recipe() + "  (" + std::to_string(R.size()) + " elements)");
  std::optional<MulClosedSet> s;
  if (!mcs.empty()) {
    s = dsl::parse_mcs(r, mcs);
    row(out, "mcs", s->text() + " = {" + join_literals(R, s->members().elements()) + "}");
  }
  if (ideal.empty()) {
    for (const auto& a : all_ideals(r)) {
      std::string line = "size=" + std::to_string(a.size());
      line += "  r=" + describe(is_r_ideal(a), R).substr(0, 3);
      line += "  prime=" + std::string(a.is_proper() && is_prime(a) ? "yes" : "no");
      if (s) line += "  S-r=" + describe(is_S_r_ideal(a, *s), R);
      row(out, a.text(), line);
    }
  } else {
    const Ideal a = dsl::parse_ideal(r, ideal);
    row(out, "ideal", a.text() + " = {" + join_literals(R, a.members().elements()) + "}");
    row(out, "r", describe(is_r_ideal(a), R));
    row(out, "pr", describe(is_pr_ideal(a), R));
    row(out, "prime", describe(prime_verdict(a), R));
    row(out, "maximal", a.is_proper() && is_maximal(a) ? "yes" : "no");
    row(out, "z0", describe(is_z0_ideal(a), R));
    if (s) {
      row(out, "S-r", describe(is_S_r_ideal(a, *s), R));
      row(out, "S-prime", describe(is_S_prime(a, *s), R));
      row(out, "S-z0", describe(is_S_z0_ideal(a, *s), R));
    }
  }
  if (all_predicates) {
    row(out, "reduced", R.is_reduced() ? "yes" : "no");
    row(out, "uz", describe(is_uz_ring(r), R));
    if (s) row(out, "S-uz", describe(is_S_uz_ring(r, *s), R));
    row(out, "property-A", describe(has_property_A(r), R));
    row(out, "a.c.", describe(has_ac(r), R));
    row(out, "f.a.c.", describe(has_fac(r), R));
    row(out, "units", "{" + join_literals(R, R.units().elements()) + "}");
    row(out, "zero-divisors", "{" + join_literals(R, R.zero_divisors().elements()) + "}");
  }
}

void classify_arith(std::ostream& out, const arith::ArithRing& ar, const std::string& ideal, const std::string& mcs,
                    int bound) {
  if (ideal.empty()) throw Error(ErrorKind::Parse, "arithmetic rings need --ideal");
  const auto a = dsl::parse_arith_ideal(ar, ideal);
  row(out, "ring", ar.text());
  row(out, "ideal", a.text());
  if (!a.is_proper()) {
    row(out, "proper", "no");
    return;
  }
  row(out, "prime", arith::arith_is_prime(a) ? "yes" : "no");
  row(out, "r", describe(arith::arith_is_r_ideal(a)));
  row(out, "in-zd", arith::arith_subset_zd(a) ? "yes" : "no");
  std::optional<arith::ArithMCS> s;
  if (!mcs.empty()) {
    s = dsl::parse_arith_mcs(ar, mcs);
    row(out, "mcs", s->text());
    row(out, "S-r", describe(arith::arith_is_S_r_ideal(a, *s, bound)));
  }
  const int window = std::max<int>(bound, 2 * static_cast<int>(*std::max_element(a.descriptors.begin(), a.descriptors.end())));
  std::string detail;
  const bool agrees = arith::arith_oracle_check(a, s ? &*s : nullptr, window, &detail);
  row(out, "oracle", std::string(agrees ? "agrees" : "DISAGREES") + " on window " + std::to_string(window) +
                         (detail.empty() ? "" : "  " + detail));
}

void classify_int_amalg(std::ostream& out, const dsl::IntAmalgSpec& spec, const std::string& mcs, int bound) {
  const auto z = arith::make_arith_ring({arith::Factor::integers()});
  const auto s = dsl::parse_arith_mcs(z, mcs.empty() ? "units" : mcs);
  const auto rep = int_amalg_zero_forward(spec.n, spec.d, s, bound);
  row(out, "ring", "Z x_f " + std::to_string(rep.d) + "Z" + std::to_string(rep.n));
  row(out, "ideal", "0 x_f J");
  row(out, "mcs", s.text());
  row(out, "J-in-zd", rep.j_in_zd ? "yes" : "no");
  row(out, "disjoint", rep.disjoint ? "yes" : "no");
  std::string v(to_string(rep.outcome));
  if (rep.witness) v += "  witness s=(" + std::to_string(rep.witness->first) + "," + std::to_string(rep.witness->second) + ")";
  row(out, "S-r", v);
  row(out, "oracle", rep.oracle_agrees ? "agrees" : "DISAGREES");
}

int print_records(std::ostream& out, const std::vector<ReportRecord>& recs, const std::string& json_path,
                  bool timings) {
  if (!json_path.empty()) {
    if (json_path == "-") {
      write_json_lines(out, recs, timings);
    } else {
      std::ofstream f(json_path);
      if (!f) throw Error(ErrorKind::Parse, "cannot write '" + json_path + "'");
      write_json_lines(f, recs, timings);
    }
  }
  std::ostream& summary = json_path == "-" ? std::cerr : out;
  summary << std::left << std::setw(10) << "theorem" << std::right << std::setw(10) << "verified" << std::setw(9)
          << "vacuous" << std::setw(11) << "violations" << std::setw(10) << "expected" << std::setw(10) << "checks"
          << '\n';
  std::size_t unexpected = 0;
  for (const auto& t : tally(recs)) {
    summary << std::left << std::setw(10) << t.theorem << std::right << std::setw(10) << t.verified << std::setw(9)
            << t.vacuous << std::setw(11) << t.violations << std::setw(10) << t.expected << std::setw(10) << t.checks
            << '\n';
    unexpected += t.violations - t.expected;
  }
  std::size_t shown = 0;
  for (const auto& r : recs) {
    if (r.outcome != RecordOutcome::Violation || shown == 10) continue;
    summary << (r.expected ? "expected VIOLATION " : "VIOLATION ") << r.to_json().dump() << '\n';
    ++shown;
  }
  summary << recs.size() << " records, " << unexpected << " unexpected violations\n";
  return unexpected ? 1 : 0;
}

CorpusSpec corpus_from(const std::string& path) { return path.empty() ? default_corpus() : load_corpus(path); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideal classification and theorem verification over finite and arithmetic rings", "ringlab"};
  app.require_subcommand(1);

  std::string ring, ideal, mcs, corpus_path, json_path, theorem;
  std::vector<std::string> theorem_ids, drop, poly_args;
  bool all_predicates = false, timings = false, force_search = false;
  int bound = kDefaultWitnessBound;
  int degree = kDefaultDegreeBound;
  unsigned jobs = 1;

  auto* classify = app.add_subcommand("classify", "Classify an ideal (or every ideal) of a ring");
  classify->add_option("ring", ring, "Ring expression")->required();
  classify->add_option("--ideal", ideal, "Ideal generators");
  classify->add_option("--mcs", mcs, "Multiplicatively closed set generators");
  classify->add_flag("--all-predicates", all_predicates, "Also report ring-level predicates");
  classify->add_option("--bound", bound, "Witness / oracle window bound for arithmetic rings");

  auto* ideals = app.add_subcommand("ideals", "List every ideal of a finite ring");
  ideals->add_option("ring", ring, "Ring expression")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem registry over a corpus");
  verify_cmd->add_option("--theorems", theorem_ids, "Theorem ids (default: all)")->delimiter(',');
  verify_cmd->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads");
  verify_cmd->add_option("--json", json_path, "Write JSON lines here ('-' for stdout)");
  verify_cmd->add_flag("--timings", timings, "Include per-record millis");

  auto* hunt = app.add_subcommand("hunt", "Re-run a theorem with hypotheses left unenforced");
  hunt->add_option("theorem", theorem, "Theorem id")->required();
  hunt->add_option("--drop", drop, "Hypotheses to drop")->required()->delimiter(',');
  hunt->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  hunt->add_option("--jobs", jobs, "Worker threads");
  hunt->add_option("--json", json_path, "Write JSON lines here ('-' for stdout)");

  auto* poly = app.add_subcommand("poly", "Polynomial-ring checks over a finite base");
  poly->add_option("base", ring, "Base ring expression")->required();
  poly->add_option("args", poly_args, "content <gens> | kernel <a> <gens> | sunit <coeffs> | regular <coeffs> | dm <w> <z>")
      ->required();
  poly->add_option("--mcs", mcs, "Constant multiplicatively closed set (default {1})");
  poly->add_option("--degree", degree, "Search degree bound");
  poly->add_flag("--search", force_search, "content: skip the theorem gates");

  auto* localize_cmd = app.add_subcommand("localize", "Localize a finite ring at a multiplicatively closed set");
  localize_cmd->add_option("ring", ring, "Ring expression")->required();
  localize_cmd->add_option("--mcs", mcs, "Generators of S")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (classify->parsed()) {
      const auto pr = dsl::parse_ring_expr(ring);
      switch (pr.kind) {
        case dsl::RingKind::Finite: classify_finite(out, pr.finite, ideal, mcs, all_predicates); break;
        case dsl::RingKind::Arith: classify_arith(out, pr.arith, ideal, mcs, bound); break;
        case dsl::RingKind::IntAmalg: classify_int_amalg(out, pr.int_amalg, mcs, bound); break;
        case dsl::RingKind::Poly: throw Error(ErrorKind::Parse, "use the poly subcommand for polynomial rings");
      }
      return 0;
    }
    if (ideals->parsed()) {
      const RingPtr r = dsl::parse_ring(ring);
      const auto all = all_ideals(r);
      for (const auto& a : all)
        row(out, a.text(), "{" + join_literals(*r, a.members().elements()) + "}" + (a.is_proper() ? "" : "  unit"));
      out << all.size() << " ideals\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      RunOptions opt;
      opt.jobs = jobs;
      opt.timings = timings;
      return print_records(out, verify(theorem_ids, corpus_from(corpus_path), opt), json_path, timings);
    }
    if (hunt->parsed()) {
      RunOptions opt;
      opt.jobs = jobs;
      return print_records(out, counterexample_search(theorem, corpus_from(corpus_path), drop, opt), json_path, false);
    }
    if (poly->parsed()) {
      const RingPtr base = dsl::parse_ring(ring);
      const MulClosedSet s = dsl::parse_mcs(base, mcs);
      const std::string& mode = poly_args[0];
      const std::vector<std::string> rest(poly_args.begin() + 1, poly_args.end());
      auto need = [&](std::size_t n) {
        if (rest.size() < n) throw Error(ErrorKind::Parse, "poly " + mode + " needs " + std::to_string(n) + " argument(s)");
      };
      if (mode == "content") {
        const Ideal a = dsl::parse_ideal(base, join(rest));
        if (a.members().intersects(s.members())) {
          out << "n/a (" << reason::kDisjointness << ")\n";
          return 0;
        }
        const PolyVerdict v = force_search ? bounded_S_r_search(PolyIdealSpec::content(a), s, degree)
                                           : decide_content_S_r(a, s, degree);
        out << v.text() << '\n';
      } else if (mode == "kernel") {
        need(1);
        const Elem point = dsl::resolve_element(*base, dsl::parse_element(rest[0]));
        const std::vector<std::string> gens(rest.begin() + 1, rest.end());
        const PolyIdealSpec spec = PolyIdealSpec::kernel(point, dsl::parse_ideal(base, join(gens)));
        out << bounded_S_r_search(spec, s, degree).text() << '\n';
      } else if (mode == "sunit") {
        need(1);
        const SUnitResult res = poly_s_unit_check(dsl::parse_poly(base, join(rest)), s, degree);
        out << to_string(res.kind);
        if (res.witness) out << " witness " << res.witness->text();
        if (!res.note.empty()) out << "  " << res.note;
        out << '\n';
      } else if (mode == "regular") {
        need(1);
        out << (mccoy_regular(dsl::parse_poly(base, join(rest))) ? "regular" : "zero divisor") << '\n';
      } else if (mode == "dm") {
        need(2);
        const Poly w = dsl::parse_poly(base, rest[0]);
        const Poly z = dsl::parse_poly(base, rest[1]);
        out << (dedekind_mertens_check(w, z) ? "holds" : "FAILS") << " for w=" << w.text() << ", z=" << z.text()
            << '\n';
      } else {
        throw Error(ErrorKind::Parse, "unknown poly mode '" + mode + "'");
      }
      return 0;
    }
    if (localize_cmd->parsed()) {
      const RingPtr r = dsl::parse_ring(ring);
      const MulClosedSet s = dsl::parse_mcs(r, mcs);
      const LocalizationResult loc = localize(r, s);
      row(out, "mcs", s.text() + " = {" + join_literals(*r, s.members().elements()) + "}");
      row(out, "idempotent", r->literal(loc.absorbing_idempotent));
      row(out, "localized", loc.localized->recipe() + "  (" + std::to_string(loc.localized->size()) + " elements)");
      row(out, "kernel", loc.kernel.text() + " = {" + join_literals(*r, loc.kernel.members().elements()) + "}");
      const RingPtr oracle = localize_oracle(r, s);
      const bool iso = find_isomorphism(loc.localized, oracle).has_value();
      row(out, "oracle", std::string(iso ? "isomorphic" : "NOT isomorphic") + " to fraction ring of " +
                             std::to_string(oracle->size()) + " elements");
      return iso ? 0 : 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConstructionBug ? 3 : 2;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ringlab::cli
