#include "gnslab_cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gnslab/constructions.hpp"
#include "gnslab/document.hpp"
#include "gnslab/enumeration.hpp"
#include "gnslab/error.hpp"
#include "gnslab/export.hpp"
#include "gnslab/gns.hpp"
#include "gnslab/numerical_semigroup.hpp"
#include "gnslab/wilf.hpp"

namespace gnslab::cli {
namespace {

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t v = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw Error(Errc::kParseError, "not an integer list: '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::kEmptyGenerators, "empty generator list");
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("GNSLAB_THREADS")) {
    int v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v >= 1) return v;
  }
  return 1;
}

template <class Range>
std::string join(const Range& r, std::string_view sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : r) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& out, const WilfReport& w) {
  out << "wilf " << to_string(w.variant) << ": " << w.lhs << " >= " << w.rhs << " "
      << (w.holds ? "holds" : "FAILS") << " (margin " << w.margin
      << ", sufficient condition " << yes_no(w.sufficient_condition) << ")\n";
}

// ---------------------------------------------------------------------------

int cmd_ns(const std::string& gens_text, std::ostream& out) {
  const auto s = NumericalSemigroup::from_generators(parse_list(gens_text));
  const auto inv = invariants(s);
  const auto k = classify(s);
  const auto w = wilf_check(s);
  out << "generators: " << join(s.generators()) << "\n";
  out << "gaps: " << join(s.gaps()) << "\n";
  out << "g=" << inv.g << " m=" << *inv.multiplicity << " e=" << inv.e << " t=" << inv.t
      << " F=" << *inv.frobenius << " n=" << inv.n << " c=" << inv.c << "\n";
  out << "pseudo_frobenius: " << join(pseudo_frobenius(s)) << "\n";
  out << "special_gaps: " << join(special_gaps(s)) << "\n";
  out << "irreducible=" << yes_no(k.irreducible) << " symmetric=" << yes_no(k.symmetric)
      << " pseudo_symmetric=" << yes_no(k.pseudo_symmetric)
      << " max_embedding_dimension=" << yes_no(k.max_embedding_dimension) << "\n";
  print_report(out, w);
  out << "margin m+e-2(t+1)=" << margin_of(s) << "\n";
  if (!w.holds) {
    out << "witness: <" << join(s.generators(), ",") << ">\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string construction;
  std::vector<std::string> bases;
  int dimension = 2;
  bool dimension_given = false;
  std::string out_path;
};

SemigroupDocument build_document(const ConstructArgs& a) {
  std::vector<NumericalSemigroup> bases;
  for (const auto& b : a.bases) bases.push_back(NumericalSemigroup::from_generators(parse_list(b)));
  if (a.construction == "axis") {
    if (a.dimension_given && a.dimension != static_cast<int>(bases.size())) {
      throw Error(Errc::kInvalidArgument, "axis takes one --base per dimension; got " +
                                              std::to_string(bases.size()) + " bases for --dim " +
                                              std::to_string(a.dimension));
    }
    return make_document(AxisSpec{std::move(bases)});
  }
  if (bases.size() != 1) {
    throw Error(Errc::kInvalidArgument, a.construction + " takes exactly one --base");
  }
  if (a.construction == "stripe") return make_document(StripeSpec{bases.front(), a.dimension});
  return make_document(GradedSpec{bases.front(), a.dimension});
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const auto doc = build_document(a);
  const auto text = serialize(doc);
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_text(a.out_path, text);
    out << "wrote " << a.out_path << " (" << doc.generators.size() << " generators, "
        << doc.gaps.size() << " gaps)\n";
  }
  return kExitOk;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}

  template <class A, class B>
  void equal(std::string_view what, const A& got, const B& want) {
    if (got == want) {
      out_ << "ok       " << what << "\n";
    } else {
      out_ << "MISMATCH " << what << "\n";
      ++failures_;
    }
  }

  void require(std::string_view what, bool ok) {
    out_ << (ok ? "ok       " : "FAILED   ") << what << "\n";
    if (!ok) ++failures_;
  }

  void set_difference(std::string_view what, const PointSet& got, const PointSet& want) {
    if (got == want) {
      out_ << "ok       " << what << "\n";
      return;
    }
    ++failures_;
    out_ << "MISMATCH " << what << "\n";
    PointSet only_got, only_want;
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(only_got));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(only_want));
    if (!only_got.empty()) out_ << "         measured only: " << join(only_got) << "\n";
    if (!only_want.empty()) out_ << "         closed form only: " << join(only_want) << "\n";
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

bool subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void compare_closed_forms(CheckLog& log, const ClosedForms& cf, const GnsProfile& p) {
  log.set_difference("closed form generators", p.generators, cf.generators);
  log.set_difference("closed form pseudo-Frobenius set", p.pseudo_frobenius, cf.pseudo_frobenius);
  log.set_difference("closed form special gaps", p.special_gaps, cf.special_gaps);
  log.set_difference("closed form maximal gaps", p.frobenius_allowable, cf.frobenius_allowable);
  const auto& r = p.invariants;
  log.equal("closed form e", r.e, cf.e);
  log.equal("closed form t", r.t, cf.t);
  log.equal("closed form tau", r.tau, cf.tau);
  log.equal("closed form g", r.g, cf.g);
  log.equal("closed form n", r.n, cf.n);
  log.equal("closed form c", r.c, cf.c);
}

int cmd_check(const std::string& in_path, std::ostream& out) {
  const auto doc = parse_document(read_input(in_path));
  CheckLog log(out);
  if (doc.kind == DocumentKind::kNumerical) {
    std::vector<std::int64_t> gens;
    for (const auto& p : doc.generators) gens.push_back(p[0]);
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto fresh = make_document(s);
    log.set_difference("gaps", doc.gaps, fresh.gaps);
    log.equal("invariants", doc.invariants, fresh.invariants);
    log.equal("wilf report", doc.wilf, fresh.wilf);
    log.require("c = g + n", fresh.invariants.c == fresh.invariants.g + fresh.invariants.n);
    out << (log.failures() == 0 ? "check passed" : "check FAILED") << "\n";
    return log.failures() == 0 ? kExitOk : kExitVerificationFailed;
  }

  const auto s = to_gns(doc);
  const auto p = analyze(s);
  const auto& r = p.invariants;
  log.set_difference("stored generators", doc.generators, p.generators);
  log.equal("stored invariants", doc.invariants, r);
  log.equal("stored wilf report", doc.wilf, p.wilf.generalized);
  log.require("c = g + n", r.c == r.g + r.n);
  log.require("g <= t n", r.g <= r.t * r.n);
  log.require("FA within SG", subset(p.frobenius_allowable, p.special_gaps));
  log.require("SG within PF", subset(p.special_gaps, p.pseudo_frobenius));
  log.require("wilf forms agree", p.wilf.agree());

  const auto& prov = doc.provenance;
  std::vector<NumericalSemigroup> bases;
  for (const auto& b : prov.bases) bases.push_back(NumericalSemigroup::from_generators(b));
  if (prov.construction == "stripe" && bases.size() == 1) {
    compare_closed_forms(log, stripe_closed_forms({bases[0], prov.dimension}), p);
    log.require("e >= d(t + 1)", r.e >= r.dimension * (r.t + 1));
  } else if (prov.construction == "graded" && bases.size() == 1) {
    compare_closed_forms(log, graded_closed_forms({bases[0], prov.dimension}), p);
    log.equal("quasi flags", p.flags, graded_quasi_flags_closed({bases[0], prov.dimension}));
  } else if (prov.construction == "axis") {
    compare_closed_forms(log, axis_closed_forms({bases}), p);
    log.equal("quasi flags", p.flags, axis_quasi_flags_closed({bases}));
  } else {
    out << "note     raw document: no closed form to compare against\n";
  }
  log.require("generalized wilf", p.wilf.generalized.holds);
  out << (log.failures() == 0 ? "check passed" : "check FAILED") << "\n";
  return log.failures() == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_wilf_scan(std::int64_t m_max, std::int64_t d_max, int threads, std::ostream& out) {
  const auto scan = wilf_grid_scan(m_max, d_max, threads);
  out << "grid 2 <= m <= " << m_max << ", 2 <= d <= " << d_max << ": " << scan.scanned
      << " records\n";
  out << "violations of lhs >= theta: " << scan.violations.size() << "\n";
  out << "lemma bound failures: " << scan.lemma_failures.size() << "\n";
  for (const auto* list : {&scan.violations, &scan.lemma_failures}) {
    for (const auto& r : *list) {
      out << "  m=" << r.m << " d=" << r.d << " e_T=" << r.e_T << " t_T=" << r.t_T
          << " lhs=" << r.lhs << " theta=" << r.theta << "\n";
    }
  }
  return scan.violations.empty() && scan.lemma_failures.empty() ? kExitOk
                                                                : kExitVerificationFailed;
}

int cmd_enum_genus(int g_max, const EnumOptions& options, std::ostream& out) {
  const auto scan = scan_met_inequality(g_max, options);
  out << "genus count\n";
  for (std::size_t g = 0; g < scan.counts.size(); ++g) out << g << ' ' << scan.counts[g] << "\n";
  out << "violations of e + m >= 2t + 2: " << scan.violations.size() << "\n";
  for (const auto& v : scan.violations) {
    out << "  <" << join(v.generators, ",") << "> g=" << v.genus << " m=" << v.multiplicity
        << " e=" << v.embedding_dimension << " t=" << v.type << " margin=" << v.margin << "\n";
  }
  return scan.violations.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_enum_gm(int m, int genus_bound, const GmScanOptions& options, std::ostream& out) {
  const auto r = gm_scan(m, genus_bound, options);
  out << "multiplicity " << r.multiplicity << ", genus <= " << r.genus_bound << ": "
      << r.scanned_count << " semigroups scanned\n";
  out << "min m+e-2(t+1) = " << r.min_margin << "\n";
  out << "upper bound only: g(" << r.multiplicity << ") <= " << r.min_margin
      << " (minimum over the scanned genus range, not the infimum)\n";
  out << "witness: <" << join(r.witness, ",") << ">\n";
  return kExitOk;
}

int cmd_export(const std::string& format, const std::string& in_path, const std::string& out_path,
               std::ostream& out) {
  const auto fmt = parse_export_format(format);
  const auto doc = parse_document(read_input(in_path));
  export_figure(doc, fmt, out_path);
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical and generalized numerical semigroup toolkit", "gnslab"};
  app.require_subcommand(1);

  std::string gens;
  auto* ns = app.add_subcommand("ns", "Invariants, classification and Wilf report");
  ns->add_option("--gens", gens, "Comma-separated generators")->required();

  auto* gns = app.add_subcommand("gns", "Generalized numerical semigroups");
  gns->require_subcommand(1);
  ConstructArgs construct;
  auto* gc = gns->add_subcommand("construct", "Build a stripe, graded or axis semigroup");
  gc->add_option("--class", construct.construction, "stripe | graded | axis")
      ->required()
      ->check(CLI::IsMember({"stripe", "graded", "axis"}));
  gc->add_option("--base", construct.bases, "Base generators, repeat for axis")->required();
  auto* dim_opt = gc->add_option("--dim", construct.dimension, "Dimension")->check(CLI::Range(1, 8));
  gc->add_option("--out", construct.out_path, "Write the document here instead of stdout");
  std::string check_in = "-";
  auto* gk = gns->add_subcommand("check", "Cross-check a document");
  gk->add_option("--in", check_in, "Document path, - for stdin")->required();

  auto* wilf = app.add_subcommand("wilf", "Binomial inequality grid");
  wilf->require_subcommand(1);
  std::int64_t m_max = 30, d_max = 6;
  int threads = default_threads();
  auto* ws = wilf->add_subcommand("scan", "Scan the inequality grid");
  ws->add_option("--m-max", m_max)->check(CLI::Range(2, 200));
  ws->add_option("--d-max", d_max)->check(CLI::Range(2, 16));
  ws->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enum", "Genus-tree enumeration");
  en->require_subcommand(1);
  int g_max = 15;
  bool progress = false;
  auto* eg = en->add_subcommand("genus", "Counts by genus and e + m >= 2t + 2 scan");
  eg->add_option("--max", g_max)->required()->check(CLI::Range(0, kMaxEnumGenus));
  eg->add_option("--threads", threads)->check(CLI::PositiveNumber);
  eg->add_flag("--progress", progress);
  int mult = 0, genus_max = 0;
  bool long_run = false;
  auto* egm = en->add_subcommand("gm", "Bounded-genus upper bound on g(m)");
  egm->add_option("--mult", mult)->required();
  egm->add_option("--genus-max", genus_max)->required();
  egm->add_option("--threads", threads)->check(CLI::PositiveNumber);
  egm->add_flag("--allow-long-run", long_run);
  egm->add_flag("--progress", progress);

  std::string format, in_path = "-", out_path;
  auto* ex = app.add_subcommand("export", "Render a document as json, csv or svg");
  ex->add_option("--format", format)->required()->check(CLI::IsMember({"json", "csv", "svg"}));
  ex->add_option("--out", out_path)->required();
  ex->add_option("--in", in_path, "Document path, - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*ns) return cmd_ns(gens, out);
    if (*gc) {
      construct.dimension_given = dim_opt->count() > 0;
      return cmd_construct(construct, out);
    }
    if (*gk) return cmd_check(check_in, out);
    if (*ws) return cmd_wilf_scan(m_max, d_max, threads, out);
    if (*eg) {
      EnumOptions o;
      o.threads = threads;
      o.progress = progress;
      o.progress_stream = &err;
      return cmd_enum_genus(g_max, o, out);
    }
    if (*egm) {
      GmScanOptions o;
      o.threads = threads;
      o.progress = progress;
      o.progress_stream = &err;
      o.allow_long_run = long_run;
      return cmd_enum_gm(mult, genus_max, o, out);
    }
    if (*ex) return cmd_export(format, in_path, out_path, out);
  } catch (const NotAMonoidError& e) {
    err << "not a monoid: " << e.lhs() << " + " << e.rhs() << " is listed as a gap\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gnslab::cli
