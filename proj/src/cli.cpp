#include "subseq/cli.hpp"

#include "subseq/errors.hpp"
#include "subseq/extremal.hpp"
#include "subseq/genfunc.hpp"
#include "subseq/report.hpp"
#include "subseq/spectrum.hpp"
#include "subseq/wilf.hpp"
#include "subseq/word.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <vector>

namespace subseq::cli {

namespace {

EnumerationBudget budget_of(const RunConfig& c) { return {c.budget, c.allow_large}; }

BinaryWord pattern_of(const RunConfig& c) {
  const BinaryWord p = parse_word(c.pattern);
  if (p.empty()) {
    throw EmptyPattern();
  }
  return p;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) {
    throw CLI::RequiredError(flag);
  }
  return *v;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_count(const RunConfig& c, std::ostream& out) {
  const BigCount count = count_occurrences(pattern_of(c), parse_word(c.word));
  emit(out, Json{{"count", count.str()}});
  return kOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const Spectrum s = brute_spectrum(pattern_of(c), require(c.n, "-n"), c.workers, budget_of(c));
  if (c.format == "csv") {
    out << spectrum_csv(s);
  } else {
    emit(out, to_json(s));
  }
  return kOk;
}

int cmd_closed_form(const RunConfig& c, std::ostream& out) {
  const BigCount b = closed_form_B(pattern_of(c), require(c.n, "-n"), c.k);
  emit(out, Json{{"B", b.str()}});
  return kOk;
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  const Spectrum s = brute_spectrum(pattern_of(c), require(c.n, "-n"), c.workers, budget_of(c));
  const IdentityReport rep = verify_identities(s);
  Json j = to_json(rep);
  j["pattern"] = s.pattern.str();
  j["n"] = s.n;
  emit(out, j);
  return rep.all_hold() ? kOk : kMismatch;
}

int cmd_max(const RunConfig& c, std::ostream& out) {
  const BinaryWord p = pattern_of(c);
  const auto shape = three_run_shape(p);
  if (!shape) {
    throw CLI::ValidationError("max", "the three-run formula needs at most 3 runs; use 'optimal'");
  }
  const int l = static_cast<int>(p.size());
  const int lo = c.n ? *c.n : c.n_min.value_or(l);
  const int hi = c.n ? *c.n : require(c.n_max, "--n-max");
  if (lo > hi) {
    throw CLI::ValidationError("max", "--n-min exceeds --n-max");
  }

  bool agrees = true;
  Json rows = Json::array();
  std::vector<std::pair<int, BigCount>> table;
  for (int n = lo; n <= hi; ++n) {
    const ThreeRunMax m = max_three_run(shape->a, shape->b, shape->c, n);
    Json row = to_json(m);
    row["n"] = n;
    if (c.oracle) {
      const Spectrum s = brute_spectrum(p, n, c.workers, budget_of(c));
      const bool same = BigCount(s.max_count()) == m.M;
      agrees = agrees && same;
      row["oracle_M"] = std::to_string(s.max_count());
      row["agrees"] = same;
    }
    rows.push_back(row);
    table.emplace_back(n, m.M);
  }
  if (c.format == "csv") {
    out << max_table_csv(table);
  } else {
    Json j;
    j["pattern"] = p.str();
    j["shape"] = {shape->a, shape->b, shape->c};
    j["rows"] = rows;
    emit(out, j);
  }
  return agrees ? kOk : kMismatch;
}

int cmd_optimal(const RunConfig& c, std::ostream& out) {
  const auto res = optimal_words(pattern_of(c), require(c.n, "-n"), c.workers, budget_of(c), c.cap);
  emit(out, to_json(res));
  return kOk;
}

int cmd_internal_zeros(const RunConfig& c, std::ostream& out) {
  const BinaryWord p = pattern_of(c);
  const int lo = c.n ? *c.n : c.n_min.value_or(0);
  const int hi = c.n ? *c.n : require(c.n_max, "--n-max");
  const auto cls = classify_internal_zeros(p, lo, hi, c.raw ? ClassifyMode::Raw : ClassifyMode::Predict,
                                           c.workers, budget_of(c));
  emit(out, to_json(cls));
  return cls.all_agree() ? kOk : kMismatch;
}

int cmd_wilf_scan(const RunConfig& c, std::ostream& out) {
  ScanOptions opt;
  opt.workers = c.workers;
  opt.budget = budget_of(c);
  if (c.checkpoint) {
    opt.checkpoint = *c.checkpoint;
  }
  const auto scan = strong_wilf_scan(c.l, c.n_max.value_or(c.l + 4), opt);
  emit(out, to_json(scan));
  return scan.verdict && scan.prefilter_sound ? kOk : kMismatch;
}

int cmd_gf_check(const RunConfig& c, std::ostream& out) {
  const LeadingZeros lead = c.plain_leading ? LeadingZeros::Plain : LeadingZeros::Weighted;
  if (c.series) {
    emit(out, series_json(c.i, c.j, gf_coefficients(c.i, c.j, c.N, lead)));
    return kOk;
  }
  const auto mismatches = gf_check(c.i, c.j, c.N, lead, c.workers);
  Json j;
  j["i"] = c.i;
  j["j"] = c.j;
  j["N"] = c.N;
  j["leading_zeros"] = c.plain_leading ? "plain" : "weighted";
  j["agrees"] = mismatches.empty();
  j["mismatches"] = to_json(mismatches);
  emit(out, j);
  return mismatches.empty() ? kOk : kMismatch;
}

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

} // namespace

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.format != "json" && c.format != "csv") {
      throw CLI::ValidationError("--format", "must be json or csv");
    }
    if (c.subcommand == "count") return cmd_count(c, out);
    if (c.subcommand == "spectrum") return cmd_spectrum(c, out);
    if (c.subcommand == "closed-form") return cmd_closed_form(c, out);
    if (c.subcommand == "identities") return cmd_identities(c, out);
    if (c.subcommand == "max") return cmd_max(c, out);
    if (c.subcommand == "optimal") return cmd_optimal(c, out);
    if (c.subcommand == "internal-zeros") return cmd_internal_zeros(c, out);
    if (c.subcommand == "wilf-scan") return cmd_wilf_scan(c, out);
    if (c.subcommand == "gf-check") return cmd_gf_check(c, out);
    err << "error: unknown subcommand '" << c.subcommand << "'\n";
    return kUsageError;
  } catch (const OutOfStatedRange& e) {
    err << "error: OutOfStatedRange: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: BudgetExceeded: " << e.what() << '\n';
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.workers = default_workers();

  CLI::App app{"Subsequence occurrence statistics for binary words"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int n = 0, n_min = 0, n_max = 0;
  std::vector<CLI::Option*> n_opts, n_min_opts, n_max_opts;

  auto common = [&](CLI::App* sub, bool pattern) {
    if (pattern) {
      sub->add_option("-p,--pattern", c.pattern, "pattern over {0,1}")->required();
    }
    sub->add_option("--workers", c.workers, "enumeration threads (default $SUBSEQ_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--budget", c.budget, "largest word length to enumerate")->check(CLI::NonNegativeNumber);
    sub->add_flag("--allow-large", c.allow_large, "permit enumeration beyond n = 30");
  };
  auto with_n = [&](CLI::App* sub) { n_opts.push_back(sub->add_option("-n", n, "word length")); };
  auto with_range = [&](CLI::App* sub) {
    n_min_opts.push_back(sub->add_option("--n-min", n_min, "first word length"));
    n_max_opts.push_back(sub->add_option("--n-max", n_max, "last word length"));
  };

  auto* count = app.add_subcommand("count", "occurrences of a pattern in one word");
  common(count, true);
  count->add_option("-w,--word", c.word, "word over {0,1}")->required();

  auto* spectrum = app.add_subcommand("spectrum", "exact B_{n,p}(k) for all k by enumeration");
  common(spectrum, true);
  with_n(spectrum);

  auto* closed = app.add_subcommand("closed-form", "B_{n,p}(k) from the closed forms, k <= 4");
  common(closed, true);
  with_n(closed);
  closed->add_option("-k", c.k, "occurrence count")->required()->check(CLI::Range(0, 4));

  auto* ident = app.add_subcommand("identities", "check the two sum identities on a spectrum");
  common(ident, true);
  with_n(ident);

  auto* mx = app.add_subcommand("max", "maximum occurrences for patterns with at most 3 runs");
  common(mx, true);
  with_n(mx);
  with_range(mx);
  mx->add_flag("--oracle", c.oracle, "cross-check against enumeration");

  auto* opt = app.add_subcommand("optimal", "all words attaining the maximum");
  common(opt, true);
  with_n(opt);
  opt->add_option("--cap", c.cap, "maximum number of words listed");

  auto* iz = app.add_subcommand("internal-zeros", "internal zeros per n versus known results");
  common(iz, true);
  with_n(iz);
  with_range(iz);
  iz->add_flag("--raw", c.raw, "observations only, any number of runs");

  auto* wilf = app.add_subcommand("wilf-scan", "partition all patterns of length l by spectra");
  common(wilf, false);
  wilf->add_option("-l", c.l, "pattern length")->required()->check(CLI::PositiveNumber);
  with_range(wilf);
  wilf->add_option("--checkpoint", c.checkpoint, "JSON-lines file for resumable scans");

  auto* gf = app.add_subcommand("gf-check", "generating function for 1^i 0 1^j versus enumeration");
  common(gf, false);
  gf->add_option("-i", c.i, "leading ones")->required()->check(CLI::NonNegativeNumber);
  gf->add_option("-j", c.j, "trailing ones")->required()->check(CLI::NonNegativeNumber);
  gf->add_option("-N", c.N, "truncation order in x")->required()->check(CLI::NonNegativeNumber);
  gf->add_flag("--plain-leading", c.plain_leading, "use an unweighted 1/(1-x) for leading zeros");
  gf->add_flag("--series", c.series, "print the series instead of the comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  for (auto* sub : app.get_subcommands()) {
    c.subcommand = sub->get_name();
  }
  auto given = [](const std::vector<CLI::Option*>& opts) {
    for (auto* o : opts) {
      if (o->count() > 0) return true;
    }
    return false;
  };
  if (given(n_opts)) c.n = n;
  if (given(n_min_opts)) c.n_min = n_min;
  if (given(n_max_opts)) c.n_max = n_max;

  return dispatch(c, out, err);
}

} // namespace subseq::cli
