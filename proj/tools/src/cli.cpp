#include "renyi_cli/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "renyi/analysis.hpp"
#include "renyi/channel_io.hpp"
#include "renyi/combining.hpp"
#include "renyi/errors.hpp"
#include "renyi/polarization.hpp"

namespace renyi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string precision;
  std::uint64_t seed = 0;

  // entropy / bounds
  std::string kind;
  std::string alpha;
  std::string channel;
  std::string ch1;
  std::string ch2;
  bool bits = false;

  // gap / scan
  std::string p;
  std::string alpha_range;
  std::string func;
  std::size_t grid = 64;
  std::optional<double> tol;

  // verify
  std::string suite;
  std::size_t samples = 1000;

  // polarize
  std::size_t depth = 3;
  double a = 0.1;
  double b = 0.9;
  bool merge = false;
  std::string stats;

  std::string out;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomically(o.out, text);
  }
}

Precision resolve_precision(const Options& o) {
  return o.precision.empty() ? precision_from_environment(Precision::native)
                             : parse_precision(o.precision);
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json report_json(const BoundReport& r) {
  return Json{{"kind", to_string(r.kind)},
              {"alpha", r.alpha.str()},
              {"h1", r.h1},
              {"h2", r.h2},
              {"actual", r.actual},
              {"bsc_bound", r.bsc_bound},
              {"bec_bound", r.bec_bound},
              {"regime", to_string(r.regime.regime)},
              {"regime_proven", r.regime.proven},
              {"orientation", to_string(r.orientation)},
              {"bsc_slack", r.bsc_slack},
              {"bec_slack", r.bec_slack},
              {"verdict", to_string(r.verdict)},
              {"asserted", r.asserted},
              {"tolerance", r.tolerance}};
}

Json report_json(const VerificationReport& r) {
  Json items = Json::array();
  for (const CheckItem& item : r.items) {
    items.push_back({{"name", item.name},
                     {"passed", item.passed},
                     {"worst", std::isfinite(item.worst) ? Json(item.worst) : Json(nullptr)},
                     {"tolerance", item.tolerance},
                     {"detail", item.detail}});
  }
  return Json{{"name", r.name}, {"passed", r.passed()}, {"items", std::move(items)}};
}

int do_entropy(const Options& o, std::ostream& out) {
  const auto alpha = Alpha<double>::parse(o.alpha);
  const EntropyKind kind = parse_entropy_kind(o.kind);
  const BinaryChannel channel = load_channel(o.channel);
  double value = kind == EntropyKind::min_entropy
                     ? cond_min_entropy(channel_to_joint(channel))
                     : cond_entropy(channel, alpha, kind);
  if (o.bits) {
    value /= std::log(2.0);
  }
  const Json doc{{"kind", to_string(kind)},
                 {"alpha", alpha.str()},
                 {"channel", o.channel},
                 {"outputs", channel.size()},
                 {"unit", o.bits ? "bits" : "nats"},
                 {"entropy", value}};
  emit(o, out, doc.dump(2) + "\n");
  return kExitOk;
}

int do_bounds(const Options& o, std::ostream& out) {
  const auto alpha = Alpha<double>::parse(o.alpha);
  const EntropyKind kind = parse_entropy_kind(o.kind);
  const BoundReport report = check_bounds(channel_to_joint(load_channel(o.ch1)),
                                          channel_to_joint(load_channel(o.ch2)), alpha, kind);
  emit(o, out, report_json(report).dump(2) + "\n");
  return kExitOk;
}

int do_gap(const Options& o, std::ostream& out) {
  const EntropyKind kind = parse_entropy_kind(o.kind);
  const auto points = gap_curve(kind, o.p, AlphaRange::parse(o.alpha_range), resolve_precision(o));
  std::string csv = "alpha,delta\n";
  for (const GapPoint& point : points) {
    csv += point.alpha_text + "," + point.delta_text + "\n";
  }
  emit(o, out, csv);
  return kExitOk;
}

KKKind parse_function(const std::string& text) {
  if (text == "kkA") return KKKind::kk_arimoto;
  if (text == "kkH") return KKKind::kk_hayashi;
  if (text == "hh") return KKKind::hh;
  throw ConfigError("unknown function '" + text + "' (expected kkA, kkH or hh)");
}

int do_scan(const Options& o, std::ostream& out) {
  ConvexityOptions options;
  options.grid_n = o.grid;
  options.tolerance = o.tol;
  options.precision = resolve_precision(o);
  const AlphaRange range = AlphaRange::parse(o.alpha_range);
  const ConjectureScan scan = conjecture_scan(parse_function(o.func), range, options);
  Json verdicts = Json::array();
  for (const ConvexityVerdict& v : scan.verdicts) {
    verdicts.push_back({{"alpha", v.alpha},
                        {"classification", to_string(v.classification)},
                        {"min_second_difference", v.min_second_difference},
                        {"max_second_difference", v.max_second_difference}});
  }
  const Json doc{{"function", to_string(scan.function)},
                 {"alpha_range", range.str()},
                 {"grid", options.grid_n},
                 {"tolerance", options.tolerance.value_or(
                                   default_classification_tolerance(options.precision))},
                 {"precision", to_string(options.precision)},
                 {"status", "numerical evidence"},
                 {"verdicts", std::move(verdicts)},
                 {"last_definite_alpha", optional_json(scan.last_definite_alpha)},
                 {"first_neither_alpha", optional_json(scan.first_neither_alpha)},
                 {"gap_sign_transition", optional_json(scan.gap_sign_transition)}};
  emit(o, out, doc.dump(2) + "\n");
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const Precision precision = resolve_precision(o);
  const bool all = o.suite == "all";
  std::vector<VerificationReport> reports;
  if (all || o.suite == "ce-a") {
    reports.push_back(to_verification(verify_counterexample_A(precision)));
  }
  if (all || o.suite == "ce-c") {
    reports.push_back(to_verification(verify_counterexample_C(precision)));
  }
  if (all || o.suite == "linear") {
    for (LinearCase c : {LinearCase::kk_hayashi_2, LinearCase::kk_hayashi_3,
                         LinearCase::kk_arimoto_inf}) {
      reports.push_back(verify_linearity(c, o.seed, o.samples));
    }
  }
  if (all || o.suite == "appendix") {
    reports.push_back(verify_appendix_identities(o.seed, o.samples));
  }
  bool passed = true;
  Json list = Json::array();
  for (const VerificationReport& r : reports) {
    passed = passed && r.passed();
    list.push_back(report_json(r));
  }
  const Json doc{{"suite", o.suite},
                 {"precision", to_string(precision)},
                 {"seed", o.seed},
                 {"samples", o.samples},
                 {"passed", passed},
                 {"reports", std::move(list)}};
  emit(o, out, doc.dump(2) + "\n");
  return passed ? kExitOk : kExitAssertion;
}

int do_polarize(const Options& o, std::ostream& out) {
  PolarConfig config;
  config.alpha = Alpha<double>::parse(o.alpha);
  config.max_depth = o.depth;
  config.a = o.a;
  config.b = o.b;
  config.merge_policy = o.merge ? MergePolicy::posterior_merge : MergePolicy::none;
  const PolarTree tree = polarize_tree(load_channel(o.channel), config);
  emit(o, out, polar_nodes_csv(tree));
  const std::string stats = polar_stats_json(tree);
  if (!o.stats.empty()) {
    write_file_atomically(o.stats, stats);
  } else if (!o.out.empty()) {
    out << stats;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rényi information-combining bounds, convexity analysis and polarization"};
  app.name("renyi");
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--precision", o.precision, "double or extended (default: $RENYI_PRECISION or double)")
      ->check(CLI::IsMember({"double", "native", "extended"}));
  app.add_option("--seed", o.seed, "seed for randomized suites");

  auto kinds = CLI::IsMember({"A", "H", "J", "C", "shannon", "min"});

  CLI::App* entropy = app.add_subcommand("entropy", "conditional entropy of a channel with uniform input");
  entropy->add_option("--kind", o.kind)->required()->check(kinds);
  entropy->add_option("--alpha", o.alpha, "order, or inf")->required();
  entropy->add_option("--channel", o.channel, "path, bsc:p or bec:e")->required();
  entropy->add_flag("--bits", o.bits, "report bits instead of nats");
  entropy->add_option("--out", o.out);

  CLI::App* bounds = app.add_subcommand("bounds", "BSC/BEC bound report for a channel pair");
  bounds->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"A", "H", "J", "C", "shannon"}));
  bounds->add_option("--alpha", o.alpha)->required();
  bounds->add_option("--ch1", o.ch1)->required();
  bounds->add_option("--ch2", o.ch2)->required();
  bounds->add_option("--out", o.out);

  CLI::App* gap = app.add_subcommand("gap", "gap between BSC and BEC expressions for two BSC(p)");
  gap->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"A", "H", "C"}));
  gap->add_option("--p", o.p)->required();
  gap->add_option("--alpha-range", o.alpha_range, "start:end:step, end-exclusive")->required();
  gap->add_option("--out", o.out);

  CLI::App* scan = app.add_subcommand("scan", "grid convexity classification over an alpha range");
  scan->add_option("--func", o.func)->required()->check(CLI::IsMember({"kkA", "kkH", "hh"}));
  scan->add_option("--alpha-range", o.alpha_range)->required();
  scan->add_option("--grid", o.grid)->check(CLI::Range(std::size_t{16}, std::size_t{100000}));
  scan->add_option("--tol", o.tol);
  scan->add_option("--out", o.out);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite)->required()->check(
      CLI::IsMember({"ce-a", "ce-c", "linear", "appendix", "all"}));
  verify->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out);

  CLI::App* polarize = app.add_subcommand("polarize", "polarization tree statistics for I^J");
  polarize->add_option("--alpha", o.alpha)->required();
  polarize->add_option("--channel", o.channel)->required();
  polarize->add_option("--depth", o.depth);
  polarize->add_option("--a", o.a);
  polarize->add_option("--b", o.b);
  polarize->add_flag("--merge", o.merge, "merge equal-posterior outputs (alpha = 1 only)");
  polarize->add_option("--out", o.out, "node CSV (path,level,i_value)");
  polarize->add_option("--stats", o.stats, "per-level statistics JSON");

  // Global options may also follow the verb.
  for (CLI::App* sub : {entropy, bounds, gap, scan, verify, polarize}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) {
      return kExitOk;
    }
    err << app.help();
    return kExitUsage;
  }

  try {
    if (entropy->parsed()) return do_entropy(o, out);
    if (bounds->parsed()) return do_bounds(o, out);
    if (gap->parsed()) return do_gap(o, out);
    if (scan->parsed()) return do_scan(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (polarize->parsed()) return do_polarize(o, out);
  } catch (const ParseError& e) {
    err << "renyi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ConfigError, UnsupportedOrder
    err << "renyi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "renyi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "renyi: " << e.what() << "\n";
    return kExitAssertion;
  }
  return kExitUsage;
}

}  // namespace renyi::cli
