#include "ordvga/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ordvga/errors.hpp"
#include "ordvga/matrix.hpp"
#include "ordvga/pipeline.hpp"
#include "ordvga/plot.hpp"
#include "ordvga/report.hpp"

namespace ordvga {

namespace {

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

struct CommonArgs {
  std::string matrix_path;
  std::string price_selection = "tightest";
  bool serial = false;
};

PipelineOptions pipeline_options(const CommonArgs& args) {
  PipelineOptions options;
  options.model.tolerances = Tolerances::from_environment();
  options.model.price_selection =
      args.price_selection == "tap-duals" ? PriceSelection::TapDuals : PriceSelection::TightestGoalPrice;
  options.policy = args.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
  return options;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("matrix", args.matrix_path, "Decision matrix CSV")->required();
  cmd->add_option("--prices", args.price_selection, "Price selection among alternative optima")
      ->check(CLI::IsMember({"tightest", "tap-duals"}));
  cmd->add_flag("--serial", args.serial, "Solve DMUs one after another");
}

void write_plot(const PlotSpec& spec, const std::filesystem::path& path) {
  try {
    emit_plot(spec, path);
  } catch (const std::runtime_error& e) {
    throw IoFailure(e.what());
  }
}

void print_summary(const AssessmentReport& rep, std::ostream& out) {
  out << "stage 1\n";
  for (const auto& r : rep.stage1) {
    out << "  " << r.dmu << "  tau=" << fixed3(r.tau_star) << "  gap=" << fixed3(r.gap_star);
    if (!r.peers.empty()) out << "  peers={" << join(r.peers) << "}";
    out << '\n';
  }
  out << "top tier: " << join(rep.top_tier) << '\n';
  if (!rep.top_tier_check.consistent) {
    out << "note: zero-gap tier differs from peer union {" << join(rep.top_tier_check.peer_union) << "}\n";
  }
  if (!rep.stage2.empty()) {
    out << "stage 2\n";
    for (const auto& r : rep.stage2) {
      out << "  " << r.dmu << "  tau=" << fixed3(r.tau_star) << "  gap=" << fixed3(r.gap_star) << '\n';
    }
  }
  if (!rep.stage2_unpriced.empty()) {
    out << "stage 2 unpriced (gap 0): " << join(rep.stage2_unpriced) << '\n';
  }
  if (rep.best_ties.size() > 1) out << "tie: " << join(rep.best_ties) << '\n';
  out << "best: " << rep.best << '\n';
}

void write_report(const AssessmentReport& rep, const std::string& path) {
  try {
    emit_report(rep, path);
  } catch (const std::runtime_error& e) {
    throw IoFailure(e.what());
  }
}

int cmd_validate(const CommonArgs& args, std::ostream& out) {
  const auto m = load_matrix(args.matrix_path);
  out << "ok: " << m.num_metrics() << " metrics, " << m.num_dmus() << " DMUs, digest " << matrix_digest(m) << '\n';
  return kExitOk;
}

int cmd_assess(const CommonArgs& args, const std::string& report_path, const std::string& plot_dir, bool table,
               std::ostream& out) {
  const auto m = load_matrix(args.matrix_path);
  const auto rep = assess(m, pipeline_options(args));
  if (table) {
    out << format_table(rep);
  } else {
    print_summary(rep, out);
  }
  if (!report_path.empty()) write_report(rep, report_path);
  if (!plot_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(plot_dir, ec);
    if (ec) throw IoFailure("cannot create '" + plot_dir + "': " + ec.message());
    for (const auto* results : {&rep.stage1, &rep.stage2}) {
      for (const auto& r : *results) {
        const auto name = "stage" + std::to_string(static_cast<int>(r.stage)) + "_" + r.dmu + ".svg";
        write_plot(make_plot_spec(r), std::filesystem::path(plot_dir) / name);
      }
    }
  }
  return kExitOk;
}

int cmd_rank(const CommonArgs& args, std::optional<std::size_t> rounds, const std::string& report_path,
             std::ostream& out) {
  const auto m = load_matrix(args.matrix_path);
  const auto result = rank_all(m, rounds, pipeline_options(args));
  for (const auto& r : result) {
    out << r.entry.round << ". " << r.entry.dmu;
    if (r.entry.ties.size() > 1) out << "  (tie: " << join(r.entry.ties) << ")";
    out << '\n';
  }
  if (!report_path.empty() && !result.empty()) {
    AssessmentReport rep = result.front().report;
    rep.ranking = ranking_entries(result);
    write_report(rep, report_path);
  }
  return kExitOk;
}

int cmd_plot(const CommonArgs& args, const std::string& dmu, int stage, const std::string& path,
             std::ostream& out) {
  const auto m = load_matrix(args.matrix_path);
  m.dmu_index(dmu);
  const auto rep = assess(m, pipeline_options(args));
  const StageResult* r = find_result(stage == 1 ? rep.stage1 : rep.stage2, dmu);
  if (r == nullptr) {
    if (rep.sole_efficient) throw SoleEfficient(dmu + " is the only top-tier DMU, stage 2 was not run");
    if (std::find(rep.stage2_unpriced.begin(), rep.stage2_unpriced.end(), dmu) != rep.stage2_unpriced.end()) {
      throw DegeneratePrices("stage 2 of " + dmu + " has only zero prices, nothing to plot");
    }
    throw ValidationError(ValidationCode::UnknownDmu, dmu + " is not in the top tier", {}, dmu);
  }
  const auto spec = make_plot_spec(*r);
  if (path.empty()) {
    out << render_svg(spec);
  } else {
    write_plot(spec, path);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage ordinal virtual gap assessment", "ordvga"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check a decision matrix");
  validate->add_option("matrix", validate_args.matrix_path, "Decision matrix CSV")->required();

  CommonArgs assess_args;
  std::string report_path;
  std::string plot_dir;
  bool table = false;
  auto* assess_cmd = app.add_subcommand("assess", "Run both stages and report the best DMU");
  add_common(assess_cmd, assess_args);
  assess_cmd->add_option("--out", report_path, "Write the JSON report here");
  assess_cmd->add_option("--plots", plot_dir, "Write one SVG per assessment into this directory");
  assess_cmd->add_flag("--table", table, "Print the R1 to R8 table instead of the summary");

  CommonArgs rank_args;
  std::optional<std::size_t> rounds;
  std::string rank_report;
  auto* rank_cmd = app.add_subcommand("rank", "Rank by repeatedly removing the best DMU");
  add_common(rank_cmd, rank_args);
  rank_cmd->add_option("--rounds", rounds, "Stop after this many rounds")->check(CLI::PositiveNumber);
  rank_cmd->add_option("--out", rank_report, "Write the first-round report with the ranking here");

  CommonArgs plot_args;
  std::string plot_dmu;
  int plot_stage = 1;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Draw the virtual technology set of one assessment");
  add_common(plot_cmd, plot_args);
  plot_cmd->add_option("--dmu", plot_dmu, "Assessed DMU")->required();
  plot_cmd->add_option("--stage", plot_stage, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  plot_cmd->add_option("--out", plot_out, "SVG path; standard output when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_args, out);
    if (*assess_cmd) return cmd_assess(assess_args, report_path, plot_dir, table, out);
    if (*rank_cmd) return cmd_rank(rank_args, rounds, rank_report, out);
    if (*plot_cmd) return cmd_plot(plot_args, plot_dmu, plot_stage, plot_out, out);
  } catch (const ValidationError& e) {
    err << "validation error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ordvga
