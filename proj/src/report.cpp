#include "ordvga/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ordvga {

using Json = nlohmann::ordered_json;

namespace {

double round3(double v) {
  const double r = std::round(v * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;
}

Json optional_ints(const std::vector<std::optional<int>>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v ? Json(*v) : Json(nullptr));
  return a;
}

std::vector<std::optional<int>> read_optional_ints(const Json& a) {
  std::vector<std::optional<int>> out;
  for (const auto& v : a) out.push_back(v.is_null() ? std::nullopt : std::optional<int>(v.get<int>()));
  return out;
}

Json stage_to_json(const StageResult& r) {
  Json j;
  j["dmu"] = r.dmu;
  j["stage"] = to_string(r.stage);
  j["comparison_set"] = r.comparison_set;
  j["inputs"] = r.input_names;
  j["outputs"] = r.output_names;
  j["step1"] = {{"objective", r.step1_objective},
                {"price_objective", r.step1_price_objective},
                {"alpha", r.step1_alpha},
                {"beta", r.step1_beta}};
  j["t_bar"] = r.t_bar;
  j["tau_star"] = r.tau_star;
  j["gap_star"] = r.gap_star;
  j["prices"] = {{"tau", r.prices.tau}, {"v", r.prices.v}, {"u", r.prices.u}, {"dx", r.prices.dx}, {"dy", r.prices.dy}};
  j["adjustments"] = {{"q", r.adjustments.q}, {"p", r.adjustments.p}, {"pi", r.adjustments.pi}};
  j["alpha_star"] = r.alpha_star;
  j["beta_star"] = r.beta_star;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"dmu", p.dmu}, {"alpha", p.alpha}, {"beta", p.beta}});
  j["pairs"] = pairs;
  j["targets_x"] = r.targets_x;
  j["targets_y"] = r.targets_y;
  j["likert_targets_x"] = optional_ints(r.likert_targets_x);
  j["likert_targets_y"] = optional_ints(r.likert_targets_y);
  j["benchmark"] = {{"alpha", r.benchmark_alpha}, {"beta", r.benchmark_beta}};
  j["inefficiency"] = r.inefficiency;
  j["efficiency"] = r.efficiency;
  j["peers"] = r.peers;
  Json entries = Json::array();
  for (const auto& e : r.scsc.entries) {
    entries.push_back({{"id", e.id}, {"left", e.left}, {"right", e.right}, {"product", e.product}, {"strict", e.strict}});
  }
  j["scsc"] = {{"max_abs_product", r.scsc.max_abs_product}, {"entries", entries}};
  j["metric_prices"] = r.metric_prices;
  j["price_source"] = to_string(r.price_source);
  return j;
}

StageResult stage_from_json(const Json& j) {
  StageResult r;
  r.dmu = j.at("dmu").get<std::string>();
  const auto stage = j.at("stage").get<std::string>();
  if (stage == "best_practice") {
    r.stage = Stage::BestPractice;
  } else if (stage == "super") {
    r.stage = Stage::Super;
  } else {
    throw std::runtime_error("unknown stage '" + stage + "'");
  }
  r.comparison_set = j.at("comparison_set").get<std::vector<std::string>>();
  r.input_names = j.at("inputs").get<std::vector<std::string>>();
  r.output_names = j.at("outputs").get<std::vector<std::string>>();
  const auto& s1 = j.at("step1");
  r.step1_objective = s1.at("objective").get<double>();
  r.step1_price_objective = s1.at("price_objective").get<double>();
  r.step1_alpha = s1.at("alpha").get<double>();
  r.step1_beta = s1.at("beta").get<double>();
  r.t_bar = j.at("t_bar").get<double>();
  r.tau_star = j.at("tau_star").get<double>();
  r.gap_star = j.at("gap_star").get<double>();
  const auto& pr = j.at("prices");
  r.prices.tau = pr.at("tau").get<double>();
  r.prices.v = pr.at("v").get<std::vector<double>>();
  r.prices.u = pr.at("u").get<std::vector<double>>();
  r.prices.dx = pr.at("dx").get<std::vector<double>>();
  r.prices.dy = pr.at("dy").get<std::vector<double>>();
  const auto& adj = j.at("adjustments");
  r.adjustments.q = adj.at("q").get<std::vector<double>>();
  r.adjustments.p = adj.at("p").get<std::vector<double>>();
  r.adjustments.pi = adj.at("pi").get<std::vector<double>>();
  r.alpha_star = j.at("alpha_star").get<double>();
  r.beta_star = j.at("beta_star").get<double>();
  for (const auto& p : j.at("pairs")) {
    r.pairs.push_back({p.at("dmu").get<std::string>(), p.at("alpha").get<double>(), p.at("beta").get<double>()});
  }
  r.targets_x = j.at("targets_x").get<std::vector<double>>();
  r.targets_y = j.at("targets_y").get<std::vector<double>>();
  r.likert_targets_x = read_optional_ints(j.at("likert_targets_x"));
  r.likert_targets_y = read_optional_ints(j.at("likert_targets_y"));
  r.benchmark_alpha = j.at("benchmark").at("alpha").get<double>();
  r.benchmark_beta = j.at("benchmark").at("beta").get<double>();
  r.inefficiency = j.at("inefficiency").get<double>();
  r.efficiency = j.at("efficiency").get<double>();
  r.peers = j.at("peers").get<std::vector<std::string>>();
  r.scsc.max_abs_product = j.at("scsc").at("max_abs_product").get<double>();
  for (const auto& e : j.at("scsc").at("entries")) {
    r.scsc.entries.push_back({e.at("id").get<std::string>(), e.at("left").get<double>(), e.at("right").get<double>(),
                              e.at("product").get<double>(), e.at("strict").get<bool>()});
  }
  r.metric_prices = j.at("metric_prices").get<std::vector<double>>();
  const auto src = j.at("price_source").get<std::string>();
  r.price_source = src == "tap_duals" ? PriceSelection::TapDuals : PriceSelection::TightestGoalPrice;
  return r;
}

Json presentation(const AssessmentReport& report) {
  Json p;
  Json s1 = Json::array();
  for (const auto& r : report.stage1) {
    s1.push_back({{"dmu", r.dmu}, {"tau_star", round3(r.tau_star)}, {"gap_star", round3(r.gap_star)}});
  }
  Json s2 = Json::array();
  for (const auto& r : report.stage2) {
    s2.push_back({{"dmu", r.dmu}, {"tau_star", round3(r.tau_star)}, {"gap_star", round3(r.gap_star)}});
  }
  p["stage1"] = s1;
  p["stage2"] = s2;
  return p;
}

}  // namespace

std::string report_to_json(const AssessmentReport& report) {
  Json j;
  j["format"] = "ordvga-report";
  j["version"] = 1;
  j["matrix_digest"] = report.matrix_digest;
  j["dmus"] = report.dmu_names;
  j["inputs"] = report.input_names;
  j["outputs"] = report.output_names;
  Json s1 = Json::array();
  for (const auto& r : report.stage1) s1.push_back(stage_to_json(r));
  j["stage1"] = s1;
  j["top_tier"] = report.top_tier;
  j["top_tier_check"] = {{"zero_gap", report.top_tier_check.zero_gap},
                         {"peer_union", report.top_tier_check.peer_union},
                         {"consistent", report.top_tier_check.consistent}};
  Json s2 = Json::array();
  for (const auto& r : report.stage2) s2.push_back(stage_to_json(r));
  j["stage2"] = s2;
  j["stage2_unpriced"] = report.stage2_unpriced;
  j["sole_efficient"] = report.sole_efficient;
  j["best"] = report.best;
  j["best_ties"] = report.best_ties;
  if (!report.ranking.empty()) {
    Json rk = Json::array();
    for (const auto& e : report.ranking) {
      rk.push_back({{"round", e.round}, {"dmu", e.dmu}, {"gap", e.gap ? Json(*e.gap) : Json(nullptr)}, {"ties", e.ties}});
    }
    j["ranking"] = rk;
  }
  j["presentation"] = presentation(report);
  return j.dump(2) + "\n";
}

AssessmentReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "ordvga-report") {
      throw std::runtime_error("document is not an assessment report");
    }
    AssessmentReport rep;
    rep.matrix_digest = j.at("matrix_digest").get<std::string>();
    rep.dmu_names = j.at("dmus").get<std::vector<std::string>>();
    rep.input_names = j.at("inputs").get<std::vector<std::string>>();
    rep.output_names = j.at("outputs").get<std::vector<std::string>>();
    for (const auto& r : j.at("stage1")) rep.stage1.push_back(stage_from_json(r));
    rep.top_tier = j.at("top_tier").get<std::vector<std::string>>();
    const auto& chk = j.at("top_tier_check");
    rep.top_tier_check.zero_gap = chk.at("zero_gap").get<std::vector<std::string>>();
    rep.top_tier_check.peer_union = chk.at("peer_union").get<std::vector<std::string>>();
    rep.top_tier_check.consistent = chk.at("consistent").get<bool>();
    for (const auto& r : j.at("stage2")) rep.stage2.push_back(stage_from_json(r));
    rep.stage2_unpriced = j.at("stage2_unpriced").get<std::vector<std::string>>();
    rep.sole_efficient = j.at("sole_efficient").get<bool>();
    rep.best = j.at("best").get<std::string>();
    rep.best_ties = j.at("best_ties").get<std::vector<std::string>>();
    if (j.contains("ranking")) {
      for (const auto& e : j.at("ranking")) {
        RankingEntry entry;
        entry.round = e.at("round").get<int>();
        entry.dmu = e.at("dmu").get<std::string>();
        if (!e.at("gap").is_null()) entry.gap = e.at("gap").get<double>();
        entry.ties = e.at("ties").get<std::vector<std::string>>();
        rep.ranking.push_back(std::move(entry));
      }
    }
    return rep;
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", round3(v));
  return buf;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void rule() { rows_.emplace_back(); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (r.size() > width.size()) width.resize(r.size(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::size_t total = 0;
    for (auto w : width) total += w + 2;
    std::ostringstream os;
    for (const auto& r : rows_) {
      if (r.empty()) {
        os << std::string(total, '-') << '\n';
        continue;
      }
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        const std::string pad(width[c] - r[c].size(), ' ');
        line += c < 2 ? r[c] + pad : pad + r[c];
        line += "  ";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace

std::string format_table(const AssessmentReport& report) {
  std::vector<const StageResult*> cols;
  std::vector<std::string> header = {"Row", "Symbol"};
  for (const auto& r : report.stage1) {
    cols.push_back(&r);
    header.push_back(r.dmu);
  }
  for (const auto& r : report.stage2) {
    cols.push_back(&r);
    header.push_back(r.dmu + (r.dmu == report.best ? "*" : "") + "[2]");
  }
  Table t(header);
  t.rule();

  const auto row = [&](const std::string& tag, const std::string& sym, auto&& value) {
    std::vector<std::string> r = {tag, sym};
    for (const auto* c : cols) r.push_back(value(*c));
    t.add(std::move(r));
  };
  const auto num = [](double v) { return cell(v); };
  const std::size_t m = report.input_names.size();
  const std::size_t s = report.output_names.size();

  row("R1", "tau", [&](const StageResult& r) { return num(r.tau_star); });
  row("", "gap", [&](const StageResult& r) { return num(r.gap_star); });
  t.rule();
  for (std::size_t i = 0; i < m; ++i) {
    row(i == 0 ? "R2" : "", "v:" + report.input_names[i], [&](const StageResult& r) { return num(r.prices.v[i]); });
  }
  for (std::size_t k = 0; k < s; ++k) {
    row("", "u:" + report.output_names[k], [&](const StageResult& r) { return num(r.prices.u[k]); });
  }
  for (std::size_t i = 0; i < m; ++i) {
    row("", "dx:" + report.input_names[i], [&](const StageResult& r) { return num(r.prices.dx[i]); });
  }
  for (std::size_t k = 0; k < s; ++k) {
    row("", "dy:" + report.output_names[k], [&](const StageResult& r) { return num(r.prices.dy[k]); });
  }
  t.rule();
  for (std::size_t i = 0; i < m; ++i) {
    row(i == 0 ? "R3" : "", "q:" + report.input_names[i], [&](const StageResult& r) { return num(r.adjustments.q[i]); });
  }
  for (std::size_t k = 0; k < s; ++k) {
    row("", "p:" + report.output_names[k], [&](const StageResult& r) { return num(r.adjustments.p[k]); });
  }
  const auto pi_of = [](const StageResult& r, const std::string& d) -> std::string {
    for (std::size_t c = 0; c < r.comparison_set.size(); ++c) {
      if (r.comparison_set[c] == d) return cell(r.adjustments.pi[c]);
    }
    return "";
  };
  for (const auto& d : report.dmu_names) {
    row("", "pi:" + d, [&](const StageResult& r) { return pi_of(r, d); });
  }
  t.rule();
  std::vector<std::string> metric_names = report.input_names;
  metric_names.insert(metric_names.end(), report.output_names.begin(), report.output_names.end());
  for (std::size_t k = 0; k < metric_names.size(); ++k) {
    row(k == 0 ? "R4" : "", "e:" + metric_names[k], [&](const StageResult& r) { return num(r.metric_prices[k]); });
  }
  t.rule();
  row("R5", "bench", [&](const StageResult& r) { return num(r.benchmark_alpha); });
  for (std::size_t i = 0; i < m; ++i) {
    row("", "x^:" + report.input_names[i], [&](const StageResult& r) { return num(r.targets_x[i]); });
  }
  for (std::size_t k = 0; k < s; ++k) {
    row("", "y^:" + report.output_names[k], [&](const StageResult& r) { return num(r.targets_y[k]); });
  }
  const auto pair_of = [](const StageResult& r, const std::string& d, int which) -> std::string {
    for (const auto& p : r.pairs) {
      if (p.dmu != d) continue;
      if (which == 0) return cell(p.alpha);
      if (which == 1) return cell(p.beta);
      return cell(p.alpha - p.beta);
    }
    return "";
  };
  const char* tags[] = {"R6", "R7", "R8"};
  const char* syms[] = {"alpha:", "beta:", "gap:"};
  for (int w = 0; w < 3; ++w) {
    t.rule();
    for (std::size_t k = 0; k < report.dmu_names.size(); ++k) {
      const auto& d = report.dmu_names[k];
      row(k == 0 ? tags[w] : "", syms[w] + d, [&](const StageResult& r) { return pair_of(r, d, w); });
    }
  }
  std::string out = t.str();
  if (!report.stage2_unpriced.empty()) {
    out += "stage 2 unpriced (gap 0):";
    for (const auto& d : report.stage2_unpriced) out += " " + d;
    out += "\n";
  }
  out += "best: " + report.best + "\n";
  return out;
}

void emit_report(const AssessmentReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << report_to_json(report);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

AssessmentReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return report_from_json(ss.str());
}

}  // namespace ordvga
