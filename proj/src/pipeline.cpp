#include "ordvga/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <utility>

#include "ordvga/errors.hpp"
#include "ordvga/obpt.hpp"
#include "ordvga/ospt.hpp"

namespace ordvga {

namespace {

template <class Fn>
auto annotate(const std::string& dmu, int stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const AssessmentError&) {
    throw;
  } catch (const ComputationError& e) {
    throw AssessmentError(dmu, stage, e.what());
  }
}

}  // namespace

AssessmentReport assess(const DecisionMatrix& matrix, const PipelineOptions& options) {
  const DecisionMatrix& mat = matrix;
  AssessmentReport rep;
  rep.matrix_digest = matrix_digest(mat);
  rep.dmu_names = mat.dmu_names;
  for (auto k : mat.inputs()) rep.input_names.push_back(mat.metrics[k].name);
  for (auto k : mat.outputs()) rep.output_names.push_back(mat.metrics[k].name);

  const std::size_t n = mat.num_dmus();
  rep.stage1.resize(n);
  for_each_index(n, options.policy, [&](std::size_t j) {
    rep.stage1[j] = annotate(mat.dmu_names[j], 1, [&] { return assess_obpt(mat, mat.dmu_names[j], options.model); });
  });

  const auto& tol = options.model.tolerances;
  std::set<std::string> peer_union;
  for (const auto& r : rep.stage1) {
    if (r.gap_star <= tol.top_tier_gap) rep.top_tier.push_back(r.dmu);
    peer_union.insert(r.peers.begin(), r.peers.end());
  }
  rep.top_tier_check.zero_gap = rep.top_tier;
  for (const auto& name : mat.dmu_names) {
    if (peer_union.count(name) != 0) rep.top_tier_check.peer_union.push_back(name);
  }
  rep.top_tier_check.consistent = rep.top_tier_check.zero_gap == rep.top_tier_check.peer_union;

  if (rep.top_tier.size() == 1) {
    rep.sole_efficient = true;
    rep.best = rep.top_tier.front();
    rep.best_ties = {rep.best};
    return rep;
  }
  if (rep.top_tier.empty()) {
    throw AssessmentError("*", 1, "no DMU reached a zero stage 1 gap");
  }

  std::vector<std::optional<StageResult>> super(rep.top_tier.size());
  for_each_index(rep.top_tier.size(), options.policy, [&](std::size_t t) {
    const auto& dmu = rep.top_tier[t];
    super[t] = annotate(dmu, 2, [&]() -> std::optional<StageResult> {
      try {
        return assess_ospt(mat, rep.top_tier, dmu, options.model);
      } catch (const DegeneratePrices&) {
        return std::nullopt;
      }
    });
  });

  std::vector<std::pair<std::string, double>> gaps;
  for (std::size_t t = 0; t < super.size(); ++t) {
    if (super[t]) {
      gaps.emplace_back(rep.top_tier[t], super[t]->gap_star);
      rep.stage2.push_back(std::move(*super[t]));
    } else {
      gaps.emplace_back(rep.top_tier[t], 0.0);
      rep.stage2_unpriced.push_back(rep.top_tier[t]);
    }
  }
  double best_gap = gaps.front().second;
  for (const auto& g : gaps) best_gap = std::min(best_gap, g.second);
  for (const auto& g : gaps) {
    if (g.second <= best_gap + tol.tie) rep.best_ties.push_back(g.first);
  }
  std::sort(rep.best_ties.begin(), rep.best_ties.end());
  rep.best = rep.best_ties.front();
  return rep;
}

std::vector<RankingRound> rank_all(const DecisionMatrix& matrix, std::optional<std::size_t> max_rounds,
                                   const PipelineOptions& options) {
  std::vector<RankingRound> rounds;
  DecisionMatrix current = matrix;
  while (current.num_dmus() > 0) {
    if (max_rounds && rounds.size() >= *max_rounds) break;
    RankingRound round;
    round.report = assess(current, options);
    round.entry.round = static_cast<int>(rounds.size()) + 1;
    round.entry.dmu = round.report.best;
    round.entry.ties = round.report.best_ties;
    if (!round.report.sole_efficient) {
      const StageResult* r = find_result(round.report.stage2, round.report.best);
      round.entry.gap = r != nullptr ? r->gap_star : 0.0;
    }
    const std::string best = round.entry.dmu;
    rounds.push_back(std::move(round));
    if (current.num_dmus() == 1) break;
    current = remove_dmus(current, {best});
  }
  return rounds;
}

std::vector<RankingEntry> ranking_entries(const std::vector<RankingRound>& rounds) {
  std::vector<RankingEntry> out;
  for (const auto& r : rounds) out.push_back(r.entry);
  return out;
}

const char* to_string(TechnologyPoint::Role role) {
  switch (role) {
    case TechnologyPoint::Role::Assessed: return "assessed";
    case TechnologyPoint::Role::Peer: return "peer";
    case TechnologyPoint::Role::Other: return "other";
    case TechnologyPoint::Role::Target: return "target";
  }
  return "other";
}

std::vector<TechnologyPoint> virtual_technology_set(const StageResult& result) {
  std::vector<TechnologyPoint> pts;
  for (const auto& pair : result.pairs) {
    TechnologyPoint p{pair.dmu, pair.alpha, pair.beta, TechnologyPoint::Role::Other};
    if (pair.dmu == result.dmu) {
      p.role = TechnologyPoint::Role::Assessed;
    } else if (std::find(result.peers.begin(), result.peers.end(), pair.dmu) != result.peers.end()) {
      p.role = TechnologyPoint::Role::Peer;
    }
    pts.push_back(p);
  }
  pts.push_back({"T", result.benchmark_alpha, result.benchmark_beta, TechnologyPoint::Role::Target});
  return pts;
}

std::vector<MetricAdvantage> metric_advantage(const StageResult& result) {
  std::vector<MetricAdvantage> out;
  double total = 0.0;
  for (double e : result.metric_prices) total += e;
  std::vector<std::string> names = result.input_names;
  names.insert(names.end(), result.output_names.begin(), result.output_names.end());
  for (std::size_t k = 0; k < result.metric_prices.size(); ++k) {
    const double e = result.metric_prices[k];
    out.push_back({names[k], e, total != 0.0 ? e / total : 0.0});
  }
  return out;
}

const StageResult* find_result(const std::vector<StageResult>& results, const std::string& dmu) {
  for (const auto& r : results) {
    if (r.dmu == dmu) return &r;
  }
  return nullptr;
}

}  // namespace ordvga
