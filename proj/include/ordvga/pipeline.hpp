#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordvga/matrix.hpp"
#include "ordvga/parallel.hpp"
#include "ordvga/stage.hpp"

namespace ordvga {

struct PipelineOptions {
  ModelOptions model;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

// Compares the zero-gap top tier with the union of stage 1 peer sets.
struct TopTierCheck {
  std::vector<std::string> zero_gap;
  std::vector<std::string> peer_union;
  bool consistent = true;
};

struct RankingEntry {
  int round = 0;
  std::string dmu;
  // Stage 2 gap of the round winner; empty when it was the sole
  // top-tier DMU.
  std::optional<double> gap;
  // DMUs whose stage 2 gap tied with the winner's, winner included.
  std::vector<std::string> ties;
};

struct AssessmentReport {
  std::string matrix_digest;
  std::vector<std::string> dmu_names;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<StageResult> stage1;
  std::vector<std::string> top_tier;
  TopTierCheck top_tier_check;
  // Empty when the top tier holds a single DMU.
  std::vector<StageResult> stage2;
  // Top-tier DMUs whose stage 2 optimum is zero and is reached only by
  // prices with a zero virtual output. Their super gap is zero and they
  // have no entry in stage2.
  std::vector<std::string> stage2_unpriced;
  bool sole_efficient = false;
  std::string best;
  std::vector<std::string> best_ties;
  std::vector<RankingEntry> ranking;
};

// Stage 1 over every DMU, top-tier extraction, stage 2 over the top tier
// and best selection. Errors are rethrown as AssessmentError naming the
// DMU and stage.
AssessmentReport assess(const DecisionMatrix& matrix, const PipelineOptions& options = {});

struct RankingRound {
  RankingEntry entry;
  AssessmentReport report;
};

// Repeats assess and removes each round's best until one DMU is left or
// max_rounds rounds have run. The last remaining DMU gets its own round.
std::vector<RankingRound> rank_all(const DecisionMatrix& matrix, std::optional<std::size_t> max_rounds = {},
                                   const PipelineOptions& options = {});

// Ranking summary of rank_all rounds.
std::vector<RankingEntry> ranking_entries(const std::vector<RankingRound>& rounds);

struct TechnologyPoint {
  enum class Role { Assessed, Peer, Other, Target };
  std::string label;
  double alpha = 0.0;
  double beta = 0.0;
  Role role = Role::Other;
};

const char* to_string(TechnologyPoint::Role role);

// The assessed DMU, every comparison DMU and the target point
// (benchmark_alpha, benchmark_beta) labelled "T".
std::vector<TechnologyPoint> virtual_technology_set(const StageResult& result);

struct MetricAdvantage {
  std::string metric;
  double e = 0.0;
  double share = 0.0;
};

// Virtual cost per metric and its share of the total.
std::vector<MetricAdvantage> metric_advantage(const StageResult& result);

// Finds the result for a DMU; nullptr when absent.
const StageResult* find_result(const std::vector<StageResult>& results, const std::string& dmu);

}  // namespace ordvga
