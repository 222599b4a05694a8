#include "random_matrix.hpp"

#include <random>
#include <string>

namespace ordvga::testing {

DecisionMatrix random_matrix(std::uint64_t seed, const RandomMatrixShape& shape) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> metric_count(shape.min_metrics, shape.max_metrics);
  std::uniform_int_distribution<int> dmu_count(shape.min_dmus, shape.max_dmus);
  std::uniform_real_distribution<double> value(shape.min_value, shape.max_value);
  std::bernoulli_distribution ordinal(shape.ordinal_share);
  std::bernoulli_distribution coin(0.5);

  DecisionMatrix m;
  const int metrics = metric_count(rng);
  const int dmus = dmu_count(rng);
  for (int j = 0; j < dmus; ++j) m.dmu_names.push_back("U" + std::to_string(j + 1));
  for (int k = 0; k < metrics; ++k) {
    MetricSpec spec;
    spec.name = "M" + std::to_string(k + 1);
    if (k == 0) {
      spec.direction = Direction::Input;
    } else if (k == 1) {
      spec.direction = Direction::Output;
    } else {
      spec.direction = coin(rng) ? Direction::Input : Direction::Output;
    }
    std::vector<double> row(dmus);
    if (ordinal(rng)) {
      std::uniform_int_distribution<int> lo(shape.min_likert, shape.max_likert - 1);
      const int lower = lo(rng);
      std::uniform_int_distribution<int> hi(lower + 1, shape.max_likert);
      const int upper = hi(rng);
      spec.likert = LikertBounds{lower, upper};
      std::uniform_int_distribution<int> score(lower, upper);
      for (auto& v : row) v = score(rng);
    } else {
      for (auto& v : row) v = value(rng);
    }
    m.metrics.push_back(spec);
    m.values.push_back(row);
  }
  return validate_matrix(m);
}

}  // namespace ordvga::testing
