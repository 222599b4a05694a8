#include "fixtures.hpp"

namespace ordvga::testing {

std::string data_path(const std::string& file) { return std::string(ORDVGA_DATA_DIR) + "/" + file; }

const DecisionMatrix& laptops() {
  static const DecisionMatrix m = load_matrix(data_path("laptops.csv"));
  return m;
}

const DecisionMatrix& provinces() {
  static const DecisionMatrix m = load_matrix(data_path("provinces.csv"));
  return m;
}

}  // namespace ordvga::testing
