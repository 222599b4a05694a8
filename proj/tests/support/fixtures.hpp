#pragma once

#include <string>

#include "ordvga/matrix.hpp"

namespace ordvga::testing {

std::string data_path(const std::string& file);
const DecisionMatrix& laptops();
const DecisionMatrix& provinces();

}  // namespace ordvga::testing
