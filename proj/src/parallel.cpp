#include "ordvga/parallel.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordvga {

const char* to_string(ExecutionPolicy policy) {
  return policy == ExecutionPolicy::Serial ? "serial" : "parallel";
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t count, ExecutionPolicy policy,
                    const std::function<void(std::size_t)>& body) {
  std::vector<std::exception_ptr> errors(count);
  if (policy == ExecutionPolicy::Serial) {
    for (std::size_t k = 0; k < count; ++k) {
      try {
        body(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  } else {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < n; ++k) {
      try {
        body(static_cast<std::size_t>(k));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ordvga
