#pragma once

#include <cstddef>
#include <functional>

namespace ordvga {

enum class ExecutionPolicy { Serial, Parallel };

const char* to_string(ExecutionPolicy policy);

// Calls body(k) for k in [0, count). Parallel runs the calls on an OpenMP
// team with dynamic scheduling; Serial is the reference loop. When calls
// throw, the exception of the lowest index is rethrown after all calls
// finish, so both policies report the same failure.
void for_each_index(std::size_t count, ExecutionPolicy policy,
                    const std::function<void(std::size_t)>& body);

// Worker threads the Parallel policy would use.
int parallel_threads();

}  // namespace ordvga
