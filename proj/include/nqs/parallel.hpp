#pragma once

#include <cstddef>
#include <functional>

namespace nqs {

// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
// Each index is handled by exactly one call, so writing results into a
// pre-sized vector slot i and reducing afterwards in index order gives output
// that does not depend on scheduling. Nested calls run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nqs
