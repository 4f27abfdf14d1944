#pragma once

#include <cstddef>
#include <functional>

namespace eafkit {

/// Upper bound on worker threads used by the computation modules. Defaults to 1.
std::size_t max_threads() noexcept;
void set_max_threads(std::size_t n) noexcept;

/// Calls body(i) for every i in [0, count). Each index is visited exactly once;
/// bodies must only write to state owned by their own index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace eafkit
