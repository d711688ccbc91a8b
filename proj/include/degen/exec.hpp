#pragma once

#include <cstddef>
#include <functional>

namespace degen::exec {

/// Process-wide switch between the OpenMP path and the serial reference path.
/// Defaults to parallel when built with OpenMP; tests and the benchmark flip
/// it to compare the two implementations.
void set_parallel(bool on);
bool parallel_enabled();

/// Runs fn(i) for i in [0, n).  Iterations must be independent; each writes
/// only its own slot of any shared output.  Dispatches to OpenMP when enabled
/// and available, otherwise runs the plain serial loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace degen::exec
