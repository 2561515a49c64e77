#pragma once

#include <functional>

namespace locwalk {

/// Resolves the worker count: LOCWALK_THREADS env var wins, then `requested`
/// (0 = hardware parallelism), floor of 1.
int effective_threads(int requested);

/// Runs fn(i) for i in [0, count). threads == 1 is the serial reference path;
/// any other value dispatches the same body through an OpenMP parallel-for.
/// Callers write to per-index slots and reduce afterwards in index order, so
/// results are identical for every thread count.
void for_each_index(long long count, int threads, const std::function<void(long long)>& fn);

}  // namespace locwalk
