#include "locwalk/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace locwalk {

int effective_threads(int requested) {
    if (const char* env = std::getenv("LOCWALK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (requested > 0) return requested;
    return omp_get_max_threads();
}

void for_each_index(long long count, int threads, const std::function<void(long long)>& fn) {
    const int n = effective_threads(threads);
    if (n == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
#pragma omp parallel for schedule(dynamic) num_threads(n)
    for (long long i = 0; i < count; ++i) fn(i);
}

}  // namespace locwalk
