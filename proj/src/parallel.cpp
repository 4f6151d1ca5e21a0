#include "specband/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specband {

int max_threads() {
    static const int cached = [] {
        int fallback = 1;
#ifdef _OPENMP
        fallback = omp_get_max_threads();
#endif
        const char* env = std::getenv("SPECBAND_THREADS");
        if (env == nullptr) return fallback;
        try {
            int n = std::stoi(env);
            return n >= 1 ? n : fallback;
        } catch (...) {
            return fallback;
        }
    }();
    return cached;
}

}  // namespace specband
