#include "multdec/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace multdec {

int thread_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("MULTDEC_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) n = std::min(n, cap);
        } catch (const std::exception&) {
            // Malformed values are ignored.
        }
    }
    return std::max(n, 1);
}

}  // namespace multdec
