#ifndef MULTDEC_PARALLEL_HPP
#define MULTDEC_PARALLEL_HPP

namespace multdec {

/// Execution policy for kernels that have both a serial reference
/// implementation and an OpenMP implementation. Both produce identical results.
enum class Exec { Serial, Parallel };

/// Thread count for parallel kernels: the OpenMP default, capped by the
/// MULTDEC_THREADS environment variable when it holds a positive integer.
int thread_count();

}  // namespace multdec

#endif  // MULTDEC_PARALLEL_HPP
