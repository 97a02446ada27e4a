#ifndef MULTDEC_RNG_HPP
#define MULTDEC_RNG_HPP

#include <cstdint>
#include <random>

namespace multdec {

/// The i-th output (i = 0, 1, ...) of the SplitMix64 sequence started from
/// state `master`. Used to derive independent sub-seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Seeded generator: std::mt19937_64 (fully specified by the C++ standard)
/// with bounded draws by rejection, so the stream is identical on every
/// conforming implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace multdec

#endif  // MULTDEC_RNG_HPP
