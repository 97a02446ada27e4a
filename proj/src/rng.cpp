#include "multdec/rng.hpp"

#include "multdec/errors.hpp"

namespace multdec {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw ValidationError("Rng::below needs a positive bound");
    // Reject the lowest (2^64 mod n) outputs so every residue is equally likely.
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % n;
    }
}

}  // namespace multdec
