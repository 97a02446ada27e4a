#ifndef MULTDEC_DECODER_TYPES_HPP
#define MULTDEC_DECODER_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multdec/polynomial.hpp"

namespace multdec {

struct DecoderParams {
    unsigned m = 1;  // number of y-variables
    unsigned D = 0;  // total x-degree bound of each Q_i
};

/// Q(x, y) = Q_1 y_1 + ... + Q_m y_m with each Q_i an XZ polynomial.
struct Interpolant {
    std::vector<Polynomial> Q;

    std::size_t k() const { return Q.front().k(); }
    /// Largest i (1-based) with Q_i != 0, or 0 if all vanish.
    unsigned top_index() const;
    int max_z_degree() const;
};

/// offset + span(basis), every member of degree <= d. The decoder always
/// produces a linear space (offset 0) with a basis in reduced echelon form
/// over the message monomials.
struct SolutionSpace {
    Polynomial offset;
    std::vector<Polynomial> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
    /// offset + sum_i coords[i] * basis[i].
    Polynomial member(const std::vector<std::uint32_t>& coords) const;
};

}  // namespace multdec

#endif  // MULTDEC_DECODER_TYPES_HPP
