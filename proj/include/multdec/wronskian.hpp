#ifndef MULTDEC_WRONSKIAN_HPP
#define MULTDEC_WRONSKIAN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multdec/exponent.hpp"
#include "multdec/grid.hpp"
#include "multdec/parallel.hpp"
#include "multdec/polynomial.hpp"

namespace multdec {

/// Derivative orders e_1..e_w with |e_i| <= i-1 whose generalized Wronskian
/// of the family is a nonzero polynomial.
struct WronskianWitness {
    std::vector<Exponent> monomials;
    Polynomial determinant;
    unsigned iterations = 0;  // translate-and-reduce rounds used to find the orders
};

/// det of the w x w matrix with (i, j) entry d_{e_i} f_j, by fraction-free
/// elimination over F_p[x]. The family must be nonempty.
Polynomial wronskian_det(std::span<const Polynomial> fs, std::span<const Exponent> es);

/// A witness iff the family is linearly independent over F_p. Requires p to
/// exceed the largest individual degree in the family (FieldTooSmall otherwise).
std::optional<WronskianWitness> independence_witness(std::span<const Polynomial> fs);

/// dim of {b in F_p^w : sum_i b_i f_i vanishes to order >= mu at a}.
std::size_t restriction_dimension(std::span<const Polynomial> basis, std::span<const std::uint32_t> a, unsigned mu);

/// Sum of restriction_dimension over the grid. Requires a linearly
/// independent basis, mu >= w and p > the largest total degree.
std::size_t subspace_restriction_sum(std::span<const Polynomial> basis, const Grid& grid, unsigned mu,
                                     Exec exec = Exec::Parallel);

}  // namespace multdec

#endif  // MULTDEC_WRONSKIAN_HPP
