#ifndef MULTDEC_GRID_HPP
#define MULTDEC_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multdec/field.hpp"

namespace multdec {

/// The product set S^k inside F_p^k.
///
/// Points are enumerated in row-major order over the index tuple: point
/// number n has index digits (n_1, ..., n_k) in base |S| with n_1 most
/// significant, and coordinates (S[n_1], ..., S[n_k]).
class Grid {
public:
    Grid(const PrimeField& field, std::vector<std::uint32_t> s_points, std::size_t k);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<std::uint32_t>& s_points() const noexcept { return s_; }
    std::size_t side() const noexcept { return s_.size(); }
    // |S|^k.
    std::size_t size() const noexcept { return size_; }

    std::vector<std::uint32_t> point(std::size_t index) const;
    std::vector<std::vector<std::uint32_t>> points() const;
    // Inverse of point(); throws ValidationError if the point is not on the grid.
    std::size_t index_of(const std::vector<std::uint32_t>& point) const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    PrimeField field_;
    std::vector<std::uint32_t> s_;
    std::size_t k_;
    std::size_t size_;
};

/// The integer box {0, ..., side-1}^k in row-major order.
std::vector<std::vector<std::uint32_t>> integer_box(std::size_t side, std::size_t k);

}  // namespace multdec

#endif  // MULTDEC_GRID_HPP
