#ifndef MULTDEC_FP_MATRIX_HPP
#define MULTDEC_FP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multdec/field.hpp"

namespace multdec {

/// Dense row-major matrix of residues mod p.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    FpMatrix transposed() const;
};

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref(FpMatrix& m, const PrimeField& field);
std::size_t rank(FpMatrix m, const PrimeField& field);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m, const PrimeField& field);
/// Solution set of m x = b as (particular solution, nullspace basis), or
/// nullopt when the system is inconsistent.
std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>>> solve_affine(
    const FpMatrix& m, const std::vector<std::uint32_t>& b, const PrimeField& field);

}  // namespace multdec

#endif  // MULTDEC_FP_MATRIX_HPP
