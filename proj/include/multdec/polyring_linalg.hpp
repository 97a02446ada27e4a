#ifndef MULTDEC_POLYRING_LINALG_HPP
#define MULTDEC_POLYRING_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "multdec/fp_matrix.hpp"
#include "multdec/parallel.hpp"
#include "multdec/polynomial.hpp"

namespace multdec {

/// Matrix with entries in F_p[z_1..z_k] (Z polynomials with arity k; k may be 0).
class PolyMatrix {
public:
    PolyMatrix(const PrimeField& field, std::size_t k, std::size_t rows, std::size_t cols);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // Maximum total z-degree over all entries; -1 for the zero matrix.
    int max_entry_degree() const;
    bool is_zero() const;

    FpMatrix evaluate(std::span<const std::uint32_t> z) const;
    std::vector<Polynomial> apply(const std::vector<Polynomial>& u) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    PrimeField field_;
    std::size_t k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// The grid {0..degree_bound}^k; no nonzero polynomial of total degree at
/// most degree_bound vanishes on all of it.
struct HittingSet {
    unsigned degree_bound = 0;
    std::size_t k = 0;
    std::vector<std::vector<std::uint32_t>> points;
};

/// Throws FieldTooSmall when p <= degree_bound.
HittingSet hitting_set(unsigned degree_bound, std::size_t k, const PrimeField& field);

struct RankEvaluation {
    std::vector<std::uint32_t> point;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

/// First hitting-set point (row-major) at which A has maximal rank. The
/// hitting set has degree bound m*min(rows, cols), so the rank found equals
/// the rank over the fraction field.
RankEvaluation max_rank_evaluation(const PolyMatrix& A, Exec exec = Exec::Parallel);

/// Nonzero u with A u = 0 and every entry of degree at most cols*m.
/// Throws ValidationError if A has full column rank.
std::vector<Polynomial> kernel_vector(const PolyMatrix& A, Exec exec = Exec::Parallel);

/// Kernel vector for a matrix whose columns are each homogeneous (every
/// nonzero entry of column c has total degree deg_c). Sets z_1 = 1, solves in
/// k-1 variables and homogenizes back; the result is homogeneous per entry.
std::vector<Polynomial> kernel_vector_column_homogeneous(const PolyMatrix& A, Exec exec = Exec::Parallel);

/// Determinant by fraction-free elimination.
Polynomial bareiss_det(const PolyMatrix& A);

/// Determinant and adjugate of a square matrix: adj(A) A = A adj(A) = det(A) I.
std::pair<Polynomial, PolyMatrix> det_and_adjugate(const PolyMatrix& A);

/// Fraction-free solve for nonsingular square A: returns (d, Y) with
/// A Y = d B and d = +-det(A).
std::pair<Polynomial, PolyMatrix> fraction_free_solve(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace multdec

#endif  // MULTDEC_POLYRING_LINALG_HPP
