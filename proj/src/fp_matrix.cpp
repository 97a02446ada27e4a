#include "multdec/fp_matrix.hpp"

#include "multdec/errors.hpp"

namespace multdec {

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<std::size_t> rref(FpMatrix& m, const PrimeField& F) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        }
        const std::uint32_t inv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const std::uint32_t factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(FpMatrix m, const PrimeField& F) { return rref(m, F).size(); }

std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m, const PrimeField& F) {
    const auto pivots = rref(m, F);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[free] = 1 % F.p();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>>> solve_affine(
    const FpMatrix& m, const std::vector<std::uint32_t>& b, const PrimeField& F) {
    if (b.size() != m.rows) throw ValidationError("right-hand side length mismatch");
    FpMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i] % F.p();
    }
    const auto pivots = rref(aug, F);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<std::uint32_t> x(m.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[free] = 1 % F.p();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(aug.at(r, free));
        basis.push_back(std::move(v));
    }
    return std::make_pair(std::move(x), std::move(basis));
}

}  // namespace multdec
