#include "multdec/polyring_linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "multdec/errors.hpp"
#include "multdec/grid.hpp"

namespace multdec {

PolyMatrix::PolyMatrix(const PrimeField& field, std::size_t k, std::size_t rows, std::size_t cols)
    : field_(field), k_(k), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(field, Block::Z, k)) {}

int PolyMatrix::max_entry_degree() const {
    int m = -1;
    for (const auto& e : entries_) m = std::max(m, e.total_degree());
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& e) { return e.is_zero(); });
}

FpMatrix PolyMatrix::evaluate(std::span<const std::uint32_t> z) const {
    FpMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].is_zero()) out.a[i] = entries_[i].evaluate(z).value();
    }
    return out;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& u) const {
    if (u.size() != cols_) throw ValidationError("vector length does not match matrix columns");
    std::vector<Polynomial> out(rows_, Polynomial(field_, Block::Z, k_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !u[j].is_zero()) out[i] += at(i, j) * u[j];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix shapes do not match");
    PolyMatrix out(field_, k_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j)
            for (std::size_t l = 0; l < cols_; ++l)
                if (!at(i, l).is_zero() && !o.at(l, j).is_zero()) out.at(i, j) += at(i, l) * o.at(l, j);
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix out(field_, k_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.k_ == b.k_ && a.entries_ == b.entries_;
}

HittingSet hitting_set(unsigned degree_bound, std::size_t k, const PrimeField& field) {
    if (field.p() <= degree_bound) {
        throw FieldTooSmall("hitting set for degree " + std::to_string(degree_bound) + " needs p > " +
                            std::to_string(degree_bound) + ", got p = " + std::to_string(field.p()));
    }
    return HittingSet{degree_bound, k, integer_box(degree_bound + 1, k)};
}

namespace {

std::size_t rank_at(const PolyMatrix& A, const std::vector<std::uint32_t>& point) {
    return rank(A.evaluate(point), A.field());
}

std::size_t first_maximizer_serial(const PolyMatrix& A, const HittingSet& hs, std::size_t full) {
    std::size_t best = 0, best_rank = 0;
    for (std::size_t i = 0; i < hs.points.size(); ++i) {
        const std::size_t r = rank_at(A, hs.points[i]);
        if (i == 0 || r > best_rank) {
            best = i;
            best_rank = r;
        }
        if (best_rank == full) break;
    }
    return best;
}

// Processes the hitting set in blocks so that the early exit on full rank
// selects the same point as the serial scan.
std::size_t first_maximizer_parallel(const PolyMatrix& A, const HittingSet& hs, std::size_t full) {
    const int threads = thread_count();
    const std::size_t block = static_cast<std::size_t>(threads) * 4;
    std::vector<std::size_t> ranks(hs.points.size(), 0);
    std::size_t best = 0, best_rank = 0;
    for (std::size_t start = 0; start < hs.points.size(); start += block) {
        const std::size_t stop = std::min(hs.points.size(), start + block);
        const auto n = static_cast<std::ptrdiff_t>(stop - start);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const std::size_t idx = start + static_cast<std::size_t>(i);
            ranks[idx] = rank_at(A, hs.points[idx]);
        }
        for (std::size_t i = start; i < stop; ++i) {
            if (i == 0 || ranks[i] > best_rank) {
                best = i;
                best_rank = ranks[i];
            }
            if (best_rank == full) return best;
        }
    }
    return best;
}

}  // namespace

RankEvaluation max_rank_evaluation(const PolyMatrix& A, Exec exec) {
    const std::size_t full = std::min(A.rows(), A.cols());
    const int m = std::max(A.max_entry_degree(), 0);
    const HittingSet hs = hitting_set(static_cast<unsigned>(m) * static_cast<unsigned>(full), A.k(), A.field());
    const std::size_t best = exec == Exec::Serial ? first_maximizer_serial(A, hs, full)
                                                  : first_maximizer_parallel(A, hs, full);
    RankEvaluation out;
    out.point = hs.points[best];
    FpMatrix at = A.evaluate(out.point);
    FpMatrix t = at.transposed();
    out.pivot_cols = rref(at, A.field());
    out.pivot_rows = rref(t, A.field());
    out.rank = out.pivot_cols.size();
    return out;
}

namespace {

Polynomial zero_z(const PrimeField& F, std::size_t k) { return Polynomial(F, Block::Z, k); }

// Fraction-free forward elimination on the n x (n+q) matrix M. Returns false
// if the leading n x n block is singular. On success M is upper triangular in
// its first n columns and `sign` records the row-swap parity.
bool bareiss_forward(std::vector<std::vector<Polynomial>>& M, std::size_t n, int& sign) {
    if (n == 0) return true;
    const PrimeField& F = M[0][0].field();
    const std::size_t k = M[0][0].k();
    Polynomial prev = Polynomial::constant(F, Block::Z, k, 1);
    const std::size_t width = M[0].size();
    sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (M[i][c].is_zero()) continue;
            if (piv == n || M[i][c].num_terms() < M[piv][c].num_terms()) piv = i;
        }
        if (piv == n) return false;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < width; ++j) {
                Polynomial v = M[c][c] * M[i][j];
                if (!M[i][c].is_zero() && !M[c][j].is_zero()) v -= M[i][c] * M[c][j];
                M[i][j] = v.exact_div(prev);
            }
            M[i][c] = zero_z(F, k);
        }
        prev = M[c][c];
    }
    return true;
}

std::vector<std::vector<Polynomial>> augmented(const PolyMatrix& A, const PolyMatrix* B) {
    const std::size_t q = B ? B->cols() : 0;
    std::vector<std::vector<Polynomial>> M(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        M[i].reserve(A.cols() + q);
        for (std::size_t j = 0; j < A.cols(); ++j) M[i].push_back(A.at(i, j));
        for (std::size_t j = 0; j < q; ++j) M[i].push_back(B->at(i, j));
    }
    return M;
}

void require_square(const PolyMatrix& A) {
    if (A.rows() != A.cols()) throw ValidationError("square matrix required");
}

}  // namespace

Polynomial bareiss_det(const PolyMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    if (n == 0) return Polynomial::constant(A.field(), Block::Z, A.k(), 1);
    auto M = augmented(A, nullptr);
    int sign = 1;
    if (!bareiss_forward(M, n, sign)) return zero_z(A.field(), A.k());
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

std::pair<Polynomial, PolyMatrix> fraction_free_solve(const PolyMatrix& A, const PolyMatrix& B) {
    require_square(A);
    if (B.rows() != A.rows()) throw ValidationError("right-hand side row count mismatch");
    const std::size_t n = A.rows();
    const std::size_t q = B.cols();
    const PrimeField& F = A.field();
    PolyMatrix Y(F, A.k(), n, q);
    if (n == 0) return {Polynomial::constant(F, Block::Z, A.k(), 1), Y};
    auto M = augmented(A, &B);
    int sign = 1;
    if (!bareiss_forward(M, n, sign)) throw ValidationError("fraction_free_solve: matrix is singular");
    const Polynomial d = M[n - 1][n - 1];
    for (std::size_t col = 0; col < q; ++col) {
        for (std::size_t i = n; i-- > 0;) {
            Polynomial acc = d * M[i][n + col];
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!M[i][j].is_zero() && !Y.at(j, col).is_zero()) acc -= M[i][j] * Y.at(j, col);
            }
            Y.at(i, col) = acc.exact_div(M[i][i]);
        }
    }
    return {d, std::move(Y)};
}

std::pair<Polynomial, PolyMatrix> det_and_adjugate(const PolyMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    const PrimeField& F = A.field();
    const Polynomial det = bareiss_det(A);
    PolyMatrix adj(F, A.k(), n, n);
    if (n == 0) return {det, adj};
    if (n == 1) {
        adj.at(0, 0) = Polynomial::constant(F, Block::Z, A.k(), 1);
        return {det, adj};
    }
    if (!det.is_zero()) {
        PolyMatrix I(F, A.k(), n, n);
        for (std::size_t i = 0; i < n; ++i) I.at(i, i) = Polynomial::constant(F, Block::Z, A.k(), 1);
        auto [d, Y] = fraction_free_solve(A, I);
        if (d == det) return {det, Y};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Y.at(i, j) = -Y.at(i, j);
        return {det, Y};
    }
    // Singular: cofactors, adj(A)_{ji} = (-1)^{i+j} det(A without row i, column j).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t r = 0; r < n; ++r)
                if (r != i) rows.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            Polynomial minor = bareiss_det(A.submatrix(rows, cols));
            adj.at(j, i) = (i + j) % 2 ? -minor : minor;
        }
    }
    return {det, adj};
}

std::vector<Polynomial> kernel_vector(const PolyMatrix& A, Exec exec) {
    const PrimeField& F = A.field();
    if (A.cols() == 0) throw ValidationError("kernel_vector on a matrix with no columns");
    std::vector<Polynomial> u(A.cols(), zero_z(F, A.k()));
    if (A.is_zero()) {
        u[0] = Polynomial::constant(F, Block::Z, A.k(), 1);
        return u;
    }
    const RankEvaluation re = max_rank_evaluation(A, exec);
    if (re.rank == A.cols()) {
        throw ValidationError("kernel_vector: matrix has full column rank " + std::to_string(A.cols()));
    }
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : re.pivot_cols) is_pivot[c] = true;
    const std::size_t b = static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
    const PolyMatrix Ap = A.submatrix(re.pivot_rows, re.pivot_cols);
    const PolyMatrix rhs = A.submatrix(re.pivot_rows, {b});
    auto [d, Y] = fraction_free_solve(Ap, rhs);
    for (std::size_t j = 0; j < re.pivot_cols.size(); ++j) u[re.pivot_cols[j]] = Y.at(j, 0);
    u[b] = -d;
    return u;
}

std::vector<Polynomial> kernel_vector_column_homogeneous(const PolyMatrix& A, Exec exec) {
    const std::size_t k = A.k();
    if (k == 0) return kernel_vector(A, exec);
    const PrimeField& F = A.field();
    std::vector<unsigned> col_deg(A.cols(), 0);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        int deg = -1;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            const Polynomial& e = A.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous() || (deg >= 0 && e.total_degree() != deg)) {
                throw ValidationError("column " + std::to_string(j) + " is not homogeneous");
            }
            deg = e.total_degree();
        }
        col_deg[j] = static_cast<unsigned>(std::max(deg, 0));
    }
    PolyMatrix D(F, k - 1, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            std::vector<Term> terms;
            for (const auto& t : A.at(i, j).terms()) terms.push_back({t.exp.slice(1, k - 1), t.coeff});
            D.at(i, j) = Polynomial::from_terms(F, Block::Z, k - 1, std::move(terms));
        }
    }
    const auto v = kernel_vector(D, exec);
    int V = 0;
    for (const auto& e : v) V = std::max(V, e.total_degree());
    const unsigned L = *std::max_element(col_deg.begin(), col_deg.end());
    std::vector<std::vector<Term>> lifted(A.cols());
    unsigned common = ~0u;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (const auto& t : v[j].terms()) {
            const unsigned z1 = L - col_deg[j] + static_cast<unsigned>(V) - t.exp.total();
            common = std::min(common, z1);
            lifted[j].push_back({Exponent{z1}.concat(t.exp), t.coeff});
        }
    }
    std::vector<Polynomial> u;
    u.reserve(A.cols());
    for (auto& terms : lifted) {
        for (auto& t : terms) t.exp.set(0, t.exp[0] - common);
        u.push_back(Polynomial::from_terms(F, Block::Z, k, std::move(terms)));
    }
    return u;
}

}  // namespace multdec
