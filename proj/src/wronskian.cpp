#include "multdec/wronskian.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <string>

#include "multdec/errors.hpp"
#include "multdec/fp_matrix.hpp"
#include "multdec/hasse.hpp"
#include "multdec/polyring_linalg.hpp"

namespace multdec {

namespace {

void check_family(std::span<const Polynomial> fs) {
    for (const auto& f : fs) {
        if (f.block() != Block::X) throw ValidationError("Wronskian families must be X polynomials");
        if (f.field() != fs.front().field() || f.k() != fs.front().k()) {
            throw ValidationError("Wronskian family mixes fields or arities");
        }
    }
}

// Smallest monomial of a nonzero polynomial in the graded order.
const Exponent& min_monomial(const Polynomial& f) { return f.terms().front().exp; }

// Subtracts multiples of earlier members so that all smallest monomials are
// distinct, then sorts by smallest monomial. Each subtraction cancels the
// current smallest monomial and only brings in larger ones, so the loop ends.
// Returns nullopt if some member reduces to zero (the family is dependent).
std::optional<std::vector<Polynomial>> distinct_minimal(std::vector<Polynomial> g) {
    if (g.empty()) return g;
    const PrimeField& F = g.front().field();
    std::map<Exponent, std::size_t> owner;
    for (std::size_t i = 0; i < g.size(); ++i) {
        while (!g[i].is_zero()) {
            const auto it = owner.find(min_monomial(g[i]));
            if (it == owner.end()) break;
            const Polynomial& h = g[it->second];
            const std::uint32_t c = F.mul(g[i].terms().front().coeff, F.inv(h.terms().front().coeff));
            g[i] -= h.scaled(c);
        }
        if (g[i].is_zero()) return std::nullopt;
        owner.emplace(min_monomial(g[i]), i);
    }
    std::sort(g.begin(), g.end(),
              [](const Polynomial& a, const Polynomial& b) { return min_monomial(a) < min_monomial(b); });
    return g;
}

bool all_small(const std::vector<Exponent>& ell) {
    for (std::size_t i = 0; i < ell.size(); ++i) {
        if (ell[i].total() >= i + 1) return false;
    }
    return true;
}

}  // namespace

Polynomial wronskian_det(std::span<const Polynomial> fs, std::span<const Exponent> es) {
    if (fs.size() != es.size()) {
        throw ValidationError("Wronskian needs as many derivative orders as polynomials (" +
                              std::to_string(fs.size()) + " vs " + std::to_string(es.size()) + ")");
    }
    if (fs.empty()) throw ValidationError("Wronskian of an empty family has no ring");
    check_family(fs);
    const PrimeField& F = fs.front().field();
    const std::size_t k = fs.front().k();
    const std::size_t w = fs.size();
    PolyMatrix M(F, k, w, w);
    for (std::size_t i = 0; i < w; ++i) {
        if (es[i].size() != k) throw ValidationError("derivative order arity mismatch");
        for (std::size_t j = 0; j < w; ++j) M.at(i, j) = hasse_derivative(fs[j], es[i]).relabel(Block::Z, k);
    }
    return bareiss_det(M).relabel(Block::X, k);
}

std::optional<WronskianWitness> independence_witness(std::span<const Polynomial> fs) {
    if (fs.empty()) throw ValidationError("independence_witness needs a nonempty family");
    check_family(fs);
    const PrimeField& F = fs.front().field();
    const std::size_t k = fs.front().k();
    unsigned max_deg = 0;
    for (const auto& f : fs) max_deg = std::max(max_deg, f.max_individual_degree());
    if (F.p() <= max_deg) {
        throw FieldTooSmall("Wronskian criterion needs p > individual degree " + std::to_string(max_deg) +
                            ", got p = " + std::to_string(F.p()));
    }
    auto reduced = distinct_minimal(std::vector<Polynomial>(fs.begin(), fs.end()));
    if (!reduced) return std::nullopt;

    const std::size_t w = fs.size();
    std::vector<Exponent> ell;
    for (const auto& g : *reduced) ell.push_back(min_monomial(g));
    const std::vector<std::uint32_t> ones(k, 1);
    unsigned iterations = 0;
    while (!all_small(ell)) {
        if (iterations == w) throw InternalError("translate-and-reduce loop exceeded w rounds");
        std::vector<Polynomial> g;
        for (const auto& e : ell) g.push_back(translate_x(Polynomial::monomial(F, Block::X, k, e), ones));
        auto next = distinct_minimal(std::move(g));
        if (!next) throw InternalError("translates of distinct monomials became dependent");
        ell.clear();
        for (const auto& h : *next) ell.push_back(min_monomial(h));
        ++iterations;
    }
    Polynomial det = wronskian_det(fs, ell);
    if (det.is_zero()) throw InternalError("witness orders give a zero Wronskian");
    return WronskianWitness{std::move(ell), std::move(det), iterations};
}

std::size_t restriction_dimension(std::span<const Polynomial> basis, std::span<const std::uint32_t> a, unsigned mu) {
    if (basis.empty()) return 0;
    check_family(basis);
    if (mu == 0) return basis.size();
    const PrimeField& F = basis.front().field();
    const auto orders = exponents_up_to(basis.front().k(), mu - 1);
    FpMatrix M(orders.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Polynomial t = translate_x(basis[j], a);
        for (std::size_t i = 0; i < orders.size(); ++i) M.at(i, j) = t.coeff(orders[i]).value();
    }
    return basis.size() - rank(M, F);
}

std::size_t subspace_restriction_sum(std::span<const Polynomial> basis, const Grid& grid, unsigned mu, Exec exec) {
    if (basis.empty()) throw ValidationError("subspace basis is empty");
    check_family(basis);
    const PrimeField& F = basis.front().field();
    const std::size_t k = basis.front().k();
    if (F != grid.field() || k != grid.k()) throw ValidationError("basis and grid disagree on field or k");
    if (mu < basis.size()) {
        throw ValidationError("need mu >= dim W (mu = " + std::to_string(mu) + ", w = " +
                              std::to_string(basis.size()) + ")");
    }
    int d = 0;
    for (const auto& f : basis) d = std::max(d, f.total_degree());
    if (F.p() <= static_cast<unsigned>(d)) throw ValidationError("need p > d for the restriction bound");
    const auto mons = exponents_up_to(k, static_cast<unsigned>(d));
    FpMatrix C(basis.size(), mons.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t c = 0; c < mons.size(); ++c) C.at(i, c) = basis[i].coeff(mons[c]).value();
    if (rank(C, F) != basis.size()) throw ValidationError("subspace basis is linearly dependent");

    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<std::size_t> dims(grid.size(), 0);
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) dims[i] = restriction_dimension(basis, grid.point(i), mu);
    } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < n; ++i) dims[i] = restriction_dimension(basis, grid.point(i), mu);
    }
    std::size_t total = 0;
    for (auto v : dims) total += v;
    return total;
}

}  // namespace multdec
