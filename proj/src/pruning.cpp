#include "multdec/pruning.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "multdec/errors.hpp"
#include "multdec/fp_matrix.hpp"
#include "multdec/rng.hpp"

namespace multdec {

namespace {

// Encodings of the offset and basis of W, computed once per prune call.
class SpaceEncoding {
public:
    SpaceEncoding(const ReceivedWord& P, const SolutionSpace& W) : P_(P), W_(W) {
        offset_ = encode(W.offset, P.params, Exec::Serial);
        for (const auto& b : W.basis) basis_.push_back(encode(b, P.params, Exec::Serial));
    }

    std::optional<Polynomial> run(unsigned r, std::uint64_t seed) const {
        const PrimeField& F = P_.params.field();
        const std::size_t width = P_.params.alphabet_size();
        const std::size_t w = basis_.size();
        Rng rng(seed);
        FpMatrix M(static_cast<std::size_t>(r) * width, w);
        std::vector<std::uint32_t> rhs(M.rows);
        for (unsigned draw = 0; draw < r; ++draw) {
            const auto idx = static_cast<std::size_t>(rng.below(P_.symbols.size()));
            for (std::size_t c = 0; c < width; ++c) {
                const std::size_t row = draw * width + c;
                for (std::size_t i = 0; i < w; ++i) M.at(row, i) = basis_[i].symbols[idx][c];
                rhs[row] = F.sub(P_.symbols[idx][c], offset_.symbols[idx][c]);
            }
        }
        const auto sol = solve_affine(M, rhs, F);
        if (!sol || !sol->second.empty()) return std::nullopt;
        return W_.member(sol->first);
    }

private:
    const ReceivedWord& P_;
    const SolutionSpace& W_;
    ReceivedWord offset_{P_.params, {}};
    std::vector<ReceivedWord> basis_;
};

}  // namespace

std::optional<Polynomial> algorithm_a(const ReceivedWord& P, const SolutionSpace& W, unsigned r, std::uint64_t seed) {
    if (r == 0) throw ValidationError("algorithm_a needs r >= 1");
    P.validate();
    return SpaceEncoding(P, W).run(r, seed);
}

std::vector<Polynomial> prune(const ReceivedWord& P, const SolutionSpace& W, const PruneConfig& cfg, Exec exec) {
    if (cfg.r == 0 || cfg.trials == 0) throw ValidationError("prune needs r >= 1 and trials >= 1");
    P.validate();
    const SpaceEncoding enc(P, W);
    std::vector<std::optional<Polynomial>> found(cfg.trials);
    const auto n = static_cast<std::ptrdiff_t>(cfg.trials);
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) found[i] = enc.run(cfg.r, derive_seed(cfg.seed, i));
    } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i) found[i] = enc.run(cfg.r, derive_seed(cfg.seed, i));
    }
    std::vector<Polynomial> out;
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    std::sort(out.begin(), out.end(), polynomial_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    const std::size_t min_count = ceil_count(cfg.min_agreement, P.symbols.size());
    std::erase_if(out, [&](const Polynomial& f) {
        return agreement_count(encode(f, P.params, Exec::Serial), P) < min_count;
    });
    return out;
}

double pruning_success_bound(Rational alpha, unsigned r, std::size_t w, const CodeParams& params) {
    if (w >= params.s()) {
        throw ValidationError("success bound needs dim(W) < s (dim = " + std::to_string(w) + ", s = " +
                              std::to_string(params.s()) + ")");
    }
    const double a = boost::rational_cast<double>(alpha);
    const double q = static_cast<double>(params.d()) /
                     (static_cast<double>(params.grid().side()) * static_cast<double>(params.s() - w));
    return std::pow(a, r) - static_cast<double>(w) * std::pow(q, r);
}

unsigned default_trials(double rho, double eta) {
    if (!(rho > 0.0)) {
        throw InfeasibleParameters("per-trial success bound is not positive; no trial count suffices", rho);
    }
    if (!(eta > 0.0 && eta < 1.0)) throw ValidationError("failure probability must lie in (0, 1)");
    const double n = std::ceil((1.0 / rho) * (std::log(1.0 / rho) + std::log(1.0 / eta)));
    if (n > static_cast<double>(std::numeric_limits<unsigned>::max())) {
        throw InfeasibleParameters("required trial count overflows", n);
    }
    return std::max(1u, static_cast<unsigned>(n));
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t checked(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw InfeasibleParameters(std::string(what) + " overflows 64 bits", std::numeric_limits<double>::infinity());
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t ceil_div(u128 a, u128 b) { return checked((a + b - 1) / b, "parameter"); }

}  // namespace

ListSizeParams theorem13_params(Rational epsilon, unsigned k) {
    if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw ValidationError("epsilon must lie in (0, 1)");
    if (k == 0) throw ValidationError("k must be at least 1");
    const auto num = static_cast<u128>(epsilon.numerator());
    const auto den = static_cast<u128>(epsilon.denominator());
    // (20/eps)^k = (20 den)^k / num^k
    u128 top = 1, bottom = 1;
    for (unsigned i = 0; i < k; ++i) {
        top = checked(top * 20 * den, "(20/eps)^k");
        bottom = checked(bottom * num, "eps^k");
    }
    ListSizeParams out;
    out.m = ceil_div(top, bottom);
    const std::uint64_t binom = binomial_count(out.m + k, k);
    if (binom == std::numeric_limits<std::uint64_t>::max()) {
        throw InfeasibleParameters("C(m+k,k) overflows 64 bits", std::numeric_limits<double>::infinity());
    }
    out.s = ceil_div(static_cast<u128>(4) * den * binom, num);
    const double e = boost::rational_cast<double>(epsilon);
    out.r = static_cast<std::uint64_t>(std::ceil(std::log(2.0 * static_cast<double>(binom)) / std::log(1.0 + e / 4.0)));
    const double lhs = 10.0 / std::pow(static_cast<double>(out.m), 1.0 / k) +
                       static_cast<double>(out.m) / static_cast<double>(out.s - out.m);
    if (!(lhs < e)) throw InternalError("parameter triple violates 10/m^(1/k) + m/(s-m) < eps");
    return out;
}

}  // namespace multdec
