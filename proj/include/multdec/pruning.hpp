#ifndef MULTDEC_PRUNING_HPP
#define MULTDEC_PRUNING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "multdec/code.hpp"
#include "multdec/decoder_types.hpp"
#include "multdec/parallel.hpp"

namespace multdec {

struct PruneConfig {
    unsigned r = 1;       // points drawn per trial
    unsigned trials = 1;  // number of independent trials
    std::uint64_t seed = 0;
    Rational min_agreement{1};
};

/// One run: draws r grid points uniformly with replacement and returns the
/// member of W consistent with P at all of them, if it is unique.
std::optional<Polynomial> algorithm_a(const ReceivedWord& P, const SolutionSpace& W, unsigned r, std::uint64_t seed);

/// Union of cfg.trials runs (sub-seed i = derive_seed(cfg.seed, i)), filtered
/// to agreement >= cfg.min_agreement, sorted and deduplicated.
std::vector<Polynomial> prune(const ReceivedWord& P, const SolutionSpace& W, const PruneConfig& cfg,
                              Exec exec = Exec::Parallel);

/// rho = alpha^r - w (d / (|S| (s - w)))^r, the per-trial success bound for a
/// member at agreement alpha in a space of dimension w (w < s).
double pruning_success_bound(Rational alpha, unsigned r, std::size_t w, const CodeParams& params);

/// ceil((1/rho)(ln(1/rho) + ln(1/eta))) trials, so that a member with per-trial
/// success rho is missed with probability at most eta. Throws
/// InfeasibleParameters when rho <= 0.
unsigned default_trials(double rho, double eta = 0.01);

struct ListSizeParams {
    std::uint64_t m = 0;
    std::uint64_t s = 0;
    std::uint64_t r = 0;
};

/// m = ceil((20/eps)^k), s = ceil((4/eps) C(m+k,k)),
/// r = ceil(log(2 C(m+k,k)) / log(1 + eps/4)).
ListSizeParams theorem13_params(Rational epsilon, unsigned k);

}  // namespace multdec

#endif  // MULTDEC_PRUNING_HPP
