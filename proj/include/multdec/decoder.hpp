#ifndef MULTDEC_DECODER_HPP
#define MULTDEC_DECODER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multdec/code.hpp"
#include "multdec/decoder_types.hpp"
#include "multdec/parallel.hpp"
#include "multdec/pruning.hpp"

namespace multdec {

/// D = smallest integer with m C(D+k,k) > |S|^k C(s-m+k,k). Requires
/// 1 <= m <= s-1-k.
DecoderParams choose_params(const CodeParams& params, unsigned m);

/// ceil(10 |S| (s-m) / m^(1/k)).
unsigned closed_form_degree(const CodeParams& params, unsigned m);

/// Number of interpolation constraints |S|^k C(s-1-m+k, k) actually imposed
/// (derivative orders |e| <= s-1-m at every grid point).
std::size_t constraint_count(const CodeParams& params, unsigned m);
/// Number of unknowns m C(D+k,k).
std::size_t unknown_count(const CodeParams& params, const DecoderParams& dp);

/// Nonzero Q with x-degrees <= D vanishing to the required order against P.
Interpolant interpolate(const ReceivedWord& P, const DecoderParams& dp, Exec exec = Exec::Parallel);

/// Checks that Delta_e(Q)(a) = 0 for every grid point and |e| <= s-1-m.
bool interpolation_constraints_hold(const Interpolant& Q, const ReceivedWord& P);

/// sum_i Q_i Delta_{i-1}(f) as an XZ polynomial.
Polynomial substitute(const Interpolant& Q, const Polynomial& f);
/// True iff substitute(Q, f) is identically zero.
bool vanishing_check(const Interpolant& Q, const Polynomial& f);

struct SubspaceDiagnostics {
    unsigned j = 0;                         // largest index with Q_j != 0
    std::vector<std::uint32_t> translation;  // point a with Q_j(a, z) != 0
    std::size_t seeds = 0;                  // number of seed monomials
    bool division_fallback = false;         // division used instead of the hitting set
};

/// Linear space containing every f of degree <= d with Q(x, Delta(f)) = 0;
/// after the final filter it is exactly that set.
SolutionSpace solve_equation_subspace(const Interpolant& Q, unsigned d, SubspaceDiagnostics* diag = nullptr,
                                      Exec exec = Exec::Parallel);

struct DecodeOptions {
    std::size_t enumeration_dim_cap = 12;
    std::uint64_t enumeration_limit = std::uint64_t{1} << 22;
    std::optional<PruneConfig> prune;  // used when the subspace is too large to enumerate
    Exec exec = Exec::Parallel;
};

struct DecodeResult {
    std::vector<Polynomial> list;
    DecoderParams dp;
    std::size_t threshold_count = 0;  // ceil(min_agreement |S|^k)
    SubspaceDiagnostics diag;
    std::size_t subspace_dimension = 0;
    std::vector<int> interpolant_x_degrees;
    int interpolant_z_degree = -1;
    bool pruned = false;
    std::vector<std::size_t> agreements;  // agreement count of each output
};

/// Smallest agreement count T with T (s-m) > (D+d) |S|^(k-1).
std::size_t required_agreement_count(const CodeParams& params, const DecoderParams& dp);

/// All f of degree <= d with agreement(encode(f), P) >= min_agreement.
/// Throws InfeasibleParameters if min_agreement is below the vanishing
/// threshold, or if the subspace is too large and pruning is not configured.
DecodeResult list_decode(const ReceivedWord& P, unsigned m, Rational min_agreement,
                         const DecodeOptions& options = {});

}  // namespace multdec

#endif  // MULTDEC_DECODER_HPP
