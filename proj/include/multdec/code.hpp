#ifndef MULTDEC_CODE_HPP
#define MULTDEC_CODE_HPP

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "multdec/exponent.hpp"
#include "multdec/grid.hpp"
#include "multdec/parallel.hpp"
#include "multdec/polynomial.hpp"

namespace multdec {

using Rational = boost::rational<long long>;

/// Parameters of the multiplicity code of order s and degree d on S^k.
class CodeParams {
public:
    /// Validates d < s|S|, p > d and s >= 1.
    CodeParams(Grid grid, unsigned s, unsigned d);

    const Grid& grid() const noexcept { return grid_; }
    const PrimeField& field() const noexcept { return grid_.field(); }
    std::size_t k() const noexcept { return grid_.k(); }
    unsigned s() const noexcept { return s_; }
    unsigned d() const noexcept { return d_; }

    /// Derivative orders e with |e| < s in graded order; symbol coordinates.
    const std::vector<Exponent>& orders() const noexcept { return orders_; }
    /// C(s+k-1, k).
    std::size_t alphabet_size() const noexcept { return orders_.size(); }
    /// Monomials of total degree <= d in graded order (message coordinates).
    std::vector<Exponent> message_monomials() const;
    /// 1 - d/(s|S|).
    Rational relative_distance() const;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;

private:
    Grid grid_;
    unsigned s_;
    unsigned d_;
    std::vector<Exponent> orders_;
};

/// A word over the alphabet F_p^E: one derivative tuple per grid point, in
/// the grid's row-major order.
struct ReceivedWord {
    CodeParams params;
    std::vector<std::vector<std::uint32_t>> symbols;

    /// Throws ValidationError unless shapes and residues are consistent.
    void validate() const;
    friend bool operator==(const ReceivedWord&, const ReceivedWord&) = default;
};

/// Derivative tuple of f at a: coefficients of x^e in f(x + a).
std::vector<std::uint32_t> encode_symbol(const Polynomial& f, const CodeParams& params,
                                         std::span<const std::uint32_t> a);
ReceivedWord encode(const Polynomial& f, const CodeParams& params, Exec exec = Exec::Parallel);

std::size_t agreement_count(const ReceivedWord& w1, const ReceivedWord& w2);
Rational agreement(const ReceivedWord& w1, const ReceivedWord& w2);

/// Replaces floor(error_fraction * |S|^k) symbols chosen without replacement
/// by uniformly random tuples different from the original.
ReceivedWord corrupt(const ReceivedWord& w, Rational error_fraction, std::uint64_t seed);

/// prod_{b in T} (x_1 - b)^s, a codeword agreeing with zero on the points
/// whose first coordinate lies in T. Requires s | d, |T| = d/s, T in S.
Polynomial min_weight_family(const CodeParams& params, const std::vector<std::uint32_t>& T);

/// Largest p^C(d+k,k) the exhaustive oracle accepts.
inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 25;

/// Every polynomial of degree <= d whose encoding agrees with w on at least
/// min_agreement of the grid, sorted by polynomial_less.
std::vector<Polynomial> exhaustive_codeword_oracle(const ReceivedWord& w, Rational min_agreement,
                                                   Exec exec = Exec::Parallel);

/// Polynomial from coefficients on the message monomials.
Polynomial from_coefficients(const CodeParams& params, const std::vector<std::uint32_t>& coeffs);

/// Symbols concatenated in grid order.
std::vector<std::uint32_t> flatten(const ReceivedWord& w);

/// All coefficient vectors c (entries in [0, p)) such that the flattened word
/// offset_word + sum_i c_i basis_words[i] agrees with w on at least min_count
/// grid points. Enumerates p^n vectors.
std::vector<std::vector<std::uint32_t>> enumerate_close_combinations(
    const ReceivedWord& w, const std::vector<std::uint32_t>& offset_word,
    const std::vector<std::vector<std::uint32_t>>& basis_words, std::size_t min_count, Exec exec = Exec::Parallel);

/// Smallest T with T >= alpha * n, i.e. ceil(alpha * n).
std::size_t ceil_count(Rational alpha, std::size_t n);

}  // namespace multdec

#endif  // MULTDEC_CODE_HPP
