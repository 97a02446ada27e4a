#ifndef MULTDEC_HASSE_HPP
#define MULTDEC_HASSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "multdec/exponent.hpp"
#include "multdec/grid.hpp"
#include "multdec/polynomial.hpp"

namespace multdec {

/// Hasse derivative with respect to the x-block. Works on X and XZ
/// polynomials; z-variables are treated as constants.
Polynomial hasse_derivative(const Polynomial& f, const Exponent& e);

/// The same derivative computed from the definition: the z^e coefficient of
/// the expansion of f(x+z). Slow; used as an oracle.
Polynomial hasse_derivative_by_expansion(const Polynomial& f, const Exponent& e);

/// f(x + a) for X or XZ polynomials (x-block shift only).
Polynomial translate_x(const Polynomial& f, std::span<const std::uint32_t> a);

/// Largest l such that every Hasse derivative of order < l vanishes at a;
/// nullopt stands for infinity (f = 0).
std::optional<unsigned> multiplicity(const Polynomial& f, std::span<const std::uint32_t> a);

/// Sum of multiplicities over the grid compared with deg(f)*|S|^(k-1).
bool mult_sz_check(const Polynomial& f, const Grid& grid);

/// Delta_i(f) = sum over |e| = i of z^e * d_e f, an XZ polynomial.
Polynomial delta(const Polynomial& f, unsigned i);

/// tau_e^{(i)}(P) where P[j] is a Z polynomial homogeneous of degree j.
Polynomial tau(std::span<const Polynomial> P, const Exponent& e, unsigned i);

/// Recovers the homogeneous degree-r polynomial from all its Hasse derivatives
/// of one order i (every key has total degree i). Re-derives the derivatives
/// and throws ValidationError on mismatch; throws FieldTooSmall if r >= p.
Polynomial euler_recover(const std::map<Exponent, Polynomial>& derivs, unsigned r);
/// Same recovery without the consistency check. Linear in the input family.
Polynomial euler_recover_unchecked(const std::map<Exponent, Polynomial>& derivs, unsigned r);

/// Checks linearity, homogeneity, the monomial rule against the expansion
/// definition, composition and the product rule for the given inputs.
bool hasse_properties_oracle(const Polynomial& f, const Polynomial& g, const Exponent& e, const Exponent& e2);

}  // namespace multdec

#endif  // MULTDEC_HASSE_HPP
