#ifndef MULTDEC_POLYNOMIAL_HPP
#define MULTDEC_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "multdec/exponent.hpp"
#include "multdec/field.hpp"

namespace multdec {

/// Which variable block a polynomial lives in. XZ polynomials carry 2k
/// variables: x_1..x_k followed by z_1..z_k.
enum class Block : std::uint8_t { X, Z, XZ };

struct Term {
    Exponent exp;
    std::uint32_t coeff;  // nonzero residue
};

/// Sparse polynomial over F_p in canonical form: terms sorted ascending in
/// the graded order, no zero coefficients. Equality is structural.
class Polynomial {
public:
    Polynomial(const PrimeField& field, Block block, std::size_t k);

    static Polynomial constant(const PrimeField& field, Block block, std::size_t k, std::int64_t c);
    static Polynomial monomial(const PrimeField& field, Block block, std::size_t k, const Exponent& e,
                               std::int64_t c = 1);
    /// The variable with index `var` among the block's nvars() variables.
    static Polynomial variable(const PrimeField& field, Block block, std::size_t k, std::size_t var);
    /// Combines duplicate exponents and drops zeros; input order is arbitrary.
    static Polynomial from_terms(const PrimeField& field, Block block, std::size_t k, std::vector<Term> terms);

    const PrimeField& field() const noexcept { return field_; }
    Block block() const noexcept { return block_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t nvars() const noexcept { return block_ == Block::XZ ? 2 * k_ : k_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    const Term& leading_term() const { return terms_.back(); }

    Fp coeff(const Exponent& e) const;

    // -1 for the zero polynomial.
    int total_degree() const noexcept;
    // Degree in the x-block (X and XZ) or z-block (Z and XZ) variables.
    int degree_x() const;
    int degree_z() const;
    unsigned max_individual_degree() const noexcept;
    bool is_homogeneous() const noexcept;

    Polynomial homogeneous_component(unsigned degree) const;
    // XZ only: terms whose x-part has total degree `degree`.
    Polynomial x_homogeneous_component(unsigned degree) const;
    // XZ/X: drops every term of x-degree >= t (reduction modulo <x>^t).
    Polynomial truncate_x(unsigned t) const;

    Polynomial scaled(std::uint32_t c) const;
    Polynomial scaled(Fp c) const { return scaled(c.value()); }
    Polynomial shifted(const Exponent& e) const;  // multiply by the monomial with exponent e

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, Fp c) { return a.scaled(c); }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Exact quotient; throws ValidationError if `divisor` does not divide.
    Polynomial exact_div(const Polynomial& divisor) const;
    /// Division with remainder by a single divisor: *this = q*divisor + r and no
    /// term of r is divisible by the leading monomial of divisor. Linear in *this.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Full evaluation; point has nvars() residues.
    Fp evaluate(std::span<const std::uint32_t> point) const;
    /// XZ at an x-point gives a Z polynomial.
    Polynomial evaluate_x(std::span<const std::uint32_t> x_point) const;
    /// XZ at a z-point gives an X polynomial.
    Polynomial evaluate_z(std::span<const std::uint32_t> z_point) const;

    /// Same terms reinterpreted in another block with compatible arity.
    Polynomial relabel(Block block, std::size_t k) const;

private:
    void check_compatible(const Polynomial& o) const;
    void add_scaled(const Polynomial& o, std::uint32_t c);

    PrimeField field_;
    Block block_;
    std::size_t k_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Strict total order on polynomials of one ring (term lists compared
/// lexicographically). Used to sort candidate lists.
bool polynomial_less(const Polynomial& a, const Polynomial& b);

/// X polynomial viewed inside the XZ ring.
Polynomial embed_x(const Polynomial& f);
/// Z polynomial viewed inside the XZ ring with the same k.
Polynomial embed_z(const Polynomial& g, std::size_t k);

/// Groups an XZ polynomial by x-monomial: returns (x-exponent, Z polynomial)
/// pairs in ascending x-exponent order.
std::vector<std::pair<Exponent, Polynomial>> x_coefficients(const Polynomial& f);
/// Inverse of x_coefficients.
Polynomial from_x_coefficients(const PrimeField& field, std::size_t k,
                               const std::vector<std::pair<Exponent, Polynomial>>& parts);

}  // namespace multdec

#endif  // MULTDEC_POLYNOMIAL_HPP
