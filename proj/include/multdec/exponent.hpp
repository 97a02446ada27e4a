#ifndef MULTDEC_EXPONENT_HPP
#define MULTDEC_EXPONENT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "multdec/field.hpp"

namespace multdec {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial, also used to index derivative orders.
///
/// Ordering is the graded order used everywhere in the library: lower total
/// degree first; among equal degrees, the vector with the larger entry at the
/// first differing position comes first. For two variables that gives
/// (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) ... This order extends the
/// componentwise partial order and is compatible with addition, so it is a
/// monomial order.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t nvars);
    Exponent(std::initializer_list<unsigned> entries);
    explicit Exponent(std::span<const unsigned> entries);

    static Exponent unit(std::size_t nvars, std::size_t i);

    std::size_t size() const noexcept { return n_; }
    unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
    unsigned total() const noexcept { return total_; }
    bool is_zero() const noexcept { return total_ == 0; }
    void set(std::size_t i, unsigned v);

    std::vector<unsigned> entries() const;

    // Componentwise this <= other.
    bool dominated_by(const Exponent& other) const noexcept;

    Exponent operator+(const Exponent& o) const;
    // Requires o dominated by *this.
    Exponent operator-(const Exponent& o) const;

    Exponent concat(const Exponent& tail) const;
    Exponent slice(std::size_t begin, std::size_t len) const;

    std::strong_ordering operator<=>(const Exponent& o) const noexcept;
    bool operator==(const Exponent& o) const noexcept;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    std::uint32_t total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Exponent& e);

/// All exponents in `nvars` variables of total degree exactly `degree`, ascending.
std::vector<Exponent> exponents_of_degree(std::size_t nvars, unsigned degree);
/// All exponents of total degree <= `degree`, ascending.
std::vector<Exponent> exponents_up_to(std::size_t nvars, unsigned degree);

/// prod_i C(a_i, b_i) mod p; zero unless b is dominated by a.
std::uint32_t multi_binomial(const Exponent& a, const Exponent& b, const PrimeField& field);

/// Exact binomial coefficient as an integer (saturating at UINT64_MAX).
std::uint64_t binomial_count(std::uint64_t n, std::uint64_t r);

}  // namespace multdec

template <>
struct std::hash<multdec::Exponent> {
    std::size_t operator()(const multdec::Exponent& e) const noexcept {
        std::size_t h = e.size();
        for (std::size_t i = 0; i < e.size(); ++i) h = h * 1000003u ^ e[i];
        return h;
    }
};

#endif  // MULTDEC_EXPONENT_HPP
