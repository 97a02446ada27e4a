#ifndef MULTDEC_FIELD_HPP
#define MULTDEC_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>

namespace multdec {

/// A prime modulus p < 2^31. Primality is verified on construction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);
    // Skips the primality check; only for moduli taken from an existing field.
    static PrimeField trusted(std::uint32_t p) noexcept { return PrimeField(p, 0); }

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    // Throws std::domain_error on zero.
    std::uint32_t inv(std::uint32_t a) const;
    // Reduces any signed integer into [0, p).
    std::uint32_t reduce(std::int64_t v) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    PrimeField(std::uint32_t p, int) noexcept : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of F_p. Values are always fully reduced; mixing moduli throws.
class Fp {
public:
    Fp(const PrimeField& field, std::int64_t value);
    Fp(std::uint32_t reduced_value, std::uint32_t p, std::nullptr_t /*unchecked*/)
        : v_(reduced_value), p_(p) {}

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    PrimeField field() const { return PrimeField::trusted(p_); }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp inv() const;

    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, nullptr); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    friend bool operator==(const Fp&, const Fp&) = default;

private:
    std::uint32_t v_;
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

/// C(n, r) mod p, computed from a memoized Pascal triangle so that it is
/// correct for every n, including n >= p. Zero when r > n.
Fp binomial_mod_p(unsigned n, unsigned r, const PrimeField& field);

/// Raw-residue variant used in inner loops.
std::uint32_t binomial_residue(unsigned n, unsigned r, const PrimeField& field);

}  // namespace multdec

#endif  // MULTDEC_FIELD_HPP
