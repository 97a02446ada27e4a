#include "multdec/field.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "multdec/errors.hpp"

namespace multdec {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31)) {
        throw ValidationError("modulus must be below 2^31, got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    std::uint64_t base = a % p_;
    while (e != 0) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

Fp::Fp(const PrimeField& field, std::int64_t value) : v_(field.reduce(value)), p_(field.p()) {}

Fp Fp::inv() const { return Fp(PrimeField::trusted(p_).inv(v_), p_, nullptr); }

namespace {

void require_same(const Fp& a, const Fp& b) {
    if (a.modulus() != b.modulus()) {
        throw ValidationError("modulus mismatch: F_" + std::to_string(a.modulus()) + " vs F_" +
                              std::to_string(b.modulus()));
    }
}

}  // namespace

Fp operator+(Fp a, Fp b) {
    require_same(a, b);
    std::uint32_t s = a.v_ + b.v_;
    return Fp(s >= a.p_ ? s - a.p_ : s, a.p_, nullptr);
}

Fp operator-(Fp a, Fp b) {
    require_same(a, b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, nullptr);
}

Fp operator*(Fp a, Fp b) {
    require_same(a, b);
    return Fp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), a.p_,
              nullptr);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

std::uint32_t binomial_residue(unsigned n, unsigned r, const PrimeField& field) {
    if (r > n) return 0;
    // Rows of Pascal's triangle mod p, grown lazily per modulus and per thread.
    thread_local std::unordered_map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> cache;
    auto& rows = cache[field.p()];
    while (rows.size() <= n) {
        const std::size_t i = rows.size();
        std::vector<std::uint32_t> row(i + 1, 1 % field.p());
        for (std::size_t j = 1; j < i; ++j) row[j] = field.add(rows[i - 1][j - 1], rows[i - 1][j]);
        rows.push_back(std::move(row));
    }
    return rows[n][r];
}

Fp binomial_mod_p(unsigned n, unsigned r, const PrimeField& field) {
    return Fp(binomial_residue(n, r, field), field.p(), nullptr);
}

}  // namespace multdec
