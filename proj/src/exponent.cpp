#include "multdec/exponent.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "multdec/errors.hpp"

namespace multdec {

namespace {

void check_arity(std::size_t n) {
    if (n > kMaxVars) {
        throw ValidationError("at most " + std::to_string(kMaxVars) + " variables supported, got " +
                              std::to_string(n));
    }
}

constexpr unsigned kMaxEntry = std::numeric_limits<std::uint16_t>::max();

}  // namespace

Exponent::Exponent(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) { check_arity(nvars); }

Exponent::Exponent(std::initializer_list<unsigned> entries)
    : Exponent(std::span<const unsigned>(entries.begin(), entries.size())) {}

Exponent::Exponent(std::span<const unsigned> entries) : n_(static_cast<std::uint8_t>(entries.size())) {
    check_arity(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

Exponent Exponent::unit(std::size_t nvars, std::size_t i) {
    Exponent e(nvars);
    e.set(i, 1);
    return e;
}

void Exponent::set(std::size_t i, unsigned v) {
    if (i >= n_) throw ValidationError("exponent index out of range");
    if (v > kMaxEntry) throw ValidationError("exponent entry too large");
    total_ = total_ - e_[i] + v;
    e_[i] = static_cast<std::uint16_t>(v);
}

std::vector<unsigned> Exponent::entries() const { return {e_.begin(), e_.begin() + n_}; }

bool Exponent::dominated_by(const Exponent& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
        if (e_[i] > other.e_[i]) return false;
    }
    return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (o.n_ != n_) throw ValidationError("exponent arity mismatch");
    Exponent r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
    if (o.n_ != n_) throw ValidationError("exponent arity mismatch");
    if (!o.dominated_by(*this)) throw ValidationError("exponent subtraction would go negative");
    Exponent r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] - o.e_[i]);
    return r;
}

Exponent Exponent::concat(const Exponent& tail) const {
    Exponent r(static_cast<std::size_t>(n_) + tail.n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i]);
    for (std::size_t i = 0; i < tail.n_; ++i) r.set(n_ + i, tail.e_[i]);
    return r;
}

Exponent Exponent::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > n_) throw ValidationError("exponent slice out of range");
    Exponent r(len);
    for (std::size_t i = 0; i < len; ++i) r.set(i, e_[begin + i]);
    return r;
}

std::strong_ordering Exponent::operator<=>(const Exponent& o) const noexcept {
    if (total_ != o.total_) return total_ <=> o.total_;
    if (n_ != o.n_) return n_ <=> o.n_;
    for (std::size_t i = 0; i < n_; ++i) {
        if (e_[i] != o.e_[i]) return o.e_[i] <=> e_[i];
    }
    return std::strong_ordering::equal;
}

bool Exponent::operator==(const Exponent& o) const noexcept {
    return n_ == o.n_ && total_ == o.total_ && e_ == o.e_;
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) {
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os << ')';
}

namespace {

void fill_degree(std::size_t pos, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (pos + 1 == cur.size()) {
        cur.set(pos, remaining);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        cur.set(pos, v);
        fill_degree(pos + 1, remaining - v, cur, out);
    }
    cur.set(pos, 0);
}

}  // namespace

std::vector<Exponent> exponents_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Exponent> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    Exponent cur(nvars);
    fill_degree(0, degree, cur, out);
    return out;
}

std::vector<Exponent> exponents_up_to(std::size_t nvars, unsigned degree) {
    std::vector<Exponent> out;
    for (unsigned t = 0; t <= degree; ++t) {
        auto layer = exponents_of_degree(nvars, t);
        out.insert(out.end(), layer.begin(), layer.end());
        if (nvars == 0) break;
    }
    return out;
}

std::uint32_t multi_binomial(const Exponent& a, const Exponent& b, const PrimeField& field) {
    std::uint32_t r = 1 % field.p();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) return 0;
        r = field.mul(r, binomial_residue(a[i], b[i], field));
        if (r == 0) return 0;
    }
    return r;
}

std::uint64_t binomial_count(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    __extension__ using u128 = unsigned __int128;
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace multdec
