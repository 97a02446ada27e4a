#include "multdec/code.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "multdec/errors.hpp"
#include "multdec/hasse.hpp"
#include "multdec/rng.hpp"

namespace multdec {

CodeParams::CodeParams(Grid grid, unsigned s, unsigned d) : grid_(std::move(grid)), s_(s), d_(d) {
    if (s == 0) throw ValidationError("multiplicity order s must be at least 1");
    if (static_cast<std::uint64_t>(d) >= static_cast<std::uint64_t>(s) * grid_.side()) {
        throw ValidationError("degree d = " + std::to_string(d) + " must be below s*|S| = " +
                              std::to_string(static_cast<std::uint64_t>(s) * grid_.side()));
    }
    if (grid_.field().p() <= d) {
        throw ValidationError("field characteristic " + std::to_string(grid_.field().p()) +
                              " must exceed the degree d = " + std::to_string(d));
    }
    orders_ = exponents_up_to(grid_.k(), s - 1);
}

std::vector<Exponent> CodeParams::message_monomials() const { return exponents_up_to(k(), d_); }

Rational CodeParams::relative_distance() const {
    return Rational(1) - Rational(d_, static_cast<long long>(s_) * static_cast<long long>(grid_.side()));
}

void ReceivedWord::validate() const {
    if (symbols.size() != params.grid().size()) {
        throw ValidationError("received word has " + std::to_string(symbols.size()) + " symbols, expected " +
                              std::to_string(params.grid().size()));
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i].size() != params.alphabet_size()) {
            throw ValidationError("symbol " + std::to_string(i) + " has " + std::to_string(symbols[i].size()) +
                                  " values, expected " + std::to_string(params.alphabet_size()));
        }
        for (auto v : symbols[i]) {
            if (v >= params.field().p()) {
                throw ValidationError("symbol " + std::to_string(i) + " holds a value outside [0, p)");
            }
        }
    }
}

std::vector<std::uint32_t> encode_symbol(const Polynomial& f, const CodeParams& params,
                                         std::span<const std::uint32_t> a) {
    // Only the coefficients of f(x + a) at orders |e| < s are needed:
    // sum over terms c x^alpha of c C(alpha, e) a^(alpha - e).
    const PrimeField& F = params.field();
    const auto& orders = params.orders();
    std::vector<std::uint32_t> out(orders.size(), 0);
    for (const auto& t : f.terms()) {
        for (std::size_t j = 0; j < orders.size(); ++j) {
            const Exponent& e = orders[j];
            if (!e.dominated_by(t.exp)) continue;
            std::uint32_t c = F.mul(t.coeff, multi_binomial(t.exp, e, F));
            for (std::size_t i = 0; i < a.size() && c != 0; ++i) c = F.mul(c, F.pow(a[i] % F.p(), t.exp[i] - e[i]));
            out[j] = F.add(out[j], c);
        }
    }
    return out;
}

ReceivedWord encode(const Polynomial& f, const CodeParams& params, Exec exec) {
    if (f.block() != Block::X || f.k() != params.k() || !(f.field() == params.field())) {
        throw ValidationError("message polynomial does not match the code parameters");
    }
    if (f.total_degree() > static_cast<int>(params.d())) {
        throw ValidationError("message degree " + std::to_string(f.total_degree()) + " exceeds d = " +
                              std::to_string(params.d()));
    }
    const Grid& grid = params.grid();
    ReceivedWord w{params, std::vector<std::vector<std::uint32_t>>(grid.size())};
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) w.symbols[i] = encode_symbol(f, params, grid.point(i));
    } else {
#pragma omp parallel for num_threads(thread_count()) schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) w.symbols[i] = encode_symbol(f, params, grid.point(i));
    }
    return w;
}

std::size_t agreement_count(const ReceivedWord& w1, const ReceivedWord& w2) {
    if (!(w1.params == w2.params)) throw ValidationError("received words use different code parameters");
    std::size_t n = 0;
    for (std::size_t i = 0; i < w1.symbols.size(); ++i) n += w1.symbols[i] == w2.symbols[i];
    return n;
}

Rational agreement(const ReceivedWord& w1, const ReceivedWord& w2) {
    return Rational(static_cast<long long>(agreement_count(w1, w2)), static_cast<long long>(w1.symbols.size()));
}

std::size_t ceil_count(Rational alpha, std::size_t n) {
    const Rational x = alpha * Rational(static_cast<long long>(n));
    long long q = x.numerator() / x.denominator();
    if (q * x.denominator() < x.numerator()) ++q;
    return static_cast<std::size_t>(std::max(q, 0LL));
}

ReceivedWord corrupt(const ReceivedWord& w, Rational error_fraction, std::uint64_t seed) {
    if (error_fraction < Rational(0) || error_fraction > Rational(1)) {
        throw ValidationError("error fraction must lie in [0, 1]");
    }
    w.validate();
    const std::size_t n = w.symbols.size();
    const Rational scaled = error_fraction * Rational(static_cast<long long>(n));
    const auto count = static_cast<std::size_t>(scaled.numerator() / scaled.denominator());
    ReceivedWord out = w;
    Rng rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const std::uint32_t p = w.params.field().p();
    for (std::size_t i = 0; i < count; ++i) {
        // Partial Fisher-Yates: position i receives a uniform pick from the rest.
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(order[i], order[j]);
        auto& sym = out.symbols[order[i]];
        do {
            for (auto& v : sym) v = static_cast<std::uint32_t>(rng.below(p));
        } while (sym == w.symbols[order[i]]);
    }
    return out;
}

Polynomial min_weight_family(const CodeParams& params, const std::vector<std::uint32_t>& T) {
    const unsigned s = params.s();
    if (params.d() % s != 0) {
        throw ValidationError("min_weight_family needs s | d (s = " + std::to_string(s) + ", d = " +
                              std::to_string(params.d()) + ")");
    }
    if (T.size() != params.d() / s) {
        throw ValidationError("min_weight_family needs |T| = d/s = " + std::to_string(params.d() / s));
    }
    const auto& S = params.grid().s_points();
    auto sorted = T;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("min_weight_family: T has repeated points");
    }
    for (auto b : T) {
        if (std::find(S.begin(), S.end(), b) == S.end()) {
            throw ValidationError("min_weight_family: " + std::to_string(b) + " is not in S");
        }
    }
    const PrimeField& F = params.field();
    const std::size_t k = params.k();
    Polynomial f = Polynomial::constant(F, Block::X, k, 1);
    for (auto b : T) {
        const Polynomial lin = Polynomial::variable(F, Block::X, k, 0) - Polynomial::constant(F, Block::X, k, b);
        for (unsigned j = 0; j < s; ++j) f = f * lin;
    }
    return f;
}

Polynomial from_coefficients(const CodeParams& params, const std::vector<std::uint32_t>& coeffs) {
    const auto monos = params.message_monomials();
    if (coeffs.size() != monos.size()) throw ValidationError("coefficient vector length mismatch");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i) terms.push_back({monos[i], coeffs[i]});
    return Polynomial::from_terms(params.field(), Block::X, params.k(), std::move(terms));
}

std::vector<std::uint32_t> flatten(const ReceivedWord& w) {
    std::vector<std::uint32_t> flat;
    flat.reserve(w.symbols.size() * w.params.alphabet_size());
    for (const auto& sym : w.symbols) flat.insert(flat.end(), sym.begin(), sym.end());
    return flat;
}

namespace {

// Enumerates every coefficient vector whose leading digit equals `lead`,
// stepping an odometer over the remaining digits and updating the word
// incrementally.
void enumerate_slice(const PrimeField& F, std::size_t width, const std::vector<std::uint32_t>& offset_word,
                     const std::vector<std::vector<std::uint32_t>>& basis_words,
                     const std::vector<std::uint32_t>& received, std::size_t min_count, std::uint32_t lead,
                     std::vector<std::vector<std::uint32_t>>& hits) {
    const std::size_t n = basis_words.size();
    const std::size_t len = received.size();
    const std::size_t points = len / width;
    std::vector<std::uint32_t> digits(n, 0);
    std::vector<std::uint32_t> word = offset_word;
    if (n > 0) {
        digits[0] = lead;
        for (std::size_t i = 0; i < len; ++i) word[i] = F.add(word[i], F.mul(basis_words[0][i], lead));
    }
    while (true) {
        std::size_t agree = 0;
        for (std::size_t pt = 0; pt < points && agree + (points - pt) >= min_count; ++pt) {
            agree += std::equal(word.begin() + pt * width, word.begin() + (pt + 1) * width,
                                received.begin() + pt * width);
        }
        if (agree >= min_count) hits.push_back(digits);
        if (n <= 1) return;
        std::size_t j = n;
        while (true) {
            --j;
            for (std::size_t i = 0; i < len; ++i) word[i] = F.add(word[i], basis_words[j][i]);
            if (++digits[j] < F.p()) break;
            digits[j] = 0;  // adding the basis word p times restored the word
            if (j == 1) return;
        }
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_close_combinations(
    const ReceivedWord& w, const std::vector<std::uint32_t>& offset_word,
    const std::vector<std::vector<std::uint32_t>>& basis_words, std::size_t min_count, Exec exec) {
    const PrimeField& F = w.params.field();
    const std::vector<std::uint32_t> received = flatten(w);
    const std::size_t width = w.params.alphabet_size();
    const std::uint32_t leads = basis_words.empty() ? 1 : F.p();
    std::vector<std::vector<std::vector<std::uint32_t>>> per_lead(leads);
    const auto n = static_cast<std::ptrdiff_t>(leads);
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t l = 0; l < n; ++l)
            enumerate_slice(F, width, offset_word, basis_words, received, min_count, static_cast<std::uint32_t>(l),
                            per_lead[l]);
    } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic)
        for (std::ptrdiff_t l = 0; l < n; ++l)
            enumerate_slice(F, width, offset_word, basis_words, received, min_count, static_cast<std::uint32_t>(l),
                            per_lead[l]);
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& hits : per_lead)
        for (auto& digits : hits) out.push_back(std::move(digits));
    return out;
}

std::vector<Polynomial> exhaustive_codeword_oracle(const ReceivedWord& w, Rational min_agreement, Exec exec) {
    w.validate();
    const CodeParams& params = w.params;
    const auto monos = params.message_monomials();
    const std::uint32_t p = params.field().p();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (total > kOracleLimit / p) {
            throw ValidationError("instance too large to enumerate: p^" + std::to_string(monos.size()) +
                                  " candidates");
        }
        total *= p;
    }
    std::vector<std::vector<std::uint32_t>> basis_words;
    for (const auto& e : monos) {
        basis_words.push_back(
            flatten(encode(Polynomial::monomial(params.field(), Block::X, params.k(), e), params, Exec::Serial)));
    }
    const std::vector<std::uint32_t> offset(w.symbols.size() * params.alphabet_size(), 0);
    const std::size_t min_count = ceil_count(min_agreement, params.grid().size());
    std::vector<Polynomial> out;
    for (const auto& digits : enumerate_close_combinations(w, offset, basis_words, min_count, exec)) {
        out.push_back(from_coefficients(params, digits));
    }
    std::sort(out.begin(), out.end(), polynomial_less);
    return out;
}

}  // namespace multdec
