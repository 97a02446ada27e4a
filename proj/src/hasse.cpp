#include "multdec/hasse.hpp"

#include <string>

#include "multdec/errors.hpp"

namespace multdec {

namespace {

std::size_t x_vars(const Polynomial& f) {
    if (f.block() == Block::Z) throw ValidationError("x-block operation applied to a Z polynomial");
    return f.k();
}

// All exponents b with b <= a componentwise, in no particular order.
std::vector<Exponent> dominated(const Exponent& a) {
    std::vector<Exponent> out;
    Exponent cur(a.size());
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < a.size(); ++i) {
            if (cur[i] < a[i]) {
                cur.set(i, cur[i] + 1);
                break;
            }
            cur.set(i, 0);
        }
        if (i == a.size()) return out;
    }
}

Exponent x_part(const Exponent& full, const Polynomial& f) {
    return f.block() == Block::X ? full : full.slice(0, f.k());
}

Exponent with_x_part(const Exponent& full, const Exponent& x, const Polynomial& f) {
    return f.block() == Block::X ? x : x.concat(full.slice(f.k(), f.k()));
}

}  // namespace

Polynomial hasse_derivative(const Polynomial& f, const Exponent& e) {
    const std::size_t k = x_vars(f);
    if (e.size() != k) throw ValidationError("derivative order arity mismatch");
    const PrimeField& F = f.field();
    std::vector<Term> out;
    out.reserve(f.num_terms());
    for (const auto& t : f.terms()) {
        const Exponent a = x_part(t.exp, f);
        if (!e.dominated_by(a)) continue;
        const std::uint32_t c = F.mul(t.coeff, multi_binomial(a, e, F));
        if (c != 0) out.push_back({with_x_part(t.exp, a - e, f), c});
    }
    return Polynomial::from_terms(F, f.block(), f.k(), std::move(out));
}

Polynomial hasse_derivative_by_expansion(const Polynomial& f, const Exponent& e) {
    if (f.block() != Block::X) throw ValidationError("expansion oracle expects an X polynomial");
    const std::size_t k = f.k();
    if (e.size() != k) throw ValidationError("derivative order arity mismatch");
    const PrimeField& F = f.field();
    // Build f(x+z) in the XZ ring by multiplying out linear factors.
    Polynomial shifted(F, Block::XZ, k);
    std::vector<Polynomial> sums;
    for (std::size_t i = 0; i < k; ++i) {
        sums.push_back(Polynomial::variable(F, Block::XZ, k, i) + Polynomial::variable(F, Block::XZ, k, k + i));
    }
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(F, Block::XZ, k, t.coeff);
        for (std::size_t i = 0; i < k; ++i) {
            for (unsigned j = 0; j < t.exp[i]; ++j) prod = prod * sums[i];
        }
        shifted += prod;
    }
    std::vector<Term> out;
    for (const auto& t : shifted.terms()) {
        if (t.exp.slice(k, k) == e) out.push_back({t.exp.slice(0, k), t.coeff});
    }
    return Polynomial::from_terms(F, Block::X, k, std::move(out));
}

Polynomial translate_x(const Polynomial& f, std::span<const std::uint32_t> a) {
    const std::size_t k = x_vars(f);
    if (a.size() != k) throw ValidationError("translation vector arity mismatch");
    const PrimeField& F = f.field();
    bool is_zero_shift = true;
    for (auto v : a) is_zero_shift = is_zero_shift && v % F.p() == 0;
    if (is_zero_shift) return f;
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const Exponent alpha = x_part(t.exp, f);
        for (const Exponent& beta : dominated(alpha)) {
            std::uint32_t c = F.mul(t.coeff, multi_binomial(alpha, beta, F));
            for (std::size_t i = 0; i < k && c != 0; ++i) c = F.mul(c, F.pow(a[i] % F.p(), alpha[i] - beta[i]));
            if (c != 0) out.push_back({with_x_part(t.exp, beta, f), c});
        }
    }
    return Polynomial::from_terms(F, f.block(), f.k(), std::move(out));
}

std::optional<unsigned> multiplicity(const Polynomial& f, std::span<const std::uint32_t> a) {
    if (f.is_zero()) return std::nullopt;
    const Polynomial g = translate_x(f, a);
    if (f.block() == Block::X) return g.terms().front().exp.total();
    unsigned best = ~0u;
    for (const auto& t : g.terms()) {
        unsigned s = 0;
        for (std::size_t i = 0; i < f.k(); ++i) s += t.exp[i];
        best = std::min(best, s);
    }
    return best;
}

bool mult_sz_check(const Polynomial& f, const Grid& grid) {
    if (f.is_zero()) throw ValidationError("mult_sz_check requires a nonzero polynomial");
    if (f.block() != Block::X || f.k() != grid.k()) throw ValidationError("polynomial does not match grid");
    std::uint64_t total = 0;
    for (std::size_t n = 0; n < grid.size(); ++n) total += *multiplicity(f, grid.point(n));
    std::uint64_t bound = static_cast<std::uint64_t>(f.total_degree());
    for (std::size_t i = 1; i < grid.k(); ++i) bound *= grid.side();
    return total <= bound;
}

Polynomial delta(const Polynomial& f, unsigned i) {
    if (f.block() != Block::X) throw ValidationError("delta expects an X polynomial");
    const std::size_t k = f.k();
    const PrimeField& F = f.field();
    const auto orders = exponents_of_degree(k, i);
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.exp.total() < i) continue;
        for (const auto& e : orders) {
            if (!e.dominated_by(t.exp)) continue;
            const std::uint32_t c = F.mul(t.coeff, multi_binomial(t.exp, e, F));
            if (c != 0) out.push_back({(t.exp - e).concat(e), c});
        }
    }
    return Polynomial::from_terms(F, Block::XZ, k, std::move(out));
}

Polynomial tau(std::span<const Polynomial> P, const Exponent& e, unsigned i) {
    if (P.empty()) throw ValidationError("tau needs a nonempty tuple");
    const std::size_t idx = i + e.total();
    if (idx >= P.size()) {
        throw ValidationError("tau index " + std::to_string(idx) + " out of range for a tuple of length " +
                              std::to_string(P.size()));
    }
    const Polynomial& src = P[idx];
    if (src.block() != Block::Z || e.size() != src.k()) throw ValidationError("tau expects Z polynomials of arity k");
    const PrimeField& F = src.field();
    std::vector<Term> out;
    for (const auto& t : src.terms()) {
        if (t.exp.total() != idx || !e.dominated_by(t.exp)) continue;
        const std::uint32_t c = F.mul(t.coeff, multi_binomial(t.exp, e, F));
        if (c != 0) out.push_back({t.exp - e, c});
    }
    return Polynomial::from_terms(F, Block::Z, src.k(), std::move(out));
}

Polynomial euler_recover_unchecked(const std::map<Exponent, Polynomial>& derivs, unsigned r) {
    if (derivs.empty()) throw ValidationError("euler_recover needs at least one derivative");
    const unsigned order = derivs.begin()->first.total();
    const std::size_t k = derivs.begin()->first.size();
    const PrimeField F = derivs.begin()->second.field();
    for (const auto& [e, g] : derivs) {
        if (e.total() != order || e.size() != k) throw ValidationError("derivative orders are not uniform");
        if (g.block() != Block::X || g.k() != k) throw ValidationError("derivatives must be X polynomials");
    }
    if (order > r) throw ValidationError("derivative order exceeds the target degree");
    if (r >= F.p()) {
        throw FieldTooSmall("euler recovery of degree " + std::to_string(r) + " needs p > r, got p = " +
                            std::to_string(F.p()));
    }
    std::map<Exponent, Polynomial> level = derivs;
    std::vector<Polynomial> xs;
    for (std::size_t m = 0; m < k; ++m) xs.push_back(Polynomial::variable(F, Block::X, k, m));
    for (unsigned j = order; j >= 1; --j) {
        // (r-j+1) d_{e'} f = sum_m x_m (e'_m + 1) d_{e'+delta_m} f
        const std::uint32_t scale = F.inv(r - j + 1);
        std::map<Exponent, Polynomial> next;
        for (const auto& ep : exponents_of_degree(k, j - 1)) {
            Polynomial acc(F, Block::X, k);
            for (std::size_t m = 0; m < k; ++m) {
                auto it = level.find(ep + Exponent::unit(k, m));
                if (it == level.end() || it->second.is_zero()) continue;
                acc += (xs[m] * it->second).scaled(F.mul(scale, (ep[m] + 1) % F.p()));
            }
            next.emplace(ep, std::move(acc));
        }
        level = std::move(next);
    }
    return level.begin()->second;
}

Polynomial euler_recover(const std::map<Exponent, Polynomial>& derivs, unsigned r) {
    Polynomial f = euler_recover_unchecked(derivs, r);
    const unsigned order = derivs.begin()->first.total();
    const std::size_t k = derivs.begin()->first.size();
    if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != static_cast<int>(r))) {
        throw ValidationError("inconsistent derivative family: recovered polynomial is not homogeneous of degree " +
                              std::to_string(r));
    }
    for (const auto& e : exponents_of_degree(k, order)) {
        auto it = derivs.find(e);
        const Polynomial expect = it == derivs.end() ? Polynomial(f.field(), Block::X, k) : it->second;
        if (!(hasse_derivative(f, e) == expect)) {
            throw ValidationError("inconsistent derivative family: re-derived order-" + std::to_string(order) +
                                  " derivatives differ");
        }
    }
    return f;
}

namespace {

Polynomial product_rule_rhs(std::span<const Polynomial> factors, const Exponent& e) {
    if (factors.size() == 1) return hasse_derivative(factors[0], e);
    Polynomial acc(factors[0].field(), Block::X, factors[0].k());
    for (const Exponent& e1 : dominated(e)) {
        const Polynomial head = hasse_derivative(factors[0], e1);
        if (head.is_zero()) continue;
        acc += head * product_rule_rhs(factors.subspan(1), e - e1);
    }
    return acc;
}

}  // namespace

bool hasse_properties_oracle(const Polynomial& f, const Polynomial& g, const Exponent& e, const Exponent& e2) {
    if (f.block() != Block::X || g.block() != Block::X || f.k() != g.k() || !(f.field() == g.field())) {
        throw ValidationError("oracle expects two X polynomials over the same ring");
    }
    const PrimeField& F = f.field();
    const std::uint32_t a = 2 % F.p();
    const std::uint32_t b = 3 % F.p();

    // Linearity.
    if (!(hasse_derivative(f.scaled(a) + g.scaled(b), e) ==
          hasse_derivative(f, e).scaled(a) + hasse_derivative(g, e).scaled(b))) {
        return false;
    }
    // Homogeneous components drop in degree by exactly |e| or vanish.
    for (int r = 0; r <= f.total_degree(); ++r) {
        const Polynomial d = hasse_derivative(f.homogeneous_component(static_cast<unsigned>(r)), e);
        if (d.is_zero()) continue;
        if (!d.is_homogeneous() || d.total_degree() != r - static_cast<int>(e.total())) return false;
    }
    // Monomial rule versus the definition through f(x+z).
    if (!(hasse_derivative(f, e) == hasse_derivative_by_expansion(f, e))) return false;
    // Composition.
    if (!(hasse_derivative(hasse_derivative(f, e2), e) ==
          hasse_derivative(f, e + e2).scaled(multi_binomial(e + e2, e, F)))) {
        return false;
    }
    // Product rule over factor lists of length two and three.
    const std::vector<Polynomial> two{f, g};
    if (!(hasse_derivative(f * g, e) == product_rule_rhs(two, e))) return false;
    const std::vector<Polynomial> three{f, g, f + g};
    if (!(hasse_derivative(f * g * (f + g), e) == product_rule_rhs(three, e))) return false;
    return true;
}

}  // namespace multdec
