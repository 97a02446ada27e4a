#include "multdec/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "multdec/errors.hpp"

namespace multdec {

namespace {

bool term_less(const Term& a, const Term& b) { return a.exp < b.exp; }

// Dense accumulation is used for products whose exponent box is small.
constexpr std::size_t kDenseBoxLimit = std::size_t{1} << 20;

}  // namespace

Polynomial::Polynomial(const PrimeField& field, Block block, std::size_t k)
    : field_(field), block_(block), k_(k) {
    if (nvars() > kMaxVars) throw ValidationError("too many variables for a polynomial");
}

Polynomial Polynomial::constant(const PrimeField& field, Block block, std::size_t k, std::int64_t c) {
    Polynomial f(field, block, k);
    const std::uint32_t v = field.reduce(c);
    if (v != 0) f.terms_.push_back({Exponent(f.nvars()), v});
    return f;
}

Polynomial Polynomial::monomial(const PrimeField& field, Block block, std::size_t k, const Exponent& e,
                                std::int64_t c) {
    Polynomial f(field, block, k);
    if (e.size() != f.nvars()) throw ValidationError("monomial arity does not match block");
    const std::uint32_t v = field.reduce(c);
    if (v != 0) f.terms_.push_back({e, v});
    return f;
}

Polynomial Polynomial::variable(const PrimeField& field, Block block, std::size_t k, std::size_t var) {
    Polynomial f(field, block, k);
    if (var >= f.nvars()) throw ValidationError("variable index out of range");
    return monomial(field, block, k, Exponent::unit(f.nvars(), var));
}

Polynomial Polynomial::from_terms(const PrimeField& field, Block block, std::size_t k, std::vector<Term> terms) {
    Polynomial f(field, block, k);
    for (const auto& t : terms) {
        if (t.exp.size() != f.nvars()) throw ValidationError("term arity does not match block");
    }
    std::sort(terms.begin(), terms.end(), term_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        const std::uint32_t c = t.coeff % field.p();
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff = field.add(out.back().coeff, c);
        } else {
            out.push_back({t.exp, c});
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    f.terms_ = std::move(out);
    return f;
}

Fp Polynomial::coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, 0}, term_less);
    if (it != terms_.end() && it->exp == e) return Fp(it->coeff, field_.p(), nullptr);
    return Fp(0, field_.p(), nullptr);
}

int Polynomial::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().exp.total());
}

int Polynomial::degree_x() const {
    if (block_ == Block::Z) throw ValidationError("degree_x on a Z polynomial");
    if (block_ == Block::X) return total_degree();
    int d = -1;
    for (const auto& t : terms_) {
        unsigned s = 0;
        for (std::size_t i = 0; i < k_; ++i) s += t.exp[i];
        d = std::max(d, static_cast<int>(s));
    }
    return d;
}

int Polynomial::degree_z() const {
    if (block_ == Block::X) throw ValidationError("degree_z on an X polynomial");
    if (block_ == Block::Z) return total_degree();
    int d = -1;
    for (const auto& t : terms_) {
        unsigned s = 0;
        for (std::size_t i = k_; i < 2 * k_; ++i) s += t.exp[i];
        d = std::max(d, static_cast<int>(s));
    }
    return d;
}

unsigned Polynomial::max_individual_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < t.exp.size(); ++i) d = std::max(d, t.exp[i]);
    }
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().exp.total() == terms_.back().exp.total();
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
    Polynomial r(field_, block_, k_);
    for (const auto& t : terms_) {
        if (t.exp.total() == degree) r.terms_.push_back(t);
    }
    return r;
}

namespace {

unsigned x_total(const Exponent& e, Block block, std::size_t k) {
    if (block == Block::X) return e.total();
    if (block == Block::Z) return 0;
    unsigned s = 0;
    for (std::size_t i = 0; i < k; ++i) s += e[i];
    return s;
}

}  // namespace

Polynomial Polynomial::x_homogeneous_component(unsigned degree) const {
    if (block_ == Block::Z) throw ValidationError("x_homogeneous_component on a Z polynomial");
    Polynomial r(field_, block_, k_);
    for (const auto& t : terms_) {
        if (x_total(t.exp, block_, k_) == degree) r.terms_.push_back(t);
    }
    return r;
}

Polynomial Polynomial::truncate_x(unsigned t) const {
    if (block_ == Block::Z) throw ValidationError("truncate_x on a Z polynomial");
    Polynomial r(field_, block_, k_);
    for (const auto& term : terms_) {
        if (x_total(term.exp, block_, k_) < t) r.terms_.push_back(term);
    }
    return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    c %= field_.p();
    Polynomial r(field_, block_, k_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp, field_.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::shifted(const Exponent& e) const {
    if (e.size() != nvars()) throw ValidationError("shift arity does not match block");
    Polynomial r(field_, block_, k_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp + e, t.coeff});
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(field_.neg(1 % field_.p())); }

void Polynomial::check_compatible(const Polynomial& o) const {
    if (field_.p() != o.field_.p()) {
        throw ValidationError("modulus mismatch: F_" + std::to_string(field_.p()) + " vs F_" +
                              std::to_string(o.field_.p()));
    }
    if (block_ != o.block_ || k_ != o.k_) throw ValidationError("polynomials live in different rings");
}

void Polynomial::add_scaled(const Polynomial& o, std::uint32_t c) {
    check_compatible(o);
    if (c == 0 || o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->exp < a->exp) {
            out.push_back({b->exp, field_.mul(b->coeff, c)});
            ++b;
        } else {
            const std::uint32_t v = field_.add(a->coeff, field_.mul(b->coeff, c));
            if (v != 0) out.push_back({a->exp, v});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    add_scaled(o, 1 % field_.p());
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    add_scaled(o, field_.neg(1 % field_.p()));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.block_, a.k_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const std::size_t n = a.nvars();
    const PrimeField& F = a.field_;

    std::array<unsigned, kMaxVars> da{}, db{};
    for (const auto& t : a.terms_)
        for (std::size_t i = 0; i < n; ++i) da[i] = std::max(da[i], t.exp[i]);
    for (const auto& t : b.terms_)
        for (std::size_t i = 0; i < n; ++i) db[i] = std::max(db[i], t.exp[i]);
    std::size_t box = 1;
    std::array<std::size_t, kMaxVars> radix{};
    bool dense = a.terms_.size() * b.terms_.size() > 64;
    for (std::size_t i = 0; i < n && dense; ++i) {
        radix[i] = da[i] + db[i] + 1;
        if (box > kDenseBoxLimit / radix[i]) dense = false;
        box *= radix[i];
    }

    if (!dense) {
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, F.mul(s.coeff, t.coeff)});
        return Polynomial::from_terms(F, a.block_, a.k_, std::move(prod));
    }

    auto index_of = [&](const Exponent& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = idx * radix[i] + e[i];
        return idx;
    };
    std::vector<std::size_t> ia, ib;
    ia.reserve(a.terms_.size());
    ib.reserve(b.terms_.size());
    for (const auto& t : a.terms_) ia.push_back(index_of(t.exp));
    for (const auto& t : b.terms_) ib.push_back(index_of(t.exp));

    // Each product is reduced below 2^31, so 2^33 additions fit in 64 bits.
    std::vector<std::uint64_t> acc(box, 0);
    std::vector<std::size_t> touched;
    for (std::size_t x = 0; x < ia.size(); ++x) {
        const std::uint64_t cx = a.terms_[x].coeff;
        for (std::size_t y = 0; y < ib.size(); ++y) {
            const std::size_t idx = ia[x] + ib[y];
            if (acc[idx] == 0) touched.push_back(idx);
            acc[idx] += cx * b.terms_[y].coeff % F.p() + 1;  // +1 marks the slot as touched
        }
    }
    std::vector<Term> out;
    out.reserve(touched.size());
    std::vector<std::size_t> hits(box, 0);
    for (std::size_t x = 0; x < ia.size(); ++x)
        for (std::size_t y = 0; y < ib.size(); ++y) ++hits[ia[x] + ib[y]];
    for (std::size_t idx : touched) {
        const std::uint64_t raw = acc[idx] - hits[idx];
        const auto v = static_cast<std::uint32_t>(raw % F.p());
        if (v == 0) continue;
        Exponent e(n);
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            e.set(i, static_cast<unsigned>(rem % radix[i]));
            rem /= radix[i];
        }
        out.push_back({e, v});
    }
    std::sort(out.begin(), out.end(), term_less);
    r.terms_ = std::move(out);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.field_.p() != b.field_.p() || a.block_ != b.block_ || a.k_ != b.k_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const Term lead = divisor.terms_.back();
    const std::uint32_t lead_inv = field_.inv(lead.coeff);
    Polynomial q(field_, block_, k_);
    Polynomial rem(field_, block_, k_);
    if (divisor.terms_.size() == 1) {
        for (const auto& t : terms_) {
            if (lead.exp.dominated_by(t.exp)) {
                q.terms_.push_back({t.exp - lead.exp, field_.mul(t.coeff, lead_inv)});
            } else {
                rem.terms_.push_back(t);
            }
        }
        return {std::move(q), std::move(rem)};
    }
    Polynomial work = *this;
    std::vector<Term> q_terms;
    std::vector<Term> r_terms;
    while (!work.terms_.empty()) {
        const Term top = work.terms_.back();
        if (lead.exp.dominated_by(top.exp)) {
            const Term t{top.exp - lead.exp, field_.mul(top.coeff, lead_inv)};
            q_terms.push_back(t);
            Polynomial step = divisor.shifted(t.exp);
            work.add_scaled(step, field_.neg(t.coeff));
        } else {
            r_terms.push_back(top);
            work.terms_.pop_back();
        }
    }
    // Quotient and remainder terms were produced in descending order.
    std::reverse(q_terms.begin(), q_terms.end());
    std::reverse(r_terms.begin(), r_terms.end());
    q.terms_ = std::move(q_terms);
    rem.terms_ = std::move(r_terms);
    return {std::move(q), std::move(rem)};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw ValidationError("exact_div: divisor does not divide dividend");
    return q;
}

Fp Polynomial::evaluate(std::span<const std::uint32_t> point) const {
    const std::size_t n = nvars();
    if (point.size() != n) {
        throw ValidationError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                              std::to_string(n));
    }
    // Powers are cached per variable up to the maximal exponent.
    std::vector<std::vector<std::uint32_t>> powers(n);
    const unsigned maxdeg = max_individual_degree();
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].resize(maxdeg + 1);
        powers[i][0] = 1 % field_.p();
        for (unsigned j = 1; j <= maxdeg; ++j) powers[i][j] = field_.mul(powers[i][j - 1], point[i] % field_.p());
    }
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
        std::uint32_t m = t.coeff;
        for (std::size_t i = 0; i < n; ++i) m = field_.mul(m, powers[i][t.exp[i]]);
        acc = field_.add(acc, m);
    }
    return Fp(acc, field_.p(), nullptr);
}

namespace {

// Evaluates the variables [begin, begin+len) at `point` and keeps the rest.
std::vector<Term> partial_evaluate(const std::vector<Term>& terms, const PrimeField& F, std::size_t begin,
                                   std::size_t len, std::size_t keep_begin, std::size_t keep_len,
                                   std::span<const std::uint32_t> point) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        std::uint32_t c = t.coeff;
        for (std::size_t i = 0; i < len; ++i) c = F.mul(c, F.pow(point[i] % F.p(), t.exp[begin + i]));
        if (c != 0) out.push_back({t.exp.slice(keep_begin, keep_len), c});
    }
    return out;
}

}  // namespace

Polynomial Polynomial::evaluate_x(std::span<const std::uint32_t> x_point) const {
    if (block_ != Block::XZ) throw ValidationError("evaluate_x expects an XZ polynomial");
    if (x_point.size() != k_) throw ValidationError("x-point arity mismatch");
    return from_terms(field_, Block::Z, k_, partial_evaluate(terms_, field_, 0, k_, k_, k_, x_point));
}

Polynomial Polynomial::evaluate_z(std::span<const std::uint32_t> z_point) const {
    if (block_ != Block::XZ) throw ValidationError("evaluate_z expects an XZ polynomial");
    if (z_point.size() != k_) throw ValidationError("z-point arity mismatch");
    return from_terms(field_, Block::X, k_, partial_evaluate(terms_, field_, k_, k_, 0, k_, z_point));
}

Polynomial Polynomial::relabel(Block block, std::size_t k) const {
    Polynomial r(field_, block, k);
    if (r.nvars() != nvars()) throw ValidationError("relabel changes the number of variables");
    r.terms_ = terms_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->coeff;
        for (std::size_t i = 0; i < it->exp.size(); ++i) {
            if (it->exp[i] == 0) continue;
            const bool is_x = f.block() == Block::X || (f.block() == Block::XZ && i < f.k());
            const std::size_t idx = (f.block() == Block::XZ && i >= f.k()) ? i - f.k() : i;
            os << '*' << (is_x ? 'x' : 'z') << idx + 1;
            if (it->exp[i] > 1) os << '^' << it->exp[i];
        }
    }
    return os;
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
    const auto ta = a.terms();
    const auto tb = b.terms();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(), [](const Term& x, const Term& y) {
        if (!(x.exp == y.exp)) return x.exp < y.exp;
        return x.coeff < y.coeff;
    });
}

Polynomial embed_x(const Polynomial& f) {
    if (f.block() != Block::X) throw ValidationError("embed_x expects an X polynomial");
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    const Exponent zero_z(f.k());
    for (const auto& t : f.terms()) terms.push_back({t.exp.concat(zero_z), t.coeff});
    return Polynomial::from_terms(f.field(), Block::XZ, f.k(), std::move(terms));
}

Polynomial embed_z(const Polynomial& g, std::size_t k) {
    if (g.block() != Block::Z || g.k() != k) throw ValidationError("embed_z expects a Z polynomial with matching k");
    std::vector<Term> terms;
    terms.reserve(g.num_terms());
    const Exponent zero_x(k);
    for (const auto& t : g.terms()) terms.push_back({zero_x.concat(t.exp), t.coeff});
    return Polynomial::from_terms(g.field(), Block::XZ, k, std::move(terms));
}

std::vector<std::pair<Exponent, Polynomial>> x_coefficients(const Polynomial& f) {
    if (f.block() != Block::XZ) throw ValidationError("x_coefficients expects an XZ polynomial");
    const std::size_t k = f.k();
    std::vector<std::pair<Exponent, std::vector<Term>>> groups;
    std::vector<Term> sorted(f.terms().begin(), f.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [k](const Term& a, const Term& b) { return a.exp.slice(0, k) < b.exp.slice(0, k); });
    for (const auto& t : sorted) {
        Exponent xe = t.exp.slice(0, k);
        if (groups.empty() || !(groups.back().first == xe)) groups.emplace_back(xe, std::vector<Term>{});
        groups.back().second.push_back({t.exp.slice(k, k), t.coeff});
    }
    std::vector<std::pair<Exponent, Polynomial>> out;
    out.reserve(groups.size());
    for (auto& [xe, terms] : groups) {
        out.emplace_back(xe, Polynomial::from_terms(f.field(), Block::Z, k, std::move(terms)));
    }
    return out;
}

Polynomial from_x_coefficients(const PrimeField& field, std::size_t k,
                               const std::vector<std::pair<Exponent, Polynomial>>& parts) {
    std::vector<Term> terms;
    for (const auto& [xe, g] : parts) {
        if (xe.size() != k || g.block() != Block::Z || g.k() != k) {
            throw ValidationError("from_x_coefficients: arity mismatch");
        }
        for (const auto& t : g.terms()) terms.push_back({xe.concat(t.exp), t.coeff});
    }
    return Polynomial::from_terms(field, Block::XZ, k, std::move(terms));
}

}  // namespace multdec
