#include "multdec/decoder.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "multdec/errors.hpp"
#include "multdec/fp_matrix.hpp"
#include "multdec/grid.hpp"
#include "multdec/hasse.hpp"
#include "multdec/polyring_linalg.hpp"

namespace multdec {

unsigned Interpolant::top_index() const {
    for (std::size_t i = Q.size(); i > 0; --i) {
        if (!Q[i - 1].is_zero()) return static_cast<unsigned>(i);
    }
    return 0;
}

int Interpolant::max_z_degree() const {
    int d = -1;
    for (const auto& q : Q) d = std::max(d, q.degree_z());
    return d;
}

Polynomial SolutionSpace::member(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != basis.size()) throw ValidationError("coordinate vector length mismatch");
    Polynomial f = offset;
    for (std::size_t i = 0; i < coords.size(); ++i) f += basis[i].scaled(coords[i]);
    return f;
}

namespace {

std::uint64_t grid_power(const CodeParams& params, std::size_t exponent) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < exponent; ++i) n *= params.grid().side();
    return n;
}

void check_m(const CodeParams& params, unsigned m) {
    if (m < 1 || static_cast<std::uint64_t>(m) + 1 + params.k() > params.s()) {
        throw ValidationError("m = " + std::to_string(m) + " must satisfy 1 <= m <= s-1-k = " +
                              std::to_string(static_cast<long long>(params.s()) - 1 -
                                             static_cast<long long>(params.k())));
    }
}

}  // namespace

unsigned closed_form_degree(const CodeParams& params, unsigned m) {
    const double v = 10.0 * static_cast<double>(params.grid().side()) * (params.s() - m) /
                     std::pow(static_cast<double>(m), 1.0 / static_cast<double>(params.k()));
    return static_cast<unsigned>(std::ceil(v - 1e-9));
}

DecoderParams choose_params(const CodeParams& params, unsigned m) {
    check_m(params, m);
    const std::size_t k = params.k();
    const std::uint64_t constraints = grid_power(params, k) * binomial_count(params.s() - m + k, k);
    unsigned D = 0;
    // m C(D+k,k) > constraints  <=>  C(D+k,k) > floor(constraints / m)
    while (binomial_count(D + k, k) <= constraints / m) ++D;
    if (D > closed_form_degree(params, m)) {
        throw InternalError("minimal interpolation degree " + std::to_string(D) + " exceeds the closed form " +
                            std::to_string(closed_form_degree(params, m)));
    }
    return DecoderParams{m, D};
}

std::size_t constraint_count(const CodeParams& params, unsigned m) {
    check_m(params, m);
    return grid_power(params, params.k()) * binomial_count(params.s() - 1 - m + params.k(), params.k());
}

std::size_t unknown_count(const CodeParams& params, const DecoderParams& dp) {
    return dp.m * binomial_count(dp.D + params.k(), params.k());
}

namespace {

// The received tuple at one point as Z polynomials P_0..P_{s-1}, P_j
// homogeneous of degree j.
std::vector<Polynomial> symbol_tuple(const CodeParams& params, const std::vector<std::uint32_t>& values) {
    std::vector<std::vector<Term>> parts(params.s());
    const auto& orders = params.orders();
    for (std::size_t i = 0; i < orders.size(); ++i) parts[orders[i].total()].push_back({orders[i], values[i]});
    std::vector<Polynomial> out;
    for (auto& terms : parts) out.push_back(Polynomial::from_terms(params.field(), Block::Z, params.k(), terms));
    return out;
}

// All b <= a componentwise.
std::vector<Exponent> dominated_by(const Exponent& a) {
    std::vector<Exponent> out;
    for (const auto& e : exponents_up_to(a.size(), a.total()))
        if (e.dominated_by(a)) out.push_back(e);
    return out;
}

}  // namespace

Interpolant interpolate(const ReceivedWord& P, const DecoderParams& dp, Exec exec) {
    P.validate();
    const CodeParams& params = P.params;
    check_m(params, dp.m);
    const PrimeField& F = params.field();
    const std::size_t k = params.k();
    const unsigned m = dp.m;
    const auto row_orders = exponents_up_to(k, params.s() - 1 - m);
    const auto col_monos = exponents_up_to(k, dp.D);
    const std::size_t ncols = m * col_monos.size();
    const std::size_t nrows = params.grid().size() * row_orders.size();
    PolyMatrix A(F, k, nrows, ncols);

    for (std::size_t idx = 0; idx < params.grid().size(); ++idx) {
        const auto a = params.grid().point(idx);
        const auto tuple = symbol_tuple(params, P.symbols[idx]);
        std::map<std::pair<unsigned, Exponent>, Polynomial> tau_cache;
        auto tau_of = [&](unsigned i, const Exponent& g) -> const Polynomial& {
            auto key = std::make_pair(i, g);
            auto it = tau_cache.find(key);
            if (it == tau_cache.end()) it = tau_cache.emplace(key, tau(tuple, g, i)).first;
            return it->second;
        };
        for (std::size_t r = 0; r < row_orders.size(); ++r) {
            const Exponent& e = row_orders[r];
            const std::size_t row = idx * row_orders.size() + r;
            for (const Exponent& ep : dominated_by(e)) {
                const Exponent rest = e - ep;
                for (std::size_t c = 0; c < col_monos.size(); ++c) {
                    const Exponent& beta = col_monos[c];
                    if (!ep.dominated_by(beta)) continue;
                    std::uint32_t scalar = multi_binomial(beta, ep, F);
                    for (std::size_t v = 0; v < k && scalar != 0; ++v) scalar = F.mul(scalar, F.pow(a[v], beta[v] - ep[v]));
                    if (scalar == 0) continue;
                    for (unsigned i = 1; i <= m; ++i) {
                        const Polynomial& t = tau_of(i - 1, rest);
                        if (!t.is_zero()) A.at(row, (i - 1) * col_monos.size() + c) += t.scaled(scalar);
                    }
                }
            }
        }
    }

    const auto u = kernel_vector_column_homogeneous(A, exec);
    Interpolant out;
    for (unsigned i = 1; i <= m; ++i) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < col_monos.size(); ++c) {
            for (const auto& t : u[(i - 1) * col_monos.size() + c].terms()) {
                terms.push_back({col_monos[c].concat(t.exp), t.coeff});
            }
        }
        out.Q.push_back(Polynomial::from_terms(F, Block::XZ, k, std::move(terms)));
    }
    if (out.top_index() == 0) throw InternalError("interpolation returned the zero polynomial");
    return out;
}

bool interpolation_constraints_hold(const Interpolant& Q, const ReceivedWord& P) {
    const CodeParams& params = P.params;
    const std::size_t m = Q.Q.size();
    if (m + 1 > params.s()) throw ValidationError("interpolant has too many components for s");
    const auto row_orders = exponents_up_to(params.k(), params.s() - 1 - static_cast<unsigned>(m));
    for (std::size_t idx = 0; idx < params.grid().size(); ++idx) {
        const auto a = params.grid().point(idx);
        const auto tuple = symbol_tuple(params, P.symbols[idx]);
        for (const auto& e : row_orders) {
            Polynomial acc(params.field(), Block::Z, params.k());
            for (std::size_t i = 1; i <= m; ++i) {
                for (const auto& ep : dominated_by(e)) {
                    const Polynomial dq = hasse_derivative(Q.Q[i - 1], ep).evaluate_x(a);
                    if (!dq.is_zero()) acc += dq * tau(tuple, e - ep, static_cast<unsigned>(i - 1));
                }
            }
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

Polynomial substitute(const Interpolant& Q, const Polynomial& f) {
    Polynomial acc(f.field(), Block::XZ, f.k());
    for (std::size_t i = 1; i <= Q.Q.size(); ++i) {
        if (Q.Q[i - 1].is_zero()) continue;
        acc += Q.Q[i - 1] * delta(f, static_cast<unsigned>(i - 1));
    }
    return acc;
}

bool vanishing_check(const Interpolant& Q, const Polynomial& f) { return substitute(Q, f).is_zero(); }

namespace {

// Solves c(z) h(z) = r(z) for h homogeneous of degree `deg` in k variables,
// a linear map of r. Primary route: evaluate on a hitting set for degree
// deg(c) + deg and invert a square nonsingular selection of the resulting
// rows. When p is too small for that hitting set, falls back to division
// with remainder by c, which is also linear in r.
class QuotientSolver {
public:
    QuotientSolver(const Polynomial& c, unsigned deg) : c_(c), field_(c.field()), unknowns_(exponents_of_degree(c.k(), deg)) {
        const unsigned bound = static_cast<unsigned>(std::max(c.total_degree(), 0)) + deg;
        HittingSet hs;
        try {
            hs = hitting_set(bound, c.k(), field_);
        } catch (const FieldTooSmall&) {
            fallback_ = true;
            return;
        }
        const std::size_t n = unknowns_.size();
        FpMatrix M(hs.points.size(), n);
        for (std::size_t r = 0; r < hs.points.size(); ++r) {
            const std::uint32_t cv = c.evaluate(hs.points[r]).value();
            for (std::size_t e = 0; e < n; ++e) {
                std::uint32_t v = cv;
                for (std::size_t i = 0; i < c.k(); ++i) v = field_.mul(v, field_.pow(hs.points[r][i], unknowns_[e][i]));
                M.at(r, e) = v;
            }
        }
        FpMatrix Mt = M.transposed();
        const auto rows = rref(Mt, field_);
        if (rows.size() != n) throw InternalError("hitting-set evaluation of c*h is not injective");
        FpMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            points_.push_back(hs.points[rows[i]]);
            for (std::size_t e = 0; e < n; ++e) aug.at(i, e) = M.at(rows[i], e);
            aug.at(i, n + i) = 1 % field_.p();
        }
        rref(aug, field_);
        inverse_ = FpMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t e = 0; e < n; ++e) inverse_.at(i, e) = aug.at(i, n + e);
    }

    bool uses_fallback() const noexcept { return fallback_; }

    // Coefficients of h on unknowns() in order.
    std::vector<std::uint32_t> solve(const Polynomial& r) const {
        const std::size_t n = unknowns_.size();
        std::vector<std::uint32_t> h(n, 0);
        if (r.is_zero()) return h;
        if (fallback_) {
            const Polynomial q = r.divmod(c_).first;
            for (std::size_t e = 0; e < n; ++e) h[e] = q.coeff(unknowns_[e]).value();
            return h;
        }
        std::vector<std::uint32_t> rv(n);
        for (std::size_t i = 0; i < n; ++i) rv[i] = r.evaluate(points_[i]).value();
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t acc = 0;
            for (std::size_t e = 0; e < n; ++e) acc = field_.add(acc, field_.mul(inverse_.at(i, e), rv[e]));
            h[i] = acc;
        }
        return h;
    }

    const std::vector<Exponent>& unknowns() const noexcept { return unknowns_; }

private:
    Polynomial c_;
    PrimeField field_;
    std::vector<Exponent> unknowns_;
    bool fallback_ = false;
    std::vector<std::vector<std::uint32_t>> points_;
    FpMatrix inverse_;
};

// Lifts the seed through stages t = j..d-1 in translated coordinates.
Polynomial lift_seed(const std::vector<Polynomial>& Qt, unsigned j, unsigned d, const QuotientSolver& solver,
                     Polynomial f) {
    const PrimeField& F = f.field();
    const std::size_t k = f.k();
    for (unsigned t = j; t < d; ++t) {
        const unsigned g = t + 2 - j;
        Polynomial E(F, Block::XZ, k);
        for (unsigned i = 1; i <= j; ++i) {
            if (Qt[i - 1].is_zero()) continue;
            const Polynomial dl = delta(f, i - 1).truncate_x(g + 1);
            if (dl.is_zero()) continue;
            E += (Qt[i - 1].truncate_x(g + 1) * dl).x_homogeneous_component(g);
        }
        std::map<Exponent, std::vector<Term>> derivs;
        for (const auto& e : solver.unknowns()) derivs[e];
        for (const auto& [gamma, r] : x_coefficients(E)) {
            const auto h = solver.solve(-r);
            for (std::size_t e = 0; e < h.size(); ++e) {
                if (h[e] != 0) derivs[solver.unknowns()[e]].push_back({gamma, h[e]});
            }
        }
        std::map<Exponent, Polynomial> family;
        for (auto& [e, terms] : derivs) family.emplace(e, Polynomial::from_terms(F, Block::X, k, std::move(terms)));
        f += euler_recover_unchecked(family, t + 1);
    }
    return f;
}

}  // namespace

SolutionSpace solve_equation_subspace(const Interpolant& Q, unsigned d, SubspaceDiagnostics* diag, Exec exec) {
    const unsigned j = Q.top_index();
    if (j == 0) throw ValidationError("solve_equation_subspace needs a nonzero interpolant");
    const std::size_t k = Q.k();
    const PrimeField F = Q.Q.front().field();
    if (F.p() <= d) {
        throw FieldTooSmall("reconstruction needs p > d (p = " + std::to_string(F.p()) + ", d = " +
                            std::to_string(d) + ")");
    }
    const Polynomial& Qj = Q.Q[j - 1];
    const std::size_t side = std::min<std::size_t>(static_cast<std::size_t>(Qj.degree_x()) + 1, F.p());
    std::vector<std::uint32_t> a;
    for (const auto& pt : integer_box(side, k)) {
        if (!Qj.evaluate_x(pt).is_zero()) {
            a = pt;
            break;
        }
    }
    if (a.empty()) throw FieldTooSmall("no translation point with Q_j(a, z) != 0 in the search grid");

    std::vector<Polynomial> Qt;
    for (unsigned i = 0; i < j; ++i) Qt.push_back(translate_x(Q.Q[i], a));
    const Polynomial c = Qt[j - 1].evaluate_x(std::vector<std::uint32_t>(k, 0));
    const QuotientSolver solver(c, j - 1);

    const auto seeds = exponents_up_to(k, std::min(j, d));
    std::vector<std::uint32_t> minus_a(k);
    for (std::size_t i = 0; i < k; ++i) minus_a[i] = F.neg(a[i]);
    std::vector<Polynomial> lifted(seeds.size(), Polynomial(F, Block::X, k));
    const auto n = static_cast<std::ptrdiff_t>(seeds.size());
    auto work = [&](std::ptrdiff_t b) {
        lifted[b] = translate_x(lift_seed(Qt, j, d, solver, Polynomial::monomial(F, Block::X, k, seeds[b])), minus_a);
    };
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t b = 0; b < n; ++b) work(b);
    } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic)
        for (std::ptrdiff_t b = 0; b < n; ++b) work(b);
    }

    // Exact filter: keep the combinations of lifted seeds that satisfy the equation.
    std::vector<Polynomial> residues;
    for (const auto& g : lifted) residues.push_back(substitute(Q, g));
    std::unordered_map<Exponent, std::size_t> row_of;
    for (const auto& r : residues)
        for (const auto& t : r.terms()) row_of.emplace(t.exp, row_of.size());
    FpMatrix M(row_of.size(), seeds.size());
    for (std::size_t b = 0; b < residues.size(); ++b)
        for (const auto& t : residues[b].terms()) M.at(row_of.at(t.exp), b) = t.coeff;
    const auto kernel = nullspace(M, F);

    // Canonical basis: reduced echelon form over the message monomials.
    const auto monos = exponents_up_to(k, d);
    std::unordered_map<Exponent, std::size_t> col_of;
    for (std::size_t i = 0; i < monos.size(); ++i) col_of.emplace(monos[i], i);
    FpMatrix B(kernel.size(), monos.size());
    for (std::size_t v = 0; v < kernel.size(); ++v) {
        Polynomial g(F, Block::X, k);
        for (std::size_t b = 0; b < seeds.size(); ++b)
            if (kernel[v][b] != 0) g += lifted[b].scaled(kernel[v][b]);
        for (const auto& t : g.terms()) B.at(v, col_of.at(t.exp)) = t.coeff;
    }
    const std::size_t dim = rref(B, F).size();
    SolutionSpace W{Polynomial(F, Block::X, k), {}};
    for (std::size_t v = 0; v < dim; ++v) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (B.at(v, i) != 0) terms.push_back({monos[i], B.at(v, i)});
        W.basis.push_back(Polynomial::from_terms(F, Block::X, k, std::move(terms)));
    }
    if (diag) *diag = SubspaceDiagnostics{j, a, seeds.size(), solver.uses_fallback()};
    return W;
}

std::size_t required_agreement_count(const CodeParams& params, const DecoderParams& dp) {
    const std::uint64_t rhs = static_cast<std::uint64_t>(dp.D + params.d()) * grid_power(params, params.k() - 1);
    return static_cast<std::size_t>(rhs / (params.s() - dp.m) + 1);
}

DecodeResult list_decode(const ReceivedWord& P, unsigned m, Rational min_agreement, const DecodeOptions& options) {
    P.validate();
    const CodeParams& params = P.params;
    DecodeResult res;
    res.dp = choose_params(params, m);
    const std::size_t N = params.grid().size();
    res.threshold_count = ceil_count(min_agreement, N);
    const Rational boundary(params.d(), static_cast<long long>(params.s()) * static_cast<long long>(params.grid().side()));
    if (min_agreement <= boundary) {
        throw InfeasibleParameters(
            "agreement " + std::to_string(boost::rational_cast<double>(min_agreement)) + " is at or below d/(s|S|) = " +
                std::to_string(boost::rational_cast<double>(boundary)) +
                "; products of (x1 - b)^s over d/s points of S all reach that agreement with the zero word, so the "
                "list is not polynomially bounded there",
            boost::rational_cast<double>(boundary));
    }
    const std::size_t required = required_agreement_count(params, res.dp);
    if (res.threshold_count < required) {
        const double bound = static_cast<double>(required) / static_cast<double>(N);
        throw InfeasibleParameters("agreement threshold " + std::to_string(res.threshold_count) + "/" +
                                       std::to_string(N) + " is below the decodable threshold " +
                                       std::to_string(required) + "/" + std::to_string(N) + " for m = " +
                                       std::to_string(m) + ", D = " + std::to_string(res.dp.D),
                                   bound);
    }
    const Interpolant Q = interpolate(P, res.dp, options.exec);
    for (const auto& q : Q.Q) res.interpolant_x_degrees.push_back(q.degree_x());
    res.interpolant_z_degree = Q.max_z_degree();
    const SolutionSpace W = solve_equation_subspace(Q, params.d(), &res.diag, options.exec);
    res.subspace_dimension = W.dimension();

    std::vector<Polynomial> candidates;
    double combos = 1;
    for (std::size_t i = 0; i < W.dimension(); ++i) combos *= params.field().p();
    if (W.dimension() <= options.enumeration_dim_cap && combos <= static_cast<double>(options.enumeration_limit)) {
        std::vector<std::vector<std::uint32_t>> words;
        for (const auto& b : W.basis) words.push_back(flatten(encode(b, params, Exec::Serial)));
        const auto offset = flatten(encode(W.offset, params, Exec::Serial));
        for (const auto& coords :
             enumerate_close_combinations(P, offset, words, res.threshold_count, options.exec)) {
            candidates.push_back(W.member(coords));
        }
    } else if (options.prune) {
        PruneConfig cfg = *options.prune;
        cfg.min_agreement = min_agreement;
        candidates = prune(P, W, cfg, options.exec);
        res.pruned = true;
    } else {
        throw InfeasibleParameters("solution subspace of dimension " + std::to_string(W.dimension()) +
                                       " is too large to enumerate; enable pruning",
                                   static_cast<double>(W.dimension()));
    }
    for (auto& f : candidates) {
        const std::size_t agree = agreement_count(encode(f, params, Exec::Serial), P);
        if (agree >= res.threshold_count && vanishing_check(Q, f)) {
            res.list.push_back(std::move(f));
            res.agreements.push_back(agree);
        }
    }
    // Sort the list together with its agreement counts.
    std::vector<std::size_t> order(res.list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return polynomial_less(res.list[x], res.list[y]); });
    std::vector<Polynomial> sorted;
    std::vector<std::size_t> agreements;
    for (auto i : order) {
        if (!sorted.empty() && sorted.back() == res.list[i]) continue;
        sorted.push_back(res.list[i]);
        agreements.push_back(res.agreements[i]);
    }
    res.list = std::move(sorted);
    res.agreements = std::move(agreements);
    return res;
}

}  // namespace multdec
