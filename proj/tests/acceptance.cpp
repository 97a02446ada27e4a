// Acceptance checks. Prints one PASS/FAIL line per criterion; `--criterion N`
// runs a single one. Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "generators.hpp"
#include "instances.hpp"
#include "multdec/code.hpp"
#include "multdec/decoder.hpp"
#include "multdec/hasse.hpp"
#include "multdec/polyring_linalg.hpp"
#include "multdec/pruning.hpp"
#include "multdec/rng.hpp"
#include "multdec/wronskian.hpp"
#include "support.hpp"

using namespace multdec;
using testsupport::random_exponent;
using testsupport::random_poly;
using testsupport::uniform;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << v;
    return os.str();
}

Polynomial X(const PrimeField& F, std::size_t k, std::size_t i) { return Polynomial::variable(F, Block::X, k, i); }
Polynomial C(const PrimeField& F, std::size_t k, std::int64_t c) { return Polynomial::constant(F, Block::X, k, c); }

std::size_t pow_size(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// 1. Hasse derivative identities.
Outcome hasse_suite() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    std::size_t failures = 0;
    for (int n = 0; n < 1000; ++n) {
        const PrimeField F(n % 2 ? 10007 : 101);
        const std::size_t k = 1 + uniform(rng, 3);
        const unsigned df = uniform(rng, 9), dg = uniform(rng, 9);
        // Sparser inputs in three variables keep the product expansion small.
        const unsigned density = k == 3 ? 15 : 40;
        const auto f = random_poly(rng, F, Block::X, k, df, density);
        const auto g = random_poly(rng, F, Block::X, k, dg, density);
        if (!hasse_properties_oracle(f, g, random_exponent(rng, k, 8), random_exponent(rng, k, 8))) ++failures;
    }
    const double secs = seconds_since(t0);
    return {failures == 0 && secs < 10.0,
            std::to_string(failures) + " failures in 1000 instances, " + fmt(secs, 2) + " s (limit 10 s)"};
}

// 2. Multiplicity Schwartz-Zippel bound.
Outcome mult_sz() {
    std::mt19937_64 rng(202);
    const PrimeField F(101);
    std::size_t violations = 0, disagreements = 0, tight = 0;
    double worst = 0;
    const auto sum_mult = [](const Polynomial& f, const Grid& G) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < G.size(); ++i) sum += *multiplicity(f, G.point(i));
        return sum;
    };
    for (int n = 0; n < 500; ++n) {
        const std::size_t k = 1 + uniform(rng, 3);
        std::vector<std::uint32_t> S(2 + uniform(rng, 4));
        for (auto& v : S) v = uniform(rng, 101);
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        const Grid G(F, S, k);
        Polynomial f = C(F, k, 1 + uniform(rng, 100));
        const unsigned factors = uniform(rng, 9);
        for (unsigned t = 0; t < factors; ++t) {
            const auto var = uniform(rng, static_cast<std::uint32_t>(k));
            const auto b = S[uniform(rng, static_cast<std::uint32_t>(S.size()))];
            f = f * (X(F, k, var) - C(F, k, b));
        }
        if (uniform(rng, 4) == 0) f += random_poly(rng, F, Block::X, k, static_cast<unsigned>(f.total_degree()), 20);
        if (f.is_zero()) f = C(F, k, 1);
        const std::size_t lhs = sum_mult(f, G);
        const std::size_t rhs = static_cast<std::size_t>(f.total_degree()) * pow_size(S.size(), k - 1);
        if (lhs > rhs) ++violations;
        if (mult_sz_check(f, G) != (lhs <= rhs)) ++disagreements;
        if (rhs > 0) worst = std::max(worst, static_cast<double>(lhs) / static_cast<double>(rhs));
    }
    // Tight case: prod_{b in S} (x1 - b) meets the bound with equality.
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::vector<std::uint32_t> S{0, 3, 7, 9, 20};
        const Grid G(F, S, k);
        Polynomial f = C(F, k, 1);
        for (auto b : S) f = f * (X(F, k, 0) - C(F, k, b));
        if (sum_mult(f, G) == S.size() * pow_size(S.size(), k - 1)) ++tight;
    }
    return {violations == 0 && disagreements == 0 && tight == 3,
            std::to_string(violations) + " violations in 500, max ratio " + fmt(worst) + ", tight case equal for " +
                std::to_string(tight) + "/3 values of k"};
}

// 3. Exhaustive minimum distance.
Outcome code_distance() {
    struct Case {
        std::uint32_t p;
        std::size_t k;
        unsigned s;
        unsigned d;
        std::vector<std::uint32_t> S;
    };
    std::vector<Case> cases;
    for (unsigned d = 0; d <= 3; ++d) cases.push_back({5, 1, 2, d, {0, 1, 2}});
    for (unsigned d = 0; d <= 2; ++d) cases.push_back({3, 2, 2, d, {0, 1}});
    bool all = true, bound = true;
    std::string detail;
    for (const auto& c : cases) {
        const CodeParams P(Grid(PrimeField(c.p), c.S, c.k), c.s, c.d);
        const auto zero = encode(Polynomial(P.field(), Block::X, c.k), P);
        std::size_t best = 0;
        for (const auto& f : exhaustive_codeword_oracle(zero, Rational(0))) {
            if (!f.is_zero()) best = std::max(best, agreement_count(encode(f, P), zero));
        }
        const Rational measured =
            Rational(1) - Rational(static_cast<long long>(best), static_cast<long long>(P.grid().size()));
        const bool ok = measured == P.relative_distance();
        all = all && ok;
        bound = bound && measured >= P.relative_distance();
        if (!detail.empty()) detail += "; ";
        detail += "p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " d=" + std::to_string(c.d) + ": " +
                  std::to_string(measured.numerator()) + "/" + std::to_string(measured.denominator()) + " vs " +
                  std::to_string(P.relative_distance().numerator()) + "/" +
                  std::to_string(P.relative_distance().denominator()) + (ok ? "" : " MISMATCH");
    }
    detail += bound ? "; lower bound holds everywhere" : "; LOWER BOUND VIOLATED";
    return {all, detail};
}

// 4. Kernel vectors over F_p[z].
Outcome kernel() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(404);
    const PrimeField F(101);
    std::size_t bad_product = 0, bad_degree = 0, zero_vec = 0;
    for (int n = 0; n < 200; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t t = 2 + uniform(rng, 5);
        const std::size_t tp = 1 + uniform(rng, static_cast<std::uint32_t>(std::min<std::size_t>(4, t - 1)));
        PolyMatrix A(F, k, tp, t);
        const unsigned deg = 1 + uniform(rng, 3);
        for (std::size_t i = 0; i < tp; ++i)
            for (std::size_t j = 0; j < t; ++j) A.at(i, j) = random_poly(rng, F, Block::Z, k, deg, 40);
        const auto u = kernel_vector(A);
        const int m = std::max(A.max_entry_degree(), 0);
        bool nonzero = false;
        for (const auto& e : u) {
            nonzero = nonzero || !e.is_zero();
            if (e.total_degree() > static_cast<int>(t) * m) ++bad_degree;
        }
        if (!nonzero) ++zero_vec;
        for (const auto& r : A.apply(u))
            if (!r.is_zero()) {
                ++bad_product;
                break;
            }
    }
    const double secs = seconds_since(t0);
    return {bad_product == 0 && bad_degree == 0 && zero_vec == 0 && secs < 30.0,
            std::to_string(bad_product) + " nonzero products, " + std::to_string(bad_degree) + " degree violations, " +
                std::to_string(zero_vec) + " zero vectors in 200, " + fmt(secs, 2) + " s (limit 30 s)"};
}

struct DecoderCase {
    testsupport::DecoderInstance inst;
    ReceivedWord word;
    Rational alpha;
    std::optional<Polynomial> planted;
};

Polynomial random_message(const CodeParams& P, Rng& rng) {
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < P.message_monomials().size(); ++i)
        coeffs.push_back(static_cast<std::uint32_t>(rng.below(P.field().p())));
    return from_coefficients(P, coeffs);
}

Rational threshold_alpha(const testsupport::DecoderInstance& inst) {
    const auto P = inst.params();
    const auto T = required_agreement_count(P, choose_params(P, inst.m));
    return {static_cast<long long>(T), static_cast<long long>(P.grid().size())};
}

// Words for the oracle comparison: planted at the threshold, two codewords
// spliced together, and uniformly random, on every instance.
std::vector<DecoderCase> oracle_cases() {
    std::vector<DecoderCase> out;
    std::uint64_t seed = 500;
    for (const auto& inst : testsupport::decoder_instances()) {
        const auto P = inst.params();
        const std::size_t N = P.grid().size();
        const Rational alpha = threshold_alpha(inst);
        Rng rng(++seed);
        const auto f = random_message(P, rng);
        const Rational err = Rational(1) - alpha;
        out.push_back({inst, corrupt(encode(f, P), err, rng.next()), alpha, f});
        auto w = encode(random_message(P, rng), P);
        const auto w2 = encode(random_message(P, rng), P);
        for (std::size_t i = N / 2; i < N; ++i) w.symbols[i] = w2.symbols[i];
        out.push_back({inst, w, alpha, std::nullopt});
        auto r = w;
        for (auto& sym : r.symbols)
            for (auto& v : sym) v = static_cast<std::uint32_t>(rng.below(P.field().p()));
        out.push_back({inst, r, alpha, std::nullopt});
    }
    return out;
}

// Planted words whose agreement is exactly the smallest count that clears
// the vanishing threshold.
std::vector<DecoderCase> planted_cases(std::size_t k, std::size_t count) {
    std::vector<testsupport::DecoderInstance> insts;
    for (const auto& inst : testsupport::decoder_instances())
        if (inst.k == k) insts.push_back(inst);
    std::vector<DecoderCase> out;
    for (std::size_t t = 0; t < count; ++t) {
        const auto& inst = insts[t % insts.size()];
        const auto P = inst.params();
        const Rational alpha = threshold_alpha(inst);
        Rng rng(derive_seed(600 + k, t));
        const auto f = random_message(P, rng);
        out.push_back({inst, corrupt(encode(f, P), Rational(1) - alpha, rng.next()), alpha, f});
    }
    return out;
}

// 5. Decoder output equals the exhaustive oracle.
Outcome decoder_vs_oracle() {
    const auto cases = oracle_cases();
    std::size_t match = 0, k2 = 0, nonempty = 0;
    for (const auto& c : cases) {
        const auto r = list_decode(c.word, c.inst.m, c.alpha);
        const auto oracle = exhaustive_codeword_oracle(c.word, c.alpha);
        if (r.list == oracle) ++match;
        if (c.inst.k == 2) ++k2;
        if (!oracle.empty()) ++nonempty;
    }
    return {match == cases.size() && cases.size() >= 25 && k2 > 0,
            std::to_string(match) + "/" + std::to_string(cases.size()) + " instances match (" + std::to_string(k2) +
                " with k=2, " + std::to_string(nonempty) + " with a nonempty list)"};
}

// 6. Planted recovery just above the threshold.
Outcome planted_recovery() {
    const auto t0 = Clock::now();
    std::size_t ok1 = 0, ok2 = 0, above = 0;
    auto cases = planted_cases(1, 50);
    const auto more = planted_cases(2, 20);
    cases.insert(cases.end(), more.begin(), more.end());
    for (const auto& c : cases) {
        const auto P = c.inst.params();
        const auto dp = choose_params(P, c.inst.m);
        const std::size_t agree = agreement_count(encode(*c.planted, P), c.word);
        // T (s - m) > (D + d) |S|^(k-1)
        if (agree * (P.s() - dp.m) > (dp.D + P.d()) * pow_size(P.grid().side(), P.k() - 1)) ++above;
        const auto r = list_decode(c.word, c.inst.m, c.alpha);
        if (std::find(r.list.begin(), r.list.end(), *c.planted) != r.list.end()) ++(c.inst.k == 1 ? ok1 : ok2);
    }
    const double secs = seconds_since(t0);
    return {ok1 == 50 && ok2 == 20 && above == 70 && secs < 300.0,
            "k=1 " + std::to_string(ok1) + "/50, k=2 " + std::to_string(ok2) + "/20, " + std::to_string(above) +
                "/70 above threshold, " + fmt(secs, 2) + " s (limit 300 s)"};
}

// 7. Subspace dimension bound on every decoder run.
Outcome subspace_dimension() {
    auto cases = oracle_cases();
    for (std::size_t k : {1u, 2u}) {
        const auto more = planted_cases(k, k == 1 ? 50 : 20);
        cases.insert(cases.end(), more.begin(), more.end());
    }
    std::size_t violations = 0, largest = 0;
    for (const auto& c : cases) {
        const auto r = list_decode(c.word, c.inst.m, c.alpha);
        if (r.subspace_dimension > binomial_count(c.inst.m + c.inst.k, c.inst.k)) ++violations;
        largest = std::max(largest, r.subspace_dimension);
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(cases.size()) +
                                 " runs, largest dimension " + std::to_string(largest)};
}

// 8. Pruning statistics.
Outcome pruning_statistics() {
    // Splice two codewords so that both clear the threshold.
    const auto inst = testsupport::decoder_instances()[1];
    const auto P = inst.params();
    const std::size_t N = P.grid().size();
    const Rational alpha = threshold_alpha(inst);
    const std::size_t T = static_cast<std::size_t>(alpha.numerator());
    Rng rng(808);
    const auto f1 = random_message(P, rng);
    const auto f2 = random_message(P, rng);
    auto w = encode(f1, P);
    const auto w2 = encode(f2, P);
    for (std::size_t i = T; i < N; ++i) w.symbols[i] = w2.symbols[i];
    const auto close = exhaustive_codeword_oracle(w, alpha);
    const auto W = solve_equation_subspace(interpolate(w, choose_params(P, inst.m)), P.d());
    const std::size_t dim = W.basis.size();

    const unsigned r = 3;
    const int runs = 10000;
    std::map<std::size_t, int> hits;
    for (int i = 0; i < runs; ++i) {
        const auto g = algorithm_a(w, W, r, derive_seed(8080, static_cast<std::uint64_t>(i)));
        if (!g) continue;
        const auto it = std::find(close.begin(), close.end(), *g);
        if (it != close.end()) ++hits[static_cast<std::size_t>(it - close.begin())];
    }
    bool stats_ok = close.size() >= 2;
    std::string detail = "close set " + std::to_string(close.size()) + ", dim W " + std::to_string(dim);
    for (std::size_t j = 0; j < close.size(); ++j) {
        const std::size_t a = agreement_count(encode(close[j], P), w);
        const double rho = pruning_success_bound(Rational(static_cast<long long>(a), static_cast<long long>(N)), r,
                                                 dim, P);
        const double sigma = std::sqrt(std::max(rho * (1 - rho), 0.0) / runs);
        const double freq = static_cast<double>(hits[j]) / runs;
        stats_ok = stats_ok && freq >= rho - 3 * sigma;
        detail += "; member " + std::to_string(j) + " freq " + fmt(freq, 4) + " vs bound " + fmt(rho, 4) + "-3s=" +
                  fmt(rho - 3 * sigma, 4);
    }
    const double rho_thm = 0.5 * std::pow(boost::rational_cast<double>(alpha), r);
    const unsigned trials = default_trials(rho_thm);
    int full = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const PruneConfig cfg{r, trials, derive_seed(8081, static_cast<std::uint64_t>(rep)), alpha};
        if (prune(w, W, cfg) == close) ++full;
    }
    detail += "; prune with " + std::to_string(trials) + " trials recovered the close set " + std::to_string(full) +
              "/100";
    return {stats_ok && full >= 99, detail};
}

// 9. Wronskian criterion versus coefficient rank.
Outcome wronskian_criterion() {
    std::mt19937_64 rng(909);
    const PrimeField F(101);
    std::size_t mismatches = 0, over = 0, dependent = 0;
    unsigned most = 0;
    for (int n = 0; n < 300; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 4);
        const auto fs = testsupport::random_family(rng, F, k, w, 5);
        const auto wit = independence_witness(fs);
        const bool independent = testsupport::coefficient_rank(fs) == w;
        if (wit.has_value() != independent) ++mismatches;
        if (!independent) ++dependent;
        if (wit) {
            if (wit->iterations > w) ++over;
            most = std::max(most, wit->iterations);
        }
    }
    return {mismatches == 0 && over == 0,
            std::to_string(mismatches) + " mismatches in 300 (" + std::to_string(dependent) + " dependent), " +
                std::to_string(over) + " runs over w iterations, most iterations " + std::to_string(most)};
}

// 10. Subspace restriction inequality.
Outcome restriction_bound() {
    std::mt19937_64 rng(1010);
    const PrimeField F(7);
    std::size_t violations = 0, positive = 0;
    for (int n = 0; n < 100; ++n) {
        const std::size_t k = 1 + uniform(rng, 2);
        const std::size_t w = 1 + uniform(rng, 3);
        const unsigned mu = static_cast<unsigned>(w) + uniform(rng, 6 - static_cast<std::uint32_t>(w));
        std::vector<std::uint32_t> S{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(S.begin(), S.end(), rng);
        S.resize(2 + uniform(rng, 3));
        const Grid G(F, S, k);
        const auto basis = testsupport::random_restriction_basis(rng, F, k, w, S);
        int d = 0;
        for (const auto& f : basis) d = std::max(d, f.total_degree());
        const std::size_t sum = subspace_restriction_sum(basis, G, mu);
        if (sum * (mu - w + 1) > static_cast<std::size_t>(d) * w * pow_size(S.size(), k - 1)) ++violations;
        if (sum > 0) ++positive;
    }
    return {violations == 0, std::to_string(violations) + " violations in 100 (" + std::to_string(positive) +
                                 " with a nonzero sum)"};
}

// 11. Minimum-weight family meets the distance exactly.
Outcome min_weight() {
    std::size_t members = 0, exact = 0;
    for (std::size_t k : {1u, 2u}) {
        const CodeParams P(Grid(PrimeField(11), {0, 1, 2, 3, 4}, k), 2, 4);
        const auto zero = encode(Polynomial(P.field(), Block::X, k), P);
        const Rational target(P.d(), P.s() * P.grid().side());
        for (std::uint32_t a = 0; a < 5; ++a)
            for (std::uint32_t b = a + 1; b < 5; ++b) {
                ++members;
                if (agreement(encode(min_weight_family(P, {a, b}), P), zero) == target) ++exact;
            }
    }
    return {exact == members && members == 20,
            std::to_string(exact) + "/" + std::to_string(members) + " members at agreement exactly 2/5"};
}

// 12. Byte-identical CLI output for identical invocations.
Outcome determinism(const std::string& cli) {
    namespace fs = std::filesystem;
    if (cli.empty()) return {false, "no --cli path given"};
    const fs::path dir = fs::temp_directory_path() / ("multdec_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string poly = write("f.json", R"({"format": 1, "p": 17, "k": 1, "terms": [{"exp": [1], "coeff": 5}, {"exp": [0], "coeff": 3}]})");
    const std::string fam = write(
        "fam.json",
        R"({"format": 1, "p": 101, "k": 2, "polys": [{"terms": [{"exp": [3, 0], "coeff": 1}]}, {"terms": [{"exp": [1, 2], "coeff": 4}, {"exp": [0, 0], "coeff": 1}]}, {"terms": [{"exp": [0, 3], "coeff": 9}]}]})");
    const std::string code = " --p 17 --k 1 --s 11 --d 1 --S 0,1,2,3,4,5,6,7,8,9,10,11,12,13";
    const std::string word = (dir / "w.json").string();
    const std::vector<std::string> commands{
        "encode" + code + " --poly " + poly + " --error-fraction 1/7 --seed 42",
        "decode --word " + word + " --m 9 --min-agreement 6/7 --prune-r 3 --prune-trials 50 --seed 7",
        "experiment" + code + " --m 9 --error-fraction 0,1/7,2/7 --trials 8 --seed 99",
        "wronskian --polys " + fam,
    };
    if (std::system((cli + " encode" + code + " --poly " + poly + " --error-fraction 1/7 --seed 42 --out " + word).c_str()) !=
        0) {
        fs::remove_all(dir);
        return {false, "encode failed"};
    }
    std::size_t same = 0;
    std::string detail;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outs[2];
        bool ran = true;
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path out = dir / ("out" + std::to_string(i) + "_" + std::to_string(rep));
            ran = ran && std::system((cli + " " + commands[i] + " > " + out.string()).c_str()) == 0;
            outs[rep] = slurp(out);
        }
        const bool ok = ran && !outs[0].empty() && outs[0] == outs[1];
        if (ok) ++same;
        detail += (detail.empty() ? "" : ", ") + commands[i].substr(0, commands[i].find(' ')) + (ok ? " same" : " DIFF");
    }
    fs::remove_all(dir);
    return {same == commands.size(), detail};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    int only = 0;
    std::string cli;
    app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
    app.add_option("--cli", cli, "path to the multdec binary (criterion 12)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Hasse derivative identities", hasse_suite},
        {"multiplicity Schwartz-Zippel bound", mult_sz},
        {"exhaustive minimum distance equals 1 - d/(s|S|)", code_distance},
        {"kernel vectors over F_p[z]", kernel},
        {"list decoder equals exhaustive oracle", decoder_vs_oracle},
        {"planted recovery above threshold", planted_recovery},
        {"subspace dimension at most C(m+k,k)", subspace_dimension},
        {"pruning success statistics", pruning_statistics},
        {"Wronskian criterion iff independence", wronskian_criterion},
        {"subspace restriction inequality", restriction_bound},
        {"minimum-weight family agreement", min_weight},
        {"CLI determinism", [&] { return determinism(cli); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    return all ? 0 : 1;
}
