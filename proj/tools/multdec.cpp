#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multdec/code.hpp"
#include "multdec/decoder.hpp"
#include "multdec/errors.hpp"
#include "multdec/io.hpp"
#include "multdec/pruning.hpp"
#include "multdec/rng.hpp"
#include "multdec/wronskian.hpp"

using namespace multdec;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

struct CodeOptions {
    std::uint32_t p = 0;
    std::size_t k = 1;
    unsigned s = 0;
    unsigned d = 0;
    std::string S;

    void add_to(CLI::App& app) {
        app.add_option("--p", p, "prime modulus")->required();
        app.add_option("--k", k, "number of variables")->required();
        app.add_option("--s", s, "multiplicity (derivative orders < s)")->required();
        app.add_option("--d", d, "degree bound")->required();
        app.add_option("--S", S, "evaluation set, comma separated residues")->required();
    }

    CodeParams build() const {
        std::vector<std::uint32_t> pts;
        std::stringstream ss(S);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(item, &used);
                if (used != item.size() || v > 0xffffffffUL) throw std::invalid_argument(item);
                pts.push_back(static_cast<std::uint32_t>(v));
            } catch (const std::logic_error&) {
                throw ValidationError("--S: \"" + item + "\" is not a non-negative integer");
            }
        }
        if (pts.empty()) throw ValidationError("--S: empty evaluation set");
        return CodeParams(Grid(PrimeField(p), pts, k), s, d);
    }
};

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(io::parse_rational(item));
    if (out.empty()) throw ValidationError("empty list of error fractions");
    return out;
}

Polynomial random_message(const CodeParams& P, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < P.message_monomials().size(); ++i) {
        coeffs.push_back(static_cast<std::uint32_t>(rng.below(P.field().p())));
    }
    return from_coefficients(P, coeffs);
}

// Trial count for pruning when only r is given: enough runs that a member at
// the requested agreement is missed with probability at most 1%.
unsigned auto_trials(const CodeParams& P, unsigned m, Rational alpha, unsigned r) {
    const std::size_t w = binomial_count(m + P.k(), P.k());
    return default_trials(pruning_success_bound(alpha, r, w, P));
}

std::optional<PruneConfig> prune_config(const CodeParams& P, unsigned m, Rational alpha, unsigned r, unsigned trials,
                                        std::uint64_t seed) {
    if (r == 0) return std::nullopt;
    return PruneConfig{r, trials ? trials : auto_trials(P, m, alpha, r), seed, alpha};
}

int run(int argc, char** argv) {
    CLI::App app{"Multiplicity codes on product sets: encode, list decode, experiments, Wronskian certificates"};
    app.require_subcommand(1);

    // encode
    auto* enc = app.add_subcommand("encode", "encode a polynomial file as a received-word file");
    CodeOptions enc_code;
    std::string enc_poly, enc_out, enc_err = "0";
    std::uint64_t enc_seed = 0;
    enc_code.add_to(*enc);
    enc->add_option("--poly", enc_poly, "polynomial JSON file")->required();
    enc->add_option("--error-fraction", enc_err, "fraction of symbols to corrupt (e.g. 1/4 or 0.25)");
    enc->add_option("--seed", enc_seed, "corruption seed");
    enc->add_option("--out", enc_out, "output file (default stdout)");

    // decode
    auto* dec = app.add_subcommand("decode", "list decode a received-word file");
    std::string dec_word, dec_out, dec_alpha;
    unsigned dec_m = 0, dec_r = 0, dec_trials = 0;
    std::uint64_t dec_seed = 0;
    dec->add_option("--word", dec_word, "received-word JSON file")->required();
    dec->add_option("--m", dec_m, "number of interpolation variables")->required();
    dec->add_option("--min-agreement", dec_alpha, "minimum agreement fraction")->required();
    dec->add_option("--prune-r", dec_r, "points per pruning trial (enables pruning)");
    dec->add_option("--prune-trials", dec_trials, "pruning trials (default from the success bound)");
    dec->add_option("--seed", dec_seed, "pruning seed");
    dec->add_option("--out", dec_out, "output file (default stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "planted-codeword trials, one CSV row per trial");
    CodeOptions exp_code;
    std::string exp_err = "0", exp_alpha, exp_out;
    unsigned exp_m = 0, exp_trials = 20, exp_r = 0, exp_ptrials = 0;
    std::uint64_t exp_seed = 0;
    bool exp_timing = false;
    exp_code.add_to(*exp);
    exp->add_option("--m", exp_m, "number of interpolation variables")->required();
    exp->add_option("--error-fraction", exp_err, "comma separated error fractions to sweep");
    exp->add_option("--min-agreement", exp_alpha, "minimum agreement (default: decodable threshold)");
    exp->add_option("--trials", exp_trials, "trials per error fraction");
    exp->add_option("--seed", exp_seed, "master seed");
    exp->add_option("--prune-r", exp_r, "points per pruning trial (enables pruning)");
    exp->add_option("--prune-trials", exp_ptrials, "pruning trials");
    exp->add_option("--out", exp_out, "output CSV (default stdout)");
    exp->add_flag("--timing", exp_timing, "record wall time per trial (makes output nondeterministic)");

    // wronskian
    auto* wr = app.add_subcommand("wronskian", "independence certificate for a polynomial family");
    std::string wr_polys, wr_out;
    wr->add_option("--polys", wr_polys, "family JSON file")->required();
    wr->add_option("--out", wr_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    if (enc->parsed()) {
        const CodeParams P = enc_code.build();
        const Polynomial f = io::polynomial_from_json(io::read_json_file(enc_poly));
        if (f.field() != P.field() || f.k() != P.k()) {
            throw ValidationError(enc_poly + ": polynomial ring (p = " + std::to_string(f.field().p()) + ", k = " +
                                  std::to_string(f.k()) + ") does not match the code parameters");
        }
        ReceivedWord w = encode(f, P);
        const Rational err = io::parse_rational(enc_err);
        if (err != Rational(0)) w = corrupt(w, err, enc_seed);
        io::write_text(enc_out, dump(io::to_json(w)));
        return 0;
    }
    if (dec->parsed()) {
        const ReceivedWord w = io::word_from_json(io::read_json_file(dec_word));
        const Rational alpha = io::parse_rational(dec_alpha);
        DecodeOptions opts;
        opts.prune = prune_config(w.params, dec_m, alpha, dec_r, dec_trials, dec_seed);
        const DecodeResult r = list_decode(w, dec_m, alpha, opts);
        io::write_text(dec_out, dump(io::to_json(r, w.params, required_agreement_count(w.params, r.dp))));
        return 0;
    }
    if (exp->parsed()) {
        const CodeParams P = exp_code.build();
        const auto fractions = parse_list(exp_err);
        const auto dp = choose_params(P, exp_m);
        const std::size_t N = P.grid().size();
        const Rational alpha = exp_alpha.empty() ? Rational(static_cast<long long>(required_agreement_count(P, dp)),
                                                            static_cast<long long>(N))
                                                 : io::parse_rational(exp_alpha);
        DecodeOptions opts;
        opts.exec = Exec::Serial;
        opts.prune = prune_config(P, exp_m, alpha, exp_r, exp_ptrials, exp_seed);
        // Fail fast on infeasible thresholds before spawning trials.
        list_decode(encode(Polynomial(P.field(), Block::X, P.k()), P), exp_m, alpha, opts);

        struct Row {
            std::uint64_t seed;
            std::size_t list_size;
            bool recovered;
            double seconds;
        };
        const std::size_t total = fractions.size() * exp_trials;
        std::vector<Row> rows(total);
        std::vector<std::exception_ptr> errors(total);
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 1)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(total); ++t) {
            const Rational ef = fractions[t / exp_trials];
            const std::uint64_t seed = derive_seed(exp_seed, static_cast<std::uint64_t>(t % exp_trials));
            try {
                const auto start = std::chrono::steady_clock::now();
                const Polynomial f = random_message(P, seed);
                const ReceivedWord w = corrupt(encode(f, P, Exec::Serial), ef, derive_seed(seed, 1));
                const DecodeResult r = list_decode(w, exp_m, alpha, opts);
                const auto stop = std::chrono::steady_clock::now();
                rows[t] = {seed, r.list.size(), std::find(r.list.begin(), r.list.end(), f) != r.list.end(),
                           std::chrono::duration<double>(stop - start).count()};
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        std::string csv = "seed,error_fraction,list_size,planted_recovered,wall_time\n";
        for (std::size_t t = 0; t < total; ++t) {
            char time_buf[32] = "-";
            if (exp_timing) std::snprintf(time_buf, sizeof time_buf, "%.6f", rows[t].seconds);
            csv += std::to_string(rows[t].seed) + "," + io::format_rational(fractions[t / exp_trials]) + "," +
                   std::to_string(rows[t].list_size) + "," + (rows[t].recovered ? "true" : "false") + "," +
                   time_buf + "\n";
        }
        io::write_text(exp_out, csv);
        return 0;
    }
    if (wr->parsed()) {
        const auto fs = io::family_from_json(io::read_json_file(wr_polys));
        const auto wit = independence_witness(fs);
        io::write_text(wr_out, dump(io::certificate_to_json(wit, fs.front().field(), fs.front().k())));
        return 0;
    }
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InfeasibleParameters& e) {
        std::cerr << "infeasible: " << e.what() << " (bound " << e.bound() << ")\n";
        return kExitInfeasible;
    } catch (const FieldTooSmall& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
