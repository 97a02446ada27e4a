#include "multdec/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "multdec/errors.hpp"

namespace multdec::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError((path.empty() ? std::string("document") : path) + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail(path, "integer too large");
        return static_cast<std::int64_t>(v);
    }
    return j.get<std::int64_t>();
}

std::uint32_t non_negative(const Json& j, const std::string& path, std::uint64_t max) {
    const auto v = integer(j, path);
    if (v < 0 || static_cast<std::uint64_t>(v) > max) fail(path, "value " + std::to_string(v) + " out of range");
    return static_cast<std::uint32_t>(v);
}

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

void check_format(const Json& j) {
    const auto v = integer(field(j, "format", ""), "format");
    if (v != kFormat) fail("format", "unsupported format version " + std::to_string(v));
}

Json terms_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(Json{{"exp", t.exp.entries()}, {"coeff", t.coeff}});
    return terms;
}

Polynomial terms_from_json(const Json& j, const PrimeField& F, std::size_t k, const std::string& path) {
    std::vector<Term> terms;
    const Json& arr = array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string tp = path + "[" + std::to_string(i) + "]";
        const Json& e = array(field(arr[i], "exp", tp), tp + ".exp");
        if (e.size() != k) fail(tp + ".exp", "expected " + std::to_string(k) + " entries");
        std::vector<unsigned> entries;
        for (std::size_t v = 0; v < e.size(); ++v) {
            entries.push_back(non_negative(e[v], tp + ".exp[" + std::to_string(v) + "]", 65535));
        }
        const auto c = integer(field(arr[i], "coeff", tp), tp + ".coeff");
        terms.push_back({Exponent(std::span<const unsigned>(entries)), F.reduce(c)});
    }
    return Polynomial::from_terms(F, Block::X, k, std::move(terms));
}

std::pair<PrimeField, std::size_t> ring_from_json(const Json& j) {
    const auto p = non_negative(field(j, "p", ""), "p", std::numeric_limits<std::uint32_t>::max());
    const auto k = non_negative(field(j, "k", ""), "k", kMaxVars);
    if (k == 0) fail("k", "must be at least 1");
    return {PrimeField(p), k};
}

}  // namespace

Json to_json(const Polynomial& f) {
    if (f.block() != Block::X) throw ValidationError("only X polynomials are serialized");
    return Json{{"format", kFormat}, {"p", f.field().p()}, {"k", f.k()}, {"terms", terms_json(f)}};
}

Polynomial polynomial_from_json(const Json& j) {
    check_format(j);
    const auto [F, k] = ring_from_json(j);
    return terms_from_json(field(j, "terms", ""), F, k, "terms");
}

Json to_json(const ReceivedWord& w) {
    const CodeParams& P = w.params;
    Json symbols = Json::array();
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        symbols.push_back(Json{{"point", P.grid().point(i)}, {"values", w.symbols[i]}});
    }
    return Json{{"format", kFormat}, {"p", P.field().p()}, {"k", P.k()},       {"s", P.s()},
                {"d", P.d()},        {"S", P.grid().s_points()}, {"symbols", symbols}};
}

ReceivedWord word_from_json(const Json& j) {
    check_format(j);
    const auto [F, k] = ring_from_json(j);
    const auto s = non_negative(field(j, "s", ""), "s", 1u << 15);
    const auto d = non_negative(field(j, "d", ""), "d", 1u << 15);
    std::vector<std::uint32_t> S;
    const Json& Sj = array(field(j, "S", ""), "S");
    for (std::size_t i = 0; i < Sj.size(); ++i) {
        S.push_back(non_negative(Sj[i], "S[" + std::to_string(i) + "]", F.p() - 1));
    }
    CodeParams params(Grid(F, S, k), s, d);
    const std::size_t width = params.alphabet_size();
    std::vector<std::vector<std::uint32_t>> symbols(params.grid().size());
    std::vector<bool> seen(symbols.size(), false);
    const Json& arr = array(field(j, "symbols", ""), "symbols");
    if (arr.size() != symbols.size()) {
        fail("symbols", "expected " + std::to_string(symbols.size()) + " symbols, got " + std::to_string(arr.size()));
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string sp = "symbols[" + std::to_string(i) + "]";
        const Json& pt = array(field(arr[i], "point", sp), sp + ".point");
        if (pt.size() != k) fail(sp + ".point", "expected " + std::to_string(k) + " coordinates");
        std::vector<std::uint32_t> point;
        for (std::size_t c = 0; c < pt.size(); ++c) {
            point.push_back(non_negative(pt[c], sp + ".point[" + std::to_string(c) + "]", F.p() - 1));
        }
        std::size_t idx = 0;
        try {
            idx = params.grid().index_of(point);
        } catch (const ValidationError&) {
            fail(sp + ".point", "not a grid point");
        }
        if (seen[idx]) fail(sp + ".point", "duplicate grid point");
        seen[idx] = true;
        const Json& vals = array(field(arr[i], "values", sp), sp + ".values");
        if (vals.size() != width) fail(sp + ".values", "expected " + std::to_string(width) + " values");
        for (std::size_t c = 0; c < vals.size(); ++c) {
            symbols[idx].push_back(non_negative(vals[c], sp + ".values[" + std::to_string(c) + "]", F.p() - 1));
        }
    }
    ReceivedWord w{params, std::move(symbols)};
    w.validate();
    return w;
}

Json family_to_json(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw ValidationError("cannot serialize an empty family");
    Json polys = Json::array();
    for (const auto& f : fs) polys.push_back(Json{{"terms", terms_json(f)}});
    return Json{{"format", kFormat}, {"p", fs.front().field().p()}, {"k", fs.front().k()}, {"polys", polys}};
}

std::vector<Polynomial> family_from_json(const Json& j) {
    check_format(j);
    const auto [F, k] = ring_from_json(j);
    const Json& arr = array(field(j, "polys", ""), "polys");
    if (arr.empty()) fail("polys", "family is empty");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string pp = "polys[" + std::to_string(i) + "]";
        out.push_back(terms_from_json(field(arr[i], "terms", pp), F, k, pp + ".terms"));
    }
    return out;
}

Json to_json(const DecodeResult& r, const CodeParams& params, std::size_t required_count) {
    Json list = Json::array();
    for (std::size_t i = 0; i < r.list.size(); ++i) {
        list.push_back(Json{{"terms", terms_json(r.list[i])}, {"agreement", r.agreements[i]}});
    }
    Json stats{{"m", r.dp.m},
               {"D", r.dp.D},
               {"grid_size", params.grid().size()},
               {"threshold_count", r.threshold_count},
               {"required_count", required_count},
               {"subspace_dimension", r.subspace_dimension},
               {"subspace_dimension_bound", binomial_count(r.dp.m + params.k(), params.k())},
               {"interpolant_x_degrees", r.interpolant_x_degrees},
               {"interpolant_z_degree", r.interpolant_z_degree},
               {"top_index", r.diag.j},
               {"translation", r.diag.translation},
               {"division_fallback", r.diag.division_fallback},
               {"pruned", r.pruned}};
    return Json{{"format", kFormat}, {"p", params.field().p()}, {"k", params.k()}, {"list", list}, {"stats", stats}};
}

Json certificate_to_json(const std::optional<WronskianWitness>& w, const PrimeField& field, std::size_t k) {
    Json out{{"format", kFormat}, {"p", field.p()}, {"k", k}, {"independent", w.has_value()}};
    if (w) {
        Json mons = Json::array();
        for (const auto& e : w->monomials) mons.push_back(e.entries());
        out["witness"] = mons;
        out["determinant"] = terms_json(w->determinant);
        out["iterations"] = w->iterations;
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError(path + ": cannot open for writing");
    out << text;
    if (!out) throw ValidationError(path + ": write failed");
}

Rational parse_rational(const std::string& s) {
    const auto bad = [&]() -> Rational { throw ValidationError("not a rational number: \"" + s + "\""); };
    if (s.empty()) return bad();
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t used_n = 0, used_d = 0;
            const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
            const long long n = std::stoll(ns, &used_n);
            const long long d = std::stoll(ds, &used_d);
            if (used_n != ns.size() || used_d != ds.size() || d <= 0) return bad();
            return Rational(n, d);
        }
        const auto dot = s.find('.');
        const std::string whole = s.substr(0, dot);
        const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
        if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) return bad();
        if (whole.empty() && frac.empty()) return bad();
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::size_t used = 0;
        const long long w = whole.empty() ? 0 : std::stoll(whole, &used);
        if (!whole.empty() && used != whole.size()) return bad();
        const long long f = frac.empty() ? 0 : std::stoll(frac);
        const bool negative = !whole.empty() && whole[0] == '-';
        return Rational(w) + Rational(negative ? -f : f, den);
    } catch (const std::logic_error&) {
        return bad();
    }
}

std::string format_rational(Rational r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace multdec::io
