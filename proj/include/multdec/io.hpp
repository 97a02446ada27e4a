#ifndef MULTDEC_IO_HPP
#define MULTDEC_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "multdec/code.hpp"
#include "multdec/decoder.hpp"
#include "multdec/polynomial.hpp"
#include "multdec/wronskian.hpp"

namespace multdec::io {

using Json = nlohmann::ordered_json;

/// Version tag written into and required from every document.
inline constexpr int kFormat = 1;

/// {"format", "p", "k", "terms": [{"exp": [...], "coeff": c}, ...]}
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

/// {"format", "p", "k", "s", "d", "S", "symbols": [{"point": [...], "values": [...]}, ...]}
Json to_json(const ReceivedWord& w);
ReceivedWord word_from_json(const Json& j);

/// {"format", "p", "k", "polys": [{"terms": [...]}, ...]}
Json family_to_json(const std::vector<Polynomial>& fs);
std::vector<Polynomial> family_from_json(const Json& j);

/// Candidate list and decoder statistics.
Json to_json(const DecodeResult& r, const CodeParams& params, std::size_t required_count);
/// Certificate: independent flag plus witness orders and determinant if any.
Json certificate_to_json(const std::optional<WronskianWitness>& w, const PrimeField& field, std::size_t k);

/// Parses and wraps syntax errors (which carry line and column) as
/// ValidationError prefixed with the file name.
Json read_json_file(const std::string& path);
/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

/// "3/5", "1", or a decimal such as "0.25", converted exactly.
Rational parse_rational(const std::string& s);
std::string format_rational(Rational r);

}  // namespace multdec::io

#endif  // MULTDEC_IO_HPP
