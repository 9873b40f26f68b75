#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "permpoly/exceptional.hpp"
#include "permpoly/field.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/words.hpp"

namespace permpoly {

/// Key order is part of the wire format: outputs are byte-stable.
using Json = nlohmann::ordered_json;

// {"p": int, "n": int, "modulus": [int, ...]}, constant term first.
Json to_json(const Field& field);
Field field_from_json(const Json& j);

// {"coeffs": [idx, ...]}
Json to_json(const Poly& f);
Poly poly_from_json(const Field& field, const Json& j);

// {"images": [idx, ...]}
Json to_json(const Permutation& perm);
Permutation permutation_from_json(const Json& j);

// {"field": {...}, "tokens": [{"linear": {"a": idx, "b": idx}} | "inv", ...]}
Json to_json(const GenWord& w);
/// Accepts a bare word object or any object carrying one under "word"
/// (the decompose output).
GenWord word_from_json(const Json& j);

// {"token_count": int, "inv_count": int, "compiled_degree": int | null}
Json to_json(const WordStats& stats);

// {"q", "factors", "orders": {"l": r}, "forbidden", "permitted", "excluded_even_prime"}
Json to_json(const ExceptionalReport& r);

/// Parses JSON text, turning syntax and schema errors into
/// std::invalid_argument.
Json parse_json(const std::string& text);

}  // namespace permpoly
