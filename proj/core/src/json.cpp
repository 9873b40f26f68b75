#include "permpoly/json.hpp"

#include <stdexcept>

namespace permpoly {

namespace {

template <typename F>
auto schema_guard(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("invalid ") + what + " JSON: missing \"" + key + "\"");
  }
  return j.at(key);
}

std::uint32_t as_index(const Json& v) {
  if (!v.is_number_unsigned()) throw std::invalid_argument("element indices must be nonnegative integers");
  return v.get<std::uint32_t>();
}

}  // namespace

Json to_json(const Field& field) {
  Json j;
  j["p"] = field.characteristic();
  j["n"] = field.degree();
  j["modulus"] = field.modulus();
  return j;
}

Field field_from_json(const Json& j) {
  return schema_guard("field", [&] {
    const auto p = require_key(j, "p", "field").get<std::uint32_t>();
    const auto n = require_key(j, "n", "field").get<std::uint32_t>();
    if (j.contains("modulus")) return Field::make(p, n, j.at("modulus").get<std::vector<std::uint32_t>>());
    return Field::make(p, n);
  });
}

Json to_json(const Poly& f) {
  Json j;
  j["coeffs"] = f.coeffs();
  return j;
}

Poly poly_from_json(const Field& field, const Json& j) {
  return schema_guard("polynomial", [&] {
    std::vector<ElementIndex> coeffs;
    for (const auto& c : require_key(j, "coeffs", "polynomial")) coeffs.push_back(as_index(c));
    return Poly(field, std::move(coeffs));
  });
}

Json to_json(const Permutation& perm) {
  Json j;
  j["images"] = perm.images();
  return j;
}

Permutation permutation_from_json(const Json& j) {
  return schema_guard("permutation", [&] {
    std::vector<std::uint32_t> images;
    for (const auto& v : require_key(j, "images", "permutation")) images.push_back(as_index(v));
    return Permutation(std::move(images));
  });
}

Json to_json(const GenWord& w) {
  Json tokens = Json::array();
  for (const auto& t : w.tokens()) {
    if (t.is_inv()) {
      tokens.push_back("inv");
    } else {
      Json lin;
      lin["a"] = t.a();
      lin["b"] = t.b();
      Json tok;
      tok["linear"] = std::move(lin);
      tokens.push_back(std::move(tok));
    }
  }
  Json j;
  j["field"] = to_json(w.field());
  j["tokens"] = std::move(tokens);
  return j;
}

GenWord word_from_json(const Json& j) {
  if (j.is_object() && j.contains("word")) return word_from_json(j.at("word"));
  return schema_guard("word", [&] {
    GenWord w(field_from_json(require_key(j, "field", "word")));
    const auto& tokens = require_key(j, "tokens", "word");
    if (!tokens.is_array()) throw std::invalid_argument("invalid word JSON: \"tokens\" must be an array");
    for (const auto& t : tokens) {
      if (t.is_string() && t.get<std::string>() == "inv") {
        w.inv();
      } else if (t.is_object() && t.size() == 1 && t.contains("linear")) {
        const auto& lin = t.at("linear");
        w.linear(as_index(require_key(lin, "a", "linear token")), as_index(require_key(lin, "b", "linear token")));
      } else {
        throw std::invalid_argument("invalid word JSON: unrecognised token " + t.dump());
      }
    }
    return w;
  });
}

Json to_json(const WordStats& stats) {
  Json j;
  j["token_count"] = stats.token_count;
  j["inv_count"] = stats.inv_count;
  if (stats.compiled_degree) {
    j["compiled_degree"] = *stats.compiled_degree;
  } else {
    j["compiled_degree"] = nullptr;
  }
  return j;
}

Json to_json(const ExceptionalReport& r) {
  Json orders = Json::object();
  for (const auto& [l, order] : r.orders) orders[std::to_string(l)] = order;
  Json j;
  j["q"] = r.q;
  j["factors"] = r.odd_prime_factors;
  j["orders"] = std::move(orders);
  j["forbidden"] = r.forbidden_divisors;
  j["permitted"] = r.permitted;
  j["excluded_even_prime"] = r.excluded_even_prime;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace permpoly
