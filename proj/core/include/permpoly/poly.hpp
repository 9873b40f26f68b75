#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/permutation.hpp"

namespace permpoly {

/// Univariate polynomial over F_q, viewed as a function on F_q.
///
/// Coefficients are canonical element indices, constant term first, with
/// trailing zeros stripped; the zero polynomial has no coefficients.
/// Construction does not reduce: reduce() folds exponents into [0, q) and
/// yields the unique representative of the induced function, so two
/// reduced polynomials are equal exactly when they agree on every point.
class Poly {
 public:
  explicit Poly(Field field, std::vector<ElementIndex> coeffs = {});

  static Poly zero(const Field& field) { return Poly(field); }
  static Poly constant(const Field& field, ElementIndex c);
  /// c * x^e
  static Poly monomial(const Field& field, ElementIndex c, std::size_t e);
  static Poly x(const Field& field) { return monomial(field, 1, 1); }

  const Field& field() const { return field_; }
  const std::vector<ElementIndex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  ElementIndex coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Field field_;
  std::vector<ElementIndex> coeffs_;
};

/// Horner evaluation.
FieldElement poly_eval(const Poly& f, const FieldElement& x);
ElementIndex poly_eval(const Poly& f, ElementIndex x);

/// x^e with e >= q folds to x^(((e-1) mod (q-1)) + 1); the constant term is
/// never folded.
Poly reduce(const Poly& f);

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, ElementIndex c);
/// f^e in the function ring, reducing after every multiplication.
Poly poly_pow(const Poly& f, std::uint64_t e);

/// Lagrange interpolation through a full graph: the x-coordinates must be
/// exactly the q field elements, each once. Works from the node
/// polynomial prod (x - d) and never calls reduce().
Poly interpolate(const Field& field, const std::vector<std::pair<ElementIndex, ElementIndex>>& points);
Poly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// The induced map on F_q when f permutes it, nullopt otherwise.
std::optional<Permutation> is_permutation_poly(const Poly& f);

/// Graph of f as an image table (not necessarily bijective).
std::vector<ElementIndex> value_table(const Poly& f);

}  // namespace permpoly
