#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permpoly {

/// Largest field order accepted by Field::make. Every operation in the
/// library iterates over the whole field, so this is a hard ceiling.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Canonical index of a field element: sum of coeffs[i] * p^i.
using ElementIndex = std::uint32_t;

bool is_prime(std::uint64_t m);

/// If q = p^n for a prime p, returns {p, n}.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Monic irreducible polynomial of degree n over F_p whose non-leading
/// coefficients, read as a base-p integer (constant term least
/// significant), are smallest. Coefficients are constant-term first and
/// include the leading 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t n);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

class FieldElement;

namespace detail {
struct FieldData;
}

/// GF(p^n) built as F_p[x]/(modulus).
///
/// Field is a cheap, immutable handle; copies share the same tables.
/// Arithmetic is exposed both on raw canonical indices (for hot loops in
/// the polynomial and word code) and on FieldElement values, which carry
/// their field and reject mixing.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t n);
  /// Explicit modulus, constant term first, including the leading 1.
  /// Ignored when n == 1.
  static Field make(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);
  /// Shorthand for a prime power q with the default modulus.
  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  const std::vector<std::uint32_t>& modulus() const;

  ElementIndex add(ElementIndex x, ElementIndex y) const;
  ElementIndex sub(ElementIndex x, ElementIndex y) const;
  ElementIndex neg(ElementIndex x) const;
  ElementIndex mul(ElementIndex x, ElementIndex y) const;
  /// x^(q-2); throws std::domain_error for x == 0.
  ElementIndex inv(ElementIndex x) const;
  /// Square-and-multiply, 0^0 == 1.
  ElementIndex pow(ElementIndex x, std::uint64_t e) const;

  /// Schoolbook product in F_p[x] reduced by the modulus. Used to build the
  /// log tables and kept for cross-checking them.
  ElementIndex mul_schoolbook(ElementIndex x, ElementIndex y) const;

  /// Generator of the multiplicative group used for the log tables.
  ElementIndex primitive_element() const;

  std::vector<std::uint32_t> coefficients(ElementIndex x) const;
  ElementIndex from_coefficients(std::span<const std::uint32_t> coeffs) const;

  bool contains(ElementIndex x) const { return x < order(); }
  /// Throws std::out_of_range unless x < q.
  ElementIndex checked(ElementIndex x) const;

  FieldElement element(ElementIndex x) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// All q elements in canonical-index order.
  std::vector<FieldElement> enumerate() const;

  /// "GF(5)" or "GF(3^2)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// A value in a specific field. Binary operations between elements of
/// different fields throw std::invalid_argument.
class FieldElement {
 public:
  FieldElement(Field field, ElementIndex index);

  const Field& field() const { return field_; }
  ElementIndex index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(index_); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  Field field_;
  ElementIndex index_;
};

/// Multiplicative inverse; throws std::domain_error for zero.
FieldElement inverse(const FieldElement& x);
FieldElement pow(const FieldElement& x, std::uint64_t e);

/// Throws std::invalid_argument unless both fields are the same.
void require_same_field(const Field& a, const Field& b);

}  // namespace permpoly
