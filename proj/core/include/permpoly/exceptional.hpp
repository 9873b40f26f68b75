#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/words.hpp"

namespace permpoly {

/// Distinct prime divisors of m in increasing order; empty for m == 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Least e >= 1 with base^e == 1 (mod m). Throws std::invalid_argument
/// when gcd(base, m) != 1 or m < 2.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m);

/// Whether x^(q-2) permutes F_{q^k}: k must be divisible by no r_l, the
/// order of 2 modulo an odd prime l dividing q - 2. Throws for q <= 2 or
/// q not a prime power, and for k == 0.
bool permits_degree(std::uint64_t q, std::uint64_t k);

/// gcd(q - 2, q^k - 1) == 1, evaluated as gcd(q - 2, (2^k - 1) mod (q - 2))
/// using q == 2 (mod q - 2). Same preconditions as permits_degree.
bool permits_degree_by_gcd(std::uint64_t q, std::uint64_t k);

struct ExceptionalReport {
  std::uint64_t q = 0;
  /// Odd primes l dividing q - 2.
  std::vector<std::uint64_t> odd_prime_factors;
  /// l -> r_l
  std::map<std::uint64_t, std::uint64_t> orders;
  /// Distinct r_l, ascending.
  std::vector<std::uint64_t> forbidden_divisors;
  /// k in [1, K] divisible by no r_l.
  std::vector<std::uint64_t> permitted;
  /// True when q is even: 2 divides q - 2 but never q^k - 1, so it imposes
  /// no condition and has no order modulo itself.
  bool excluded_even_prime = false;
};

ExceptionalReport report(std::uint64_t q, std::uint64_t max_k);

/// Largest extension order brute_check will build.
inline constexpr std::uint64_t kMaxBruteOrder = std::uint64_t{1} << 16;

/// Builds F_{q^k} explicitly and tests whether c -> c^(q-2) is a bijection.
/// Throws std::invalid_argument when q^k exceeds 2^16.
bool brute_check(std::uint64_t q, std::uint64_t k);

/// Field embedding F_q -> F_{q^k}: sends the generator of the small field
/// (the class of x) to the smallest-index root of its modulus in the large
/// field. Both fields must share the characteristic and the degree of the
/// small field must divide that of the large one.
class FieldEmbedding {
 public:
  FieldEmbedding(Field small, Field large);

  const Field& small() const { return small_; }
  const Field& large() const { return large_; }
  ElementIndex operator()(ElementIndex x) const { return table_.at(x); }

 private:
  Field small_;
  Field large_;
  std::vector<ElementIndex> table_;
};

/// Reads w coefficient-wise over F_{q^k}: Linear(a, b) becomes
/// x -> e(a) x + e(b) and Inv stays x -> x^(q-2) for the base q. Returns
/// the induced map on F_{q^k} when it is a bijection. Throws when q^k
/// exceeds 2^16.
std::optional<Permutation> lift_word(const GenWord& w, std::uint64_t k);

}  // namespace permpoly
