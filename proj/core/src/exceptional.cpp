#include "permpoly/exceptional.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permpoly {

namespace {

// Moduli stay below 2^32 so products fit in 64 bits.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

void require_valid(std::uint64_t q, std::uint64_t k) {
  if (q <= 2) {
    throw std::invalid_argument("q must exceed 2: x^(q-2) is constant on F_2");
  }
  if (q >= kMaxModulus) throw std::invalid_argument("q must be below 2^32");
  if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (k == 0) throw std::invalid_argument("extension degree k must be at least 1");
}

std::vector<std::uint64_t> forbidden_orders(std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (auto l : prime_factors(q - 2)) {
    if (l == 2) continue;
    out.push_back(multiplicative_order(2, l));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t extension_order(std::uint64_t q, std::uint64_t k) {
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    order *= q;
    if (order > kMaxBruteOrder) {
      throw std::invalid_argument("q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                                  " exceeds the brute-force limit of 2^16");
    }
  }
  return order;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("prime_factors needs m >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      out.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (m >= kMaxModulus) throw std::invalid_argument("modulus must be below 2^32");
  if (std::gcd(base, m) != 1) {
    throw std::invalid_argument(std::to_string(base) + " is not a unit modulo " + std::to_string(m));
  }
  const std::uint64_t b = base % m;
  std::uint64_t acc = b;
  for (std::uint64_t e = 1;; ++e) {
    if (acc == 1) return e;
    acc = acc * b % m;
  }
}

bool permits_degree(std::uint64_t q, std::uint64_t k) {
  require_valid(q, k);
  const auto orders = forbidden_orders(q);
  return std::none_of(orders.begin(), orders.end(), [k](std::uint64_t r) { return k % r == 0; });
}

bool permits_degree_by_gcd(std::uint64_t q, std::uint64_t k) {
  require_valid(q, k);
  const std::uint64_t m = q - 2;
  if (m == 1) return true;
  const std::uint64_t residue = (mod_pow(2, k, m) + m - 1) % m;
  return std::gcd(m, residue) == 1;
}

ExceptionalReport report(std::uint64_t q, std::uint64_t max_k) {
  require_valid(q, 1);
  if (max_k == 0) throw std::invalid_argument("max k must be at least 1");
  ExceptionalReport r;
  r.q = q;
  for (auto l : prime_factors(q - 2)) {
    if (l == 2) {
      r.excluded_even_prime = true;
      continue;
    }
    r.odd_prime_factors.push_back(l);
    r.orders[l] = multiplicative_order(2, l);
  }
  r.forbidden_divisors = forbidden_orders(q);
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    const bool ok = std::none_of(r.forbidden_divisors.begin(), r.forbidden_divisors.end(),
                                 [k](std::uint64_t d) { return k % d == 0; });
    if (ok) r.permitted.push_back(k);
  }
  return r;
}

bool brute_check(std::uint64_t q, std::uint64_t k) {
  require_valid(q, k);
  extension_order(q, k);
  const auto [p, n] = *prime_power(q);
  const Field large = Field::make(p, n * static_cast<std::uint32_t>(k));
  std::vector<bool> hit(large.order(), false);
  for (ElementIndex c = 0; c < large.order(); ++c) {
    const ElementIndex image = large.pow(c, q - 2);
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

FieldEmbedding::FieldEmbedding(Field small, Field large) : small_(std::move(small)), large_(std::move(large)) {
  if (small_.characteristic() != large_.characteristic() || large_.degree() % small_.degree() != 0) {
    throw std::invalid_argument(small_.name() + " is not a subfield of " + large_.name());
  }
  const std::uint32_t n = small_.degree();

  // Image of the generator: a root of the small modulus in the large field.
  ElementIndex generator = 0;
  if (n > 1) {
    const auto& modulus = small_.modulus();
    bool found = false;
    for (ElementIndex r = 0; r < large_.order() && !found; ++r) {
      ElementIndex acc = 0;
      for (std::size_t i = modulus.size(); i-- > 0;) acc = large_.add(large_.mul(acc, r), modulus[i]);
      if (acc == 0) {
        generator = r;
        found = true;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in the extension");
  }

  table_.resize(small_.order());
  for (ElementIndex x = 0; x < small_.order(); ++x) {
    // A prime-field constant c has canonical index c in every field of characteristic p.
    const auto coeffs = small_.coefficients(x);
    ElementIndex acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = large_.add(large_.mul(acc, generator), coeffs[i]);
    table_[x] = acc;
  }
}

std::optional<Permutation> lift_word(const GenWord& w, std::uint64_t k) {
  const Field& small = w.field();
  const std::uint64_t q = small.order();
  if (k == 0) throw std::invalid_argument("extension degree k must be at least 1");
  extension_order(q, k);
  const Field large = Field::make(small.characteristic(), small.degree() * static_cast<std::uint32_t>(k));
  const FieldEmbedding embed(small, large);

  std::vector<ElementIndex> images(large.order());
  for (ElementIndex x = 0; x < large.order(); ++x) images[x] = x;
  for (const auto& t : w.tokens()) {
    if (t.is_inv()) {
      for (auto& y : images) y = large.pow(y, q - 2);
    } else {
      const ElementIndex a = embed(t.a());
      const ElementIndex b = embed(t.b());
      for (auto& y : images) y = large.add(large.mul(a, y), b);
    }
  }
  std::vector<bool> hit(images.size(), false);
  for (auto v : images) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return Permutation(std::move(images));
}

}  // namespace permpoly
