#include "permpoly/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permpoly {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  ElementIndex primitive = 1;
  // exp_table has 2(q-1) entries so log sums never need a reduction.
  std::vector<ElementIndex> exp_table;
  std::vector<std::uint32_t> log_table;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor over F_p.
Coeffs remainder_monic(Coeffs a, const Coeffs& divisor, std::uint32_t p) {
  const std::size_t d = divisor.size() - 1;
  trim(a);
  while (a.size() > d) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = std::uint64_t{lead} * divisor[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs digits(std::uint64_t value, std::uint32_t p, std::uint32_t count) {
  Coeffs out(count);
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m) {
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

std::uint64_t checked_power(std::uint32_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(n) +
                                  " exceeds the limit of 2^20");
    }
  }
  return q;
}

class TableBuilder {
 public:
  TableBuilder(const detail::FieldData& data) : d_(data) {}

  ElementIndex mul(ElementIndex x, ElementIndex y) const {
    if (d_.n == 1) {
      return static_cast<ElementIndex>(std::uint64_t{x} * y % d_.p);
    }
    const Coeffs a = digits(x, d_.p, d_.n);
    const Coeffs b = digits(y, d_.p, d_.n);
    Coeffs prod(2 * d_.n - 1, 0);
    for (std::uint32_t i = 0; i < d_.n; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < d_.n; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % d_.p);
      }
    }
    const Coeffs r = remainder_monic(std::move(prod), d_.modulus, d_.p);
    ElementIndex idx = 0;
    for (std::size_t i = r.size(); i-- > 0;) idx = idx * d_.p + r[i];
    return idx;
  }

  ElementIndex pow(ElementIndex x, std::uint64_t e) const {
    ElementIndex result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  ElementIndex find_primitive() const {
    const std::uint64_t group = d_.q - 1;
    const auto factors = distinct_prime_factors(group);
    for (ElementIndex g = 1; g < d_.q; ++g) {
      const bool generates = std::all_of(factors.begin(), factors.end(),
                                         [&](std::uint64_t r) { return pow(g, group / r) != 1; });
      if (generates) return g;
    }
    throw std::logic_error("no primitive element; modulus is not irreducible");
  }

 private:
  const detail::FieldData& d_;
};

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), n};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Coeffs f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Make f monic so trial division only needs monic divisors.
  const std::uint32_t lead = f.back();
  if (lead != 1) {
    std::uint32_t lead_inv = 1;
    while (std::uint64_t{lead_inv} * lead % p != 1) ++lead_inv;
    for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
  }
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Coeffs divisor = digits(v, p, static_cast<std::uint32_t>(k));
      divisor.push_back(1);
      if (remainder_monic(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  const std::uint64_t count = checked_power(p, n);
  for (std::uint64_t v = 0; v < count; ++v) {
    Coeffs candidate = digits(v, p, n);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  checked_power(p, n);
  return make(p, n, find_irreducible(p, n));
}

Field Field::make(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  const auto q = checked_power(p, n);

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->n = n;
  data->q = static_cast<std::uint32_t>(q);
  if (n == 1) {
    data->modulus = {0, 1};
  } else {
    if (modulus.size() != n + 1) {
      throw std::invalid_argument("modulus must have " + std::to_string(n + 1) + " coefficients");
    }
    if (std::any_of(modulus.begin(), modulus.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is not irreducible over F_p");
    data->modulus = std::move(modulus);
  }

  const TableBuilder builder(*data);
  data->primitive = builder.find_primitive();
  const std::uint32_t group = data->q - 1;
  data->exp_table.resize(2 * std::size_t{group});
  data->log_table.assign(data->q, 0);
  ElementIndex acc = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    data->exp_table[i] = acc;
    data->exp_table[i + group] = acc;
    data->log_table[acc] = i;
    acc = builder.mul(acc, data->primitive);
  }
  return Field(std::move(data));
}

Field Field::of_order(std::uint64_t q) {
  const auto pn = prime_power(q);
  if (!pn) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(pn->first, pn->second);
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->n; }
std::uint32_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }
ElementIndex Field::primitive_element() const { return data_->primitive; }

ElementIndex Field::add(ElementIndex x, ElementIndex y) const {
  const std::uint32_t p = data_->p;
  if (p == 2) return x ^ y;
  if (data_->n == 1) {
    const std::uint32_t s = x + y;
    return s >= p ? s - p : s;
  }
  ElementIndex result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    std::uint32_t s = x % p + y % p;
    if (s >= p) s -= p;
    result += s * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return result;
}

ElementIndex Field::neg(ElementIndex x) const {
  const std::uint32_t p = data_->p;
  if (p == 2) return x;
  if (data_->n == 1) return x == 0 ? 0 : p - x;
  ElementIndex result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    const std::uint32_t d = x % p;
    if (d != 0) result += (p - d) * place;
    place *= p;
    x /= p;
  }
  return result;
}

ElementIndex Field::sub(ElementIndex x, ElementIndex y) const { return add(x, neg(y)); }

ElementIndex Field::mul(ElementIndex x, ElementIndex y) const {
  if (x == 0 || y == 0) return 0;
  return data_->exp_table[data_->log_table[x] + data_->log_table[y]];
}

ElementIndex Field::pow(ElementIndex x, std::uint64_t e) const {
  ElementIndex result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

ElementIndex Field::inv(ElementIndex x) const {
  if (x == 0) throw std::domain_error("zero has no multiplicative inverse");
  return pow(x, data_->q - 2);
}

ElementIndex Field::mul_schoolbook(ElementIndex x, ElementIndex y) const {
  return TableBuilder(*data_).mul(checked(x), checked(y));
}

std::vector<std::uint32_t> Field::coefficients(ElementIndex x) const {
  return digits(checked(x), data_->p, data_->n);
}

ElementIndex Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->n) {
    throw std::invalid_argument("expected " + std::to_string(data_->n) + " coefficients");
  }
  ElementIndex idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= data_->p) throw std::invalid_argument("coefficient out of range [0, p)");
    idx = idx * data_->p + coeffs[i];
  }
  return idx;
}

ElementIndex Field::checked(ElementIndex x) const {
  if (x >= data_->q) {
    throw std::out_of_range("element index " + std::to_string(x) + " is outside [0, " +
                            std::to_string(data_->q) + ")");
  }
  return x;
}

FieldElement Field::element(ElementIndex x) const { return FieldElement(*this, x); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (ElementIndex i = 0; i < order(); ++i) out.emplace_back(*this, i);
  return out;
}

std::string Field::name() const {
  if (data_->n == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->n) + ")";
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->n == b.data_->n && a.data_->modulus == b.data_->modulus;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
  }
}

FieldElement::FieldElement(Field field, ElementIndex index)
    : field_(std::move(field)), index_(field_.checked(index)) {}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return FieldElement(x.field_, x.field_.add(x.index_, y.index_));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return FieldElement(x.field_, x.field_.sub(x.index_, y.index_));
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return FieldElement(x.field_, x.field_.mul(x.index_, y.index_));
}

FieldElement operator-(const FieldElement& x) { return FieldElement(x.field_, x.field_.neg(x.index_)); }

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.index_ == y.index_ && x.field_ == y.field_;
}

FieldElement inverse(const FieldElement& x) { return x.field().element(x.field().inv(x.index())); }

FieldElement pow(const FieldElement& x, std::uint64_t e) { return x.field().element(x.field().pow(x.index(), e)); }

}  // namespace permpoly
