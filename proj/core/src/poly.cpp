#include "permpoly/poly.hpp"

#include <stdexcept>
#include <string>

namespace permpoly {

namespace {

void strip_trailing_zeros(std::vector<ElementIndex>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Folds the raw coefficient vector of a function-ring element into degree < q.
std::vector<ElementIndex> fold(const Field& field, const std::vector<ElementIndex>& raw) {
  const std::size_t q = field.order();
  if (raw.size() <= q) return raw;
  std::vector<ElementIndex> out(q, 0);
  out[0] = raw[0];
  for (std::size_t e = 1; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const std::size_t target = e < q ? e : ((e - 1) % (q - 1)) + 1;
    out[target] = field.add(out[target], raw[e]);
  }
  return out;
}

}  // namespace

Poly::Poly(Field field, std::vector<ElementIndex> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) field_.checked(c);
  strip_trailing_zeros(coeffs_);
}

Poly Poly::constant(const Field& field, ElementIndex c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, ElementIndex c, std::size_t e) {
  std::vector<ElementIndex> coeffs(e + 1, 0);
  coeffs[e] = c;
  return Poly(field, std::move(coeffs));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

ElementIndex poly_eval(const Poly& f, ElementIndex x) {
  const Field& field = f.field();
  field.checked(x);
  ElementIndex acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), c[i]);
  return acc;
}

FieldElement poly_eval(const Poly& f, const FieldElement& x) {
  require_same_field(f.field(), x.field());
  return f.field().element(poly_eval(f, x.index()));
}

Poly reduce(const Poly& f) { return Poly(f.field(), fold(f.field(), f.coeffs())); }

Poly poly_add(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const Field& field = f.field();
  std::vector<ElementIndex> sum(std::max(f.coeffs().size(), g.coeffs().size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = field.add(f.coeff(i), g.coeff(i));
  return Poly(field, fold(field, sum));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const Field& field = f.field();
  if (f.is_zero() || g.is_zero()) return Poly::zero(field);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<ElementIndex> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = field.add(prod[i + j], field.mul(a[i], b[j]));
    }
  }
  return Poly(field, fold(field, prod));
}

Poly poly_scale(const Poly& f, ElementIndex c) {
  const Field& field = f.field();
  field.checked(c);
  std::vector<ElementIndex> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(f.coeffs()[i], c);
  return Poly(field, fold(field, out));
}

Poly poly_pow(const Poly& f, std::uint64_t e) {
  Poly result = Poly::constant(f.field(), 1);
  Poly base = reduce(f);
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

Poly interpolate(const Field& field, const std::vector<std::pair<ElementIndex, ElementIndex>>& points) {
  const std::uint32_t q = field.order();
  if (points.size() != q) {
    throw std::invalid_argument("interpolation needs exactly " + std::to_string(q) + " points, got " +
                                std::to_string(points.size()));
  }
  std::vector<bool> seen(q, false);
  for (const auto& [x, y] : points) {
    field.checked(x);
    field.checked(y);
    if (seen[x]) throw std::invalid_argument("duplicate x-coordinate " + std::to_string(x));
    seen[x] = true;
  }

  // node = prod over all d of (x - d), degree q.
  std::vector<ElementIndex> node{1};
  for (ElementIndex d = 0; d < q; ++d) {
    std::vector<ElementIndex> next(node.size() + 1, 0);
    const ElementIndex minus_d = field.neg(d);
    for (std::size_t i = 0; i < node.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], node[i]);
      next[i] = field.add(next[i], field.mul(node[i], minus_d));
    }
    node = std::move(next);
  }

  std::vector<ElementIndex> result(q, 0);
  std::vector<ElementIndex> quotient(q);
  for (const auto& [c, y] : points) {
    if (y == 0) continue;
    // quotient = node / (x - c) by synthetic division.
    quotient[q - 1] = node[q];
    for (std::size_t i = q - 1; i >= 1; --i) quotient[i - 1] = field.add(node[i], field.mul(c, quotient[i]));
    // Denominator prod_{d != c} (c - d) is quotient(c).
    ElementIndex denom = 0;
    for (std::size_t i = q; i-- > 0;) denom = field.add(field.mul(denom, c), quotient[i]);
    const ElementIndex scale = field.mul(y, field.inv(denom));
    for (std::size_t i = 0; i < q; ++i) result[i] = field.add(result[i], field.mul(scale, quotient[i]));
  }
  return Poly(field, std::move(result));
}

Poly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const Field field = points.front().first.field();
  std::vector<std::pair<ElementIndex, ElementIndex>> raw;
  raw.reserve(points.size());
  for (const auto& [x, y] : points) {
    require_same_field(field, x.field());
    require_same_field(field, y.field());
    raw.emplace_back(x.index(), y.index());
  }
  return interpolate(field, raw);
}

std::vector<ElementIndex> value_table(const Poly& f) {
  std::vector<ElementIndex> out(f.field().order());
  for (ElementIndex x = 0; x < out.size(); ++x) out[x] = poly_eval(f, x);
  return out;
}

std::optional<Permutation> is_permutation_poly(const Poly& f) {
  auto images = value_table(f);
  std::vector<bool> hit(images.size(), false);
  for (auto v : images) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return Permutation(std::move(images));
}

}  // namespace permpoly
