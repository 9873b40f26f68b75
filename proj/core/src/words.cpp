#include "permpoly/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permpoly {

namespace {

void require_inv_allowed(const Field& field) {
  if (field.order() == 2) {
    throw std::invalid_argument("x^(q-2) does not permute F_2: it is the constant 1 there");
  }
}

void require_nonzero(ElementIndex a) {
  if (a == 0) throw std::invalid_argument("transposition (0 a) needs a != 0");
}

}  // namespace

GenWord::GenWord(Field field, const std::vector<GenToken>& tokens) : field_(std::move(field)) {
  tokens_.reserve(tokens.size());
  for (const auto& t : tokens) push(t);
}

GenWord& GenWord::push(const GenToken& token) {
  if (token.is_inv()) {
    require_inv_allowed(field_);
  } else {
    field_.checked(token.a());
    field_.checked(token.b());
    if (token.a() == 0) throw std::invalid_argument("Linear token needs a != 0");
  }
  tokens_.push_back(token);
  return *this;
}

GenWord& GenWord::append(const GenWord& later) {
  require_same_field(field_, later.field_);
  tokens_.insert(tokens_.end(), later.tokens_.begin(), later.tokens_.end());
  return *this;
}

bool operator==(const GenWord& a, const GenWord& b) { return a.field_ == b.field_ && a.tokens_ == b.tokens_; }

GenWord then(const GenWord& first, const GenWord& second) {
  GenWord out = first;
  out.append(second);
  return out;
}

ElementIndex apply_token(const Field& field, const GenToken& token, ElementIndex x) {
  if (token.is_inv()) return field.pow(x, field.order() - 2);
  return field.add(field.mul(token.a(), x), token.b());
}

ElementIndex word_apply(const GenWord& w, ElementIndex x) {
  const Field& field = w.field();
  field.checked(x);
  for (const auto& t : w.tokens()) x = apply_token(field, t, x);
  return x;
}

FieldElement word_apply(const GenWord& w, const FieldElement& x) {
  require_same_field(w.field(), x.field());
  return w.field().element(word_apply(w, x.index()));
}

Permutation word_to_permutation(const GenWord& w) {
  const Field& field = w.field();
  std::vector<std::uint32_t> images(field.order());
  for (ElementIndex x = 0; x < field.order(); ++x) images[x] = x;
  // Token-major keeps the inner loop free of dispatch.
  for (const auto& t : w.tokens()) {
    for (auto& y : images) y = apply_token(field, t, y);
  }
  return Permutation(std::move(images));
}

GenWord word_h(const Field& field) {
  require_inv_allowed(field);
  GenWord w(field);
  w.inv().linear(field.neg(1), 1);
  return w;
}

GenWord word_swap01(const Field& field) {
  const GenWord h = word_h(field);
  GenWord w(field);
  w.append(h).append(h).append(h);
  return w;
}

GenWord word_transposition_zieve(const Field& field, ElementIndex a) {
  require_inv_allowed(field);
  field.checked(a);
  require_nonzero(a);
  GenWord w(field);
  w.linear(field.inv(a), 0).append(word_swap01(field)).linear(a, 0);
  return w;
}

GenWord word_transposition_carlitz(const Field& field, ElementIndex a) {
  require_inv_allowed(field);
  field.checked(a);
  require_nonzero(a);
  const ElementIndex minus_a = field.neg(a);
  GenWord w(field);
  w.linear(1, minus_a)
      .inv()
      .linear(1, field.inv(a))
      .inv()
      .linear(1, minus_a)
      .inv()
      .linear(field.neg(field.mul(a, a)), 0);
  return w;
}

GenWord word_transposition(const Field& field, ElementIndex a, Gadget gadget) {
  return gadget == Gadget::kZieve ? word_transposition_zieve(field, a) : word_transposition_carlitz(field, a);
}

GenWord decompose(const Field& field, const Permutation& perm, Gadget gadget) {
  const std::uint32_t q = field.order();
  if (perm.size() != q) {
    throw std::invalid_argument("permutation acts on " + std::to_string(perm.size()) + " points but the field has " +
                                std::to_string(q));
  }
  if (q == 2) {
    // Both permutations of F_2 are translations x -> x + perm(0).
    GenWord w(field);
    w.linear(1, perm(0));
    return simplify(w);
  }

  // Transpositions (0 a) in application order.
  std::vector<ElementIndex> swaps_with_zero;
  auto push_transposition = [&](std::uint32_t b, std::uint32_t c) {
    if (b == 0 || c == 0) {
      swaps_with_zero.push_back(b == 0 ? c : b);
      return;
    }
    // (b c) = (0 b)(0 c)(0 b)
    swaps_with_zero.push_back(b);
    swaps_with_zero.push_back(c);
    swaps_with_zero.push_back(b);
  };
  for (const auto& cycle : perm.cycles()) {
    // (c1 ... cm) = (c1 cm)(c1 c_{m-1})...(c1 c2); (c1 c2) acts first.
    for (std::size_t k = 1; k < cycle.size(); ++k) push_transposition(cycle[0], cycle[k]);
  }

  GenWord w(field);
  for (auto a : swaps_with_zero) w.append(word_transposition(field, a, gadget));
  return simplify(w);
}

GenWord simplify(const GenWord& w) {
  const Field& field = w.field();
  // The stack never holds two adjacent tokens of the same kind nor a
  // Linear(1, 0), so each incoming token needs at most one rewrite.
  std::vector<GenToken> stack;
  stack.reserve(w.size());
  for (const auto& t : w.tokens()) {
    if (t.is_inv()) {
      if (!stack.empty() && stack.back().is_inv()) {
        stack.pop_back();
      } else {
        stack.push_back(t);
      }
      continue;
    }
    GenToken merged = t;
    if (!stack.empty() && stack.back().is_linear()) {
      const GenToken first = stack.back();
      stack.pop_back();
      merged = GenToken::linear(field.mul(t.a(), first.a()), field.add(field.mul(t.a(), first.b()), t.b()));
    }
    if (!(merged.a() == 1 && merged.b() == 0)) stack.push_back(merged);
  }
  return GenWord(field, stack);
}

Poly compile(const GenWord& w) {
  const Field& field = w.field();
  const std::uint64_t inv_exponent = field.order() - 2;
  Poly p = Poly::x(field);
  for (const auto& t : w.tokens()) {
    if (t.is_inv()) {
      require_inv_allowed(field);
      p = poly_pow(p, inv_exponent);
    } else {
      p = poly_add(poly_scale(p, t.a()), Poly::constant(field, t.b()));
    }
  }
  return reduce(p);
}

WordStats word_stats(const GenWord& w) {
  WordStats stats;
  stats.token_count = w.size();
  stats.inv_count = static_cast<std::size_t>(
      std::count_if(w.tokens().begin(), w.tokens().end(), [](const GenToken& t) { return t.is_inv(); }));
  stats.compiled_degree = compile(simplify(w)).degree();
  return stats;
}

}  // namespace permpoly
