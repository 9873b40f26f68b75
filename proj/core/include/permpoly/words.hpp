#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

/// One generator: the affine map x -> a*x + b (a != 0), or the inversion
/// x -> x^(q-2), which fixes 0 and sends c to 1/c.
class GenToken {
 public:
  enum class Kind { kLinear, kInv };

  static GenToken linear(ElementIndex a, ElementIndex b) { return GenToken(Kind::kLinear, a, b); }
  static GenToken inv() { return GenToken(Kind::kInv, 0, 0); }

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::kLinear; }
  bool is_inv() const { return kind_ == Kind::kInv; }
  ElementIndex a() const { return a_; }
  ElementIndex b() const { return b_; }

  friend bool operator==(const GenToken&, const GenToken&) = default;

 private:
  GenToken(Kind kind, ElementIndex a, ElementIndex b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  ElementIndex a_;
  ElementIndex b_;
};

/// A composition of generators acting on a fixed field. tokens()[0] is
/// applied first, so the word denotes tokens[m-1] ∘ ... ∘ tokens[0].
///
/// Every token is validated on insertion: Linear needs a != 0 and indices
/// inside the field, and Inv is refused over F_2 where x^(q-2) = 1 is
/// constant.
class GenWord {
 public:
  explicit GenWord(Field field) : field_(std::move(field)) {}
  GenWord(Field field, const std::vector<GenToken>& tokens);

  const Field& field() const { return field_; }
  const std::vector<GenToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  GenWord& push(const GenToken& token);
  GenWord& linear(ElementIndex a, ElementIndex b) { return push(GenToken::linear(a, b)); }
  GenWord& inv() { return push(GenToken::inv()); }
  /// Appends `later`'s tokens, i.e. applies them after this word.
  GenWord& append(const GenWord& later);

  friend bool operator==(const GenWord& a, const GenWord& b);

 private:
  Field field_;
  std::vector<GenToken> tokens_;
};

/// Concatenation: `first` is applied before `second`.
GenWord then(const GenWord& first, const GenWord& second);

ElementIndex apply_token(const Field& field, const GenToken& token, ElementIndex x);
ElementIndex word_apply(const GenWord& w, ElementIndex x);
FieldElement word_apply(const GenWord& w, const FieldElement& x);
Permutation word_to_permutation(const GenWord& w);

/// h(x) = 1 - x^(q-2) as [Inv, Linear(-1, 1)]. It agrees with 1 - 1/x on
/// the nonzero elements and swaps 0 and 1.
GenWord word_h(const Field& field);

/// h∘h∘h, which induces exactly the transposition (0 1).
GenWord word_swap01(const Field& field);

/// a * g(x / a) with g = h∘h∘h: the transposition (0 a).
GenWord word_transposition_zieve(const Field& field, ElementIndex a);

/// -a^2 (((x - a)^(q-2) + 1/a)^(q-2) - a)^(q-2) as seven tokens: the
/// transposition (0 a).
GenWord word_transposition_carlitz(const Field& field, ElementIndex a);

enum class Gadget { kZieve, kCarlitz };

GenWord word_transposition(const Field& field, ElementIndex a, Gadget gadget);

/// A word inducing `perm` on F_q, built from (0 a) gadgets and simplified.
/// Over F_2 the result is a single translation (or empty).
GenWord decompose(const Field& field, const Permutation& perm, Gadget gadget);

/// Rewrites to the fixed point of: merge adjacent Linear tokens, cancel
/// adjacent Inv pairs, drop Linear(1, 0). The result alternates strictly
/// between Linear and Inv.
GenWord simplify(const GenWord& w);

/// The reduced polynomial (degree < q) inducing the same map as w, built
/// token by token from P = x.
Poly compile(const GenWord& w);

struct WordStats {
  std::size_t token_count = 0;
  std::size_t inv_count = 0;
  /// Degree of compile(simplify(w)); nullopt only for the zero polynomial.
  std::optional<std::size_t> compiled_degree;
};

WordStats word_stats(const GenWord& w);

}  // namespace permpoly
