#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

/// A bijection of {0, ..., q-1}, stored as its image table.
class Permutation {
 public:
  /// Throws std::invalid_argument unless images is a bijection of [0, size).
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t size);
  static Permutation transposition(std::uint32_t size, std::uint32_t a, std::uint32_t b);

  std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_.at(i); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its smallest element, ordered by
  /// that element.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  /// "(0 3)(1 2 4)"; the identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// outer ∘ inner: inner is applied first.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Parses either cycle notation over indices, e.g. "(0 3)(1 2 4)", or a
/// comma-separated image list of length `size`. Blank text is the
/// identity. Throws std::invalid_argument with a message naming the
/// specific defect.
Permutation parse_permutation(std::string_view text, std::uint32_t size);

}  // namespace permpoly
