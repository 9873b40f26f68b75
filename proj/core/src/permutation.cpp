#include "permpoly/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace permpoly {

namespace {

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_index(std::string_view token, std::uint32_t size, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(token) +
                                "' is not a nonnegative integer");
  }
  if (value >= size) {
    throw std::invalid_argument("index " + std::to_string(value) + " is out of range for q = " +
                                std::to_string(size));
  }
  return static_cast<std::uint32_t>(value);
}

Permutation parse_cycles(std::string_view text, std::uint32_t size) {
  std::vector<std::uint32_t> images(size);
  for (std::uint32_t i = 0; i < size; ++i) images[i] = i;
  std::vector<bool> seen(size, false);

  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') {
      throw std::invalid_argument("malformed cycle notation: unexpected '" + std::string(1, c) + "'");
    }
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("malformed cycle notation: unbalanced '('");
    }
    const auto body = text.substr(pos + 1, close - pos - 1);
    if (body.find('(') != std::string_view::npos) {
      throw std::invalid_argument("malformed cycle notation: nested '('");
    }

    std::vector<std::uint32_t> cycle;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) && body[j] != ',') ++j;
      const auto idx = parse_index(body.substr(i, j - i), size, "cycle notation");
      if (std::find(cycle.begin(), cycle.end(), idx) != cycle.end()) {
        throw std::invalid_argument("index " + std::to_string(idx) + " repeats within a cycle");
      }
      cycle.push_back(idx);
      i = j;
    }
    for (auto idx : cycle) {
      if (seen[idx]) {
        throw std::invalid_argument("index " + std::to_string(idx) + " appears in more than one cycle");
      }
      seen[idx] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

Permutation parse_image_list(std::string_view text, std::uint32_t size) {
  std::vector<std::uint32_t> images;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = strip(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                               : comma - start));
    images.push_back(parse_index(item, size, "image list"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (images.size() != size) {
    throw std::invalid_argument("image list has length " + std::to_string(images.size()) + ", expected " +
                                std::to_string(size));
  }
  std::vector<bool> hit(size, false);
  for (auto v : images) {
    if (hit[v]) {
      throw std::invalid_argument("image list is not a bijection: " + std::to_string(v) +
                                  " appears more than once");
    }
    hit[v] = true;
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw std::invalid_argument("image table is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t size) {
  std::vector<std::uint32_t> images(size);
  for (std::uint32_t i = 0; i < size; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::uint32_t size, std::uint32_t a, std::uint32_t b) {
  if (a >= size || b >= size) throw std::out_of_range("transposition index out of range");
  auto images = identity(size).images_;
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(size());
  for (std::uint32_t i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> visited(size(), false);
  for (std::uint32_t start = 0; start < size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cycle;
    for (auto i = start; !visited[i]; i = images_[i]) {
      visited[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("cannot compose permutations of different size");
  std::vector<std::uint32_t> images(inner.size());
  for (std::uint32_t i = 0; i < inner.size(); ++i) images[i] = outer(inner(i));
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text, std::uint32_t size) {
  if (is_blank(text)) return Permutation::identity(size);
  const auto body = strip(text);
  if (body.front() == '(') return parse_cycles(body, size);
  return parse_image_list(body, size);
}

}  // namespace permpoly
