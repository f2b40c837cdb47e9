#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "areps/error.hpp"

namespace areps {

/// A bijection on {0, ..., n-1}. Text forms are 1-based disjoint cycles.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<std::uint32_t>(i);
  }
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x])
        throw Error(Errc::InvalidInput, "permutation images are not a bijection");
      seen[x] = true;
    }
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::vector<std::uint32_t> const &images() const { return images_; }

  /// (a * b)(x) = a(b(x)): b acts first.
  friend Permutation operator*(Permutation const &a, Permutation const &b) {
    if (a.degree() != b.degree()) throw Error(Errc::InvalidInput, "permutation degree mismatch");
    Permutation r(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

  /// Cycle lengths (including fixed points), sorted descending.
  std::vector<unsigned> cycle_type() const {
    std::vector<unsigned> parts;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      unsigned len = 0;
      for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
  }

  int sign() const {
    int s = 1;
    for (auto len : cycle_type())
      if (len % 2 == 0) s = -s;
    return s;
  }

  /// Disjoint cycle notation, 1-based; the identity renders as "()".
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      bool first = true;
      for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  /// Parses "(1 2 3)(4 5)" (commas also accepted as separators) on `degree` points.
  static Permutation parse(std::string_view text, std::size_t degree) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') throw Error(Errc::ParseError, "expected '(' in cycle notation: " + std::string(text));
      ++pos;
      std::vector<std::uint32_t> cycle;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) throw Error(Errc::ParseError, "unterminated cycle: " + std::string(text));
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw Error(Errc::ParseError, "expected point number in: " + std::string(text));
        unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
        if (v < 1 || v > degree)
          throw Error(Errc::ParseError, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
        if (used[v - 1]) throw Error(Errc::ParseError, "point repeated in cycles: " + std::to_string(v));
        used[v - 1] = true;
        cycle.push_back(static_cast<std::uint32_t>(v - 1));
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return p;
  }

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace areps
