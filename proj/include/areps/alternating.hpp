#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "areps/permutation.hpp"
#include "areps/real_theory.hpp"

namespace areps {

/// Cycle lengths of a permutation of n points, fixed points included.
struct CycleType {
  std::size_t n = 0;
  std::vector<unsigned> parts;  ///< descending

  CycleType() = default;
  explicit CycleType(std::vector<unsigned> p) : parts(std::move(p)) {
    std::sort(parts.rbegin(), parts.rend());
    for (auto x : parts) {
      if (x == 0) throw Error(Errc::InvalidInput, "cycle type with a zero part");
      n += x;
    }
  }

  bool is_even() const {
    std::size_t s = 0;
    for (auto x : parts) s += x - 1;
    return s % 2 == 0;
  }

  /// Distinct odd parts: the S_n-class splits into two A_n-classes.
  bool splits_in_alternating() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] % 2 == 0) return false;
      if (i && parts[i] == parts[i - 1]) return false;
    }
    return true;
  }

  /// A permutation of this type: consecutive points in each cycle.
  Permutation representative() const {
    std::vector<std::uint32_t> img(n);
    std::uint32_t start = 0;
    for (auto len : parts) {
      for (std::uint32_t j = 0; j < len; ++j) img[start + j] = start + (j + 1) % len;
      start += len;
    }
    return Permutation(std::move(img));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
  }

  /// Parses "3,5" or "[3 5]"; pads with fixed points up to `n` when n > 0.
  static CycleType parse(std::string const &text, std::size_t n = 0) {
    std::vector<unsigned> p;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      p.push_back(static_cast<unsigned>(std::stoul(cur)));
      cur.clear();
    };
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch)))
        cur += ch;
      else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']')
        flush();
      else
        throw Error(Errc::ParseError, "bad character in cycle type: " + text);
    }
    flush();
    CycleType t(p);
    if (n) {
      if (t.n > n) throw Error(Errc::InvalidInput, "cycle type " + t.str() + " exceeds degree " + std::to_string(n));
      while (t.n < n) {
        t.parts.push_back(1);
        ++t.n;
      }
    }
    return t;
  }

  friend bool operator==(CycleType const &, CycleType const &) = default;
};

/// All partitions of n, largest part descending, then lexicographically descending.
inline std::vector<CycleType> partitions(std::size_t n) {
  std::vector<CycleType> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto &&self, std::size_t rest, unsigned maxp) -> void {
    if (rest == 0) {
      CycleType t;
      t.parts = cur;
      t.n = n;
      out.push_back(std::move(t));
      return;
    }
    for (unsigned p = static_cast<unsigned>(std::min<std::size_t>(rest, maxp)); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, static_cast<unsigned>(n));
  return out;
}

struct SelfInverseVerdict {
  bool self_inverse = true;
  bool by_half_sum = true;    ///< from the parity of sum (r-1)/2
  bool by_mod_four = true;    ///< from the count of parts = 3 mod 4
  std::string reason;
};

/// Whether the A_n-class of type t contains the inverses of its members.
inline SelfInverseVerdict class_self_inverse(CycleType const &t) {
  if (!t.is_even()) throw Error(Errc::OddPermutation, "cycle type " + t.str() + " is odd");
  SelfInverseVerdict v;
  if (!t.splits_in_alternating()) {
    v.reason = "parts not distinct and odd: the S_n-class does not split";
    return v;
  }
  unsigned half = 0, threes = 0;
  for (auto r : t.parts) {
    half += (r - 1) / 2;
    if (r % 4 == 3) ++threes;
  }
  v.by_half_sum = half % 2 == 0;
  v.by_mod_four = threes % 2 == 0;
  if (v.by_half_sum != v.by_mod_four)
    throw Error(Errc::CriteriaMismatch, "self-inverse criteria disagree on " + t.str());
  v.self_inverse = v.by_half_sum;
  v.reason = "distinct odd parts, sum (r-1)/2 = " + std::to_string(half) + (v.self_inverse ? " even" : " odd");
  return v;
}

/// Searches A_n for h with h g h^-1 = g^-1, g of type t.
inline bool brute_force_self_inverse(CycleType const &t) {
  if (!t.is_even()) throw Error(Errc::OddPermutation, "cycle type " + t.str() + " is odd");
  Permutation g = t.representative(), ginv = g.inverse();
  std::vector<std::uint32_t> img(t.n);
  std::iota(img.begin(), img.end(), 0u);
  do {
    Permutation h(img);
    if (h.sign() != 1) continue;
    // h g h^-1 = g^-1  <=>  h g = g^-1 h
    bool ok = true;
    for (std::uint32_t x = 0; x < t.n && ok; ++x)
      if (img[g(x)] != ginv(img[x])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

struct RealCycleClasses {
  CycleType type;
  bool splits = false;
  bool self_inverse = true;
  std::size_t alternating_classes = 1;
  std::size_t real_classes = 1;
};

/// Real classes of A_n <= S_n by even cycle type.
inline std::vector<RealCycleClasses> real_classes_by_cycle_type(std::size_t n) {
  std::vector<RealCycleClasses> out;
  for (auto const &t : partitions(n)) {
    if (!t.is_even()) continue;
    RealCycleClasses r;
    r.type = t;
    r.splits = t.splits_in_alternating();
    r.self_inverse = class_self_inverse(t).self_inverse;
    r.alternating_classes = r.splits ? 2 : 1;
    r.real_classes = r.splits && !r.self_inverse ? 2 : 1;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::size_t real_class_count_by_cycle_type(std::size_t n) {
  std::size_t s = 0;
  for (auto const &r : real_classes_by_cycle_type(n)) s += r.real_classes;
  return s;
}

inline std::size_t alternating_class_count(std::size_t n) {
  std::size_t s = 0;
  for (auto const &r : real_classes_by_cycle_type(n)) s += r.alternating_classes;
  return s;
}

/// A partition of n into distinct odd parts with an even number of parts = 3
/// mod 4, if one exists (first in enumeration order).
inline std::optional<CycleType> has_complex_type(std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidInput, "complex-type question needs n >= 2");
  std::vector<unsigned> cur;
  std::optional<CycleType> found;
  // largest admissible sum of distinct odd parts <= k is ((k+1)/2)^2
  auto rec = [&](auto &&self, std::size_t rest, std::size_t maxp, unsigned threes) -> bool {
    if (rest == 0) {
      if (threes % 2) return false;
      CycleType t;
      t.parts = cur;
      t.n = n;
      found = t;
      return true;
    }
    std::size_t top = std::min(rest, maxp);
    if (top % 2 == 0) --top;
    std::size_t h = (top + 1) / 2;
    if (h * h < rest) return false;
    for (std::size_t p = top; p >= 1; p -= 2) {
      cur.push_back(static_cast<unsigned>(p));
      bool ok = self(self, rest - p, p - 1, threes + (p % 4 == 3));
      cur.pop_back();
      if (ok) return true;
      if (p == 1) break;
    }
    return false;
  };
  rec(rec, n, n, 0);
  return found;
}

/// Every irreducible G-hat character has classical indicator 1.
inline bool totally_orthogonal_check(RealAnalysis const &a) { return totally_orthogonal(a); }

/// On a totally orthogonal structure: no A-row of type H and no G-irreducible
/// with complex indicator -1.
inline bool quaternionic_absence_check(RealAnalysis const &a, ACharacterTable const &t) {
  if (!totally_orthogonal(a)) throw Error(Errc::NotApplicable, "Real structure is not totally orthogonal");
  for (auto const &row : t.rows)
    if (row.type == Field::H) return false;
  for (auto const &chi : a.gtab.rows)
    if (fs_complex(a, chi) == -1) return false;
  return true;
}

/// The two self-inverse criteria agree on every even partition of n.
inline bool self_inverse_criteria_agree(std::size_t n) {
  for (auto const &t : partitions(n)) {
    if (!t.is_even()) continue;
    try {
      class_self_inverse(t);
    } catch (Error const &e) {
      if (e.code() == Errc::CriteriaMismatch) return false;
      throw;
    }
  }
  return true;
}

}  // namespace areps
