#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "areps/error.hpp"
#include "areps/permutation.hpp"

namespace areps {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 20000;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;
inline constexpr std::size_t kRandomAssociativityTriples = 10000;

struct GroupLimits {
  std::size_t max_order = kDefaultMaxOrder;
};

namespace detail {
inline std::uint64_t next_group_token() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

struct ImagesHash {
  std::size_t operator()(std::vector<std::uint32_t> const &v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

inline void check_order(std::size_t order, GroupLimits const &limits) {
  if (order > limits.max_order)
    throw Error(Errc::OrderLimitExceeded,
                "group order " + std::to_string(order) + " exceeds cap " + std::to_string(limits.max_order));
}
}  // namespace detail

/// A finite group given by its full multiplication table. Immutable once built;
/// every constructor goes through the same validation.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates `table` (square, in range, Latin square, unit, inverses,
  /// associativity) and locates the identity and inverses. Associativity is
  /// exhaustive up to order 512 and checked on 10^4 seeded random triples above.
  static FiniteGroup from_table(std::vector<std::vector<Element>> const &table,
                                std::vector<std::string> labels = {}, GroupLimits const &limits = {}) {
    std::size_t n = table.size();
    if (n == 0) throw Error(Errc::InvalidInput, "empty multiplication table");
    detail::check_order(n, limits);
    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n)
        throw Error(Errc::InvalidInput, "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                            " entries, expected " + std::to_string(n));
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n)
          throw Error(Errc::InvalidInput, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        flat[a * n + b] = table[a][b];
      }
    }
    return from_flat(n, std::move(flat), std::move(labels));
  }

  static FiniteGroup from_flat(std::size_t n, std::vector<Element> flat, std::vector<std::string> labels = {}) {
    FiniteGroup g;
    g.order_ = n;
    g.table_ = std::move(flat);
    g.validate();
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    } else if (labels.size() != n) {
      throw Error(Errc::InvalidInput, "label count does not match group order");
    }
    g.labels_ = std::move(labels);
    g.token_ = detail::next_group_token();
    return g;
  }

  /// Breadth-first closure of the generators acting on `degree` points.
  /// Elements are numbered in first-discovery order starting from the identity;
  /// each dequeued element x is multiplied on the right by the generators in order.
  static FiniteGroup from_permutation_generators(std::size_t degree, std::vector<Permutation> const &gens,
                                                 GroupLimits const &limits = {}) {
    for (auto const &p : gens)
      if (p.degree() != degree) throw Error(Errc::InvalidInput, "generator degree mismatch");
    std::vector<Permutation> elems{Permutation(degree)};
    std::unordered_map<std::vector<std::uint32_t>, Element, detail::ImagesHash> index{{elems[0].images(), 0}};
    std::size_t ng = gens.size();
    // right[x * ng + s] = index of elems[x] * gens[s]; parent/via record the BFS tree.
    std::vector<Element> right, parent{0}, via{0};
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (std::size_t s = 0; s < ng; ++s) {
        Permutation y = elems[head] * gens[s];
        auto [it, fresh] = index.emplace(y.images(), static_cast<Element>(elems.size()));
        if (fresh) {
          elems.push_back(std::move(y));
          parent.push_back(static_cast<Element>(head));
          via.push_back(static_cast<Element>(s));
          detail::check_order(elems.size(), limits);
        }
        right.push_back(it->second);
      }
    }
    std::size_t n = elems.size();
    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      flat[a * n] = static_cast<Element>(a);
      for (std::size_t b = 1; b < n; ++b) flat[a * n + b] = right[flat[a * n + parent[b]] * ng + via[b]];
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const &p : elems) labels.push_back(p.cycle_string());
    FiniteGroup g = from_flat(n, std::move(flat), std::move(labels));
    g.perms_ = std::move(elems);
    return g;
  }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element z, Element g) const { return mul(mul(z, g), inverse_[z]); }
  std::string const &label(Element a) const { return labels_[a]; }
  std::vector<std::string> const &labels() const { return labels_; }
  std::uint64_t token() const { return token_; }

  Element pow(Element a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Element r = identity_, base = a;
    while (k > 0) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  unsigned element_order(Element a) const {
    unsigned k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  /// Permutations backing each element, when built from generators.
  std::span<Permutation const> permutations() const { return perms_; }

  std::optional<Element> find_permutation(Permutation const &p) const {
    for (std::size_t i = 0; i < perms_.size(); ++i)
      if (perms_[i] == p) return static_cast<Element>(i);
    return std::nullopt;
  }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    return t;
  }

  /// Same multiplication table element-for-element (labels ignored).
  bool same_table(FiniteGroup const &o) const { return order_ == o.order_ && table_ == o.table_; }

  /// Elements of the subgroup generated by `gens`, sorted ascending.
  std::vector<Element> generated_subgroup(std::span<Element const> gens) const {
    std::vector<bool> in(order_, false);
    std::vector<Element> elems{identity_};
    in[identity_] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (Element s : gens) {
        Element y = mul(elems[head], s);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  /// The subgroup on the sorted element list `elems`, renumbered 0..k-1 in that order.
  FiniteGroup subgroup(std::vector<Element> const &elems) const {
    std::vector<Element> local(order_, static_cast<Element>(-1));
    for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
    std::size_t k = elems.size();
    std::vector<Element> flat(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Element p = mul(elems[a], elems[b]);
        if (local[p] == static_cast<Element>(-1))
          throw Error(Errc::NotASubgroup, "product of " + labels_[elems[a]] + " and " + labels_[elems[b]] +
                                               " leaves the subset");
        flat[a * k + b] = local[p];
      }
    std::vector<std::string> labels;
    for (Element e : elems) labels.push_back(labels_[e]);
    FiniteGroup s = from_flat(k, std::move(flat), std::move(labels));
    if (!perms_.empty())
      for (Element e : elems) s.perms_.push_back(perms_[e]);
    return s;
  }

 private:
  void validate() {
    std::size_t n = order_;
    // Latin square: every row and column a permutation.
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t tick = 0;
    for (std::size_t a = 0; a < n; ++a) {
      ++tick;
      for (std::size_t b = 0; b < n; ++b) {
        Element v = table_[a * n + b];
        if (stamp[v] == tick)
          throw Error(Errc::NotLatinSquare, "row " + std::to_string(a) + " repeats entry " + std::to_string(v));
        stamp[v] = tick;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      ++tick;
      for (std::size_t a = 0; a < n; ++a) {
        Element v = table_[a * n + b];
        if (stamp[v] == tick)
          throw Error(Errc::NotLatinSquare, "column " + std::to_string(b) + " repeats entry " + std::to_string(v));
        stamp[v] = tick;
      }
    }
    std::optional<Element> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        ok = table_[e * n + a] == a && table_[a * n + e] == a;
      if (ok) id = static_cast<Element>(e);
    }
    if (!id) throw Error(Errc::NoIdentity, "no two-sided identity in table");
    identity_ = *id;
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a * n + b] == identity_ && table_[b * n + a] == identity_) {
          inverse_[a] = static_cast<Element>(b);
          found = true;
          break;
        }
      if (!found) throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      Element l = table_[table_[a * n + b] * n + c];
      Element r = table_[a * n + table_[b * n + c]];
      if (l != r)
        throw Error(Errc::NotAssociative, "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
    };
    if (n <= kExhaustiveAssociativityLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    } else {
      // Residual risk: a non-associative table can pass a random sample.
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t t = 0; t < kRandomAssociativityTriples; ++t) check(pick(rng), pick(rng), pick(rng));
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
  std::uint64_t token_ = 0;
};

// ---------------------------------------------------------------------------
// Standard families and products

inline FiniteGroup cyclic_group(std::size_t n, GroupLimits const &limits = {}) {
  if (n == 0) throw Error(Errc::InvalidInput, "cyclic group of order 0");
  detail::check_order(n, limits);
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "x" : "x^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_flat(n, std::move(flat), std::move(labels));
}

/// Dihedral group of order `order` = 2n: r^k s^t indexed k + n*t.
inline FiniteGroup dihedral_group(std::size_t order, GroupLimits const &limits = {}) {
  if (order < 2 || order % 2) throw Error(Errc::InvalidInput, "dihedral order must be even and >= 2");
  detail::check_order(order, limits);
  std::size_t n = order / 2;
  std::vector<Element> flat(order * order);
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t k = 0; k < n; ++k) {
      std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      std::string l = r + (t ? "s" : "");
      labels.push_back(l.empty() ? "e" : l);
    }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t k = a % n, s = a / n, l = b % n, t = b / n;
      // r^k s^s r^l s^t = r^(k + (-1)^s l) s^(s+t)
      std::size_t kk = s ? (k + n - l) % n : (k + l) % n;
      flat[a * order + b] = static_cast<Element>(kk + n * ((s + t) % 2));
    }
  return FiniteGroup::from_flat(order, std::move(flat), std::move(labels));
}

/// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>,
/// a^k x^s indexed k + 2n*s.
inline FiniteGroup dicyclic_group(std::size_t order, GroupLimits const &limits = {}) {
  if (order < 4 || order % 4) throw Error(Errc::InvalidInput, "dicyclic order must be a multiple of 4");
  detail::check_order(order, limits);
  std::size_t m = order / 2;  // order of a
  std::size_t n = m / 2;
  std::vector<Element> flat(order * order);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t k = 0; k < m; ++k) {
      std::string a = k == 0 ? "" : k == 1 ? "a" : "a^" + std::to_string(k);
      std::string l = a + (s ? "x" : "");
      labels.push_back(l.empty() ? "e" : l);
    }
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q) {
      std::size_t k = p % m, s = p / m, l = q % m, t = q / m;
      std::size_t kk = s ? (k + m - l) % m : (k + l) % m;
      if (s && t) kk = (kk + n) % m;
      flat[p * order + q] = static_cast<Element>(kk + m * ((s + t) % 2));
    }
  return FiniteGroup::from_flat(order, std::move(flat), std::move(labels));
}

inline FiniteGroup symmetric_group(std::size_t n, GroupLimits const &limits = {}) {
  if (n == 0) throw Error(Errc::InvalidInput, "symmetric group on 0 points");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cyc(n), tr(n);
    for (std::size_t i = 0; i < n; ++i) {
      cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
      tr[i] = static_cast<std::uint32_t>(i);
    }
    std::swap(tr[0], tr[1]);
    gens.emplace_back(cyc);
    if (n > 2) gens.emplace_back(tr);
  }
  return FiniteGroup::from_permutation_generators(n, gens, limits);
}

/// Generators of A_n: (1 2 3) together with (1 2 ... n) for odd n or (2 3 ... n) for even n.
inline std::vector<Permutation> alternating_generators(std::size_t n) {
  std::vector<Permutation> gens;
  if (n < 3) return gens;
  std::vector<std::uint32_t> t(n);
  std::iota(t.begin(), t.end(), 0u);
  t[0] = 1;
  t[1] = 2;
  t[2] = 0;
  gens.emplace_back(t);
  if (n > 3) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    std::size_t start = n % 2 ? 0 : 1;
    for (std::size_t i = start; i < n; ++i) c[i] = static_cast<std::uint32_t>(i + 1 < n ? i + 1 : start);
    gens.emplace_back(c);
  }
  return gens;
}

inline FiniteGroup alternating_group(std::size_t n, GroupLimits const &limits = {}) {
  if (n == 0) throw Error(Errc::InvalidInput, "alternating group on 0 points");
  return FiniteGroup::from_permutation_generators(n, alternating_generators(n), limits);
}

inline FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b, GroupLimits const &limits = {}) {
  std::size_t n = a.order() * b.order();
  detail::check_order(n, limits);
  std::size_t nb = b.order();
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Element x = a.mul(static_cast<Element>(p / nb), static_cast<Element>(q / nb));
      Element y = b.mul(static_cast<Element>(p % nb), static_cast<Element>(q % nb));
      flat[p * n + q] = static_cast<Element>(x * nb + y);
    }
  return FiniteGroup::from_flat(n, std::move(flat), std::move(labels));
}

/// An automorphism of a group given by the image of every element.
using ElementMap = std::vector<Element>;

inline void require_automorphism(FiniteGroup const &n, ElementMap const &phi, std::string const &what) {
  if (phi.size() != n.order()) throw Error(Errc::NotAnAutomorphism, what + ": wrong length");
  std::vector<bool> hit(n.order(), false);
  for (Element x : phi) {
    if (x >= n.order() || hit[x]) throw Error(Errc::NotAnAutomorphism, what + ": not a bijection");
    hit[x] = true;
  }
  for (Element a = 0; a < n.order(); ++a)
    for (Element b = 0; b < n.order(); ++b)
      if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
        throw Error(Errc::NotAnAutomorphism,
                    what + ": fails on pair (" + n.label(a) + ", " + n.label(b) + ")");
}

/// Extends generator images to a map on all of `n` (checked to be a well-defined
/// bijective homomorphism, i.e. an automorphism).
inline ElementMap automorphism_from_generators(FiniteGroup const &n, std::vector<Element> const &gens,
                                               std::vector<Element> const &images) {
  if (gens.size() != images.size()) throw Error(Errc::InvalidInput, "generator/image count mismatch");
  constexpr Element kUnset = static_cast<Element>(-1);
  ElementMap phi(n.order(), kUnset);
  phi[n.identity()] = n.identity();
  std::vector<Element> queue{n.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = n.mul(x, gens[i]);
      Element img = n.mul(phi[x], images[i]);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        throw Error(Errc::NotAnAutomorphism, "generator images are inconsistent at " + n.label(y));
      }
    }
  }
  if (queue.size() != n.order()) throw Error(Errc::NotAnAutomorphism, "generators do not generate the group");
  require_automorphism(n, phi, "extended map");
  return phi;
}

/// n x| h with (a,x)(b,y) = (a * x(b), xy); element (a,x) indexed a*|h| + x.
/// `action[x]` is the automorphism of n attached to h-element x.
inline FiniteGroup semidirect_product(FiniteGroup const &n, FiniteGroup const &h,
                                      std::vector<ElementMap> const &action, GroupLimits const &limits = {}) {
  if (action.size() != h.order()) throw Error(Errc::NotAnAction, "action must list one map per element of h");
  for (Element x = 0; x < h.order(); ++x) require_automorphism(n, action[x], "action of " + h.label(x));
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = 0; y < h.order(); ++y) {
      auto const &xy = action[h.mul(x, y)];
      for (Element b = 0; b < n.order(); ++b)
        if (xy[b] != action[x][action[y][b]])
          throw Error(Errc::NotAnAction, "action is not a homomorphism at pair (" + h.label(x) + ", " +
                                             h.label(y) + ")");
    }
  std::size_t N = n.order() * h.order();
  detail::check_order(N, limits);
  std::size_t nh = h.order();
  std::vector<Element> flat(N * N);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n.order(); ++a)
    for (std::size_t x = 0; x < nh; ++x) labels.push_back("(" + n.label(a) + "," + h.label(x) + ")");
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      Element a = static_cast<Element>(p / nh), x = static_cast<Element>(p % nh);
      Element b = static_cast<Element>(q / nh), y = static_cast<Element>(q % nh);
      Element first = n.mul(a, action[x][b]);
      flat[p * N + q] = static_cast<Element>(first * nh + h.mul(x, y));
    }
  return FiniteGroup::from_flat(N, std::move(flat), std::move(labels));
}

/// The group N u N w with w b w^-1 = phi(b) and w^2 = w_square; element a w^s
/// indexed a + |N| s. Requires phi(w_square) = w_square and phi^2 = conjugation
/// by w_square. With w_square = e this is N x| C2.
inline FiniteGroup index_two_extension(FiniteGroup const &n, ElementMap const &phi, Element w_square,
                                       GroupLimits const &limits = {}) {
  require_automorphism(n, phi, "extension automorphism");
  if (w_square >= n.order()) throw Error(Errc::InvalidInput, "w^2 index " + std::to_string(w_square) + " out of range");
  if (phi[w_square] != w_square)
    throw Error(Errc::NotAnAction, "automorphism does not fix the square of the odd generator");
  for (Element b = 0; b < n.order(); ++b)
    if (phi[phi[b]] != n.conj(w_square, b))
      throw Error(Errc::NotAnAction, "automorphism squared is not conjugation by w^2 at " + n.label(b));
  std::size_t m = n.order(), N = 2 * m;
  detail::check_order(N, limits);
  std::vector<Element> flat(N * N);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < m; ++a) {
      std::string const &l = n.label(a);
      labels.push_back(s == 0 ? l : (a == n.identity() ? "w" : l + "w"));
    }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      Element a = static_cast<Element>(p % m), b = static_cast<Element>(q % m);
      std::size_t s = p / m, t = q / m;
      Element r = n.mul(a, s ? phi[b] : b);
      if (s && t) r = n.mul(r, w_square);
      flat[p * N + q] = static_cast<Element>(r + m * ((s + t) % 2));
    }
  return FiniteGroup::from_flat(N, std::move(flat), std::move(labels));
}

/// Closure of 2x2 matrices over the Gaussian integers; entries are (re, im) pairs.
/// Elements are numbered in breadth-first discovery order from the identity.
struct GaussianMatrix {
  std::array<std::pair<long, long>, 4> e;  // row-major
  friend bool operator<(GaussianMatrix const &a, GaussianMatrix const &b) { return a.e < b.e; }
  friend bool operator==(GaussianMatrix const &a, GaussianMatrix const &b) { return a.e == b.e; }
  friend GaussianMatrix operator*(GaussianMatrix const &a, GaussianMatrix const &b) {
    auto mul = [](std::pair<long, long> x, std::pair<long, long> y) {
      return std::pair<long, long>{x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
    };
    auto add = [](std::pair<long, long> x, std::pair<long, long> y) {
      return std::pair<long, long>{x.first + y.first, x.second + y.second};
    };
    GaussianMatrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e[2 * i + j] = add(mul(a.e[2 * i], b.e[j]), mul(a.e[2 * i + 1], b.e[2 + j]));
    return r;
  }
  std::string str() const {
    auto c = [](std::pair<long, long> z) {
      if (z.second == 0) return std::to_string(z.first);
      std::string im = z.second == 1 ? "i" : z.second == -1 ? "-i" : std::to_string(z.second) + "i";
      if (z.first == 0) return im;
      return std::to_string(z.first) + (z.second > 0 ? "+" : "") + im;
    };
    return "[" + c(e[0]) + " " + c(e[1]) + "; " + c(e[2]) + " " + c(e[3]) + "]";
  }
};

inline std::pair<FiniteGroup, std::vector<GaussianMatrix>> gaussian_matrix_group(
    std::vector<GaussianMatrix> const &gens, GroupLimits const &limits = {}) {
  GaussianMatrix id{{std::pair<long, long>{1, 0}, {0, 0}, {0, 0}, {1, 0}}};
  std::vector<GaussianMatrix> elems{id};
  std::map<GaussianMatrix, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto const &s : gens) {
      GaussianMatrix y = elems[head] * s;
      if (index.emplace(y, static_cast<Element>(elems.size())).second) {
        elems.push_back(y);
        detail::check_order(elems.size(), limits);
      }
    }
  std::size_t n = elems.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(elems[a] * elems[b]);
      if (it == index.end()) throw Error(Errc::InvalidInput, "matrix set is not closed under products");
      flat[a * n + b] = it->second;
    }
  std::vector<std::string> labels;
  for (auto const &m : elems) labels.push_back(m.str());
  return {FiniteGroup::from_flat(n, std::move(flat), std::move(labels)), std::move(elems)};
}

/// Named standard families: cyclic(n), dihedral(2n), dicyclic(4n), symmetric(n),
/// alternating(n), quaternion (= dicyclic(8)), klein (= C2 x C2).
inline FiniteGroup family(std::string const &name, std::size_t n = 0, GroupLimits const &limits = {}) {
  if (name == "cyclic") return cyclic_group(n, limits);
  if (name == "dihedral") return dihedral_group(n, limits);
  if (name == "dicyclic") return dicyclic_group(n, limits);
  if (name == "symmetric") return symmetric_group(n, limits);
  if (name == "alternating") return alternating_group(n, limits);
  if (name == "quaternion") return dicyclic_group(8, limits);
  if (name == "klein") return direct_product(cyclic_group(2), cyclic_group(2), limits);
  throw Error(Errc::InvalidInput, "unknown group family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Conjugacy classes

struct ConjugacyClass {
  Element representative = 0;  ///< minimal index in the class
  std::vector<Element> members;
  std::size_t centralizer_order = 0;

  std::size_t size() const { return members.size(); }
};

/// Class partition together with the lookups every character computation needs.
struct ClassData {
  std::uint64_t group_token = 0;
  std::size_t group_order = 0;
  std::vector<ConjugacyClass> classes;  ///< ascending minimal member index
  std::vector<std::size_t> class_of;    ///< element -> class index
  std::vector<std::size_t> inverse;     ///< class -> class of inverses
  std::vector<std::size_t> square;      ///< class -> class of squares
  std::size_t identity_class = 0;

  std::size_t size() const { return classes.size(); }
  bool is_self_inverse(std::size_t c) const { return inverse[c] == c; }

  /// Class of g^k for a representative g of class c.
  std::size_t power(FiniteGroup const &g, std::size_t c, long long k) const {
    return class_of[g.pow(classes[c].representative, k)];
  }
};

inline ClassData conjugacy_classes(FiniteGroup const &g) {
  ClassData d;
  d.group_token = g.token();
  d.group_order = g.order();
  std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  d.class_of.assign(n, kUnset);
  std::vector<bool> mark(n, false);
  for (Element x = 0; x < n; ++x) {
    if (d.class_of[x] != kUnset) continue;
    ConjugacyClass c;
    c.representative = x;
    std::size_t idx = d.classes.size();
    for (Element z = 0; z < n; ++z) {
      Element y = g.conj(z, x);
      if (d.class_of[y] == kUnset) {
        d.class_of[y] = idx;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.centralizer_order = n / c.members.size();
    d.classes.push_back(std::move(c));
  }
  d.inverse.resize(d.classes.size());
  d.square.resize(d.classes.size());
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    Element r = d.classes[c].representative;
    d.inverse[c] = d.class_of[g.inv(r)];
    d.square[c] = d.class_of[g.mul(r, r)];
  }
  d.identity_class = d.class_of[g.identity()];
  return d;
}

/// The class containing the inverses of the members of class `c`.
inline ConjugacyClass const &inverse_class(ClassData const &d, std::size_t c) { return d.classes[d.inverse[c]]; }

/// lcm of element orders.
inline unsigned long exponent(FiniteGroup const &g) {
  unsigned long e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, static_cast<unsigned long>(g.element_order(x)));
  return e;
}

}  // namespace areps
