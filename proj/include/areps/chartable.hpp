#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "areps/cyclotomic.hpp"
#include "areps/grading.hpp"
#include "areps/group.hpp"
#include "areps/linalg.hpp"

namespace areps {

/// A class function: one value per conjugacy class, in class order.
/// Characters and class functions share this representation.
struct ClassFunction {
  std::uint64_t group_token = 0;
  std::vector<Cyclotomic> values;

  std::size_t size() const { return values.size(); }
  Cyclotomic const &operator[](std::size_t c) const { return values[c]; }

  friend bool operator==(ClassFunction const &a, ClassFunction const &b) {
    return a.group_token == b.group_token && a.values == b.values;
  }
  friend ClassFunction operator+(ClassFunction const &a, ClassFunction const &b) {
    if (a.group_token != b.group_token) throw Error(Errc::GroupMismatch, "class functions on different groups");
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
  }
  friend ClassFunction operator-(ClassFunction const &a, ClassFunction const &b) {
    if (a.group_token != b.group_token) throw Error(Errc::GroupMismatch, "class functions on different groups");
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
  }
  ClassFunction scaled(Rational const &q) const {
    ClassFunction r = *this;
    for (auto &v : r.values) v = v.scaled(q);
    return r;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
    return out + ")";
  }
};

using Character = ClassFunction;

/// (1/|G|) sum_g conj(a(g)) b(g), classwise.
inline Cyclotomic inner_product(ClassData const &cd, ClassFunction const &a, ClassFunction const &b) {
  if (a.group_token != cd.group_token || b.group_token != cd.group_token)
    throw Error(Errc::GroupMismatch, "inner product of class functions on different groups");
  Cyclotomic s;
  for (std::size_t c = 0; c < cd.size(); ++c)
    s += (a.values[c].conj() * b.values[c]).scaled(Rational(static_cast<long>(cd.classes[c].size())));
  return s.scaled(ratio(1, static_cast<long>(cd.group_order)));
}

inline Character conjugate_character(Character const &chi) {
  Character r = chi;
  for (auto &v : r.values) v = v.conj();
  return r;
}

struct CharacterTable {
  std::uint64_t group_token = 0;
  ClassData classes;
  std::vector<Character> rows;
  unsigned long exponent = 1;
  unsigned long prime = 0;  ///< Dixon prime used

  std::size_t size() const { return rows.size(); }
  long long degree(std::size_t row) const { return rows[row].values[classes.identity_class].to_integer(); }
  Cyclotomic inner(ClassFunction const &a, ClassFunction const &b) const { return inner_product(classes, a, b); }
  std::size_t index_of(Character const &chi) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == chi) return i;
    throw Error(Errc::InvalidInput, "class function is not a row of the table");
  }
  Character trivial() const {
    return Character{group_token, std::vector<Cyclotomic>(classes.size(), Cyclotomic(1))};
  }
};

namespace detail {

/// Smallest prime p = 1 (mod e) with p^2 > 4n.
inline unsigned long dixon_prime(unsigned long e, unsigned long n) {
  for (unsigned long p = e + 1;; p += e)
    if (p * p > 4 * n && is_prime(p)) return p;
}

/// c[i][j][k] = #{x in C_i : x^-1 g_k in C_j}.
inline std::vector<std::vector<std::vector<unsigned long>>> structure_constants(FiniteGroup const &g,
                                                                                ClassData const &cd) {
  std::size_t r = cd.size();
  std::vector<std::vector<std::vector<unsigned long>>> c(
      r, std::vector<std::vector<unsigned long>>(r, std::vector<unsigned long>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    Element gk = cd.classes[k].representative;
    for (Element x = 0; x < g.order(); ++x) ++c[cd.class_of[x]][cd.class_of[g.mul(g.inv(x), gk)]][k];
  }
  return c;
}

inline void verify_table(CharacterTable const &t) {
  auto const &cd = t.classes;
  long long sumsq = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    long long d = t.degree(i);
    if (d <= 0) throw Error(Errc::InternalVerificationFailed, "nonpositive degree in row " + std::to_string(i));
    sumsq += d * d;
    for (std::size_t j = i; j < t.size(); ++j) {
      Cyclotomic ip = t.inner(t.rows[i], t.rows[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0)))
        throw Error(Errc::InternalVerificationFailed,
                    "row orthogonality fails at (" + std::to_string(i) + ", " + std::to_string(j) + "): " + ip.str());
    }
  }
  if (sumsq != static_cast<long long>(cd.group_order))
    throw Error(Errc::InternalVerificationFailed, "sum of squared degrees differs from group order");
  for (std::size_t a = 0; a < cd.size(); ++a)
    for (std::size_t b = a; b < cd.size(); ++b) {
      Cyclotomic s;
      for (auto const &row : t.rows) s += row.values[a] * row.values[b].conj();
      Cyclotomic want(a == b ? static_cast<long>(cd.classes[a].centralizer_order) : 0L);
      if (!(s == want))
        throw Error(Errc::InternalVerificationFailed,
                    "column orthogonality fails at classes (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
}

}  // namespace detail

/// Exact irreducible characters by the Dixon-Schneider method. Rows sorted by
/// degree, the trivial character first, then by value rendering.
inline CharacterTable character_table(FiniteGroup const &g) {
  CharacterTable t;
  t.group_token = g.token();
  t.classes = conjugacy_classes(g);
  t.exponent = exponent(g);
  auto const &cd = t.classes;
  std::size_t r = cd.size();
  unsigned long n = g.order();
  unsigned long p = detail::dixon_prime(t.exponent, n);
  t.prime = p;
  Fp one(1, p), zero(0, p);
  auto fp = [&](long long v) { return Fp(v, p); };

  auto c = detail::structure_constants(g, cd);

  // Simultaneous eigenspaces of the class-sum operators M_i (M_i)_{jk} = c_ijk.
  std::vector<Matrix<Fp>> done;
  std::vector<std::pair<Matrix<Fp>, std::size_t>> work;  // (basis rows in RREF, next class to try)
  {
    Matrix<Fp> id(r, std::vector<Fp>(r, zero));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = one;
    work.emplace_back(std::move(id), 0);
  }
  while (!work.empty()) {
    auto [basis, next] = std::move(work.back());
    work.pop_back();
    std::size_t d = basis.size();
    if (d == 1) {
      done.push_back(std::move(basis));
      continue;
    }
    auto pivots = row_reduce(basis, one);
    bool split = false;
    for (std::size_t i = next; i < r && !split; ++i) {
      // R[a][b]: coefficient of basis b in M_i basis_a.
      Matrix<Fp> R(d, std::vector<Fp>(d, zero));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          Fp s = zero;
          std::size_t row = pivots[b];
          for (std::size_t k = 0; k < r; ++k)
            if (!basis[a][k].is_zero() && c[i][row][k]) s = s + fp(static_cast<long long>(c[i][row][k])) * basis[a][k];
          R[a][b] = s;
        }
      bool scalar = true;
      for (std::size_t a = 0; a < d && scalar; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (!(R[a][b] == (a == b ? R[0][0] : zero))) {
            scalar = false;
            break;
          }
      if (scalar) continue;
      split = true;
      std::size_t found = 0;
      for (unsigned long lam = 0; lam < p && found < d; ++lam) {
        Matrix<Fp> A(d, std::vector<Fp>(d, zero));
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) A[a][b] = R[b][a] - (a == b ? fp(static_cast<long long>(lam)) : zero);
        auto ys = nullspace(A, d, one);
        if (ys.empty()) continue;
        found += ys.size();
        Matrix<Fp> sub;
        for (auto const &y : ys) {
          std::vector<Fp> v(r, zero);
          for (std::size_t a = 0; a < d; ++a)
            if (!y[a].is_zero())
              for (std::size_t k = 0; k < r; ++k) v[k] = v[k] + y[a] * basis[a][k];
          sub.push_back(std::move(v));
        }
        row_reduce(sub, one);
        work.emplace_back(std::move(sub), i + 1);
      }
      if (found != d) throw Error(Errc::InternalVerificationFailed, "class operator is not diagonalizable mod p");
    }
    if (!split) throw Error(Errc::InternalVerificationFailed, "eigenspace of dimension >1 could not be split");
  }
  if (done.size() != r) throw Error(Errc::InternalVerificationFailed, "found " + std::to_string(done.size()) +
                                                                          " characters for " + std::to_string(r) + " classes");

  Fp z = Fp(static_cast<long long>(primitive_root(p)), p).pow((p - 1) / t.exponent);
  std::vector<unsigned> orders(r);
  for (std::size_t k = 0; k < r; ++k) orders[k] = g.element_order(cd.classes[k].representative);
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k)
    for (unsigned l = 0; l < orders[k]; ++l) power_class[k].push_back(cd.power(g, k, l));

  for (auto &vec : done) {
    auto &w = vec[0];
    Fp lead = w[cd.identity_class];
    if (lead.is_zero()) throw Error(Errc::InternalVerificationFailed, "eigenvector vanishes at identity");
    Fp inv = lead.inverse();
    for (auto &x : w) x = x * inv;
    Fp S = zero;
    for (std::size_t k = 0; k < r; ++k)
      S = S + w[k] * w[cd.inverse[k]] / fp(static_cast<long long>(cd.classes[k].size()));
    Fp d2 = fp(static_cast<long long>(n)) / S;
    long long deg = 0;
    for (long long dd = 1; dd * dd <= static_cast<long long>(n); ++dd)
      if (fp(dd * dd) == d2) {
        deg = dd;
        break;
      }
    if (!deg) throw Error(Errc::InternalVerificationFailed, "no admissible degree");
    std::vector<Fp> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = w[k] * fp(deg) / fp(static_cast<long long>(cd.classes[k].size()));

    Character row{t.group_token, std::vector<Cyclotomic>(r)};
    for (std::size_t k = 0; k < r; ++k) {
      unsigned o = orders[k];
      Fp zo = z.pow(t.exponent / o);
      Fp oinv = fp(o).inverse();
      std::vector<Rational> dense(o);
      for (unsigned j = 0; j < o; ++j) {
        Fp s = zero;
        Fp step = zo.pow(static_cast<std::uint64_t>(o - j) % o);  // zo^{-j}
        Fp cur = one;
        for (unsigned l = 0; l < o; ++l) {
          s = s + chi[power_class[k][l]] * cur;
          cur = cur * step;
        }
        s = s * oinv;
        if (s.value() > static_cast<std::uint64_t>(deg))
          throw Error(Errc::InternalVerificationFailed, "eigenvalue multiplicity out of range");
        dense[j] = static_cast<long>(s.value());
      }
      row.values[k] = Cyclotomic::normalize(o, std::move(dense));
    }
    t.rows.push_back(std::move(row));
  }

  auto key = [&](Character const &ch) {
    std::vector<std::string> s;
    for (auto const &v : ch.values) s.push_back(v.str());
    return s;
  };
  Character triv = t.trivial();
  std::vector<std::pair<std::vector<std::string>, Character>> keyed;
  for (auto &row : t.rows) keyed.emplace_back(key(row), std::move(row));
  std::stable_sort(keyed.begin(), keyed.end(), [&](auto const &a, auto const &b) {
    long long da = a.second.values[cd.identity_class].to_integer();
    long long db = b.second.values[cd.identity_class].to_integer();
    if (da != db) return da < db;
    bool ta = a.second == triv, tb = b.second == triv;
    if (ta != tb) return ta;
    return a.first < b.first;
  });
  t.rows.clear();
  for (auto &kv : keyed) t.rows.push_back(std::move(kv.second));
  detail::verify_table(t);
  return t;
}

// ---------------------------------------------------------------------------
// Class functions across a grading. `gtab` is the table of gg.even(), `htab`
// the table of gg.ghat().

/// Class permutation of G induced by g -> w g w^-1 (w = chosen odd element).
inline std::vector<std::size_t> twist_class_map(GradedGroup const &gg, ClassData const &even_classes) {
  std::vector<std::size_t> m(even_classes.size());
  auto const &G = gg.ghat();
  for (std::size_t k = 0; k < even_classes.size(); ++k) {
    Element a = gg.to_ambient(even_classes.classes[k].representative);
    m[k] = even_classes.class_of[gg.to_local(G.conj(gg.chosen_odd(), a))];
  }
  return m;
}

/// (w.chi)(g) = chi(w g w^-1).
inline Character twist_character(GradedGroup const &gg, ClassData const &even_classes, Character const &chi) {
  if (chi.group_token != even_classes.group_token) throw Error(Errc::GroupMismatch, "twist expects a character of G");
  auto m = twist_class_map(gg, even_classes);
  Character r = chi;
  for (std::size_t k = 0; k < m.size(); ++k) r.values[k] = chi.values[m[k]];
  return r;
}

inline ClassFunction restrict_character(GradedGroup const &gg, ClassData const &ghat_classes,
                                        ClassData const &even_classes, ClassFunction const &psi) {
  if (psi.group_token != ghat_classes.group_token) throw Error(Errc::GroupMismatch, "restriction expects a character of G-hat");
  ClassFunction r{even_classes.group_token, {}};
  for (auto const &c : even_classes.classes)
    r.values.push_back(psi.values[ghat_classes.class_of[gg.to_ambient(c.representative)]]);
  return r;
}

/// Index-two induction: (chi^)(x) = chi(x) + chi(w^-1 x w) on even x, 0 on odd x.
inline ClassFunction induce_character(GradedGroup const &gg, ClassData const &ghat_classes,
                                      ClassData const &even_classes, ClassFunction const &chi) {
  if (chi.group_token != even_classes.group_token) throw Error(Errc::GroupMismatch, "induction expects a class function of G");
  auto const &G = gg.ghat();
  Element w = gg.chosen_odd();
  ClassFunction r{ghat_classes.group_token, {}};
  for (auto const &c : ghat_classes.classes) {
    Element x = c.representative;
    if (!gg.is_even(x)) {
      r.values.emplace_back();
      continue;
    }
    Element y = G.conj(G.inv(w), x);
    r.values.push_back(chi.values[even_classes.class_of[gg.to_local(x)]] +
                       chi.values[even_classes.class_of[gg.to_local(y)]]);
  }
  return r;
}

inline Character parity_twist(GradedGroup const &gg, ClassData const &ghat_classes, Character const &psi) {
  if (psi.group_token != ghat_classes.group_token) throw Error(Errc::GroupMismatch, "parity twist expects a character of G-hat");
  Character r = psi;
  for (std::size_t c = 0; c < r.values.size(); ++c)
    if (!gg.is_even(ghat_classes.classes[c].representative)) r.values[c] = -r.values[c];
  return r;
}

}  // namespace areps
