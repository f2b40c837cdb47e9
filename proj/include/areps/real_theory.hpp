#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "areps/chartable.hpp"
#include "areps/grading.hpp"

namespace areps {

enum class Field { R, C, H };

inline char const *field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

/// 1 -> R, 0 -> C, -1 -> H.
inline Field field_from_indicator(long long v) {
  if (v == 1) return Field::R;
  if (v == 0) return Field::C;
  if (v == -1) return Field::H;
  throw Error(Errc::ImpossiblePair, "indicator " + std::to_string(v) + " outside {-1,0,1}");
}

/// Everything derived once from a graded group: both character tables, Real
/// classes, the twist on G-classes and the square-class counts behind every
/// indicator.
struct RealAnalysis {
  GradedGroup gg;
  CharacterTable gtab;  ///< table of G
  CharacterTable htab;  ///< table of G-hat
  std::vector<RealClass> real_classes;
  std::vector<std::size_t> twist;            ///< G-class k -> class of w g_k w^-1
  std::vector<std::size_t> real_class_of;    ///< G-class -> Real class index
  std::vector<std::size_t> ghat_class_of;    ///< G-class -> G-hat class
  std::vector<unsigned long> even_squares;   ///< G-class k: #{x in G : x^2 in C_k}
  std::vector<unsigned long> odd_squares;    ///< G-class k: #{z odd : z^2 in C_k}
  std::vector<unsigned long> ghat_squares;   ///< G-hat class k: #{x in G-hat : x^2 in C_k}
  std::vector<std::vector<std::vector<unsigned long>>> structure;  ///< class algebra constants of G

  std::size_t even_order() const { return gg.even_order(); }
  ClassData const &classes() const { return gtab.classes; }
  std::size_t class_count() const { return gtab.classes.size(); }
};

inline RealAnalysis analyze(GradedGroup const &gg) {
  RealAnalysis a;
  a.gg = gg;
  a.gtab = character_table(gg.even());
  a.htab = character_table(gg.ghat());
  a.real_classes = real_conjugacy_classes(gg);
  auto const &cd = a.gtab.classes;
  auto const &hd = a.htab.classes;
  a.twist = twist_class_map(gg, cd);
  a.real_class_of.assign(cd.size(), 0);
  for (std::size_t r = 0; r < a.real_classes.size(); ++r)
    for (Element x : a.real_classes[r].members) a.real_class_of[cd.class_of[gg.to_local(x)]] = r;
  for (auto const &c : cd.classes) a.ghat_class_of.push_back(hd.class_of[gg.to_ambient(c.representative)]);
  auto const &G = gg.ghat();
  a.even_squares.assign(cd.size(), 0);
  a.odd_squares.assign(cd.size(), 0);
  a.ghat_squares.assign(hd.size(), 0);
  for (Element x = 0; x < G.order(); ++x) {
    Element s = G.mul(x, x);
    ++a.ghat_squares[hd.class_of[s]];
    std::size_t k = cd.class_of[gg.to_local(s)];
    if (gg.is_even(x))
      ++a.even_squares[k];
    else
      ++a.odd_squares[k];
  }
  a.structure = detail::structure_constants(gg.even(), cd);
  return a;
}

// ---------------------------------------------------------------------------
// Frobenius-Schur indicators

namespace detail {

inline Cyclotomic square_sum(std::vector<unsigned long> const &counts, ClassFunction const &f) {
  Cyclotomic s;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) s += f.values[k].scaled(Rational(static_cast<long>(counts[k])));
  return s;
}

inline long long certified(Cyclotomic const &v, char const *what) {
  try {
    return v.to_integer();
  } catch (Error const &) {
    throw Error(Errc::NotAnInteger, std::string(what) + " is not an integer: " + v.str());
  }
}

}  // namespace detail

/// (1/|G|) sum_{x in G} chi(x^2).
inline long long fs_complex(RealAnalysis const &a, ClassFunction const &chi) {
  return detail::certified(detail::square_sum(a.even_squares, chi).scaled(Rational(1, static_cast<long>(a.even_order()))),
                           "complex indicator");
}

/// (1/|G|) sum_{z odd} chi(z^2).
inline long long fs_real_indicator(RealAnalysis const &a, ClassFunction const &chi) {
  return detail::certified(detail::square_sum(a.odd_squares, chi).scaled(Rational(1, static_cast<long>(a.even_order()))),
                           "Real indicator");
}

/// The Real indicator applied to an A-character.
inline long long fs_a(RealAnalysis const &a, ClassFunction const &achar) { return fs_real_indicator(a, achar); }

/// Classical indicator of a G-hat character.
inline long long fs_classical_ghat(RealAnalysis const &a, ClassFunction const &psi) {
  return detail::certified(
      detail::square_sum(a.ghat_squares, psi).scaled(Rational(1, static_cast<long>(a.gg.ghat().order()))),
      "classical indicator");
}

struct Indicators {
  long long fs_complex = 0;
  long long fs_real = 0;
  long long fs_hat_real = 0;  ///< (4/|G-hat|) sum_{G-hat} chi(g^2)
};

struct FsRelation {
  Indicators indicators;
  long long via_ghat = 0;  ///< (2/|G-hat|) sum_{G-hat} chi(g^2) - F_C
  bool holds = false;
};

inline FsRelation fs_relation_check(RealAnalysis const &a, ClassFunction const &chi) {
  FsRelation r;
  r.indicators.fs_complex = fs_complex(a, chi);
  r.indicators.fs_real = fs_real_indicator(a, chi);
  // squares of all G-hat elements, pushed into G-classes
  auto const &G = a.gg.ghat();
  std::vector<unsigned long> counts(a.class_count(), 0);
  for (Element x = 0; x < G.order(); ++x) ++counts[a.classes().class_of[a.gg.to_local(G.mul(x, x))]];
  Cyclotomic total = detail::square_sum(counts, chi);
  long n = static_cast<long>(G.order());
  r.via_ghat = detail::certified(total.scaled(ratio(2, n)), "lifted indicator") - r.indicators.fs_complex;
  r.indicators.fs_hat_real = detail::certified(total.scaled(ratio(4, n)), "lifted real indicator");
  r.holds = r.via_ghat == r.indicators.fs_real && r.indicators.fs_hat_real == 2 * (r.indicators.fs_complex + r.indicators.fs_real);
  return r;
}

inline Indicators indicators(RealAnalysis const &a, ClassFunction const &chi) { return fs_relation_check(a, chi).indicators; }

// ---------------------------------------------------------------------------
// Blocks and Dyson types

struct BlockOrbit {
  std::vector<std::size_t> orbit;  ///< sorted distinct indices of {chi, conj chi, w.chi, w.conj chi}
  bool split = false;
};

inline std::size_t conjugate_index(RealAnalysis const &a, std::size_t i) {
  return a.gtab.index_of(conjugate_character(a.gtab.rows[i]));
}

inline std::size_t twist_index(RealAnalysis const &a, std::size_t i) {
  Character t = a.gtab.rows[i];
  for (std::size_t k = 0; k < t.values.size(); ++k) t.values[k] = a.gtab.rows[i].values[a.twist[k]];
  return a.gtab.index_of(t);
}

inline BlockOrbit block_of(RealAnalysis const &a, std::size_t i) {
  std::size_t c = conjugate_index(a, i), w = twist_index(a, i), wc = twist_index(a, c);
  std::set<std::size_t> s{i, c, w, wc};
  BlockOrbit b;
  b.orbit.assign(s.begin(), s.end());
  b.split = !(w == i || w == c);
  return b;
}

inline std::vector<std::string> const &dyson_names() {
  static std::vector<std::string> const names{"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  return names;
}

inline std::string dyson_type_from(long long fc, long long f, bool split) {
  if (fc == 1 && f == 1) return "I";
  if (fc == 1 && f == -1) return "II";
  if (fc == 1 && f == 0) return "III";
  if (fc == 0 && f == 1) return "V";
  if (fc == 0 && f == -1) return "VI";
  if (fc == -1 && f == -1) return "VIII";
  if (fc == -1 && f == 1) return "IX";
  if (fc == -1 && f == 0) return "X";
  if (fc == 0 && f == 0) return split ? "VII" : "IV";
  throw Error(Errc::ImpossiblePair, "indicator pair (" + std::to_string(fc) + ", " + std::to_string(f) + ") is not realizable");
}

inline std::string dyson_type(RealAnalysis const &a, std::size_t i) {
  auto const &chi = a.gtab.rows[i];
  return dyson_type_from(fs_complex(a, chi), fs_real_indicator(a, chi), block_of(a, i).split);
}

struct FieldTriple {
  Field a = Field::R, b = Field::R, d = Field::R;
  friend bool operator==(FieldTriple const &, FieldTriple const &) = default;
  std::string str() const { return std::string(field_name(a)) + field_name(b) + field_name(d); }
};

/// G-hat irreducibles whose restriction contains chi.
inline std::vector<std::size_t> covering_characters(RealAnalysis const &a, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.htab.size(); ++j) {
    auto res = restrict_character(a.gg, a.htab.classes, a.gtab.classes, a.htab.rows[j]);
    if (!a.gtab.inner(res, a.gtab.rows[i]).is_zero()) out.push_back(j);
  }
  return out;
}

inline FieldTriple field_triple(RealAnalysis const &a, std::size_t i) {
  auto const &chi = a.gtab.rows[i];
  FieldTriple t;
  t.a = field_from_indicator(fs_complex(a, chi));
  t.d = field_from_indicator(fs_real_indicator(a, chi));
  std::optional<long long> b;
  for (std::size_t j : covering_characters(a, i)) {
    long long v = fs_classical_ghat(a, a.htab.rows[j]);
    if (b && *b != v)
      throw Error(Errc::BlockInconsistency, "covering characters of row " + std::to_string(i) + " disagree on indicator");
    b = v;
  }
  if (!b) throw Error(Errc::BlockInconsistency, "no covering character for row " + std::to_string(i));
  t.b = field_from_indicator(*b);
  return t;
}

struct BlockCounts {
  std::size_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(BlockCounts const &, BlockCounts const &) = default;
};

// ---------------------------------------------------------------------------
// A-character table

struct ARow {
  ClassFunction character;  ///< on G-classes; constant on Real classes
  int m = 1;
  Field type = Field::R;
  std::vector<std::size_t> constituents;  ///< G-table indices
  long long degree() const { return character.values.empty() ? 0 : character.values[0].to_integer(); }
};

struct ACharacterTable {
  std::vector<RealClass> real_classes;
  std::vector<ARow> rows;
  Element chosen_odd = 0;
  std::size_t identity_class = 0;

  /// Row value at Real class r.
  Cyclotomic value(RealAnalysis const &a, std::size_t row, std::size_t r) const {
    return rows[row].character.values[a.classes().class_of[a.gg.to_local(real_classes[r].representative)]];
  }
};

/// chi + w.conj(chi).
inline ClassFunction realify_character(RealAnalysis const &a, ClassFunction const &chi) {
  ClassFunction r = chi;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] = chi.values[k] + chi.values[a.twist[k]].conj();
  return r;
}

inline ACharacterTable a_character_table(RealAnalysis const &a) {
  ACharacterTable t;
  t.real_classes = a.real_classes;
  t.chosen_odd = a.gg.chosen_odd();
  t.identity_class = a.classes().identity_class;
  for (std::size_t i = 0; i < a.gtab.size(); ++i) {
    auto const &chi = a.gtab.rows[i];
    long long f = fs_real_indicator(a, chi);
    ARow row;
    if (f == 1) {
      row = {chi, 1, Field::R, {i}};
    } else if (f == -1) {
      row = {chi.scaled(2), 4, Field::H, {i}};
    } else {
      std::size_t partner = twist_index(a, conjugate_index(a, i));
      row = {realify_character(a, chi), 2, Field::C, {std::min(i, partner), std::max(i, partner)}};
    }
    bool dup = false;
    for (auto const &r : t.rows)
      if (r.character == row.character) dup = true;
    if (!dup) t.rows.push_back(std::move(row));
  }
  if (t.rows.size() != t.real_classes.size())
    throw Error(Errc::SquareTheoremViolation, std::to_string(t.rows.size()) + " A-characters for " +
                                                  std::to_string(t.real_classes.size()) + " Real classes");
  return t;
}

/// Row of the A-table whose constituents contain G-table row i.
inline std::size_t a_row_of(ACharacterTable const &t, std::size_t i) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (auto c : t.rows[r].constituents)
      if (c == i) return r;
  throw Error(Errc::ConsistencyFailure, "character " + std::to_string(i) + " lies in no A-row");
}

inline BlockCounts block_counts(RealAnalysis const &a, ACharacterTable const &t, std::size_t i) {
  BlockOrbit orb = block_of(a, i);
  BlockCounts bc;
  bc.c = orb.orbit.size();
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::size_t> arows;
  std::set<std::pair<std::size_t, std::size_t>> hpairs;
  for (std::size_t x : orb.orbit) {
    std::size_t cx = conjugate_index(a, x);
    pairs.insert({std::min(x, cx), std::max(x, cx)});
    arows.insert(a_row_of(t, x));
    for (std::size_t j : covering_characters(a, x)) {
      std::size_t cj = a.htab.index_of(conjugate_character(a.htab.rows[j]));
      hpairs.insert({std::min(j, cj), std::max(j, cj)});
    }
  }
  bc.a = pairs.size();
  bc.d = arows.size();
  bc.b = hpairs.size();
  return bc;
}

struct ABlockReport {
  std::size_t seed = 0;
  std::vector<std::size_t> orbit;
  std::string dyson_type;
  FieldTriple fields;
  BlockCounts counts;
  Indicators indicators;
  bool split = false;
};

inline ABlockReport block_report(RealAnalysis const &a, ACharacterTable const &t, std::size_t i) {
  ABlockReport r;
  r.seed = i;
  auto orb = block_of(a, i);
  r.orbit = orb.orbit;
  r.split = orb.split;
  r.indicators = fs_relation_check(a, a.gtab.rows[i]).indicators;
  r.dyson_type = dyson_type_from(r.indicators.fs_complex, r.indicators.fs_real, r.split);
  r.fields = field_triple(a, i);
  r.counts = block_counts(a, t, i);
  return r;
}

/// One report per orbit, seeded by the orbit's first member.
inline std::vector<ABlockReport> block_reports(RealAnalysis const &a, ACharacterTable const &t) {
  std::vector<ABlockReport> out;
  std::vector<bool> seen(a.gtab.size(), false);
  for (std::size_t i = 0; i < a.gtab.size(); ++i) {
    if (seen[i]) continue;
    auto r = block_report(a, t, i);
    for (auto x : r.orbit) seen[x] = true;
    out.push_back(std::move(r));
  }
  return out;
}

/// Expected fields, block counts and indicators for a Dyson type.
struct TypeProfile {
  std::string type;
  FieldTriple fields;
  BlockCounts counts;
  long long fs_hat_real, fs_complex, fs_real;
};

inline std::vector<TypeProfile> const &type_profiles() {
  using F = Field;
  static std::vector<TypeProfile> const p{
      {"I", {F::R, F::R, F::R}, {1, 2, 1, 1}, 4, 1, 1},      {"II", {F::R, F::C, F::H}, {1, 1, 1, 1}, 0, 1, -1},
      {"III", {F::R, F::R, F::C}, {2, 1, 2, 1}, 2, 1, 0},    {"IV", {F::C, F::C, F::C}, {1, 2, 2, 1}, 0, 0, 0},
      {"V", {F::C, F::R, F::R}, {1, 1, 2, 2}, 2, 0, 1},      {"VI", {F::C, F::H, F::H}, {1, 1, 2, 2}, -2, 0, -1},
      {"VII", {F::C, F::C, F::C}, {2, 1, 4, 2}, 0, 0, 0},    {"VIII", {F::H, F::H, F::H}, {1, 2, 1, 1}, -4, -1, -1},
      {"IX", {F::H, F::C, F::R}, {1, 1, 1, 1}, 0, -1, 1},    {"X", {F::H, F::H, F::C}, {2, 1, 2, 1}, -2, -1, 0},
  };
  return p;
}

inline TypeProfile const &type_profile(std::string const &type) {
  for (auto const &p : type_profiles())
    if (p.type == type) return p;
  throw Error(Errc::InvalidInput, "unknown Dyson type '" + type + "'");
}

/// First G-irreducible of maximal degree not trivial on the builtin's marker.
inline std::size_t seed_character(RealAnalysis const &a, std::optional<Element> marker) {
  if (!marker) return 0;
  auto const &cd = a.classes();
  std::size_t k = cd.class_of[a.gg.to_local(*marker)];
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < a.gtab.size(); ++i) {
    auto const &row = a.gtab.rows[i];
    if (row.values[k] == row.values[cd.identity_class]) continue;
    if (!best || a.gtab.degree(i) > a.gtab.degree(*best)) best = i;
  }
  if (!best) throw Error(Errc::InvalidInput, "marker lies in the kernel of every irreducible");
  return *best;
}

// ---------------------------------------------------------------------------
// Theorem checks: each returns its evidence.

inline long long hom_dimension(RealAnalysis const &a, ACharacterTable const &t, std::size_t i, std::size_t j) {
  long long v = detail::certified(a.gtab.inner(t.rows[i].character, t.rows[j].character), "hom dimension");
  if (v < 0) throw Error(Errc::NotAnInteger, "negative hom dimension");
  return v;
}

struct RegularDecomposition {
  std::vector<Rational> b;  ///< 2 dim / m
  bool consistent = false;
};

inline RegularDecomposition regular_decomposition(RealAnalysis const &a, ACharacterTable const &t) {
  RegularDecomposition r;
  auto const &cd = a.classes();
  ClassFunction reg{cd.group_token, std::vector<Cyclotomic>(cd.size())};
  reg.values[cd.identity_class] = Cyclotomic(static_cast<long>(2 * a.even_order()));
  Rational dimsum = 0;
  bool ok = true;
  for (auto const &row : t.rows) {
    Rational d(static_cast<long>(row.degree()));
    Rational by_formula = 2 * d / row.m;
    Cyclotomic by_product = a.gtab.inner(row.character, reg).scaled(ratio(1, row.m));
    if (!(by_product == Cyclotomic(by_formula))) ok = false;
    r.b.push_back(by_formula);
    dimsum += d * d / row.m;
  }
  if (dimsum != Rational(static_cast<long>(a.even_order()))) ok = false;
  if (!ok) throw Error(Errc::ConsistencyFailure, "regular decomposition multiplicities disagree");
  for (auto const &x : r.b)
    if (x.get_den() != 1) throw Error(Errc::ConsistencyFailure, "non-integral regular multiplicity");
  r.consistent = true;
  return r;
}

/// <phi, phi> + F_A(phi) == 2.
inline bool is_simple_a_character(RealAnalysis const &a, ClassFunction const &phi) {
  Cyclotomic v = a.gtab.inner(phi, phi) + Cyclotomic(static_cast<long>(fs_a(a, phi)));
  return v == Cyclotomic(2);
}

struct CentreReport {
  std::size_t r = 0, s = 0, t = 0;
  std::size_t centre_dim = 0;
  std::size_t class_count = 0;
  std::size_t basis_s = 0, basis_t = 0;  ///< explicit basis: S(g) and T(g) elements
  bool basis_central = false;
  bool holds() const { return centre_dim == class_count && basis_s + basis_t == class_count && basis_central; }
};

inline CentreReport centre_report(RealAnalysis const &a, ACharacterTable const &t) {
  CentreReport c;
  for (auto const &row : t.rows) {
    if (row.type == Field::R) ++c.r;
    if (row.type == Field::C) ++c.s;
    if (row.type == Field::H) ++c.t;
  }
  c.centre_dim = c.r + 2 * c.s + c.t;
  c.class_count = a.class_count();
  // Each G-hat class inside G: S(g) = its class sum; if it is two G-classes,
  // also T(g) = i (sum_X - sum_X'). Coefficients live on G-classes.
  auto const &cd = a.classes();
  std::vector<std::vector<Cyclotomic>> basis;
  std::vector<bool> seen(cd.size(), false);
  Cyclotomic i4 = root_of_unity(4, 1);
  for (std::size_t k = 0; k < cd.size(); ++k) {
    if (seen[k]) continue;
    std::size_t k2 = a.twist[k];
    seen[k] = seen[k2] = true;
    std::vector<Cyclotomic> s(cd.size()), tt(cd.size());
    s[k] = 1;
    s[k2] = 1;
    basis.push_back(s);
    ++c.basis_s;
    if (k2 != k) {
      tt[k] = i4;
      tt[k2] = -i4;
      basis.push_back(tt);
      ++c.basis_t;
    }
  }
  // Centrality: coefficients are class functions on G (even symmetry) and the
  // odd element w conjugates them: c(w g w^-1) = conj(c(g)).
  c.basis_central = true;
  for (auto const &v : basis)
    for (std::size_t k = 0; k < cd.size(); ++k)
      if (!(v[a.twist[k]] == v[k].conj())) c.basis_central = false;
  if (c.centre_dim != c.class_count)
    throw Error(Errc::TheoremViolation, "centre dimension " + std::to_string(c.centre_dim) + " differs from class count " +
                                            std::to_string(c.class_count));
  return c;
}

struct ColumnCheck {
  Cyclotomic lhs, rhs;
  bool holds = false;
};

/// (|E(g_s)|/2) delta_rs = sum_j (1/m_j) chi_j(g_r) conj(chi_j(g_s)).
inline ColumnCheck column_orthogonality(RealAnalysis const &a, ACharacterTable const &t, std::size_t r, std::size_t s) {
  ColumnCheck c;
  if (r == s) c.lhs = Cyclotomic(ratio(static_cast<long>(t.real_classes[s].real_stabilizer_order), 2));
  for (std::size_t j = 0; j < t.rows.size(); ++j)
    c.rhs += (t.value(a, j, r) * t.value(a, j, s).conj()).scaled(ratio(1, t.rows[j].m));
  c.holds = c.lhs == c.rhs;
  return c;
}

struct RowCheck {
  Cyclotomic value;
  bool holds = false;
};

inline RowCheck row_orthogonality(RealAnalysis const &a, ACharacterTable const &t, std::size_t i, std::size_t j) {
  RowCheck c;
  c.value = a.gtab.inner(t.rows[i].character, t.rows[j].character);
  c.holds = c.value == Cyclotomic(i == j ? t.rows[i].m : 0);
  return c;
}

/// e_j as coefficients per G-class (constant on classes).
struct CentralIdempotent {
  std::vector<Cyclotomic> class_coefficients;
  /// coefficient of the (local) even element g
  Cyclotomic coefficient(RealAnalysis const &a, Element g) const { return class_coefficients[a.classes().class_of[g]]; }
};

inline CentralIdempotent central_idempotent(RealAnalysis const &a, ACharacterTable const &t, std::size_t j) {
  auto const &cd = a.classes();
  auto const &row = t.rows[j];
  Rational scale = ratio(static_cast<long>(row.degree()), static_cast<long>(row.m * a.even_order()));
  CentralIdempotent e;
  for (std::size_t k = 0; k < cd.size(); ++k) e.class_coefficients.push_back(row.character.values[cd.inverse[k]].scaled(scale));
  return e;
}

/// Product of two class-function elements of the group algebra (coefficients per class).
inline std::vector<Cyclotomic> class_algebra_product(RealAnalysis const &a, std::vector<Cyclotomic> const &x,
                                                     std::vector<Cyclotomic> const &y) {
  std::size_t r = a.class_count();
  std::vector<Cyclotomic> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t l = 0; l < r; ++l) {
      if (y[l].is_zero()) continue;
      Cyclotomic xy = x[i] * y[l];
      for (std::size_t k = 0; k < r; ++k)
        if (a.structure[i][l][k]) out[k] += xy.scaled(Rational(static_cast<long>(a.structure[i][l][k])));
    }
  }
  return out;
}

struct IdempotentCheck {
  bool idempotent = true, orthogonal = true, symmetric = true, sum_is_one = true;
  bool holds() const { return idempotent && orthogonal && symmetric && sum_is_one; }
  std::string first_failure;
};

inline IdempotentCheck idempotent_check(RealAnalysis const &a, ACharacterTable const &t) {
  IdempotentCheck c;
  std::vector<CentralIdempotent> es;
  for (std::size_t j = 0; j < t.rows.size(); ++j) es.push_back(central_idempotent(a, t, j));
  std::size_t r = a.class_count();
  std::vector<Cyclotomic> zero(r);
  auto note = [&](std::string s) {
    if (c.first_failure.empty()) c.first_failure = std::move(s);
  };
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i; j < es.size(); ++j) {
      auto p = class_algebra_product(a, es[i].class_coefficients, es[j].class_coefficients);
      if (i == j && p != es[i].class_coefficients) {
        c.idempotent = false;
        note("e_" + std::to_string(i) + " is not idempotent");
      }
      if (i != j && p != zero) {
        c.orthogonal = false;
        note("e_" + std::to_string(i) + " e_" + std::to_string(j) + " != 0");
      }
    }
    for (std::size_t k = 0; k < r; ++k)
      if (!(es[i].class_coefficients[a.twist[k]] == es[i].class_coefficients[k].conj())) {
        c.symmetric = false;
        note("e_" + std::to_string(i) + " breaks the odd-conjugation symmetry");
      }
  }
  std::vector<Cyclotomic> sum(r);
  for (auto const &e : es)
    for (std::size_t k = 0; k < r; ++k) sum[k] += e.class_coefficients[k];
  for (std::size_t k = 0; k < r; ++k)
    if (!(sum[k] == Cyclotomic(k == a.classes().identity_class ? 1 : 0))) {
      c.sum_is_one = false;
      note("sum of idempotents differs from 1");
    }
  return c;
}

struct SquareRootCount {
  long long odd_roots = 0;   ///< brute force #{z odd : z^2 = h}
  long long even_roots = 0;  ///< #{x in G : x^2 = h}
  Cyclotomic formula;        ///< sum_j F(chi_j) chi_j(h)
  bool holds() const { return formula == Cyclotomic(static_cast<long>(odd_roots)); }
};

/// h is a local index in G.
inline SquareRootCount square_root_count(RealAnalysis const &a, Element h) {
  SquareRootCount s;
  auto const &G = a.gg.ghat();
  Element amb = a.gg.to_ambient(h);
  for (Element z = 0; z < G.order(); ++z)
    if (G.mul(z, z) == amb) (a.gg.is_even(z) ? s.even_roots : s.odd_roots)++;
  std::size_t k = a.classes().class_of[h];
  for (auto const &chi : a.gtab.rows) {
    long long f = fs_real_indicator(a, chi);
    if (f) s.formula += chi.values[k].scaled(Rational(static_cast<long>(f)));
  }
  return s;
}

inline long long checked_square_root_count(RealAnalysis const &a, Element h) {
  auto s = square_root_count(a, h);
  if (!s.holds())
    throw Error(Errc::OracleMismatch, "square roots of " + a.gg.even().label(h) + ": counted " +
                                          std::to_string(s.odd_roots) + ", formula " + s.formula.str());
  return s.odd_roots;
}

inline bool max_at_identity_check(RealAnalysis const &a, ACharacterTable const &t) {
  for (auto const &row : t.rows)
    if (row.type == Field::H) throw Error(Errc::NotApplicable, "an A-representation of type H is present");
  auto const &cd = a.classes();
  long long re = checked_square_root_count(a, a.gg.even().identity());
  for (auto const &c : cd.classes)
    if (checked_square_root_count(a, c.representative) > re) return false;
  return true;
}

/// The closing identity for A_n <= S_n, evaluated literally: per G-class,
/// sum_{chi = conj chi} chi(g) - sum_{w.chi = conj chi} chi(g) against
/// (#odd square roots of g) - (#even square roots of g).
struct SquareDifference {
  std::size_t g_class = 0;
  Cyclotomic lhs;
  long long rhs = 0;
  bool holds() const { return lhs == Cyclotomic(static_cast<long>(rhs)); }
  bool holds_with_opposite_sign() const { return lhs == Cyclotomic(static_cast<long>(-rhs)); }
};

inline std::vector<SquareDifference> square_difference_identity(RealAnalysis const &a) {
  std::vector<SquareDifference> out;
  auto const &cd = a.classes();
  std::vector<bool> real_valued, twisted_real;
  for (std::size_t i = 0; i < a.gtab.size(); ++i) {
    real_valued.push_back(conjugate_index(a, i) == i);
    twisted_real.push_back(twist_index(a, i) == conjugate_index(a, i));
  }
  for (std::size_t k = 0; k < cd.size(); ++k) {
    SquareDifference d;
    d.g_class = k;
    for (std::size_t i = 0; i < a.gtab.size(); ++i) {
      if (real_valued[i]) d.lhs += a.gtab.rows[i].values[k];
      if (twisted_real[i]) d.lhs -= a.gtab.rows[i].values[k];
    }
    auto s = square_root_count(a, cd.classes[k].representative);
    d.rhs = s.odd_roots - s.even_roots;
    out.push_back(std::move(d));
  }
  return out;
}

/// Classical-indicator counts: #odd square roots - #even square roots equals
/// sum_chi (F(chi) - F_C(chi)) chi(g); the first equality behind the closing identity.
inline bool square_difference_first_equality(RealAnalysis const &a) {
  auto const &cd = a.classes();
  for (std::size_t k = 0; k < cd.size(); ++k) {
    Cyclotomic v;
    for (auto const &chi : a.gtab.rows) {
      long long f = fs_real_indicator(a, chi) - fs_complex(a, chi);
      if (f) v += chi.values[k].scaled(Rational(static_cast<long>(f)));
    }
    auto s = square_root_count(a, cd.classes[k].representative);
    if (!(v == Cyclotomic(static_cast<long>(s.odd_roots - s.even_roots)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Algebra decomposition

struct AlgebraFactor {
  Field field = Field::R;
  long long size = 0;  ///< M_size(field)
  long long real_dim() const { return size * size * (field == Field::R ? 1 : field == Field::C ? 2 : 4); }
  std::string str() const { return "M" + std::to_string(size) + "(" + field_name(field) + ")"; }
};

struct AlgebraDecomposition {
  std::vector<AlgebraFactor> skew;     ///< factors of the skew group algebra, one per A-row
  std::vector<long long> complex_degrees;  ///< induced factor sizes of CG, sorted
  bool dimension_ok = false;
  bool degrees_ok = false;
  bool rank_checked = false;  ///< exact rank of left multiplication by each e_j was computed
  bool rank_ok = true;
  bool holds() const { return dimension_ok && degrees_ok && rank_ok; }
};

namespace detail {

/// Rank of left multiplication by a class-function element on CG, exactly.
inline std::size_t left_multiplication_rank(RealAnalysis const &a, CentralIdempotent const &e) {
  auto const &G = a.gg.even();
  std::size_t n = G.order();
  Matrix<Cyclotomic> m(n, std::vector<Cyclotomic>(n));
  // column h: e * h = sum_g c_g (g h)
  for (Element g = 0; g < n; ++g) {
    Cyclotomic cg = e.coefficient(a, g);
    if (cg.is_zero()) continue;
    for (Element h = 0; h < n; ++h) m[G.mul(g, h)][h] = cg;
  }
  return rank(m, Cyclotomic(1));
}

}  // namespace detail

inline constexpr std::size_t kRankCheckMaxOrder = 32;

inline AlgebraDecomposition algebra_decomposition(RealAnalysis const &a, ACharacterTable const &t) {
  AlgebraDecomposition d;
  long long total = 0;
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    auto const &row = t.rows[j];
    long long deg = row.degree();
    AlgebraFactor f{row.type, row.type == Field::R ? 2 * deg : row.type == Field::C ? deg : deg / 2};
    total += f.real_dim();
    d.skew.push_back(f);
    for (auto c : row.constituents) d.complex_degrees.push_back(a.gtab.degree(c));
  }
  std::sort(d.complex_degrees.begin(), d.complex_degrees.end());
  std::vector<long long> want;
  for (std::size_t i = 0; i < a.gtab.size(); ++i) want.push_back(a.gtab.degree(i));
  std::sort(want.begin(), want.end());
  d.dimension_ok = total == static_cast<long long>(2 * a.gg.ghat().order());
  d.degrees_ok = d.complex_degrees == want;
  if (a.even_order() <= kRankCheckMaxOrder) {
    d.rank_checked = true;
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      long long expect = 0;
      for (auto c : t.rows[j].constituents) expect += a.gtab.degree(c) * a.gtab.degree(c);
      auto rk = static_cast<long long>(detail::left_multiplication_rank(a, central_idempotent(a, t, j)));
      // e_j (CG + CG w) has real dimension 4 rank
      if (rk != expect || 4 * rk != d.skew[j].real_dim()) d.rank_ok = false;
    }
  }
  if (!d.holds()) throw Error(Errc::ConsistencyFailure, "algebra decomposition audit failed");
  return d;
}

// ---------------------------------------------------------------------------
// Structure-level properties

inline bool totally_orthogonal(RealAnalysis const &a) {
  for (auto const &psi : a.htab.rows)
    if (fs_classical_ghat(a, psi) != 1) return false;
  return true;
}

}  // namespace areps
