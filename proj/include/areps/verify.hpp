#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "areps/alternating.hpp"
#include "areps/real_theory.hpp"

namespace areps {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< first counterexample, or a note
};

struct VerifyReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (auto const &c : checks)
      if (!c.passed) return false;
    return true;
  }
  CheckResult const *first_failure() const {
    for (auto const &c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  std::optional<std::string> expected_type;  ///< Dyson type of the seed
  std::optional<Element> seed_marker;
  bool alternating = false;  ///< subject is A_n <= S_n: also test the closing identity as printed
};

namespace detail {

/// Runs `body`, turning thrown errors into a failed check.
inline CheckResult run_check(std::string name, std::function<std::string(bool &)> const &body) {
  CheckResult r{std::move(name), true, ""};
  try {
    r.detail = body(r.passed);
  } catch (Error const &e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

inline std::string vec_str(std::vector<std::size_t> const &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::vector<std::string> a_row_keys(RealAnalysis const &a, ACharacterTable const &t) {
  std::vector<std::string> keys;
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    std::string k;
    for (std::size_t r = 0; r < t.real_classes.size(); ++r) k += t.value(a, j, r).str() + ";";
    keys.push_back(k + std::to_string(t.rows[j].m));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

/// Every theorem check on one graded group.
inline VerifyReport verify_graded(std::string subject, GradedGroup const &gg, VerifyOptions const &opt = {}) {
  VerifyReport rep{std::move(subject), {}};
  auto add = [&](std::string name, std::function<std::string(bool &)> const &body) {
    rep.checks.push_back(detail::run_check(std::move(name), body));
  };

  std::optional<RealAnalysis> an;
  std::optional<ACharacterTable> at;
  add("character tables and A-table", [&](bool &) {
    an = analyze(gg);
    at = a_character_table(*an);
    return std::to_string(an->gtab.size()) + " characters of G, " + std::to_string(at->rows.size()) + " A-characters";
  });
  if (!an || !at) return rep;
  auto const &a = *an;
  auto const &t = *at;
  auto const &cd = a.classes();
  auto const &G = gg.ghat();

  add("Real classes refine or merge G-classes", [&](bool &ok) -> std::string {
    std::size_t total = 0;
    for (auto const &rc : a.real_classes) {
      total += rc.size();
      std::set<std::size_t> gcls;
      for (Element x : rc.members) gcls.insert(cd.class_of[gg.to_local(x)]);
      auto const &c0 = cd.classes[*gcls.begin()];
      bool b1 = rc.case_b == CaseB::B1;
      std::size_t want_stab = (b1 ? 1 : 2) * c0.centralizer_order;
      if (gcls.size() != (b1 ? 2u : 1u) || rc.size() != gcls.size() * c0.size() || rc.real_stabilizer_order != want_stab ||
          rc.size() * rc.real_stabilizer_order != G.order()) {
        ok = false;
        return "Real class of " + gg.label(rc.representative);
      }
    }
    if (total != gg.even_order()) ok = false;
    return "";
  });

  add("Real conjugation is an action", [&](bool &ok) -> std::string {
    std::size_t n = G.order();
    std::size_t step = n <= 64 ? 1 : n / 32 + 1;
    for (Element z1 = 0; z1 < n; z1 += static_cast<Element>(step))
      for (Element z2 = 0; z2 < n; z2 += static_cast<Element>(step))
        for (Element g : gg.even_subgroup())
          if (real_conjugate(gg, G.mul(z1, z2), g) != real_conjugate(gg, z1, real_conjugate(gg, z2, g))) {
            ok = false;
            return "fails at z1=" + G.label(z1) + ", z2=" + G.label(z2) + ", g=" + G.label(g);
          }
    return n <= 64 ? "exhaustive" : "sampled";
  });

  add("self-inverse shortcut", [&](bool &ok) -> std::string {
    auto const &hd = a.htab.classes;
    for (std::size_t c = 0; c < hd.size(); ++c)
      if (!hd.is_self_inverse(c)) return "hypothesis not met; skipped";
    for (std::size_t k = 0; k < cd.size(); ++k) {
      RealClass s = self_inverse_shortcut(gg, cd, hd, k);
      auto const &want = a.real_classes[a.real_class_of[k]];
      if (s.members != want.members) {
        ok = false;
        return "class " + std::to_string(k);
      }
    }
    return "";
  });

  add("indicator relation", [&](bool &ok) -> std::string {
    for (std::size_t i = 0; i < a.gtab.size(); ++i)
      if (!fs_relation_check(a, a.gtab.rows[i]).holds) {
        ok = false;
        return "character " + std::to_string(i);
      }
    return "";
  });

  auto reports = block_reports(a, t);
  add("indicator triples match Dyson types", [&](bool &ok) -> std::string {
    for (std::size_t i = 0; i < a.gtab.size(); ++i) {
      auto ind = fs_relation_check(a, a.gtab.rows[i]).indicators;
      auto const &p = type_profile(dyson_type(a, i));
      if (ind.fs_hat_real != p.fs_hat_real || ind.fs_complex != p.fs_complex || ind.fs_real != p.fs_real) {
        ok = false;
        return "character " + std::to_string(i) + " of type " + p.type;
      }
    }
    return "";
  });

  add("block fields and counts match the type table", [&](bool &ok) -> std::string {
    for (auto const &b : reports) {
      auto const &p = type_profile(b.dyson_type);
      if (!(b.fields == p.fields) || !(b.counts == p.counts)) {
        ok = false;
        return "orbit " + detail::vec_str(b.orbit) + " of type " + b.dyson_type + ": fields " + b.fields.str();
      }
    }
    return std::to_string(reports.size()) + " blocks";
  });

  if (opt.expected_type)
    add("seed character has the expected type", [&](bool &ok) -> std::string {
      std::size_t s = seed_character(a, opt.seed_marker);
      std::string got = dyson_type(a, s);
      ok = got == *opt.expected_type;
      return "seed " + std::to_string(s) + " has type " + got;
    });

  add("A-rows equal Real classes", [&](bool &ok) -> std::string {
    ok = t.rows.size() == a.real_classes.size();
    return std::to_string(t.rows.size()) + " rows, " + std::to_string(a.real_classes.size()) + " Real classes";
  });

  add("centre dimension equals class count", [&](bool &ok) -> std::string {
    auto c = centre_report(a, t);
    ok = c.holds();
    return "r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) + " t=" + std::to_string(c.t) +
           " dim=" + std::to_string(c.centre_dim) + " classes=" + std::to_string(c.class_count);
  });

  add("complex rows count classes minus Real classes", [&](bool &ok) -> std::string {
    std::size_t s = 0;
    for (auto const &row : t.rows) s += row.type == Field::C;
    ok = s == a.class_count() - a.real_classes.size();
    return std::to_string(s) + " complex rows";
  });

  add("row orthogonality", [&](bool &ok) -> std::string {
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows.size(); ++j) {
        if (!row_orthogonality(a, t, i, j).holds || hom_dimension(a, t, i, j) != (i == j ? t.rows[i].m : 0)) {
          ok = false;
          return "rows " + std::to_string(i) + ", " + std::to_string(j);
        }
      }
    return "";
  });

  add("column orthogonality", [&](bool &ok) -> std::string {
    for (std::size_t r = 0; r < t.real_classes.size(); ++r)
      for (std::size_t s = 0; s < t.real_classes.size(); ++s) {
        auto c = column_orthogonality(a, t, r, s);
        if (!c.holds) {
          ok = false;
          return "Real classes " + std::to_string(r) + ", " + std::to_string(s) + ": " + c.lhs.str() + " vs " + c.rhs.str();
        }
      }
    return "";
  });

  add("A-rows are distinct independent Real class functions", [&](bool &ok) -> std::string {
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      for (std::size_t k = 0; k < cd.size(); ++k)
        if (!(t.rows[j].character.values[k] == t.value(a, j, a.real_class_of[k]))) {
          ok = false;
          return "row " + std::to_string(j) + " not constant on a Real class";
        }
    Matrix<Cyclotomic> m;
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      std::vector<Cyclotomic> v;
      for (std::size_t r = 0; r < t.real_classes.size(); ++r) v.push_back(t.value(a, j, r));
      m.push_back(std::move(v));
    }
    if (rank(m, Cyclotomic(1)) != t.rows.size()) {
      ok = false;
      return "rows are linearly dependent";
    }
    return "";
  });

  add("realification computed two ways", [&](bool &ok) -> std::string {
    for (std::size_t i = 0; i < a.gtab.size(); ++i) {
      auto const &chi = a.gtab.rows[i];
      if (fs_real_indicator(a, chi) != 0) continue;
      Character tc = twist_character(gg, cd, chi);
      Character ct = twist_character(gg, cd, conjugate_character(chi));
      ClassFunction one = chi + conjugate_character(tc), two = chi + ct;
      if (!(one == two) || !(realify_character(a, chi) == one) || !(t.rows[a_row_of(t, i)].character == one)) {
        ok = false;
        return "character " + std::to_string(i);
      }
    }
    return "";
  });

  add("induction and restriction are adjoint", [&](bool &ok) -> std::string {
    auto const &hd = a.htab.classes;
    for (std::size_t i = 0; i < a.gtab.size(); ++i)
      for (std::size_t j = 0; j < a.htab.size(); ++j) {
        auto up = induce_character(gg, hd, cd, a.gtab.rows[i]);
        auto down = restrict_character(gg, hd, cd, a.htab.rows[j]);
        if (!(a.htab.inner(up, a.htab.rows[j]) == a.gtab.inner(a.gtab.rows[i], down))) {
          ok = false;
          return "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
      }
    return "";
  });

  add("regular decomposition", [&](bool &) -> std::string {
    auto r = regular_decomposition(a, t);
    std::string s = "b =";
    for (auto const &x : r.b) s += " " + x.get_str();
    return s;
  });

  add("simple A-character test", [&](bool &ok) -> std::string {
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      if (!is_simple_a_character(a, t.rows[j].character)) {
        ok = false;
        return "row " + std::to_string(j) + " fails";
      }
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = i; j < t.rows.size(); ++j)
        if (is_simple_a_character(a, t.rows[i].character + t.rows[j].character)) {
          ok = false;
          return "sum of rows " + std::to_string(i) + ", " + std::to_string(j) + " passes";
        }
    return "";
  });

  add("central idempotents", [&](bool &ok) -> std::string {
    auto c = idempotent_check(a, t);
    ok = c.holds();
    return c.first_failure;
  });

  add("square-root counts", [&](bool &ok) -> std::string {
    std::vector<long long> per_class(cd.size(), -1);
    for (Element h = 0; h < gg.even_order(); ++h) {
      std::size_t k = cd.class_of[h];
      auto s = square_root_count(a, h);
      if (!s.holds() || (per_class[k] >= 0 && per_class[k] != s.odd_roots)) {
        ok = false;
        return "h = " + gg.even().label(h) + ": counted " + std::to_string(s.odd_roots) + ", formula " + s.formula.str();
      }
      per_class[k] = s.odd_roots;
    }
    return "";
  });

  add("square-root count peaks at the identity", [&](bool &ok) -> std::string {
    try {
      ok = max_at_identity_check(a, t);
    } catch (Error const &e) {
      if (e.code() != Errc::NotApplicable) throw;
      return "not applicable: type H present";
    }
    return "";
  });

  add("algebra decomposition", [&](bool &ok) -> std::string {
    auto d = algebra_decomposition(a, t);
    ok = d.holds();
    std::string s;
    for (auto const &f : d.skew) s += f.str() + " ";
    return s + (d.rank_checked ? "(ranks checked)" : "(ranks not checked)");
  });

  add("types independent of the odd element", [&](bool &ok) -> std::string {
    Element other = gg.chosen_odd();
    for (Element z = 0; z < G.order(); ++z)
      if (!gg.is_even(z)) other = z;
    if (other == gg.chosen_odd()) return "only one odd element";
    RealAnalysis b = analyze(gg.with_chosen_odd(other));
    auto tb = a_character_table(b);
    for (std::size_t i = 0; i < a.gtab.size(); ++i) {
      std::size_t j = b.gtab.index_of(Character{b.gtab.group_token, a.gtab.rows[i].values});
      if (dyson_type(a, i) != dyson_type(b, j)) {
        ok = false;
        return "character " + std::to_string(i);
      }
    }
    if (detail::a_row_keys(a, t) != detail::a_row_keys(b, tb)) {
      ok = false;
      return "A-rows differ";
    }
    return "w = " + G.label(other);
  });

  add("square-root difference as an indicator sum", [&](bool &ok) -> std::string {
    ok = square_difference_first_equality(a);
    return "";
  });

  if (totally_orthogonal(a)) {
    add("no quaternionic type on a totally orthogonal structure", [&](bool &ok) -> std::string {
      ok = quaternionic_absence_check(a, t);
      return "";
    });
    auto diffs = square_difference_identity(a);
    if (opt.alternating)
      add("closing square-root identity, as printed", [&](bool &ok) -> std::string {
        for (auto const &d : diffs)
          if (!d.holds()) {
            ok = false;
            return "class " + std::to_string(d.g_class) + " (" + gg.even().label(cd.classes[d.g_class].representative) +
                   "): character side " + d.lhs.str() + ", count side " + std::to_string(d.rhs);
          }
        return "";
      });
    add("closing square-root identity, opposite sign", [&](bool &ok) -> std::string {
      for (auto const &d : diffs)
        if (!d.holds_with_opposite_sign()) {
          ok = false;
          return "class " + std::to_string(d.g_class);
        }
      return "";
    });
  }
  return rep;
}

/// Cycle-type checks for A_n <= S_n, cross-checked against the grading module.
inline VerifyReport verify_alternating(std::size_t n) {
  VerifyReport rep{"A" + std::to_string(n) + " cycle types", {}};
  auto add = [&](std::string name, std::function<std::string(bool &)> const &body) {
    rep.checks.push_back(detail::run_check(std::move(name), body));
  };
  add("self-inverse criteria agree", [&](bool &ok) -> std::string {
    ok = self_inverse_criteria_agree(n);
    return "";
  });
  if (n <= 8)
    add("self-inverse verdicts match brute force", [&](bool &ok) -> std::string {
      for (auto const &ct : partitions(n))
        if (ct.is_even() && class_self_inverse(ct).self_inverse != brute_force_self_inverse(ct)) {
          ok = false;
          return ct.str();
        }
      return "";
    });
  if (n >= 2 && n <= 7)
    add("cycle-type counts match Real classes", [&](bool &ok) -> std::string {
      auto gg = alternating_in_symmetric(n);
      auto rcs = real_conjugacy_classes(gg);
      auto cls = conjugacy_classes(gg.even());
      std::size_t by_type = real_class_count_by_cycle_type(n);
      bool complex = has_complex_type(n).has_value();
      ok = by_type == rcs.size() && alternating_class_count(n) == cls.size() && complex == (cls.size() != rcs.size());
      return std::to_string(by_type) + " Real classes";
    });
  return rep;
}

}  // namespace areps
