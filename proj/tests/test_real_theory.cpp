#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>

#include "areps/real_theory.hpp"

using namespace areps;

namespace {

struct Fixture {
  Builtin b;
  RealAnalysis a;
  ACharacterTable t;
  std::size_t seed;
};

Fixture load(std::string const &name) {
  Builtin b = builtin(name);
  RealAnalysis a = analyze(b.graded);
  ACharacterTable t = a_character_table(a);
  std::size_t seed = seed_character(a, b.seed_marker);
  return {b, std::move(a), std::move(t), seed};
}

std::size_t row_of_type(ACharacterTable const &t, Field f) {
  for (std::size_t j = 0; j < t.rows.size(); ++j)
    if (t.rows[j].type == f) return j;
  ADD_FAILURE() << "no row of type " << field_name(f);
  return 0;
}

}  // namespace

TEST(Indicators, ComplexIndicator) {
  auto iv = load("IV");
  EXPECT_EQ(fs_complex(iv.a, iv.a.gtab.trivial()), 1);
  EXPECT_EQ(fs_complex(iv.a, iv.a.gtab.rows[1]), 0);
  auto viii = load("VIII");
  EXPECT_EQ(fs_complex(viii.a, viii.a.gtab.rows[viii.seed]), -1);
  EXPECT_EQ(viii.a.gtab.degree(viii.seed), 2);
}

TEST(Indicators, RealIndicator) {
  auto i = load("I");
  EXPECT_EQ(fs_real_indicator(i.a, i.a.gtab.trivial()), 1);
  auto ii = load("II");
  EXPECT_EQ(fs_real_indicator(ii.a, ii.a.gtab.rows[ii.seed]), -1);
  auto v = load("V");
  EXPECT_EQ(fs_real_indicator(v.a, v.a.gtab.rows[v.seed]), 1);
}

TEST(Indicators, SeedTriples) {
  std::map<std::string, std::array<long long, 3>> want{
      {"I", {4, 1, 1}},     {"II", {0, 1, -1}},   {"III", {2, 1, 0}},   {"IV", {0, 0, 0}},   {"V", {2, 0, 1}},
      {"VI", {-2, 0, -1}},  {"VII", {0, 0, 0}},   {"VIII", {-4, -1, -1}}, {"IX", {0, -1, 1}}, {"IX-pauli", {0, -1, 1}},
      {"X", {-2, -1, 0}}};
  for (auto const &[name, triple] : want) {
    auto f = load(name);
    auto r = fs_relation_check(f.a, f.a.gtab.rows[f.seed]);
    EXPECT_TRUE(r.holds) << name;
    EXPECT_EQ(r.indicators.fs_hat_real, triple[0]) << name;
    EXPECT_EQ(r.indicators.fs_complex, triple[1]) << name;
    EXPECT_EQ(r.indicators.fs_real, triple[2]) << name;
  }
}

TEST(Indicators, RelationHoldsForEveryCharacter) {
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    for (auto const &chi : f.a.gtab.rows) EXPECT_TRUE(fs_relation_check(f.a, chi).holds) << name;
  }
}

TEST(DysonType, SeedsOfBuiltins) {
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    EXPECT_EQ(dyson_type(f.a, f.seed), f.b.dyson_type) << name;
  }
}

TEST(DysonType, IndependentOfOddElement) {
  for (auto const &name : builtin_names()) {
    auto gg = builtin(name).graded;
    auto a = analyze(gg);
    for (Element w = 0; w < gg.ghat().order(); ++w) {
      if (gg.is_even(w)) continue;
      auto b = analyze(gg.with_chosen_odd(w));
      for (std::size_t i = 0; i < a.gtab.size(); ++i) EXPECT_EQ(dyson_type(a, i), dyson_type(b, i)) << name << " w=" << w;
    }
  }
}

TEST(DysonType, ImpossiblePairs) {
  EXPECT_THROW(dyson_type_from(2, 0, false), Error);
  EXPECT_EQ(dyson_type_from(0, 0, false), "IV");
  EXPECT_EQ(dyson_type_from(0, 0, true), "VII");
}

TEST(FieldTriple, Examples) {
  auto i = load("I");
  EXPECT_EQ(field_triple(i.a, i.seed).str(), "RRR");
  auto ii = load("II");
  EXPECT_EQ(field_triple(ii.a, ii.seed).str(), "RCH");
  auto ix = load("IX");
  EXPECT_EQ(field_triple(ix.a, ix.seed).str(), "HCR");
}

TEST(BlockCounts, Examples) {
  auto i = load("I");
  EXPECT_EQ(block_counts(i.a, i.t, i.seed), (BlockCounts{1, 2, 1, 1}));
  auto vii = load("VII");
  EXPECT_EQ(block_counts(vii.a, vii.t, vii.seed), (BlockCounts{2, 1, 4, 2}));
  auto x = load("X");
  EXPECT_EQ(block_counts(x.a, x.t, x.seed), (BlockCounts{2, 1, 2, 1}));
}

TEST(BlockReports, MatchTypeProfiles) {
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    for (auto const &r : block_reports(f.a, f.t)) {
      auto const &p = type_profile(r.dyson_type);
      EXPECT_EQ(r.fields, p.fields) << name << " " << r.dyson_type;
      EXPECT_EQ(r.counts, p.counts) << name << " " << r.dyson_type;
    }
  }
}

TEST(ACharacterTable, Recipes) {
  auto v = load("V");
  ASSERT_EQ(v.t.rows.size(), 3u);
  for (auto const &row : v.t.rows) EXPECT_EQ(row.m, 1);

  auto iv = load("IV");
  ASSERT_EQ(iv.t.rows.size(), 2u);
  EXPECT_EQ(iv.t.rows[0].m, 1);
  EXPECT_EQ(iv.t.rows[1].m, 2);
  EXPECT_EQ(iv.t.rows[1].character, iv.a.gtab.rows[1] + iv.a.gtab.rows[2]);

  auto ii = load("II");
  ASSERT_EQ(ii.t.rows.size(), 2u);
  EXPECT_EQ(ii.t.rows[1].m, 4);
  EXPECT_EQ(ii.t.rows[1].character, ii.a.gtab.rows[1] + ii.a.gtab.rows[1]);
}

TEST(ACharacterTable, FsAByType) {
  auto ii = load("II");
  EXPECT_EQ(fs_a(ii.a, ii.t.rows[row_of_type(ii.t, Field::R)].character), 1);
  EXPECT_EQ(fs_a(ii.a, ii.t.rows[row_of_type(ii.t, Field::H)].character), -2);
  auto iv = load("IV");
  EXPECT_EQ(fs_a(iv.a, iv.t.rows[row_of_type(iv.t, Field::C)].character), 0);
}

TEST(ACharacterTable, HomDimensions) {
  auto ii = load("II");
  std::size_t r = row_of_type(ii.t, Field::R), h = row_of_type(ii.t, Field::H);
  EXPECT_EQ(hom_dimension(ii.a, ii.t, r, r), 1);
  EXPECT_EQ(hom_dimension(ii.a, ii.t, h, h), 4);
  EXPECT_EQ(hom_dimension(ii.a, ii.t, r, h), 0);
}

TEST(ACharacterTable, RegularDecomposition) {
  auto b = [](std::string const &n) {
    auto f = load(n);
    return regular_decomposition(f.a, f.t).b;
  };
  EXPECT_EQ(b("I"), (std::vector<Rational>{2}));
  EXPECT_EQ(b("II"), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(b("IV"), (std::vector<Rational>{2, 2}));
}

TEST(ACharacterTable, SimpleTest) {
  auto ii = load("II");
  for (auto const &row : ii.t.rows) EXPECT_TRUE(is_simple_a_character(ii.a, row.character));
  auto v = load("V");
  EXPECT_FALSE(is_simple_a_character(v.a, v.t.rows[0].character + v.t.rows[1].character));
  EXPECT_TRUE(is_simple_a_character(ii.a, ii.a.gtab.rows[1] + ii.a.gtab.rows[1]));
  EXPECT_FALSE(is_simple_a_character(ii.a, ii.a.gtab.rows[1]));
}

TEST(Centre, Reports) {
  auto iv = load("IV");
  auto c = centre_report(iv.a, iv.t);
  EXPECT_EQ(c.r, 1u);
  EXPECT_EQ(c.s, 1u);
  EXPECT_EQ(c.t, 0u);
  EXPECT_TRUE(c.holds());
  auto a3 = analyze(alternating_in_symmetric(3));
  auto c3 = centre_report(a3, a_character_table(a3));
  EXPECT_EQ(c3.r, 3u);
  EXPECT_EQ(c3.s, 0u);
  EXPECT_EQ(c3.centre_dim, 3u);
  EXPECT_TRUE(c3.holds());
}

TEST(Orthogonality, RowsAndColumns) {
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    for (std::size_t i = 0; i < f.t.rows.size(); ++i)
      for (std::size_t j = 0; j < f.t.rows.size(); ++j) EXPECT_TRUE(row_orthogonality(f.a, f.t, i, j).holds) << name;
    for (std::size_t r = 0; r < f.t.real_classes.size(); ++r)
      for (std::size_t s = 0; s < f.t.real_classes.size(); ++s)
        EXPECT_TRUE(column_orthogonality(f.a, f.t, r, s).holds) << name;
  }
}

TEST(Idempotents, Examples) {
  auto i = load("I");
  auto e = central_idempotent(i.a, i.t, 0);
  EXPECT_EQ(e.class_coefficients, (std::vector<Cyclotomic>{1}));

  auto ii = load("II");
  auto eh = central_idempotent(ii.a, ii.t, row_of_type(ii.t, Field::H));
  auto const &cd = ii.a.classes();
  EXPECT_EQ(eh.class_coefficients[cd.identity_class], Cyclotomic(ratio(1, 2)));
  EXPECT_EQ(eh.class_coefficients[1 - cd.identity_class], Cyclotomic(ratio(-1, 2)));

  auto iv = load("IV");
  auto ec = central_idempotent(iv.a, iv.t, row_of_type(iv.t, Field::C));
  EXPECT_EQ(ec.class_coefficients, (std::vector<Cyclotomic>{ratio(2, 3), ratio(-1, 3), ratio(-1, 3)}));
}

TEST(Idempotents, AllChecksHold) {
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    EXPECT_TRUE(idempotent_check(f.a, f.t).holds()) << name;
  }
}

TEST(SquareRoots, Examples) {
  auto a3 = analyze(alternating_in_symmetric(3));
  EXPECT_EQ(checked_square_root_count(a3, a3.gg.even().identity()), 3);
  auto ii = load("II");
  EXPECT_EQ(checked_square_root_count(ii.a, 0), 0);
  EXPECT_EQ(checked_square_root_count(ii.a, 1), 2);
  auto viii = load("VIII");
  long long r = 0;
  for (std::size_t i = 0; i < viii.a.gtab.size(); ++i)
    r += fs_real_indicator(viii.a, viii.a.gtab.rows[i]) * viii.a.gtab.degree(i);
  EXPECT_EQ(checked_square_root_count(viii.a, viii.a.gg.even().identity()), r);
}

TEST(SquareRoots, MaxAtIdentity) {
  auto a3 = analyze(alternating_in_symmetric(3));
  EXPECT_TRUE(max_at_identity_check(a3, a_character_table(a3)));
  auto a4 = analyze(alternating_in_symmetric(4));
  EXPECT_TRUE(max_at_identity_check(a4, a_character_table(a4)));
  auto ii = load("II");
  try {
    max_at_identity_check(ii.a, ii.t);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), Errc::NotApplicable);
  }
}

TEST(Realify, Examples) {
  auto i = load("I");
  EXPECT_EQ(realify_character(i.a, i.a.gtab.trivial()), i.a.gtab.trivial() + i.a.gtab.trivial());
  auto iv = load("IV");
  EXPECT_EQ(realify_character(iv.a, iv.a.gtab.rows[1]), iv.a.gtab.rows[1] + iv.a.gtab.rows[2]);
  auto a5 = analyze(alternating_in_symmetric(5));
  std::vector<std::size_t> threes;
  for (std::size_t i = 0; i < a5.gtab.size(); ++i)
    if (a5.gtab.degree(i) == 3) threes.push_back(i);
  ASSERT_EQ(threes.size(), 2u);
  auto sum = a5.gtab.rows[threes[0]] + a5.gtab.rows[threes[1]];
  EXPECT_EQ(realify_character(a5, a5.gtab.rows[threes[0]]), sum);
  EXPECT_EQ(realify_character(a5, a5.gtab.rows[threes[1]]), sum);
}

TEST(AlgebraDecomposition, Builtins) {
  auto i = load("I");
  auto d = algebra_decomposition(i.a, i.t);
  ASSERT_EQ(d.skew.size(), 1u);
  EXPECT_EQ(d.skew[0].str(), "M2(R)");
  EXPECT_EQ(d.complex_degrees, (std::vector<long long>{1}));
  for (auto const &name : builtin_names()) {
    auto f = load(name);
    auto dd = algebra_decomposition(f.a, f.t);
    EXPECT_TRUE(dd.holds()) << name;
    EXPECT_TRUE(dd.rank_checked) << name;
    long long total = 0;
    for (auto const &x : dd.skew) total += x.real_dim();
    EXPECT_EQ(total, static_cast<long long>(2 * f.a.gg.ghat().order()));
  }
}

TEST(SquareDifference, FirstEqualityHoldsEverywhere) {
  for (auto const &name : builtin_names()) EXPECT_TRUE(square_difference_first_equality(analyze(builtin(name).graded))) << name;
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_TRUE(square_difference_first_equality(analyze(alternating_in_symmetric(n))));
}

// The closing identity as printed has the opposite sign on its right-hand
// side; at the identity class of A_n the two sides are negatives of each other.
TEST(SquareDifference, PrintedSignFailsOppositeSignHolds) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto a = analyze(alternating_in_symmetric(n));
    ASSERT_TRUE(totally_orthogonal(a));
    auto diffs = square_difference_identity(a);
    bool all_printed = true;
    for (auto const &d : diffs) {
      EXPECT_TRUE(d.holds_with_opposite_sign()) << "A" << n << " class " << d.g_class;
      all_printed = all_printed && d.holds();
    }
    EXPECT_FALSE(all_printed) << "A" << n;
    auto const &e = diffs[a.classes().identity_class];
    EXPECT_NE(e.rhs, 0);
    EXPECT_EQ(e.lhs, Cyclotomic(static_cast<long>(-e.rhs)));
  }
}

TEST(TypeProfiles, TableShape) {
  auto const &p = type_profiles();
  ASSERT_EQ(p.size(), 10u);
  for (auto const &t : p) EXPECT_EQ(t.fs_hat_real, 2 * (t.fs_complex + t.fs_real)) << t.type;
  EXPECT_THROW(type_profile("XI"), Error);
}
