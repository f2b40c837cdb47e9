#include <gtest/gtest.h>

#include <set>

#include "areps/grading.hpp"

using namespace areps;

namespace {

Element perm(FiniteGroup const &g, char const *cycles) {
  return *g.find_permutation(Permutation::parse(cycles, g.permutations()[0].degree()));
}

std::size_t class_count(GradedGroup const &gg) { return conjugacy_classes(gg.even()).size(); }

}  // namespace

TEST(GradedGroup, FromSubgroup) {
  auto c2 = std::make_shared<FiniteGroup const>(cyclic_group(2));
  auto gg = GradedGroup::from_subgroup(c2, {});
  EXPECT_EQ(gg.even_order(), 1u);
  EXPECT_FALSE(gg.is_even(gg.chosen_odd()));

  auto c4 = std::make_shared<FiniteGroup const>(cyclic_group(4));
  auto g2 = GradedGroup::from_subgroup(c4, {2});
  EXPECT_EQ(g2.even_order(), 2u);
  EXPECT_TRUE(g2.is_even(2));
  EXPECT_FALSE(g2.is_even(1));

  auto s3 = std::make_shared<FiniteGroup const>(symmetric_group(3));
  auto g3 = GradedGroup::from_subgroup(s3, {perm(*s3, "(1 2 3)")});
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(g3.parity(x), s3->permutations()[x].sign());
}

TEST(GradedGroup, RejectsWrongIndex) {
  auto s3 = std::make_shared<FiniteGroup const>(symmetric_group(3));
  try {
    GradedGroup::from_subgroup(s3, {perm(*s3, "(1 2)")});
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), Errc::NotIndexTwo);
  }
  std::vector<int> bad(6, 1);
  bad[1] = -1;
  EXPECT_THROW(GradedGroup::from_parity(s3, bad), Error);
  auto gg = GradedGroup::from_subgroup(s3, {perm(*s3, "(1 2 3)")});
  EXPECT_THROW(gg.with_chosen_odd(gg.even_subgroup()[0]), Error);
  EXPECT_THROW(gg.to_local(gg.chosen_odd()), Error);
}

TEST(Builtins, Shapes) {
  auto one = builtin("I");
  EXPECT_EQ(one.graded.ghat().order(), 2u);
  EXPECT_EQ(class_count(one.graded), 1u);
  auto six = builtin("VI");
  EXPECT_EQ(six.graded.even_order(), 4u);
  bool cyclic = false;
  for (Element x = 0; x < 4; ++x) cyclic = cyclic || six.graded.even().element_order(x) == 4;
  EXPECT_TRUE(cyclic);
  auto eight = builtin("VIII");
  EXPECT_EQ(eight.graded.ghat().order(), 16u);
  EXPECT_EQ(class_count(eight.graded), 5u);
  EXPECT_EQ(builtin("X").graded.ghat().order(), 32u);
  EXPECT_THROW(builtin("XI"), Error);
}

TEST(Builtins, ClassCounts) {
  std::vector<std::pair<std::size_t, std::size_t>> want{{1, 1}, {2, 2}, {4, 3}, {3, 2}, {3, 3}, {4, 4},
                                                          {8, 5}, {5, 5}, {5, 4}, {5, 5}, {10, 7}};
  auto names = builtin_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto gg = builtin(names[i]).graded;
    EXPECT_EQ(class_count(gg), want[i].first) << names[i];
    EXPECT_EQ(real_conjugacy_classes(gg).size(), want[i].second) << names[i];
  }
}

TEST(RealConjugate, Examples) {
  auto c6 = std::make_shared<FiniteGroup const>(cyclic_group(6));
  auto gg = GradedGroup::from_subgroup(c6, {2});
  EXPECT_EQ(real_conjugate(gg, c6->identity(), 2), 2u);
  EXPECT_EQ(real_conjugate(gg, 3, 2), 4u);

  auto a3 = alternating_in_symmetric(3);
  auto const &s3 = a3.ghat();
  EXPECT_EQ(real_conjugate(a3, perm(s3, "(1 2)"), perm(s3, "(1 2 3)")), perm(s3, "(1 2 3)"));
  EXPECT_THROW(real_conjugate(a3, 0, perm(s3, "(1 2)")), Error);
}

TEST(RealConjugate, IsAGroupAction) {
  for (auto const &name : builtin_names()) {
    auto gg = builtin(name).graded;
    auto const &G = gg.ghat();
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b)
        for (Element g : gg.even_subgroup())
          ASSERT_EQ(real_conjugate(gg, G.mul(a, b), g), real_conjugate(gg, a, real_conjugate(gg, b, g))) << name;
    for (Element g : gg.even_subgroup()) EXPECT_EQ(real_conjugate(gg, G.identity(), g), g);
  }
}

TEST(RealClasses, Examples) {
  auto c6 = std::make_shared<FiniteGroup const>(cyclic_group(6));
  auto iv = real_conjugacy_classes(GradedGroup::from_subgroup(c6, {2}));
  ASSERT_EQ(iv.size(), 2u);
  EXPECT_EQ(iv[0].members, (std::vector<Element>{0}));
  EXPECT_EQ(iv[1].members, (std::vector<Element>{2, 4}));

  auto v = real_conjugacy_classes(builtin("V").graded);
  EXPECT_EQ(v.size(), 3u);
  for (auto const &rc : v) EXPECT_EQ(rc.size(), 1u);

  auto a3 = real_conjugacy_classes(alternating_in_symmetric(3));
  EXPECT_EQ(a3.size(), 3u);
  for (auto const &rc : a3) EXPECT_EQ(rc.size(), 1u);
}

TEST(RealClasses, StabilizerOrbitRelation) {
  for (auto const &name : builtin_names()) {
    auto gg = builtin(name).graded;
    std::size_t total = 0;
    for (auto const &rc : real_conjugacy_classes(gg)) {
      total += rc.size();
      EXPECT_EQ(rc.size() * rc.real_stabilizer_order, gg.ghat().order()) << name;
    }
    EXPECT_EQ(total, gg.even_order());
  }
}

TEST(ClassCase, Examples) {
  auto c6 = std::make_shared<FiniteGroup const>(cyclic_group(6));
  auto gg = GradedGroup::from_subgroup(c6, {2});
  auto cd = conjugacy_classes(gg.even());
  auto [a0, b0] = classify_class_case(gg, cd.classes[cd.identity_class]);
  EXPECT_EQ(a0, CaseA::A2);
  EXPECT_EQ(b0, CaseB::B2);
  auto [a1, b1] = classify_class_case(gg, cd.classes[cd.class_of[gg.to_local(2)]]);
  EXPECT_EQ(a1, CaseA::A2);
  EXPECT_EQ(b1, CaseB::B1);

  auto a3 = alternating_in_symmetric(3);
  auto ad = conjugacy_classes(a3.even());
  Element c = perm(a3.ghat(), "(1 2 3)");
  auto [a2, b2] = classify_class_case(a3, ad.classes[ad.class_of[a3.to_local(c)]]);
  EXPECT_EQ(a2, CaseA::A1);
  EXPECT_EQ(b2, CaseB::B2);
}

TEST(SplitStructure, Examples) {
  EXPECT_TRUE(is_split_structure(alternating_in_symmetric(3)));
  EXPECT_FALSE(is_split_structure(builtin("II").graded));
  EXPECT_TRUE(is_split_structure(builtin("VIII").graded));
}

TEST(SelfInverseShortcut, Examples) {
  auto a4 = alternating_in_symmetric(4);
  auto a4d = conjugacy_classes(a4.even());
  auto s4d = conjugacy_classes(a4.ghat());
  auto id = self_inverse_shortcut(a4, a4d, s4d, a4d.identity_class);
  EXPECT_EQ(id.members, (std::vector<Element>{a4.ghat().identity()}));
  Element c = perm(a4.ghat(), "(1 2 3)");
  std::size_t k = a4d.class_of[a4.to_local(c)];
  auto three = self_inverse_shortcut(a4, a4d, s4d, k);
  EXPECT_EQ(three.size(), 4u);

  auto a5 = alternating_in_symmetric(5);
  auto a5d = conjugacy_classes(a5.even());
  auto s5d = conjugacy_classes(a5.ghat());
  Element f = perm(a5.ghat(), "(1 2 3 4 5)");
  auto five = self_inverse_shortcut(a5, a5d, s5d, a5d.class_of[a5.to_local(f)]);
  EXPECT_EQ(five.size(), 24u);
  for (auto const &rc : real_conjugacy_classes(a5))
    if (std::find(rc.members.begin(), rc.members.end(), f) != rc.members.end()) EXPECT_EQ(rc.members, five.members);
}

TEST(Alternating, RealClassCounts) {
  std::vector<std::size_t> want{3, 4, 4, 6, 9};
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(real_conjugacy_classes(alternating_in_symmetric(n)).size(), want[n - 3]);
  EXPECT_EQ(builtin("A5").graded.ghat().order(), 120u);
}
