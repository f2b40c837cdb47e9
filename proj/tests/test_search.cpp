#include <gtest/gtest.h>

#include <map>

#include "areps/search.hpp"

using namespace areps;

TEST(Search, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(cyclic_group(8)).size(), 4u);
  EXPECT_EQ(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size(), 6u);
  EXPECT_EQ(automorphisms(dicyclic_group(8)).size(), 24u);
  EXPECT_EQ(automorphisms(symmetric_group(3)).size(), 6u);
}

TEST(Search, GreedyGeneratorsGenerate) {
  for (auto const &ng : extension_catalog(16)) {
    auto gens = greedy_generators(ng.group);
    EXPECT_EQ(ng.group.generated_subgroup(gens).size(), ng.group.order()) << ng.name;
  }
}

TEST(Search, FindsEveryType) {
  std::map<std::string, std::size_t> order{{"I", 2}, {"II", 4}, {"III", 8}, {"IV", 6}, {"V", 6},
                                           {"VI", 8}, {"VII", 16}, {"VIII", 16}, {"IX", 16}, {"X", 32}};
  for (auto const &[type, want] : order) {
    auto r = search_type(type, 32);
    ASSERT_TRUE(r.has_value()) << type;
    EXPECT_EQ(r->graded.ghat().order(), want) << type;
    auto a = analyze(r->graded);
    EXPECT_EQ(dyson_type(a, r->seed), type);
  }
}

TEST(Search, RespectsOrderBound) {
  EXPECT_FALSE(search_type("X", 16).has_value());
  EXPECT_FALSE(search_type("VII", 8).has_value());
  EXPECT_THROW(search_type("XI", 8), Error);
}
