#include <gtest/gtest.h>

#include "areps/io.hpp"

using namespace areps;

namespace {

std::string data(std::string const &name) { return std::string(AREPS_DATA_DIR) + "/" + name; }

template <class F>
std::string error_of(F &&f) {
  try {
    f();
  } catch (Error const &e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(TableFiles, RoundTrip) {
  for (auto const &g : {dicyclic_group(8), symmetric_group(4), builtin("X").graded.ghat()}) {
    auto back = parse_table(write_table(g));
    EXPECT_TRUE(back.same_table(g));
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(write_table(back), write_table(g));
  }
}

TEST(TableFiles, ErrorsCarryLine) {
  auto msg = error_of([] { parse_table("order 2\n0 1\n1 x\n", "t.table"); });
  EXPECT_NE(msg.find("t.table:3"), std::string::npos) << msg;
  msg = error_of([] { parse_table("# comment\norder 2\n0 1\n0 1\n", "u.table"); });
  EXPECT_FALSE(msg.empty());
  msg = error_of([] { parse_table("rows 2\n", "v.table"); });
  EXPECT_NE(msg.find("v.table:1"), std::string::npos) << msg;
  EXPECT_THROW(parse_table("order 3\n0 1 2\n1 2 0\n2 0 1\n", "w", GroupLimits{2}), Error);
}

TEST(TableFiles, ShippedTypeXWitnessMatchesBuiltin) {
  auto g = std::make_shared<FiniteGroup const>(parse_table(detail::read_file(data("type_x_witness.table")), "x"));
  auto b = builtin("X");
  EXPECT_TRUE(g->same_table(b.graded.ghat()));
  auto gg = parse_grading(g, detail::read_file(data("type_x_witness.grading")), "x.grading");
  EXPECT_EQ(gg.parities(), b.graded.parities());
  auto a = analyze(gg);
  bool found = false;
  for (std::size_t i = 0; i < a.gtab.size(); ++i) found = found || dyson_type(a, i) == "X";
  EXPECT_TRUE(found);
}

TEST(PermutationFiles, Parse) {
  auto g = parse_permutations(detail::read_file(data("s4.perm")), "s4.perm");
  EXPECT_EQ(g.order(), 24u);
  auto gg = parse_grading(std::make_shared<FiniteGroup const>(g), detail::read_file(data("s4_alternating.grading")));
  EXPECT_EQ(gg.even_order(), 12u);
  auto msg = error_of([] { parse_permutations("degree 3\n(1 2 4)\n", "p.perm"); });
  EXPECT_NE(msg.find("p.perm:2"), std::string::npos) << msg;
  EXPECT_THROW(parse_permutations("(1 2)\n"), Error);
}

TEST(GradingFiles, Forms) {
  auto c4 = std::make_shared<FiniteGroup const>(cyclic_group(4));
  auto a = parse_grading(c4, "parity + - + -\n");
  auto b = parse_grading(c4, "subgroup 2\n");
  auto c = parse_grading(c4, write_parity(b));
  EXPECT_EQ(a.parities(), b.parities());
  EXPECT_EQ(c.parities(), b.parities());
  auto msg = error_of([&] { parse_grading(c4, "\n\nsubgroup 1\n", "g.grading"); });
  EXPECT_NE(msg.find("g.grading:3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("NotIndexTwo"), std::string::npos) << msg;
  EXPECT_THROW(parse_grading(c4, "parity + +\n"), Error);
  EXPECT_THROW(parse_grading(c4, "subgroup 9\n"), Error);
  EXPECT_THROW(parse_grading(c4, "subgroup (1 2)\n"), Error);
  EXPECT_THROW(parse_grading(c4, "kernel 2\n"), Error);
}

TEST(Json, CyclotomicRoundTrip) {
  std::vector<Cyclotomic> xs{Cyclotomic(), Cyclotomic(ratio(-7, 3)), root_of_unity(5, 2),
                             root_of_unity(8, 1) + root_of_unity(8, 7), root_of_unity(3, 1).scaled(ratio(5, 2))};
  for (auto const &x : xs) {
    Json j = to_json(x);
    EXPECT_EQ(cyclotomic_from_json(Json::parse(j.dump())), x) << j.dump();
    EXPECT_EQ(to_json(cyclotomic_from_json(j)).dump(), j.dump());
  }
  EXPECT_THROW(cyclotomic_from_json(Json{{"order", 3}}), Error);
}

TEST(Json, TablesRerenderIdentically) {
  for (auto const &name : builtin_names()) {
    auto a = analyze(builtin(name).graded);
    auto t = a_character_table(a);
    std::string one = a_table_json(a, t).dump(2);
    EXPECT_EQ(Json::parse(one).dump(2), one);
    std::string two = table_json(name, a.gg.ghat(), a.htab).dump(2);
    EXPECT_EQ(Json::parse(two).dump(2), two);
    auto back = Json::parse(two);
    for (std::size_t i = 0; i < a.htab.size(); ++i)
      for (std::size_t k = 0; k < a.htab.classes.size(); ++k)
        EXPECT_EQ(cyclotomic_from_json(back["rows"][i][k]), a.htab.rows[i].values[k]);
  }
}

TEST(Json, TableSchemaFields) {
  auto g = symmetric_group(3);
  auto j = table_json("S3", g, character_table(g));
  for (char const *k : {"group", "exponent", "classes", "rows"}) EXPECT_TRUE(j.contains(k)) << k;
  for (char const *k : {"rep", "size", "centralizer"}) EXPECT_TRUE(j["classes"][0].contains(k)) << k;
}

TEST(Grid, Alignment) {
  EXPECT_EQ(render_grid({{"a", "bb"}, {"ccc", "d"}}), "a    bb\nccc  d\n");
}
