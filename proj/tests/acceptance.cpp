// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "areps/io.hpp"
#include "areps/verify.hpp"

using namespace areps;

namespace {

struct Subject {
  std::string name;
  GradedGroup gg;
  bool alternating = false;
};

std::vector<Subject> criterion_three_groups() {
  std::vector<Subject> out;
  for (auto const &n : builtin_names()) out.push_back({n, builtin(n).graded, false});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"A" + std::to_string(n), alternating_in_symmetric(n), true});
  return out;
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(std::string s) {
    ok = false;
    notes.push_back(std::move(s));
  }
};

int failures = 0;

void criterion(int id, std::string const &title, double budget_s, std::function<void(Outcome &)> const &body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) o.fail("took " + std::to_string(s) + " s, budget " + std::to_string(budget_s) + " s");
  std::ostringstream line;
  line.precision(3);
  line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << s << " s)";
  std::cout << line.str() << "\n";
  for (auto const &n : o.notes) std::cout << "     " << n << "\n";
  if (!o.ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "indicator triples of the ten seed characters", 5.0, [](Outcome &o) {
    std::map<std::string, std::array<long long, 3>> want{
        {"I", {4, 1, 1}},    {"II", {0, 1, -1}}, {"III", {2, 1, 0}},     {"IV", {0, 0, 0}},  {"V", {2, 0, 1}},
        {"VI", {-2, 0, -1}}, {"VII", {0, 0, 0}}, {"VIII", {-4, -1, -1}}, {"IX", {0, -1, 1}}, {"X", {-2, -1, 0}}};
    for (auto const &[name, triple] : want) {
      Builtin b = builtin(name);
      RealAnalysis a = analyze(b.graded);
      auto r = fs_relation_check(a, a.gtab.rows[seed_character(a, b.seed_marker)]);
      std::array<long long, 3> got{r.indicators.fs_hat_real, r.indicators.fs_complex, r.indicators.fs_real};
      if (got != triple || !r.holds)
        o.fail(name + ": got (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," + std::to_string(got[2]) + ")");
    }
  });

  criterion(2, "Dyson types, field triples and block counts", 10.0, [](Outcome &o) {
    for (auto const &name : dyson_names()) {
      Builtin b = builtin(name);
      RealAnalysis a = analyze(b.graded);
      ACharacterTable t = a_character_table(a);
      std::size_t s = seed_character(a, b.seed_marker);
      auto const &p = type_profile(name);
      std::string got = dyson_type(a, s);
      if (got != name) o.fail(name + ": seed has type " + got);
      if (!(field_triple(a, s) == p.fields)) o.fail(name + ": fields " + field_triple(a, s).str());
      if (!(block_counts(a, t, s) == p.counts)) o.fail(name + ": block counts differ");
    }
  });

  auto groups = criterion_three_groups();
  std::vector<RealAnalysis> analyses;
  std::vector<ACharacterTable> tables;
  for (auto const &g : groups) {
    analyses.push_back(analyze(g.gg));
    tables.push_back(a_character_table(analyses.back()));
  }

  criterion(3, "A-rows, centre dimension and complex-row counts", 0, [&](Outcome &o) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto const &a = analyses[i];
      auto const &t = tables[i];
      if (t.rows.size() != a.real_classes.size()) o.fail(groups[i].name + ": A-rows vs Real classes");
      if (!centre_report(a, t).holds()) o.fail(groups[i].name + ": centre dimension");
      std::size_t c = 0;
      for (auto const &row : t.rows) c += row.type == Field::C;
      if (c != a.class_count() - a.real_classes.size()) o.fail(groups[i].name + ": complex rows");
    }
  });

  criterion(4, "row and column orthogonality", 0, [&](Outcome &o) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto const &a = analyses[i];
      auto const &t = tables[i];
      for (std::size_t p = 0; p < t.rows.size(); ++p)
        for (std::size_t q = 0; q < t.rows.size(); ++q)
          if (!row_orthogonality(a, t, p, q).holds) o.fail(groups[i].name + ": rows " + std::to_string(p) + "," + std::to_string(q));
      for (std::size_t r = 0; r < t.real_classes.size(); ++r)
        for (std::size_t s = 0; s < t.real_classes.size(); ++s)
          if (!column_orthogonality(a, t, r, s).holds)
            o.fail(groups[i].name + ": Real classes " + std::to_string(r) + "," + std::to_string(s));
    }
  });

  criterion(5, "square-root oracle and closing difference identity", 0, [&](Outcome &o) {
    std::size_t elements = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto const &a = analyses[i];
      for (Element h = 0; h < a.gg.even_order(); ++h, ++elements)
        if (!square_root_count(a, h).holds()) o.fail(groups[i].name + ": oracle mismatch at " + a.gg.even().label(h));
      if (!square_difference_first_equality(a)) o.fail(groups[i].name + ": count difference vs indicator sum");
    }
    o.notes.push_back("square-root oracle matches the indicator formula at all " + std::to_string(elements) + " even elements");
    std::vector<std::string> printed_fail, opposite_ok;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto const &a = analyses[i];
      if (!totally_orthogonal(a)) continue;
      bool printed = true, opposite = true;
      std::string witness;
      for (auto const &d : square_difference_identity(a)) {
        if (!d.holds() && witness.empty())
          witness = "class " + a.gg.even().label(a.classes().classes[d.g_class].representative) + ": character side " +
                    d.lhs.str() + ", count side " + std::to_string(d.rhs);
        printed = printed && d.holds();
        opposite = opposite && d.holds_with_opposite_sign();
      }
      if (!printed) o.fail(groups[i].name + ": closing identity fails at " + witness);
      if (opposite) opposite_ok.push_back(groups[i].name);
    }
    std::string s;
    for (auto const &n : opposite_ok) s += (s.empty() ? "" : ", ") + n;
    o.notes.push_back("with the right-hand sign reversed the identity holds on: " + s);
  });

  criterion(6, "alternating-group cycle-type results", 0, [](Outcome &o) {
    std::set<std::size_t> none{2, 3, 4, 7, 8, 12};
    for (std::size_t n = 2; n <= 20; ++n)
      if (has_complex_type(n).has_value() == (none.count(n) == 1)) o.fail("complex type wrong at n = " + std::to_string(n));
    for (std::size_t n = 1; n <= 8; ++n)
      for (auto const &t : partitions(n))
        if (t.is_even() && class_self_inverse(t).self_inverse != brute_force_self_inverse(t))
          o.fail("self-inverse verdict wrong for " + t.str());
    for (std::size_t n = 2; n <= 7; ++n)
      if (real_class_count_by_cycle_type(n) != real_conjugacy_classes(alternating_in_symmetric(n)).size())
        o.fail("Real class count wrong at n = " + std::to_string(n));
  });

  criterion(7, "central idempotents", 0, [&](Outcome &o) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto c = idempotent_check(analyses[i], tables[i]);
      if (!c.holds()) o.fail(groups[i].name + ": " + c.first_failure);
    }
  });

  criterion(8, "independence of the odd element and deterministic JSON", 0, [&](Outcome &o) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto const &gg = groups[i].gg;
      auto const &a = analyses[i];
      auto keys = detail::a_row_keys(a, tables[i]);
      for (Element w = 0; w < gg.ghat().order(); ++w) {
        if (gg.is_even(w) || w == gg.chosen_odd()) continue;
        RealAnalysis b = analyze(gg.with_chosen_odd(w));
        for (std::size_t j = 0; j < a.gtab.size(); ++j)
          if (dyson_type(a, j) != dyson_type(b, j)) o.fail(groups[i].name + ": type changes with w = " + gg.label(w));
        if (detail::a_row_keys(b, a_character_table(b)) != keys) o.fail(groups[i].name + ": A-rows change with w = " + gg.label(w));
        if (gg.ghat().order() > 32) break;  // one alternative odd element for the larger groups
      }
    }
    auto dump_all = [] {
      std::string s;
      for (auto const &g : criterion_three_groups()) {
        RealAnalysis a = analyze(g.gg);
        ACharacterTable t = a_character_table(a);
        Json blocks = Json::array();
        for (auto const &b : block_reports(a, t)) blocks.push_back(block_json(b));
        s += Json{{"schema", 1},
                  {"even", table_json(g.name, a.gg.even(), a.gtab)},
                  {"ghat", table_json(g.name, a.gg.ghat(), a.htab)},
                  {"atable", a_table_json(a, t)},
                  {"blocks", blocks}}
                 .dump(2);
      }
      return s;
    };
    std::string first = dump_all(), second = dump_all();
    if (first != second) o.fail("JSON differs between runs");
    o.notes.push_back(std::to_string(first.size()) + " bytes of JSON identical across two runs");
  });

  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed")) << "\n";
  return failures ? 1 : 0;
}
