// areps: command-line front end for the Real representation theory library.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "areps/io.hpp"
#include "areps/search.hpp"
#include "areps/verify.hpp"

namespace {

using namespace areps;

constexpr int kInputError = 1;
constexpr int kTheoremFailure = 2;

struct Source {
  std::string graded;
  std::string group_file;
  std::string perm_file;
  std::string grading_file;
  std::string format = "text";
  std::size_t max_order = 0;

  void attach(CLI::App *cmd) {
    cmd->add_option("--graded", graded, "builtin graded group (I..X, IX-pauli, A<n>)");
    cmd->add_option("--group", group_file, "multiplication-table file");
    cmd->add_option("--perm", perm_file, "permutation-generator file");
    cmd->add_option("--grading", grading_file, "grading file for --group or --perm");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-order", max_order, "group order cap (env AREPS_MAX_ORDER)");
  }

  bool json() const { return format == "json"; }

  GroupLimits limits() const {
    GroupLimits l;
    if (max_order) {
      l.max_order = max_order;
    } else if (char const *env = std::getenv("AREPS_MAX_ORDER")) {
      try {
        l.max_order = std::stoull(env);
      } catch (std::exception const &) {
        throw Error(Errc::InvalidInput, std::string("AREPS_MAX_ORDER is not a number: ") + env);
      }
    }
    return l;
  }

  std::string name() const {
    if (!graded.empty()) return graded;
    return group_file.empty() ? perm_file : group_file;
  }

  std::shared_ptr<FiniteGroup const> load_group() const {
    int n = !graded.empty() + !group_file.empty() + !perm_file.empty();
    if (n != 1) throw Error(Errc::InvalidInput, "give exactly one of --graded, --group, --perm");
    if (!group_file.empty())
      return std::make_shared<FiniteGroup const>(parse_table(detail::read_file(group_file), group_file, limits()));
    if (!perm_file.empty())
      return std::make_shared<FiniteGroup const>(parse_permutations(detail::read_file(perm_file), perm_file, limits()));
    return load_graded().ghat_ptr();
  }

  GradedGroup load_graded() const {
    if (!graded.empty()) {
      if (!group_file.empty() || !perm_file.empty() || !grading_file.empty())
        throw Error(Errc::InvalidInput, "--graded excludes --group, --perm and --grading");
      return load_builtin().graded;
    }
    if (grading_file.empty()) throw Error(Errc::InvalidInput, "a graded group needs --graded, or --grading with --group/--perm");
    return parse_grading(load_group(), detail::read_file(grading_file), grading_file);
  }

  Builtin load_builtin() const {
    if (graded.size() > 1 && graded[0] == 'A' && std::isdigit(static_cast<unsigned char>(graded[1]))) {
      std::size_t n = std::stoul(graded.substr(1));
      return Builtin{graded, "A" + std::to_string(n) + " <= S" + std::to_string(n), "", alternating_in_symmetric(n, limits()),
                     std::nullopt};
    }
    Builtin b = builtin(graded);
    detail::check_order(b.graded.ghat().order(), limits());
    return b;
  }
};

void emit(Json body) {
  Json out{{"schema", 1}};
  for (auto &[k, v] : body.items()) out[k] = v;
  std::cout << out.dump(2) << "\n";
}

std::string character_name(CharacterTable const &t, std::size_t i) {
  auto const &row = t.rows[i];
  if (t.degree(i) == 1) {
    if (row == t.trivial()) return "trivial";
    bool sign = true;
    for (auto const &v : row.values) sign = sign && (v == Cyclotomic(1) || v == Cyclotomic(-1));
    if (sign) return "sign";
  }
  return "chi" + std::to_string(i);
}

std::string table_text(FiniteGroup const &g, CharacterTable const &t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, size{"size"};
  for (auto const &c : t.classes.classes) {
    head.push_back(g.label(c.representative));
    size.push_back(std::to_string(c.size()));
  }
  cells.push_back(head);
  cells.push_back(size);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> r{character_name(t, i)};
    for (auto const &v : t.rows[i].values) r.push_back(v.str());
    cells.push_back(r);
  }
  return render_grid(cells);
}

int cmd_classes(Source const &s) {
  auto g = s.load_group();
  ClassData cd = conjugacy_classes(*g);
  if (s.json()) {
    emit(Json{{"group", s.name()}, {"order", g->order()}, {"classes", classes_json(*g, cd)}});
    return 0;
  }
  std::vector<std::vector<std::string>> cells{{"class", "rep", "size", "centralizer", "inverse"}};
  for (std::size_t k = 0; k < cd.size(); ++k) {
    auto const &c = cd.classes[k];
    cells.push_back({std::to_string(k), g->label(c.representative), std::to_string(c.size()),
                     std::to_string(c.centralizer_order), std::to_string(cd.inverse[k])});
  }
  std::cout << s.name() << ": order " << g->order() << ", " << cd.size() << " classes\n" << render_grid(cells);
  return 0;
}

int cmd_real_classes(Source const &s) {
  GradedGroup gg = s.load_graded();
  auto rcs = real_conjugacy_classes(gg);
  if (s.json()) {
    emit(Json{{"group", s.name()}, {"order", gg.ghat().order()}, {"real_classes", real_classes_json(gg, rcs)}});
    return 0;
  }
  std::vector<std::vector<std::string>> cells{{"class", "rep", "size", "stabilizer", "case"}};
  for (std::size_t k = 0; k < rcs.size(); ++k)
    cells.push_back({std::to_string(k), gg.label(rcs[k].representative), std::to_string(rcs[k].size()),
                     std::to_string(rcs[k].real_stabilizer_order), case_name(rcs[k].case_b)});
  std::cout << s.name() << ": " << rcs.size() << " Real classes\n" << render_grid(cells);
  return 0;
}

int cmd_chartable(Source const &s) {
  bool graded = !s.graded.empty() || !s.grading_file.empty();
  if (!graded) {
    auto g = s.load_group();
    CharacterTable t = character_table(*g);
    if (s.json())
      emit(table_json(s.name(), *g, t));
    else
      std::cout << s.name() << "\n" << table_text(*g, t);
    return 0;
  }
  GradedGroup gg = s.load_graded();
  CharacterTable te = character_table(gg.even()), th = character_table(gg.ghat());
  if (s.json()) {
    emit(Json{{"even", table_json(s.name() + " even", gg.even(), te)}, {"ghat", table_json(s.name(), gg.ghat(), th)}});
    return 0;
  }
  std::cout << "G (even subgroup)\n" << table_text(gg.even(), te) << "\nG-hat\n" << table_text(gg.ghat(), th);
  return 0;
}

int cmd_achartable(Source const &s) {
  RealAnalysis a = analyze(s.load_graded());
  ACharacterTable t = a_character_table(a);
  if (s.json()) {
    Json body = a_table_json(a, t);
    body["group"] = s.name();
    emit(body);
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"", "m", "type"};
  for (auto const &rc : t.real_classes) head.push_back(a.gg.label(rc.representative));
  cells.push_back(head);
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    std::vector<std::string> r{"A" + std::to_string(j), std::to_string(t.rows[j].m), field_name(t.rows[j].type)};
    for (std::size_t k = 0; k < t.real_classes.size(); ++k) r.push_back(t.value(a, j, k).str());
    cells.push_back(r);
  }
  std::cout << s.name() << ": chosen odd element " << a.gg.label(t.chosen_odd) << "\n" << render_grid(cells);
  return 0;
}

int cmd_indicators(Source const &s) {
  RealAnalysis a = analyze(s.load_graded());
  Json rows = Json::array();
  std::vector<std::vector<std::string>> cells{{"character", "degree", "F_C", "F", "F_hat", "type"}};
  for (std::size_t i = 0; i < a.gtab.size(); ++i) {
    auto ind = indicators(a, a.gtab.rows[i]);
    std::string type = dyson_type(a, i);
    rows.push_back(Json{{"character", character_name(a.gtab, i)},
                        {"degree", a.gtab.degree(i)},
                        {"fs_complex", ind.fs_complex},
                        {"fs_real", ind.fs_real},
                        {"fs_hat_real", ind.fs_hat_real},
                        {"dyson_type", type}});
    cells.push_back({character_name(a.gtab, i), std::to_string(a.gtab.degree(i)), std::to_string(ind.fs_complex),
                     std::to_string(ind.fs_real), std::to_string(ind.fs_hat_real), type});
  }
  if (s.json())
    emit(Json{{"group", s.name()}, {"chosen_odd", a.gg.chosen_odd()}, {"characters", rows}});
  else
    std::cout << render_grid(cells);
  return 0;
}

int cmd_blocks(Source const &s) {
  RealAnalysis a = analyze(s.load_graded());
  ACharacterTable t = a_character_table(a);
  auto reports = block_reports(a, t);
  if (s.json()) {
    Json arr = Json::array();
    for (auto const &b : reports) arr.push_back(block_json(b));
    emit(Json{{"group", s.name()}, {"chosen_odd", a.gg.chosen_odd()}, {"blocks", arr}});
    return 0;
  }
  std::vector<std::vector<std::string>> cells{{"orbit", "type", "fields", "|A|", "|B|", "|C|", "|D|", "split"}};
  for (auto const &b : reports)
    cells.push_back({detail::vec_str(b.orbit), b.dyson_type, b.fields.str(), std::to_string(b.counts.a),
                     std::to_string(b.counts.b), std::to_string(b.counts.c), std::to_string(b.counts.d),
                     b.split ? "yes" : "no"});
  std::cout << render_grid(cells);
  return 0;
}

struct AlternatingOpts {
  std::size_t n = 0;
  bool real_classes = false;
  bool complex_type = false;
  std::string self_inverse;
};

int cmd_alternating(Source const &s, AlternatingOpts const &o) {
  if (o.n < 1) throw Error(Errc::InvalidInput, "--n must be positive");
  Json body{{"n", o.n}};
  std::string text;
  bool any = o.real_classes || o.complex_type || !o.self_inverse.empty();
  if (o.real_classes || !any) {
    if (o.n > 64) throw Error(Errc::InvalidInput, "--real-classes enumerates partitions; use n <= 64");
    Json arr = Json::array();
    std::vector<std::vector<std::string>> cells{{"cycle type", "splits", "self-inverse", "A_n classes", "Real classes"}};
    for (auto const &r : real_classes_by_cycle_type(o.n)) {
      arr.push_back(Json{{"cycle_type", r.type.parts},
                         {"splits", r.splits},
                         {"self_inverse", r.self_inverse},
                         {"alternating_classes", r.alternating_classes},
                         {"real_classes", r.real_classes}});
      cells.push_back({r.type.str(), r.splits ? "yes" : "no", r.self_inverse ? "yes" : "no",
                       std::to_string(r.alternating_classes), std::to_string(r.real_classes)});
    }
    body["cycle_types"] = arr;
    body["real_class_count"] = real_class_count_by_cycle_type(o.n);
    body["class_count"] = alternating_class_count(o.n);
    text += render_grid(cells) + "Real classes " + std::to_string(real_class_count_by_cycle_type(o.n)) + ", classes " +
            std::to_string(alternating_class_count(o.n)) + "\n";
  }
  if (o.complex_type) {
    auto w = has_complex_type(o.n);
    body["complex_type"] = w.has_value();
    body["witness"] = w ? Json(w->parts) : Json(nullptr);
    text += std::string("complex type: ") + (w ? "yes, witness " + w->str() : "no") + "\n";
  }
  if (!o.self_inverse.empty()) {
    CycleType ct = CycleType::parse(o.self_inverse, o.n);
    auto v = class_self_inverse(ct);
    body["cycle_type"] = ct.parts;
    body["self_inverse"] = v.self_inverse;
    body["reason"] = v.reason;
    text += ct.str() + ": " + (v.self_inverse ? "self-inverse" : "not self-inverse") + " (" + v.reason + ")\n";
  }
  if (s.json())
    emit(body);
  else
    std::cout << text;
  return 0;
}

Json report_json(VerifyReport const &r) {
  Json checks = Json::array();
  for (auto const &c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"subject", r.subject}, {"passed", r.passed()}, {"checks", checks}};
}

int cmd_verify(Source const &s) {
  std::vector<VerifyReport> reports;
  auto run_builtin = [&](std::string const &name) {
    Source one = s;
    one.graded = name;
    Builtin b = one.load_builtin();
    VerifyOptions opt;
    if (!b.dyson_type.empty()) {
      opt.expected_type = b.dyson_type;
      opt.seed_marker = b.seed_marker;
    } else {
      opt.alternating = true;
    }
    reports.push_back(verify_graded(name + " (" + b.description + ")", b.graded, opt));
    if (opt.alternating) reports.push_back(verify_alternating(b.graded.even().permutations().front().degree()));
  };
  if (s.graded == "all-builtins" || s.graded == "all") {
    for (auto const &n : builtin_names()) run_builtin(n);
    if (s.graded == "all")
      for (int n = 3; n <= 6; ++n) run_builtin("A" + std::to_string(n));
  } else if (!s.graded.empty()) {
    run_builtin(s.graded);
  } else {
    reports.push_back(verify_graded(s.name(), s.load_graded()));
  }

  bool ok = true;
  for (auto const &r : reports) ok = ok && r.passed();
  if (s.json()) {
    Json arr = Json::array();
    for (auto const &r : reports) arr.push_back(report_json(r));
    emit(Json{{"passed", ok}, {"reports", arr}});
  } else {
    for (auto const &r : reports) {
      std::size_t pass = 0;
      for (auto const &c : r.checks) pass += c.passed;
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.subject << ": " << pass << "/" << r.checks.size() << " checks\n";
      if (auto const *f = r.first_failure()) std::cout << "  first failure: " << f->name << ": " << f->detail << "\n";
    }
  }
  return ok ? 0 : kTheoremFailure;
}

int cmd_search(Source const &s, std::string const &type) {
  std::size_t cap = s.max_order ? s.max_order : 32;
  auto r = search_type(type, cap);
  if (!r) {
    if (s.json())
      emit(Json{{"type", type}, {"max_order", cap}, {"found", false}});
    else
      std::cout << "no witness of type " << type << " up to order " << cap << "\n";
    return 0;
  }
  RealAnalysis a = analyze(r->graded);
  auto ind = indicators(a, a.gtab.rows[r->seed]);
  if (s.json()) {
    emit(Json{{"type", type},
              {"max_order", cap},
              {"found", true},
              {"description", r->description},
              {"order", r->graded.ghat().order()},
              {"seed", r->seed},
              {"indicators", {ind.fs_hat_real, ind.fs_complex, ind.fs_real}},
              {"candidates", r->candidates},
              {"table", write_table(r->graded.ghat(), false)},
              {"grading", write_parity(r->graded)}});
    return 0;
  }
  std::cout << "type " << type << ": " << r->description << ", |G-hat| = " << r->graded.ghat().order() << ", seed chi"
            << r->seed << ", indicators (" << ind.fs_hat_real << ", " << ind.fs_complex << ", " << ind.fs_real << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Real representation theory of C2-graded finite groups"};
  app.require_subcommand(1);
  Source src;
  AlternatingOpts alt;
  std::string search_type_name;

  auto *classes = app.add_subcommand("classes", "conjugacy classes");
  auto *real = app.add_subcommand("real-classes", "Real conjugacy classes");
  auto *chartable = app.add_subcommand("chartable", "complex character tables");
  auto *achartable = app.add_subcommand("achartable", "A-character table");
  auto *ind = app.add_subcommand("indicators", "Frobenius-Schur indicators and Dyson types");
  auto *blocks = app.add_subcommand("blocks", "A-block reports");
  auto *verify = app.add_subcommand("verify", "run every theorem check");
  auto *search = app.add_subcommand("search-type", "smallest witness of a Dyson type");
  auto *alternating = app.add_subcommand("alternating", "cycle-type results for A_n <= S_n");
  for (auto *c : {classes, real, chartable, achartable, ind, blocks, verify, search}) src.attach(c);
  alternating->add_option("--format", src.format)->check(CLI::IsMember({"text", "json"}));
  alternating->add_option("--n", alt.n, "degree")->required();
  alternating->add_flag("--real-classes", alt.real_classes, "Real classes by cycle type");
  alternating->add_flag("--complex-type", alt.complex_type, "existence of a type C block");
  alternating->add_option("--self-inverse", alt.self_inverse, "cycle type, e.g. 3,5");
  search->add_option("--type", search_type_name, "Dyson type I..X")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classes) return cmd_classes(src);
    if (*real) return cmd_real_classes(src);
    if (*chartable) return cmd_chartable(src);
    if (*achartable) return cmd_achartable(src);
    if (*ind) return cmd_indicators(src);
    if (*blocks) return cmd_blocks(src);
    if (*verify) return cmd_verify(src);
    if (*search) return cmd_search(src, search_type_name);
    if (*alternating) return cmd_alternating(src, alt);
  } catch (Error const &e) {
    std::cerr << "areps: " << e.what() << "\n";
    return kInputError;
  } catch (std::exception const &e) {
    std::cerr << "areps: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
