#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "areps/alternating.hpp"
#include "areps/real_theory.hpp"

namespace areps {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string read_file(std::string const &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> content_lines(std::string const &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    out.push_back(line.substr(b));
  }
  return out;
}

inline Error at_line(std::string const &where, std::size_t line, Error const &e) {
  return Error(e.code(), where + ":" + std::to_string(line + 1) + ": " + e.what());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multiplication-table files
//
//   order n
//   <n lines of n 0-based indices>
//   labels            (optional)
//   <n lines, one label each>

inline FiniteGroup parse_table(std::string const &text, std::string const &where = "<table>",
                               GroupLimits const &limits = {}) {
  auto lines = detail::content_lines(text);
  std::size_t i = 0;
  auto next = [&]() -> std::string const & {
    while (i < lines.size() && lines[i].empty()) ++i;
    if (i >= lines.size()) throw Error(Errc::ParseError, where + ": unexpected end of file");
    return lines[i++];
  };
  std::size_t n = 0;
  {
    std::istringstream hdr(next());
    std::string kw;
    if (!(hdr >> kw >> n) || kw != "order" || n == 0)
      throw detail::at_line(where, i - 1, Error(Errc::ParseError, "expected 'order <n>'"));
  }
  detail::check_order(n, limits);
  std::vector<std::vector<Element>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream row(next());
    std::size_t ln = i - 1;
    long long v;
    while (row >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw detail::at_line(where, ln, Error(Errc::ParseError, "entry " + std::to_string(v) + " out of range"));
      table[r].push_back(static_cast<Element>(v));
    }
    if (!row.eof()) throw detail::at_line(where, ln, Error(Errc::ParseError, "non-integer entry"));
    if (table[r].size() != n)
      throw detail::at_line(where, ln, Error(Errc::ParseError, "row has " + std::to_string(table[r].size()) +
                                                                   " entries, expected " + std::to_string(n)));
  }
  std::vector<std::string> labels;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i < lines.size()) {
    if (lines[i] != "labels") throw detail::at_line(where, i, Error(Errc::ParseError, "expected 'labels' or end of file"));
    ++i;
    for (std::size_t r = 0; r < n; ++r) labels.push_back(next());
  }
  return FiniteGroup::from_table(table, std::move(labels), limits);
}

inline std::string write_table(FiniteGroup const &g, bool with_labels = true) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out += (b ? " " : "") + std::to_string(g.mul(a, b));
    out += "\n";
  }
  if (with_labels) {
    out += "labels\n";
    for (auto const &l : g.labels()) out += l + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation-generator files
//
//   degree n
//   (1 2 3)(4 5)
//   ...

inline FiniteGroup parse_permutations(std::string const &text, std::string const &where = "<perm>",
                                      GroupLimits const &limits = {}) {
  auto lines = detail::content_lines(text);
  std::size_t i = 0, n = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  {
    std::istringstream hdr(i < lines.size() ? lines[i] : "");
    std::string kw;
    if (!(hdr >> kw >> n) || kw != "degree" || n == 0)
      throw detail::at_line(where, i, Error(Errc::ParseError, "expected 'degree <n>'"));
    ++i;
  }
  std::vector<Permutation> gens;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      gens.push_back(Permutation::parse(lines[i], n));
    } catch (Error const &e) {
      throw detail::at_line(where, i, e);
    }
  }
  return FiniteGroup::from_permutation_generators(n, gens, limits);
}

// ---------------------------------------------------------------------------
// Grading files: `parity s0 s1 ...` (signs +1/-1, or + and -) or
// `subgroup g1 g2 ...` (element indices), or for permutation groups
// `subgroup (1 2 3); (1 2)(4 5)` with generators separated by ';'.

inline GradedGroup parse_grading(std::shared_ptr<FiniteGroup const> g, std::string const &text,
                                 std::string const &where = "<grading>") {
  auto lines = detail::content_lines(text);
  std::string body;
  std::size_t first = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].empty()) {
      if (first == lines.size()) first = i;
      body += lines[i] + " ";
    }
  std::istringstream in(body);
  std::string kw;
  if (!(in >> kw)) throw Error(Errc::ParseError, where + ": empty grading");
  try {
    if (kw == "parity") {
      std::vector<int> parity;
      std::string tok;
      while (in >> tok) {
        if (tok == "+" || tok == "+1" || tok == "1")
          parity.push_back(1);
        else if (tok == "-" || tok == "-1")
          parity.push_back(-1);
        else
          throw Error(Errc::ParseError, "bad sign '" + tok + "'");
      }
      return GradedGroup::from_parity(std::move(g), std::move(parity));
    }
    if (kw == "subgroup") {
      std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      std::vector<Element> gens;
      if (rest.find('(') != std::string::npos) {
        if (g->permutations().empty()) throw Error(Errc::ParseError, "cycle generators need a permutation group");
        std::size_t degree = g->permutations()[0].degree();
        std::size_t pos = 0;
        while (pos < rest.size()) {
          while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
          if (pos >= rest.size()) break;
          std::size_t end = pos;
          while (end < rest.size() && rest[end] != ';') ++end;
          auto p = Permutation::parse(rest.substr(pos, end - pos), degree);
          auto idx = g->find_permutation(p);
          if (!idx) throw Error(Errc::NotASubgroup, "permutation " + p.cycle_string() + " is not in the group");
          gens.push_back(*idx);
          pos = end + 1;
        }
      } else {
        std::istringstream ns(rest);
        long long v;
        while (ns >> v) {
          if (v < 0 || static_cast<std::size_t>(v) >= g->order())
            throw Error(Errc::NotASubgroup, "element index " + std::to_string(v) + " out of range");
          gens.push_back(static_cast<Element>(v));
        }
        if (!ns.eof()) throw Error(Errc::ParseError, "non-integer generator index");
      }
      return GradedGroup::from_subgroup(std::move(g), gens);
    }
  } catch (Error const &e) {
    throw detail::at_line(where, first, e);
  }
  throw detail::at_line(where, first, Error(Errc::ParseError, "expected 'parity' or 'subgroup'"));
}

inline std::string write_parity(GradedGroup const &gg) {
  std::string out = "parity";
  for (int s : gg.parities()) out += s == 1 ? " +1" : " -1";
  return out + "\n";
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(Rational const &q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

/// {"order": m, "coeffs": [[k, num, den], ...]}
inline Json to_json(Cyclotomic const &c) {
  Json coeffs = Json::array();
  for (auto const &[k, q] : c.terms()) {
    Json num = q.get_num().fits_slong_p() ? Json(q.get_num().get_si()) : Json(q.get_num().get_str());
    Json den = q.get_den().fits_slong_p() ? Json(q.get_den().get_si()) : Json(q.get_den().get_str());
    coeffs.push_back(Json::array({k, num, den}));
  }
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(Json const &j) {
  auto big = [](Json const &v) -> mpz_class {
    if (v.is_number_integer()) return mpz_class(v.get<long>());
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw Error(Errc::ParseError, "bad cyclotomic coefficient " + v.dump());
  };
  try {
    unsigned long m = j.at("order").get<unsigned long>();
    Cyclotomic out;
    for (auto const &t : j.at("coeffs")) {
      Rational q(big(t.at(1)), big(t.at(2)));
      q.canonicalize();
      out += root_of_unity(m, t.at(0).get<long long>()).scaled(q);
    }
    return out;
  } catch (Json::exception const &e) {
    throw Error(Errc::ParseError, std::string("bad cyclotomic JSON: ") + e.what());
  }
}

inline Json to_json(ClassFunction const &f) {
  Json a = Json::array();
  for (auto const &v : f.values) a.push_back(to_json(v));
  return a;
}

inline Json classes_json(FiniteGroup const &g, ClassData const &cd) {
  Json a = Json::array();
  for (std::size_t k = 0; k < cd.size(); ++k) {
    auto const &c = cd.classes[k];
    a.push_back(Json{{"rep", c.representative},
                     {"label", g.label(c.representative)},
                     {"size", c.size()},
                     {"centralizer", c.centralizer_order},
                     {"inverse_class", cd.inverse[k]}});
  }
  return a;
}

inline Json table_json(std::string const &name, FiniteGroup const &g, CharacterTable const &t) {
  Json rows = Json::array();
  for (auto const &r : t.rows) rows.push_back(to_json(r));
  return Json{{"group", name}, {"order", g.order()}, {"exponent", t.exponent}, {"classes", classes_json(g, t.classes)}, {"rows", rows}};
}

inline Json real_classes_json(GradedGroup const &gg, std::vector<RealClass> const &rcs) {
  Json a = Json::array();
  for (auto const &rc : rcs) {
    Json members = Json::array();
    for (Element x : rc.members) members.push_back(x);
    a.push_back(Json{{"rep", rc.representative},
                     {"label", gg.label(rc.representative)},
                     {"members", members},
                     {"real_stabilizer", rc.real_stabilizer_order},
                     {"case", case_name(rc.case_b)}});
  }
  return a;
}

inline Json a_table_json(RealAnalysis const &a, ACharacterTable const &t) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    auto const &row = t.rows[j];
    Json vals = Json::array();
    for (std::size_t r = 0; r < t.real_classes.size(); ++r) vals.push_back(to_json(t.value(a, j, r)));
    rows.push_back(Json{{"values", vals},
                        {"m", row.m},
                        {"type", field_name(row.type)},
                        {"constituents", row.constituents}});
  }
  return Json{{"chosen_odd", t.chosen_odd},
              {"chosen_odd_label", a.gg.label(t.chosen_odd)},
              {"real_classes", real_classes_json(a.gg, t.real_classes)},
              {"rows", rows}};
}

inline Json block_json(ABlockReport const &b) {
  return Json{{"seed", b.seed},
              {"orbit", b.orbit},
              {"dyson_type", b.dyson_type},
              {"fields", {field_name(b.fields.a), field_name(b.fields.b), field_name(b.fields.d)}},
              {"counts", {b.counts.a, b.counts.b, b.counts.c, b.counts.d}},
              {"indicators",
               {{"fs_hat_real", b.indicators.fs_hat_real}, {"fs_complex", b.indicators.fs_complex}, {"fs_real", b.indicators.fs_real}}},
              {"split", b.split}};
}

/// Renders a grid with left-aligned columns.
inline std::string render_grid(std::vector<std::vector<std::string>> const &cells) {
  std::vector<std::size_t> width;
  for (auto const &row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (auto const &row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace areps
