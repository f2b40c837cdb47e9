#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "areps/real_theory.hpp"

namespace areps {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Small groups used as even parts by `search_type`, ascending order.
inline std::vector<NamedGroup> extension_catalog(std::size_t max_even_order) {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, auto make) {
    FiniteGroup g = make();
    if (g.order() <= max_even_order) out.push_back({std::move(name), std::move(g)});
  };
  auto C = [](std::size_t n) { return cyclic_group(n); };
  for (std::size_t n = 1; n <= 16; ++n) {
    add("C" + std::to_string(n), [&] { return C(n); });
    if (n == 4) add("C2 x C2", [&] { return direct_product(C(2), C(2)); });
    if (n == 6) add("S3", [] { return dihedral_group(6); });
    if (n == 8) {
      add("C4 x C2", [&] { return direct_product(C(4), C(2)); });
      add("C2 x C2 x C2", [&] { return direct_product(direct_product(C(2), C(2)), C(2)); });
      add("D8", [] { return dihedral_group(8); });
      add("Q8", [] { return dicyclic_group(8); });
    }
    if (n == 9) add("C3 x C3", [&] { return direct_product(C(3), C(3)); });
    if (n == 10) add("D10", [] { return dihedral_group(10); });
    if (n == 12) {
      add("C6 x C2", [&] { return direct_product(C(6), C(2)); });
      add("D12", [] { return dihedral_group(12); });
      add("Dic12", [] { return dicyclic_group(12); });
      add("A4", [] { return alternating_group(4); });
    }
    if (n == 14) add("D14", [] { return dihedral_group(14); });
    if (n == 16) {
      add("C8 x C2", [&] { return direct_product(C(8), C(2)); });
      add("C4 x C4", [&] { return direct_product(C(4), C(4)); });
      add("C4 x C2 x C2", [&] { return direct_product(direct_product(C(4), C(2)), C(2)); });
      add("D16", [] { return dihedral_group(16); });
      add("Q16", [] { return dicyclic_group(16); });
      add("D8 x C2", [&] { return direct_product(dihedral_group(8), C(2)); });
      add("Q8 x C2", [&] { return direct_product(dicyclic_group(8), C(2)); });
    }
  }
  return out;
}

/// A generating set chosen greedily by smallest index.
inline std::vector<Element> greedy_generators(FiniteGroup const &g) {
  std::vector<Element> gens;
  std::vector<Element> sub{g.identity()};
  while (sub.size() < g.order()) {
    std::vector<bool> in(g.order(), false);
    for (Element x : sub) in[x] = true;
    Element pick = 0;
    while (in[pick]) ++pick;
    gens.push_back(pick);
    sub = g.generated_subgroup(gens);
  }
  return gens;
}

/// Every automorphism of g, by exhausting generator images of matching order.
inline std::vector<ElementMap> automorphisms(FiniteGroup const &g) {
  auto gens = greedy_generators(g);
  std::vector<std::vector<Element>> choices(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(gens[i])) choices[i].push_back(x);
  std::vector<ElementMap> out;
  std::vector<Element> images(gens.size());
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == gens.size()) {
      try {
        out.push_back(automorphism_from_generators(g, gens, images));
      } catch (Error const &) {
      }
      return;
    }
    for (Element x : choices[i]) {
      images[i] = x;
      self(self, i + 1);
    }
  };
  if (gens.empty())
    out.push_back(ElementMap{g.identity()});
  else
    rec(rec, 0);
  return out;
}

struct SearchResult {
  std::string description;
  GradedGroup graded;
  std::size_t seed = 0;  ///< G-table row of the requested type
  std::size_t candidates = 0;
};

/// Smallest-catalog-first search for a graded group with an irreducible of
/// Dyson type `type`, over index-two extensions N.<w> with |N.<w>| <= max_order.
inline std::optional<SearchResult> search_type(std::string const &type, std::size_t max_order) {
  type_profile(type);  // validates the name
  std::size_t candidates = 0;
  for (auto &[name, n] : extension_catalog(max_order / 2)) {
    CharacterTable tab = character_table(n);
    auto const &cd = tab.classes;
    std::vector<unsigned long> even_sq(cd.size(), 0);
    for (Element x = 0; x < n.order(); ++x) ++even_sq[cd.class_of[n.mul(x, x)]];
    std::vector<long long> fc;
    for (auto const &chi : tab.rows) {
      Cyclotomic s;
      for (std::size_t k = 0; k < cd.size(); ++k) s += chi.values[k].scaled(Rational(static_cast<long>(even_sq[k])));
      fc.push_back(s.scaled(ratio(1, static_cast<long>(n.order()))).to_integer());
    }
    std::vector<std::size_t> conj_of;
    for (auto const &chi : tab.rows) conj_of.push_back(tab.index_of(conjugate_character(chi)));
    std::map<std::vector<unsigned long>, std::vector<long long>> real_cache;

    for (auto const &phi : automorphisms(n)) {
      std::vector<std::size_t> twist(cd.size());
      for (std::size_t k = 0; k < cd.size(); ++k) twist[k] = cd.class_of[phi[cd.classes[k].representative]];
      std::vector<std::size_t> twist_of;
      for (auto const &chi : tab.rows) {
        Character t = chi;
        for (std::size_t k = 0; k < cd.size(); ++k) t.values[k] = chi.values[twist[k]];
        twist_of.push_back(tab.index_of(t));
      }
      for (Element s = 0; s < n.order(); ++s) {
        if (phi[s] != s) continue;
        bool ok = true;
        for (Element b = 0; b < n.order() && ok; ++b)
          if (phi[phi[b]] != n.conj(s, b)) ok = false;
        if (!ok) continue;
        ++candidates;
        // odd elements b w square to b phi(b) s
        std::vector<unsigned long> odd_sq(cd.size(), 0);
        for (Element b = 0; b < n.order(); ++b) ++odd_sq[cd.class_of[n.mul(n.mul(b, phi[b]), s)]];
        auto it = real_cache.find(odd_sq);
        if (it == real_cache.end()) {
          std::vector<long long> f;
          for (auto const &chi : tab.rows) {
            Cyclotomic v;
            for (std::size_t k = 0; k < cd.size(); ++k)
              if (odd_sq[k]) v += chi.values[k].scaled(Rational(static_cast<long>(odd_sq[k])));
            f.push_back(v.scaled(ratio(1, static_cast<long>(n.order()))).to_integer());
          }
          it = real_cache.emplace(odd_sq, std::move(f)).first;
        }
        for (std::size_t i = 0; i < tab.size(); ++i) {
          bool split = !(twist_of[i] == i || twist_of[i] == conj_of[i]);
          if (dyson_type_from(fc[i], it->second[i], split) != type) continue;
          // Found: build the group and confirm with the full analysis.
          auto ghat = std::make_shared<FiniteGroup const>(index_two_extension(n, phi, s));
          std::vector<int> parity(ghat->order(), 1);
          for (std::size_t x = n.order(); x < ghat->order(); ++x) parity[x] = -1;
          GradedGroup gg = GradedGroup::from_parity(ghat, std::move(parity));
          RealAnalysis a = analyze(gg);
          for (std::size_t j = 0; j < a.gtab.size(); ++j)
            if (dyson_type(a, j) == type) {
              std::string desc = name + " <= " + name + ".<w>, w^2 = " + n.label(s);
              return SearchResult{desc, gg, j, candidates};
            }
          throw Error(Errc::InternalVerificationFailed, "search shortcut disagrees with full analysis");
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace areps
