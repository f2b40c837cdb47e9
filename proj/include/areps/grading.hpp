#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "areps/group.hpp"

namespace areps {

/// A C2-graded group: the ambient group (G-hat), its parity homomorphism onto
/// {+1,-1}, the even subgroup G = ker(parity) and a chosen odd element w.
/// Elements are always ambient indices unless a function says otherwise;
/// `even()` is G renumbered in ascending ambient order.
class GradedGroup {
 public:
  GradedGroup() = default;

  static GradedGroup from_parity(std::shared_ptr<FiniteGroup const> ghat, std::vector<int> parity,
                                 std::optional<Element> chosen_odd = std::nullopt) {
    auto const &g = *ghat;
    if (parity.size() != g.order()) throw Error(Errc::InvalidInput, "parity vector length differs from group order");
    for (std::size_t i = 0; i < parity.size(); ++i)
      if (parity[i] != 1 && parity[i] != -1)
        throw Error(Errc::InvalidInput, "parity of element " + std::to_string(i) + " is not +-1");
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        if (parity[g.mul(a, b)] != parity[a] * parity[b])
          throw Error(Errc::NotASubgroup, "parity is not a homomorphism at pair (" + g.label(a) + ", " +
                                              g.label(b) + ")");
    GradedGroup gg;
    gg.ghat_ = std::move(ghat);
    gg.parity_ = std::move(parity);
    for (Element x = 0; x < gg.ghat_->order(); ++x)
      if (gg.parity_[x] == 1) gg.even_elems_.push_back(x);
    if (gg.even_elems_.size() * 2 != gg.ghat_->order())
      throw Error(Errc::NotIndexTwo, "parity is not surjective onto {+1,-1}");
    gg.local_.assign(gg.ghat_->order(), static_cast<Element>(-1));
    for (std::size_t i = 0; i < gg.even_elems_.size(); ++i) gg.local_[gg.even_elems_[i]] = static_cast<Element>(i);
    gg.even_ = std::make_shared<FiniteGroup const>(gg.ghat_->subgroup(gg.even_elems_));
    Element w = static_cast<Element>(-1);
    for (Element x = 0; x < gg.ghat_->order(); ++x)
      if (gg.parity_[x] == -1) {
        w = x;
        break;
      }
    gg.w_ = w;
    if (chosen_odd) gg = gg.with_chosen_odd(*chosen_odd);
    return gg;
  }

  /// The grading whose even part is the subgroup generated by `gens`.
  static GradedGroup from_subgroup(std::shared_ptr<FiniteGroup const> ghat, std::vector<Element> const &gens) {
    for (Element x : gens)
      if (x >= ghat->order()) throw Error(Errc::NotASubgroup, "generator index " + std::to_string(x) + " out of range");
    auto sub = ghat->generated_subgroup(gens);
    if (sub.size() * 2 != ghat->order()) {
      std::string idx = ghat->order() % sub.size() == 0 ? std::to_string(ghat->order() / sub.size())
                                                         : std::to_string(ghat->order()) + "/" + std::to_string(sub.size());
      throw Error(Errc::NotIndexTwo, "subgroup has index " + idx + ", expected 2");
    }
    std::vector<int> parity(ghat->order(), -1);
    for (Element x : sub) parity[x] = 1;
    return from_parity(std::move(ghat), std::move(parity));
  }

  GradedGroup with_chosen_odd(Element w) const {
    if (w >= ghat_->order() || parity_[w] != -1)
      throw Error(Errc::InvalidInput, "chosen odd element " + std::to_string(w) + " is not odd");
    GradedGroup r = *this;
    r.w_ = w;
    return r;
  }

  FiniteGroup const &ghat() const { return *ghat_; }
  FiniteGroup const &even() const { return *even_; }
  std::shared_ptr<FiniteGroup const> ghat_ptr() const { return ghat_; }
  std::shared_ptr<FiniteGroup const> even_ptr() const { return even_; }

  int parity(Element z) const { return parity_[z]; }
  std::vector<int> const &parities() const { return parity_; }
  bool is_even(Element z) const { return parity_[z] == 1; }
  Element chosen_odd() const { return w_; }
  std::vector<Element> const &even_subgroup() const { return even_elems_; }
  std::size_t even_order() const { return even_elems_.size(); }

  Element to_ambient(Element local) const { return even_elems_[local]; }
  Element to_local(Element ambient) const {
    if (parity_[ambient] != 1) throw Error(Errc::NotEven, ghat_->label(ambient) + " is odd");
    return local_[ambient];
  }

  std::string const &label(Element ambient) const { return ghat_->label(ambient); }

 private:
  std::shared_ptr<FiniteGroup const> ghat_;
  std::shared_ptr<FiniteGroup const> even_;
  std::vector<int> parity_;
  std::vector<Element> even_elems_;
  std::vector<Element> local_;
  Element w_ = 0;
};

/// psi(z)(g) = z g^{parity(z)} z^-1 for even g.
inline Element real_conjugate(GradedGroup const &gg, Element z, Element g) {
  if (!gg.is_even(g)) throw Error(Errc::NotEven, gg.label(g) + " is odd");
  auto const &G = gg.ghat();
  return gg.is_even(z) ? G.conj(z, g) : G.conj(z, G.inv(g));
}

enum class CaseA { A1, A2 };
enum class CaseB { B1, B2 };

inline char const *case_name(CaseA c) { return c == CaseA::A1 ? "A1" : "A2"; }
inline char const *case_name(CaseB c) { return c == CaseB::B1 ? "B1" : "B2"; }

/// A1 iff no odd element commutes with g; B1 iff no odd z has z g^-1 = g z.
inline std::pair<CaseA, CaseB> classify_element_case(GradedGroup const &gg, Element g) {
  if (!gg.is_even(g)) throw Error(Errc::NotEven, gg.label(g) + " is odd");
  auto const &G = gg.ghat();
  bool commutes = false, reverses = false;
  Element ginv = G.inv(g);
  for (Element z = 0; z < G.order(); ++z) {
    if (gg.is_even(z)) continue;
    if (G.mul(z, g) == G.mul(g, z)) commutes = true;
    if (G.mul(z, ginv) == G.mul(g, z)) reverses = true;
  }
  return {commutes ? CaseA::A2 : CaseA::A1, reverses ? CaseB::B2 : CaseB::B1};
}

/// Case analysis of a class of G (given by any member, ambient index).
inline std::pair<CaseA, CaseB> classify_class_case(GradedGroup const &gg, ConjugacyClass const &even_class) {
  return classify_element_case(gg, gg.to_ambient(even_class.representative));
}

struct RealClass {
  Element representative = 0;         ///< ambient index, minimal member
  std::vector<Element> members;       ///< ambient indices, sorted
  std::size_t real_stabilizer_order = 0;
  CaseB case_b = CaseB::B2;

  std::size_t size() const { return members.size(); }
};

/// Orbits of G-hat on G under real conjugation, ordered by minimal member.
inline std::vector<RealClass> real_conjugacy_classes(GradedGroup const &gg) {
  auto const &G = gg.ghat();
  std::vector<bool> done(G.order(), false);
  std::vector<RealClass> out;
  for (Element g : gg.even_subgroup()) {
    if (done[g]) continue;
    RealClass rc;
    rc.representative = g;
    for (Element z = 0; z < G.order(); ++z) {
      Element y = real_conjugate(gg, z, g);
      if (!done[y]) {
        done[y] = true;
        rc.members.push_back(y);
      }
    }
    std::sort(rc.members.begin(), rc.members.end());
    rc.real_stabilizer_order = G.order() / rc.members.size();
    rc.case_b = classify_element_case(gg, g).second;
    out.push_back(std::move(rc));
  }
  return out;
}

inline bool is_split_structure(GradedGroup const &gg) {
  auto const &G = gg.ghat();
  for (Element z = 0; z < G.order(); ++z)
    if (!gg.is_even(z) && G.mul(z, z) == G.identity()) return true;
  return false;
}

/// Real class of a G-class when every class of G-hat is self-inverse: the
/// G-class itself if it is not self-inverse, otherwise its G-hat class.
/// `even_classes` are classes of gg.even() (local indices); `ghat_classes`
/// classes of gg.ghat().
inline RealClass self_inverse_shortcut(GradedGroup const &gg, ClassData const &even_classes,
                                       ClassData const &ghat_classes, std::size_t even_class_index) {
  for (std::size_t c = 0; c < ghat_classes.size(); ++c)
    if (!ghat_classes.is_self_inverse(c))
      throw Error(Errc::HypothesisFailed,
                  "class of " + gg.label(ghat_classes.classes[c].representative) + " in G-hat is not self-inverse");
  auto const &cls = even_classes.classes[even_class_index];
  RealClass rc;
  if (!even_classes.is_self_inverse(even_class_index)) {
    for (Element x : cls.members) rc.members.push_back(gg.to_ambient(x));
  } else {
    Element amb = gg.to_ambient(cls.representative);
    rc.members = ghat_classes.classes[ghat_classes.class_of[amb]].members;
  }
  std::sort(rc.members.begin(), rc.members.end());
  rc.representative = rc.members.front();
  rc.real_stabilizer_order = gg.ghat().order() / rc.members.size();
  rc.case_b = rc.members.size() == cls.size() ? CaseB::B2 : CaseB::B1;
  return rc;
}

// ---------------------------------------------------------------------------
// Built-in witnesses, one per Dyson type (two for type IX).

struct Builtin {
  std::string name;         ///< "I".."X", "IX-pauli", or "A<n>"
  std::string description;  ///< e.g. "C4 <= Q8"
  std::string dyson_type;   ///< expected type of the seed character; empty for A_n
  GradedGroup graded;
  /// The seed character is the first irreducible of G of maximal degree whose
  /// kernel misses this even element; no marker means the trivial character.
  std::optional<Element> seed_marker;
};

namespace detail {

inline Builtin make_builtin(std::string name, std::string desc, std::string type, FiniteGroup ghat,
                            std::vector<Element> even_gens, std::optional<Element> marker) {
  auto ptr = std::make_shared<FiniteGroup const>(std::move(ghat));
  return Builtin{std::move(name), std::move(desc), std::move(type), GradedGroup::from_subgroup(ptr, even_gens), marker};
}

inline FiniteGroup pauli_group(Element &iX, Element &iY, Element &minus_one) {
  using P = std::pair<long, long>;
  GaussianMatrix X{{P{0, 0}, P{1, 0}, P{1, 0}, P{0, 0}}};
  GaussianMatrix Y{{P{0, 0}, P{0, -1}, P{0, 1}, P{0, 0}}};
  GaussianMatrix Z{{P{1, 0}, P{0, 0}, P{0, 0}, P{-1, 0}}};
  auto [g, mats] = gaussian_matrix_group({X, Y, Z});
  GaussianMatrix iXm{{P{0, 0}, P{0, 1}, P{0, 1}, P{0, 0}}};
  GaussianMatrix iYm{{P{0, 0}, P{1, 0}, P{-1, 0}, P{0, 0}}};
  GaussianMatrix m1{{P{-1, 0}, P{0, 0}, P{0, 0}, P{-1, 0}}};
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i] == iXm) iX = static_cast<Element>(i);
    if (mats[i] == iYm) iY = static_cast<Element>(i);
    if (mats[i] == m1) minus_one = static_cast<Element>(i);
  }
  return g;
}

}  // namespace detail

/// Q8 x C2 extended by w with w^2 = (k,1) and w acting by i -> (i,c),
/// j -> (j,c), c -> (-1,c). Its even subgroup Q8 x C2 carries the type X block.
inline FiniteGroup type_x_witness_group() {
  FiniteGroup n = direct_product(dicyclic_group(8), cyclic_group(2));
  // Q8 index: a^k x^s -> k + 4s; product index q*2 + c.
  Element i = 2, j = 8, c = 1, i_c = 3, j_c = 9, m1_c = 5, k = 10;
  ElementMap phi = automorphism_from_generators(n, {i, j, c}, {i_c, j_c, m1_c});
  return index_two_extension(n, phi, k);
}

inline std::vector<std::string> builtin_names() {
  return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "IX-pauli", "X"};
}

/// A_n <= S_n graded by the sign of permutations.
inline GradedGroup alternating_in_symmetric(std::size_t n, GroupLimits const &limits = {}) {
  auto s = std::make_shared<FiniteGroup const>(symmetric_group(n, limits));
  std::vector<int> parity;
  for (auto const &p : s->permutations()) parity.push_back(p.sign());
  return GradedGroup::from_parity(std::move(s), std::move(parity));
}

inline Builtin builtin(std::string const &name) {
  using detail::make_builtin;
  if (name == "I") return make_builtin(name, "C1 <= C2", "I", cyclic_group(2), {}, std::nullopt);
  if (name == "II") return make_builtin(name, "C2 <= C4", "II", cyclic_group(4), {2}, Element{2});
  if (name == "III") return make_builtin(name, "K4 <= D8", "III", dihedral_group(8), {2, 4}, Element{2});
  if (name == "IV") return make_builtin(name, "C3 <= C6", "IV", cyclic_group(6), {2}, Element{2});
  if (name == "V") return make_builtin(name, "C3 <= D6", "V", dihedral_group(6), {1}, Element{1});
  if (name == "VI") return make_builtin(name, "C4 <= Q8", "VI", dicyclic_group(8), {1}, Element{2});
  if (name == "VII") {
    FiniteGroup c8 = cyclic_group(8), c2 = cyclic_group(2);
    ElementMap id(8), five(8);
    for (Element x = 0; x < 8; ++x) {
      id[x] = x;
      five[x] = (5 * x) % 8;
    }
    return make_builtin(name, "C8 <= C8 x| C2 (x -> x^5)", "VII", semidirect_product(c8, c2, {id, five}), {2},
                        Element{8});
  }
  if (name == "VIII")
    return make_builtin(name, "Q8 <= Q8 x C2", "VIII", direct_product(dicyclic_group(8), cyclic_group(2)), {2, 8},
                        Element{4});
  if (name == "IX") {
    FiniteGroup q8 = dicyclic_group(8);
    ElementMap id(8);
    for (Element x = 0; x < 8; ++x) id[x] = x;
    ElementMap swap = automorphism_from_generators(q8, {1, 4}, {4, 1});
    return make_builtin(name, "Q8 <= Q8 x| C2 (i <-> j)", "IX", semidirect_product(q8, cyclic_group(2), {id, swap}),
                        {2, 8}, Element{4});
  }
  if (name == "IX-pauli") {
    Element ix = 0, iy = 0, m1 = 0;
    FiniteGroup p = detail::pauli_group(ix, iy, m1);
    return make_builtin(name, "Q8 <= Pauli group", "IX", std::move(p), {ix, iy}, m1);
  }
  if (name == "X") {
    // Even part is the first 16 elements (Q8 x C2); generators i, j, c.
    return make_builtin(name, "Q8 x C2 <= order-32 extension", "X", type_x_witness_group(), {2, 8, 1}, Element{4});
  }
  if (name.size() >= 2 && name[0] == 'A') {
    std::size_t n = std::stoul(name.substr(1));
    if (n < 2) throw Error(Errc::InvalidInput, "A_n <= S_n needs n >= 2");
    return Builtin{name, "A" + std::to_string(n) + " <= S" + std::to_string(n), "", alternating_in_symmetric(n),
                   std::nullopt};
  }
  throw Error(Errc::InvalidInput, "unknown builtin graded group '" + name + "'");
}

}  // namespace areps
