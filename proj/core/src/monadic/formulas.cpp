#include "latlab/monadic/formulas.hpp"

#include <functional>

namespace latlab::monadic {

using fol::Formula;

namespace {
Formula atom_in(const std::string& z, const std::string& x) {
  return Formula::conj(Formula::rel("isAtom", {z}), Formula::rel("subseteq", {z, x}));
}
}  // namespace

Formula formula_disjoint(const std::string& x, const std::string& y) {
  return Formula::negate(Formula::exists(
      "zd", Formula::conj(atom_in("zd", x), Formula::rel("subseteq", {"zd", y}))));
}

Formula formula_union(const std::string& x, const std::string& y, const std::string& z) {
  Formula upper = Formula::conj(Formula::rel("subseteq", {x, z}),
                                Formula::rel("subseteq", {y, z}));
  Formula least = Formula::forall(
      "wu", Formula::implies(Formula::conj(Formula::rel("subseteq", {x, "wu"}),
                                           Formula::rel("subseteq", {y, "wu"})),
                             Formula::rel("subseteq", {z, "wu"})));
  return Formula::conj(std::move(upper), std::move(least));
}

Formula formula_setminus(const std::string& w, const std::string& x, const std::string& y) {
  Formula inside = Formula::rel("subseteq", {w, x});
  Formula apart = formula_disjoint(w, y);
  Formula covers = Formula::forall(
      "zm",
      Formula::implies(
          Formula::conj(atom_in("zm", x),
                        Formula::negate(Formula::rel("subseteq", {"zm", y}))),
          Formula::rel("subseteq", {"zm", w})));
  return Formula::conj_all({std::move(inside), std::move(apart), std::move(covers)});
}

Formula formula_same_size(const std::string& x, const std::string& y) {
  Formula body = Formula::conj_all({formula_setminus("u", x, y), formula_setminus("v", y, x),
                                    Formula::rel("E", {"u", "v"})});
  return Formula::exists("u", Formula::exists("v", std::move(body)));
}

Formula formula_addition(const std::string& a, const std::string& b, const std::string& c) {
  Formula body = Formula::conj_all(
      {Formula::rel("sameSize", {a, "ra"}), Formula::rel("sameSize", {b, "rb"}),
       Formula::rel("sameSize", {c, "rc"}), formula_disjoint("ra", "rb"),
       formula_union("ra", "rb", "rc")});
  return Formula::exists(
      "ra", Formula::exists("rb", Formula::exists("rc", std::move(body))));
}

fol::FiniteStructure size_class_host(std::size_t base, bool add_extensional_same_size) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= base; ++i) labels.push_back(std::to_string(i));
  WeakPowerUniverse u(labels, base);  // full powerset
  WeakPowerUniverse::StructureOptions opts;
  opts.include_atoms = true;
  opts.include_equal_size = true;
  fol::FiniteStructure s = u.to_structure(opts);
  if (add_extensional_same_size) {
    s.declare_relation("sameSize", 2);
    const auto& sets = u.sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (mask_size(sets[i]) == mask_size(sets[j])) s.add_tuple_indices("sameSize", {i, j});
  }
  return s;
}

fol::Interpretation size_class_interpretation(bool use_extensional_same_size) {
  fol::Interpretation I;
  I.dim = 1;
  I.delta_params = {"x"};
  I.delta = fol::Formula::eq("x", "x");
  I.epsilon_params = {"x", "y"};
  I.epsilon = use_extensional_same_size ? fol::Formula::rel("sameSize", {"x", "y"})
                                        : formula_same_size("x", "y");
  fol::Interpretation::RelationDef plus;
  plus.arity = 3;
  plus.params = {"pa", "pb", "pc"};
  plus.body = formula_addition("pa", "pb", "pc");
  if (!use_extensional_same_size) {
    // route the inner sameSize atoms through the defining formula as well
    fol::Formula body = formula_addition("pa", "pb", "pc");
    // formula_addition refers to relation sameSize; rebuild it structurally
    // with the defining formula inlined
    std::function<fol::Formula(const fol::Formula&)> inline_same =
        [&](const fol::Formula& f) -> fol::Formula {
      if (f.kind == fol::Kind::Rel && f.name == "sameSize")
        return formula_same_size(f.vars[0], f.vars[1]);
      fol::Formula g = f;
      for (auto& c : g.children) c = inline_same(c);
      return g;
    };
    plus.body = inline_same(body);
  }
  I.relations["plus"] = std::move(plus);
  return I;
}

}  // namespace latlab::monadic
