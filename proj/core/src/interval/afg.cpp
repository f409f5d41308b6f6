#include "latlab/interval/afg.hpp"

#include <algorithm>
#include <stdexcept>

namespace latlab::interval {

using fol::Formula;
using monadic::Mask;

IntervalSet encode_afg(const AFGTriple& t) {
  std::vector<Interval> blocks;
  for (const Rat& e : t.E)
    for (const Rat& f : t.F) {
      Rat lo = std::min(e, f), hi = std::max(e, f);
      auto inside = [&](const Rat& x) { return lo <= x && x <= hi; };
      bool ok = true;
      for (const Rat& x : t.E)
        if (inside(x) && x != e) ok = false;
      for (const Rat& x : t.F)
        if (ok && inside(x) && x != f) ok = false;
      for (const Rat& x : t.G)
        if (ok && inside(x)) ok = false;
      if (ok) blocks.push_back(Interval{lo, hi});
    }
  return IntervalSet::of(std::move(blocks));
}

AFGTriple decode_afg(const IntervalSet& u) {
  if (u.empty()) throw std::invalid_argument("decode_afg of the bottom element");
  AFGTriple t;
  const auto& parts = u.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    t.E.push_back(parts[i].lo);
    t.F.push_back(parts[i].hi);
    if (i + 1 < parts.size()) t.G.push_back(midpoint(parts[i].hi, parts[i + 1].lo));
  }
  return t;
}

Formula AfgInterpretationBundle::membership_formula() {
  // t in A_{E,F,G}: some e in E, f in F with t in [[e,f]],
  // [[e,f]] ∩ E = {e}, [[e,f]] ∩ F = {f}, [[e,f]] ∩ G = ∅.
  auto atom_in = [](const std::string& z, const std::string& X) {
    return Formula::conj(Formula::rel("isAtom", {z}), Formula::rel("subseteq", {z, X}));
  };
  auto btw = [](const std::string& a, const std::string& b, const std::string& c) {
    return Formula::rel("btw", {a, b, c});
  };
  Formula only_e = Formula::forall(
      "u", Formula::implies(Formula::conj(atom_in("u", "E"), btw("e", "u", "f")),
                            Formula::eq("u", "e")));
  Formula only_f = Formula::forall(
      "u", Formula::implies(Formula::conj(atom_in("u", "F"), btw("e", "u", "f")),
                            Formula::eq("u", "f")));
  Formula no_g = Formula::negate(Formula::exists(
      "u", Formula::conj(atom_in("u", "G"), btw("e", "u", "f"))));
  Formula body = Formula::conj_all(
      {atom_in("e", "E"), atom_in("f", "F"), btw("e", "t", "f"), only_e, only_f, no_g});
  return Formula::exists("e", Formula::exists("f", std::move(body)));
}

IntervalSet AfgInterpretationBundle::decode_triple(Mask e, Mask f, Mask g) const {
  AFGTriple t;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (e & (1ULL << i)) t.E.push_back(grid[i]);
    if (f & (1ULL << i)) t.F.push_back(grid[i]);
    if (g & (1ULL << i)) t.G.push_back(grid[i]);
  }
  return encode_afg(t);
}

AfgInterpretationBundle build_afg_interpretation(std::vector<Rat> grid, std::size_t cap) {
  std::sort(grid.begin(), grid.end());
  std::vector<std::string> labels;
  labels.reserve(grid.size());
  for (const auto& g : grid) labels.push_back(rat_str(g));

  monadic::WeakPowerUniverse universe(labels, cap);

  monadic::WeakPowerUniverse::StructureOptions opts;
  opts.include_atoms = true;
  // betweenness of the chain on atoms
  std::vector<std::vector<std::size_t>> btw;
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = 0; b < grid.size(); ++b)
      for (std::size_t c = 0; c < grid.size(); ++c)
        if (atom_between(grid[b], grid[a], grid[c])) btw.push_back({a, b, c});
  opts.atom_relations["btw"] = std::move(btw);

  fol::FiniteStructure host = universe.to_structure(opts);

  // extensional membership relation: memA(t, E, F, G) with t an atom
  host.declare_relation("memA", 4);
  const auto& sets = universe.sets();
  for (std::size_t ei = 0; ei < sets.size(); ++ei)
    for (std::size_t fi = 0; fi < sets.size(); ++fi)
      for (std::size_t gi = 0; gi < sets.size(); ++gi) {
        AFGTriple t;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          if (sets[ei] & (1ULL << i)) t.E.push_back(grid[i]);
          if (sets[fi] & (1ULL << i)) t.F.push_back(grid[i]);
          if (sets[gi] & (1ULL << i)) t.G.push_back(grid[i]);
        }
        IntervalSet a = encode_afg(t);
        if (a.empty()) continue;
        for (std::size_t p = 0; p < grid.size(); ++p)
          if (a.contains(grid[p]))
            host.add_tuple_indices("memA",
                                   {universe.index_of(1ULL << p), ei, fi, gi});
      }

  fol::Interpretation interp;
  interp.dim = 3;
  interp.delta_params = {"E", "F", "G"};
  interp.delta = Formula::conj_all(
      {Formula::eq("E", "E"), Formula::eq("F", "F"), Formula::eq("G", "G")});
  interp.epsilon_params = {"E", "F", "G", "E2", "F2", "G2"};
  {
    Formula same = Formula::forall(
        "t", Formula::implies(
                 Formula::rel("isAtom", {"t"}),
                 Formula::conj(Formula::implies(Formula::rel("memA", {"t", "E", "F", "G"}),
                                                Formula::rel("memA", {"t", "E2", "F2", "G2"})),
                               Formula::implies(Formula::rel("memA", {"t", "E2", "F2", "G2"}),
                                                Formula::rel("memA", {"t", "E", "F", "G"})))));
    interp.epsilon = std::move(same);
  }
  {
    fol::Interpretation::RelationDef leq_def;
    leq_def.arity = 2;
    leq_def.params = {"E", "F", "G", "E2", "F2", "G2"};
    leq_def.body = Formula::forall(
        "t", Formula::implies(
                 Formula::conj(Formula::rel("isAtom", {"t"}),
                               Formula::rel("memA", {"t", "E", "F", "G"})),
                 Formula::rel("memA", {"t", "E2", "F2", "G2"})));
    interp.relations["leq"] = std::move(leq_def);
  }

  return AfgInterpretationBundle{std::move(universe), std::move(host), std::move(interp),
                                 std::move(grid)};
}

}  // namespace latlab::interval
