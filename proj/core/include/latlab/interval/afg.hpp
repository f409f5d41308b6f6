#pragma once

#include <vector>

#include "latlab/fol/interpretation.hpp"
#include "latlab/interval/interval_set.hpp"
#include "latlab/monadic/weak_power.hpp"

namespace latlab::interval {

// Encoding of a finite interval union by three finite point sets: E holds the
// left endpoints, F the right endpoints, G separates the blocks.
struct AFGTriple {
  std::vector<Rat> E, F, G;  // sorted ascending
  bool operator==(const AFGTriple&) const = default;
};

// Union of the blocks [[e,f]] whose side conditions hold:
// [[e,f]] ∩ E = {e}, [[e,f]] ∩ F = {f}, [[e,f]] ∩ G = ∅.
IntervalSet encode_afg(const AFGTriple& t);

// Canonical triple for a non-empty set: E/F the component endpoints, G the
// gap midpoints. encode_afg(decode_afg(U)) == U. Throws on bottom.
AFGTriple decode_afg(const IntervalSet& u);

// The interpretation of the interval poset inside the weak power structure of
// the chain (grid, betweenness), materialized at desk scale for bounded model
// checking: host structure with subseteq/isAtom/btw plus the extensional
// membership relation memA(t,E,F,G) ("atom t lies in the encoded set"), a
// 3-dimensional interpretation with target vocabulary {leq}, and the map from
// encoded triples to interval sets for isomorphism checks.
struct AfgInterpretationBundle {
  monadic::WeakPowerUniverse universe;
  fol::FiniteStructure host;
  fol::Interpretation interp;
  std::vector<Rat> grid;

  IntervalSet decode_triple(monadic::Mask e, monadic::Mask f, monadic::Mask g) const;

  // The raw first-order membership formula over (subseteq, isAtom, btw) with
  // free variables (t, E, F, G); memA is its extension.
  static fol::Formula membership_formula();
};

AfgInterpretationBundle build_afg_interpretation(std::vector<Rat> grid, std::size_t cap);

}  // namespace latlab::interval
