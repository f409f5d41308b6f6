#pragma once

#include <string>

#include "latlab/fol/interpretation.hpp"
#include "latlab/monadic/weak_power.hpp"

namespace latlab::monadic {

// First-order formulas over the weak-power vocabulary (subseteq, isAtom, E).
// E is the given relation "disjoint and of the same size"; everything else is
// expressed through inclusion and atoms.
fol::Formula formula_disjoint(const std::string& x, const std::string& y);
fol::Formula formula_union(const std::string& x, const std::string& y, const std::string& z);
// w = x \ y
fol::Formula formula_setminus(const std::string& w, const std::string& x,
                              const std::string& y);
// same size without disjointness: E(x\y, y\x)
fol::Formula formula_same_size(const std::string& x, const std::string& y);
// the graph of addition on size classes
fol::Formula formula_addition(const std::string& a, const std::string& b,
                              const std::string& c);

// Host truncation for the size-class interpretation: W({1..base}) with
// subseteq, isAtom, E, and optionally the extensional relation sameSize
// (cross-checked against formula_same_size by the tests).
fol::FiniteStructure size_class_host(std::size_t base, bool add_extensional_same_size);

// 1-dimensional interpretation with epsilon = same-size and one target
// relation "plus" given by the addition formula. With use_extensional true
// the formulas refer to the materialized sameSize relation, which keeps
// bounded model checking affordable; both versions define the same sets.
fol::Interpretation size_class_interpretation(bool use_extensional_same_size);

}  // namespace latlab::monadic
