#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "latlab/fol/formula.hpp"
#include "latlab/fol/structure.hpp"

namespace latlab::fol {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tarskian satisfaction with quantifiers ranging over the finite universe.
// The assignment must cover all free variables of the formula.
bool evaluate(const FiniteStructure& s, const Formula& f,
              const std::map<std::string, std::string>& assignment);

// Index-based variant used by hot paths.
bool evaluate_indices(const FiniteStructure& s, const Formula& f,
                      const std::map<std::string, std::size_t>& assignment);

// The extension {a-bar : S |= f[a-bar]} with components ordered as `vars`,
// which must list exactly the free variables of f. A sentence yields {()} or {}.
std::set<std::vector<std::string>> define_set(const FiniteStructure& s, const Formula& f,
                                              const std::vector<std::string>& vars);

std::set<std::vector<std::size_t>> define_set_indices(const FiniteStructure& s,
                                                      const Formula& f,
                                                      const std::vector<std::string>& vars);

}  // namespace latlab::fol
