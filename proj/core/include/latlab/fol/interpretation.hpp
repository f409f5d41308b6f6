#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latlab/fol/eval.hpp"
#include "latlab/fol/formula.hpp"
#include "latlab/fol/structure.hpp"

namespace latlab::fol {

// A d-dimensional interpretation of a target vocabulary in a host structure:
// a domain formula, an equivalence formula on domain tuples, and one defining
// formula per target relation. Applying it to a host structure materializes
// the quotient; translating a target sentence yields a host sentence with the
// same truth value.
struct Interpretation {
  std::size_t dim = 1;
  std::vector<std::string> delta_params;    // d names
  Formula delta;
  std::vector<std::string> epsilon_params;  // 2d names
  Formula epsilon;

  struct RelationDef {
    std::size_t arity = 0;
    std::vector<std::string> params;  // arity*d names
    Formula body;
  };
  std::map<std::string, RelationDef> relations;

  static Interpretation identity(const std::map<std::string, std::size_t>& rel_arities);
};

struct InterpretationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrites a target formula over the host vocabulary: every target variable
// becomes a d-tuple of host variables, quantifiers are relativized to delta,
// equality becomes epsilon, and relation atoms become their mapped formulas.
// Fresh host names use a deterministic counter, so output is reproducible.
Formula translate(const Interpretation& interp, const Formula& target);

enum class WellDefinednessCheck { Off, Representatives, Sampled, Full };

struct InterpretOptions {
  WellDefinednessCheck well_definedness = WellDefinednessCheck::Sampled;
  std::size_t samples_per_tuple = 3;
  std::uint64_t seed = 1;
};

struct InterpretedStructure {
  FiniteStructure structure;
  // host d-tuples chosen as class representatives, in universe order
  std::vector<std::vector<std::size_t>> representatives;
  // class index of every delta-tuple, keyed by the tuple
  std::map<std::vector<std::size_t>, std::size_t> class_of;
};

// Materializes the interpreted structure. Verifies that epsilon partitions the
// delta-tuples (reflexivity, agreement with exactly one class representative,
// rep-level symmetry/transitivity) and that relation formulas are invariant
// under representative choice, per `options`. Throws InterpretationError when
// a check fails.
InterpretedStructure interpret_structure(const FiniteStructure& host,
                                         const Interpretation& interp,
                                         const InterpretOptions& options = {});

}  // namespace latlab::fol
