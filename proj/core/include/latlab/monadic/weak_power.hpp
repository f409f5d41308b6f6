#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latlab/fol/structure.hpp"
#include "latlab/monadic/semigroup.hpp"

namespace latlab::monadic {

// Subsets of a base universe of size <= 63, as bitmasks.
using Mask = std::uint64_t;

inline std::size_t mask_size(Mask m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

// Enumerates all subsets of {0..n-1} with size <= cap, ascending as integers.
std::vector<Mask> subsets_up_to(std::size_t n, std::size_t cap);

// Finite truncation of W(M): all subsets of the base of size <= cap, with
// inclusion and the base relations attached to atoms.
class WeakPowerUniverse {
 public:
  WeakPowerUniverse(std::vector<std::string> base_labels, std::size_t cap);

  std::size_t base_size() const { return base_labels_.size(); }
  std::size_t cap() const { return cap_; }
  const std::vector<std::string>& base_labels() const { return base_labels_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t index_of(Mask m) const;
  std::string set_id(Mask m) const;

  struct StructureOptions {
    bool include_atoms = true;       // unary "isAtom" on singletons
    bool include_equal_size = false; // binary "E": disjoint and equal size
    // optional base relations attached to atoms: name -> list of index tuples
    std::map<std::string, std::vector<std::vector<std::size_t>>> atom_relations;
    // optional setwise product graph "prod" (arity 3), products within cap only
    const PartialSemigroup* product = nullptr;
  };

  // Exports the truncation as a FiniteStructure with relation "subseteq".
  fol::FiniteStructure to_structure(const StructureOptions& opts) const;
  fol::FiniteStructure to_structure() const { return to_structure(StructureOptions{}); }

 private:
  std::vector<std::string> base_labels_;
  std::size_t cap_;
  std::vector<Mask> sets_;
  std::map<Mask, std::size_t> index_;
};

}  // namespace latlab::monadic
