#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latlab/fol/structure.hpp"

namespace latlab::monadic {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite semigroup with a possibly partial operation. Total tables are
// checked for associativity on construction; partial tables (truncations)
// are checked in the weak sense: whenever both (ab)c and a(bc) are defined,
// they agree.
class PartialSemigroup {
 public:
  static constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

  static PartialSemigroup from_table(std::vector<std::string> labels,
                                     std::vector<std::vector<std::size_t>> table,
                                     bool require_total = true);

  // {1..bound} with addition defined when the sum stays within the bound.
  static PartialSemigroup truncated_nat(std::size_t bound);

  // Z/k as an additive semigroup (labels "0".."k-1").
  static PartialSemigroup cyclic_group(std::size_t k);

  // x*y = y for all x,y.
  static PartialSemigroup right_zero(std::size_t n);

  // Reads a total operation from a structure's arity-3 relation (the graph of
  // the operation): prod(a,b,c) means a*b = c. Must be functional and total.
  static PartialSemigroup from_structure(const fol::FiniteStructure& s,
                                         const std::string& relation = "prod");

  std::size_t size() const { return labels_.size(); }
  bool total() const { return total_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  std::optional<std::size_t> product(std::size_t a, std::size_t b) const {
    std::size_t r = table_[a * labels_.size() + b];
    if (r == kUndefined) return std::nullopt;
    return r;
  }

  // True when every defined product is strictly larger (by index) than both
  // factors. Rules out finite sub-semigroups, hence torsion elements.
  bool strictly_increasing() const { return strictly_increasing_; }

  // For truncated_nat: element index of the integer value v in {1..bound}.
  std::size_t nat_index(long long v) const;
  long long nat_value(std::size_t index) const { return static_cast<long long>(index) + 1; }

 private:
  PartialSemigroup() = default;
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  bool total_ = false;
  bool strictly_increasing_ = false;
  bool is_truncated_nat_ = false;

  void finish_construction(bool require_total);
};

}  // namespace latlab::monadic
