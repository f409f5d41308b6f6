#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latlab/interval/interval_set.hpp"

namespace latlab::interval {

// Axiom check for a ternary relation on a finite set (indices 0..n-1):
// searches endpoint pairs making B(a,x,y) and B(x,y,b) the same total order
// with endpoints a, b, and B its betweenness relation. Density is reported
// separately: no finite set is dense, so interval-derived relations carry a
// symbolic density argument instead (midpoints of distinct atoms).
struct BetweennessReport {
  bool bounded_betweenness = false;
  std::size_t endpoint_min = 0, endpoint_max = 0;
  std::vector<std::size_t> order;  // recovered total order, ascending
  std::string failing_clause;     // set when bounded_betweenness is false
  bool dense_on_finite = false;   // literal density of the finite relation
};

BetweennessReport betweenness_axioms(
    std::size_t n, const std::function<bool(std::size_t, std::size_t, std::size_t)>& B);

// All interval sets (including bottom) with endpoints in a fixed grid. For
// each member, every set formed from its endpoints is also a member, which
// makes the lattice-level connectivity definition exact on the universe.
class EndpointClosedUniverse {
 public:
  explicit EndpointClosedUniverse(std::vector<Rat> grid);

  const std::vector<Rat>& grid() const { return grid_; }
  const std::vector<IntervalSet>& members() const { return members_; }
  bool contains(const IntervalSet& a) const;
  std::vector<Rat> atoms_of(const IntervalSet& a) const;  // grid points inside

  // smallest connected member <= a containing both atoms, when one exists
  std::optional<IntervalSet> smallest_connected_within(const IntervalSet& a, const Rat& v,
                                                       const Rat& w) const;

 private:
  std::vector<Rat> grid_;
  std::vector<IntervalSet> members_;
};

// Clause-level evaluation of the interval formula I(x) over a bounded
// universe, against the semantic verdict "single non-degenerate interval".
//   I1: connected (no disjoint decomposition within the universe), not an atom
//   I2: the atom betweenness relation from smallest connected subsets is a
//       bounded betweenness relation on the sampled atoms; density over the
//       rationals is checked symbolically via midpoint witnesses
//   I3: every atom outside y <= x has a betweenness neighborhood avoiding y;
//       at the two order endpoints half-open neighborhoods are used
struct CheckIReport {
  bool semantic = false;
  bool clause_i1 = false;
  bool clause_i2 = false;
  bool clause_i3 = false;
  std::string note;
  bool clauses() const { return clause_i1 && clause_i2 && clause_i3; }
  bool agree() const { return semantic == clauses(); }
};

CheckIReport check_I(const IntervalSet& a, const EndpointClosedUniverse& universe);

}  // namespace latlab::interval
