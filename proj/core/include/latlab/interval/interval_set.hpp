#pragma once

#include <string>
#include <vector>

#include "latlab/rational.hpp"

namespace latlab::interval {

struct Interval {
  Rat lo, hi;  // closed [lo, hi], lo <= hi; degenerate atoms allowed
  bool operator==(const Interval&) const = default;
};

// Canonical finite union of closed rational intervals: components sorted,
// pairwise disjoint with strict gaps. The empty set is the lattice bottom.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet of(std::vector<Interval> parts);  // canonicalizes
  static IntervalSet single(Rat lo, Rat hi);
  static IntervalSet atom(const Rat& a) { return single(a, a); }

  // "[a,b] [c,d]" with rational endpoints "p/q"; "" parses to bottom
  static IntervalSet parse(const std::string& text);
  std::string str() const;

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rat& x) const;
  bool is_atom() const;

  std::vector<IntervalSet> components() const;

  bool operator==(const IntervalSet&) const = default;
  bool operator<(const IntervalSet& o) const;  // lexicographic, for ordered containers

 private:
  std::vector<Interval> parts_;
};

IntervalSet join(const IntervalSet& a, const IntervalSet& b);
IntervalSet meet(const IntervalSet& a, const IntervalSet& b);
bool leq(const IntervalSet& a, const IntervalSet& b);

// Exactly one component; bottom is not connected by convention.
bool is_connected(const IntervalSet& a);

// u in [[v,w]] = [min(v,w), max(v,w)].
bool atom_between(const Rat& u, const Rat& v, const Rat& w);

}  // namespace latlab::interval
