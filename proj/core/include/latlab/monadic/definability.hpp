#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "latlab/monadic/semigroup.hpp"
#include "latlab/monadic/weak_power.hpp"
#include "latlab/report.hpp"

namespace latlab::monadic {

inline Mask mask_of(const std::vector<std::size_t>& indices) {
  Mask m = 0;
  for (auto i : indices) m |= 1ULL << i;
  return m;
}
std::vector<std::size_t> mask_indices(Mask m);

// X*Y = {x*y | x in X, y in Y}. Throws TruncationError when a needed product
// escapes the truncation.
Mask set_product(const PartialSemigroup& S, Mask X, Mask Y);

// Torsion = member of some finite sub-semigroup. Total semigroups compute
// s^N directly; truncations search for a closed witness set within the size
// cap. A found witness is a genuine finite sub-semigroup, so positives are
// exact; strictly increasing operations admit no such witness at all.
bool is_torsion(const PartialSemigroup& S, std::size_t s, std::size_t cap);

// s^N for as far as the truncation reaches (index set; stops on undefined
// products or on the first repetition).
std::vector<std::size_t> generated_by(const PartialSemigroup& S, std::size_t s);

// Property (*): s in X, s not torsion, and some x in X has X ∩ x*X = ∅ and
// s*(X \ {x}) ⊆ X. Products escaping the truncation are genuinely outside X,
// so both clauses are evaluated exactly.
bool star_property(const PartialSemigroup& S, std::size_t s, Mask X, std::size_t cap);

enum class SearchMode {
  Enumerate,  // all witness sets within the size cap (complete up to the cap)
  Guided,     // the canonical power chain only (sound, scales further)
};

struct GeneratedResult {
  bool definable = false;  // verdict of the two-branch defining formula
  bool oracle = false;     // direct membership in s^N within the truncation
  Verdict margin = Verdict::SoundOnlyPass;
  Mask witness = 0;        // X witnessing (*) when found via branch 2
};

// The defining formula: t lies in the smallest finite semigroup containing s,
// or some X with t ∈ X satisfies (*).
GeneratedResult in_generated(const PartialSemigroup& S, std::size_t s, std::size_t t,
                             std::size_t cap, SearchMode mode = SearchMode::Enumerate);

// ---- value-level additive helpers (bounds beyond the 63-bit mask limit) ----

// Property (*) for subsets of the additive truncation {1..bound}; X sorted.
bool star_property_values(const std::vector<long long>& X, long long s, long long bound);

struct DividesResult {
  bool definable = false;
  bool oracle = false;
  Verdict margin = Verdict::SoundOnlyPass;
  std::vector<long long> witness;
};

// k|n via the additive chain {k, k+k, ...} with the (*) clauses verified on
// the witness. Exact whenever the chain to ceil(n/k)*k fits the bound.
DividesResult nat_divides(long long k, long long n, long long bound);

// Least m with k|m and l|m, found by first-order search through the
// definable divisibility. Throws TruncationError when the bound is too small.
long long lcm_via_divides(long long k, long long l, long long bound);

struct MultiplyResult {
  long long value = 0;
  long long oracle = 0;
  std::vector<std::string> trace;  // one line per pipeline stage
};

// Multiplication through + and | only: with leq from +, lcm from |,
// x^2 := lcm(x, x+1) - x and x*y := ((x+y)^2 - x^2 - y^2)/2, where
// subtraction and halving are realized by +-search. Never uses native
// multiplication on the pipeline path.
MultiplyResult multiply_from_plus_divides(long long x, long long y, long long bound);
MultiplyResult multiply_from_plus_divides(long long x, long long y);  // self-sized bound
long long required_bound_for_multiply(long long x, long long y);

// ---- equal size and addition on size classes (Prop 2.7) ----

// The given relation: disjoint and of the same size.
bool equal_size_primitive(Mask a, Mask b);
// The derived relation E(a\b, b\a): equal size without the disjointness.
bool equal_size(Mask a, Mask b);

struct ClassAdditionResult {
  Verdict margin = Verdict::ExactPass;
  bool value = false;
  Mask wa = 0, wb = 0, wc = 0;  // disjoint representatives when value holds
};

// |a| + |b| = |c| via the displayed existential formula, with disjoint
// representatives chosen inside a base universe of the given size. Reports
// boundary-excluded when no disjoint representatives fit.
ClassAdditionResult addition_on_classes(std::size_t base_size, Mask a, Mask b, Mask c);

// ---- finite sequences of integers (Prop 2.7(ii)) ----

struct SequenceRow {
  Mask b = 0, c = 0;
  std::set<std::size_t> spectrum;
};

struct SequenceFamilyReport {
  std::set<std::size_t> target;
  bool realized = false;
  SequenceRow witness;
  std::vector<SequenceRow> sampled_rows;  // evidence for condition (a)
};

// Checks conditions (a) and (b) for a family S(a, b, c) given as a
// per-row spectrum function {size(a) : S(a,b,c)}. Candidate rows come from
// the caller; realization reports the first row whose spectrum equals the
// target set exactly.
SequenceFamilyReport sequence_family_check(
    const std::function<std::set<std::size_t>(Mask b, Mask c)>& spectrum_of_row,
    const std::vector<std::pair<Mask, Mask>>& candidate_rows,
    const std::set<std::size_t>& target, std::size_t sample_rows = 12);

}  // namespace latlab::monadic
