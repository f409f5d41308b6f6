#pragma once

#include <string>
#include <vector>

#include "latlab/monadic/definability.hpp"
#include "latlab/report.hpp"

namespace latlab::interval {

// Divisibility k|n realized through the chain and the S relation: a row (b,c)
// over a rational chain realizes the additive chain {k, 2k, ...} up to n as
// its jump spectrum, the (*) clauses are verified on the extracted sizes, and
// membership of n decides. Positives are exact, negatives sound-only.
struct RelationSDividesResult {
  bool definable = false;
  bool oracle = false;
  Verdict margin = Verdict::SoundOnlyPass;
  std::size_t chain_size = 0;  // grid points used by the witness row
};
RelationSDividesResult relation_s_divides(long long k, long long n);

struct LatticeArithResult {
  long long value = 0;
  long long oracle = 0;
  Verdict margin = Verdict::ExactPass;
  std::vector<std::string> trace;
};

// Addition on size classes: atoms sets of the given sizes on a base grid,
// decided through the displayed existential formula. Throws TruncationError
// naming the minimal sufficient base when the grid is too small.
LatticeArithResult lattice_add(long long m, long long n, std::size_t base_size);
LatticeArithResult lattice_add(long long m, long long n);

// Multiplication through the (+,|) pipeline with every divisibility query
// routed through relation_s_divides. Throws TruncationError naming the
// required bound when the configured bound is too small.
LatticeArithResult lattice_mul(long long m, long long n, long long bound);
LatticeArithResult lattice_mul(long long m, long long n);

}  // namespace latlab::interval
