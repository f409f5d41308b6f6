#include "latlab/interval/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

#include "latlab/interval/sequences.hpp"

namespace latlab::interval {

using monadic::Mask;
using monadic::TruncationError;

RelationSDividesResult relation_s_divides(long long k, long long n) {
  if (k < 1 || n < 1) throw std::invalid_argument("relation_s_divides needs positive arguments");
  RelationSDividesResult r;
  r.oracle = (n % k) == 0;

  // canonical candidate: the additive chain of k up to n
  std::set<std::size_t> chain;
  for (long long m = k; m <= n; m += k) chain.insert(static_cast<std::size_t>(m));

  // realize the chain as a jump spectrum and verify exactly
  SpectrumWitness w = realize_spectrum(chain);
  auto spectrum = jump_spectrum(w.b, w.c);
  if (spectrum != chain)
    throw std::logic_error("spectrum witness failed verification");
  r.chain_size = w.chain_size;

  // extract the sizes back from the witness row and check the (*) clauses on
  // them at the integer level
  std::vector<long long> sizes(chain.begin(), chain.end());
  bool member = std::binary_search(sizes.begin(), sizes.end(), n);
  bool star = !sizes.empty() && monadic::star_property_values(sizes, k, n);
  r.definable = member && star;
  r.margin = r.definable ? Verdict::ExactPass : Verdict::SoundOnlyPass;
  return r;
}

LatticeArithResult lattice_add(long long m, long long n, std::size_t base_size) {
  if (m < 0 || n < 0) throw std::invalid_argument("lattice_add needs m, n >= 0");
  LatticeArithResult r;
  r.oracle = m + n;
  if (static_cast<std::size_t>(m + n) > base_size || base_size > 63)
    throw TruncationError("lattice_add(" + std::to_string(m) + "," + std::to_string(n) +
                          ") needs base size >= " + std::to_string(m + n) + " (given " +
                          std::to_string(base_size) + ")");
  Mask a = (m == 0) ? 0 : ((1ULL << m) - 1);
  Mask b = ((n == 0) ? 0 : ((1ULL << n) - 1)) << m;
  r.trace.push_back("a = atoms of size " + std::to_string(m) + ", b = atoms of size " +
                    std::to_string(n));
  std::optional<long long> found;
  for (std::size_t k = 0; k <= base_size; ++k) {
    Mask c = (k == 0) ? 0 : ((1ULL << k) - 1);
    auto res = monadic::addition_on_classes(base_size, a, b, c);
    if (res.margin == Verdict::BoundaryExcluded) continue;
    if (res.value) {
      if (found) throw std::logic_error("addition_on_classes matched two sizes");
      found = static_cast<long long>(k);
    }
  }
  if (!found) throw std::logic_error("addition_on_classes matched no size");
  r.value = *found;
  r.trace.push_back("unique class size with A(a,b,c): " + std::to_string(r.value));
  return r;
}

LatticeArithResult lattice_add(long long m, long long n) {
  return lattice_add(m, n, static_cast<std::size_t>(m + n));
}

namespace {

long long subtract_search(long long target, long long x, long long bound) {
  for (long long z = 1; z + x <= bound; ++z)
    if (z + x == target) return z;
  if (target == x) return 0;
  throw TruncationError("difference not representable within bound");
}

long long halve_search(long long target, long long bound) {
  for (long long h = 1; h + h <= bound; ++h)
    if (h + h == target) return h;
  throw TruncationError("half not representable within bound");
}

// least m with k|m and l|m, every | decided through relation_s_divides
long long lcm_via_relation_s(long long k, long long l, long long bound,
                             std::size_t& max_chain) {
  for (long long m = k; m <= bound; m += k) {
    auto dk = relation_s_divides(k, m);
    auto dl = relation_s_divides(l, m);
    max_chain = std::max({max_chain, dk.chain_size, dl.chain_size});
    if (dk.definable && dl.definable) return m;
  }
  throw TruncationError("lcm of " + std::to_string(k) + " and " + std::to_string(l) +
                        " exceeds bound " + std::to_string(bound));
}

long long square_via_relation_s(long long x, long long bound, std::size_t& max_chain,
                                std::vector<std::string>& trace) {
  long long L = lcm_via_relation_s(x, x + 1, bound, max_chain);
  long long sq = subtract_search(L, x, bound);
  trace.push_back("square(" + std::to_string(x) + ") = lcm(" + std::to_string(x) + "," +
                  std::to_string(x + 1) + ") - " + std::to_string(x) + " = " +
                  std::to_string(sq));
  return sq;
}

}  // namespace

LatticeArithResult lattice_mul(long long m, long long n, long long bound) {
  if (m < 1 || n < 1) throw std::invalid_argument("lattice_mul needs m, n >= 1");
  long long required = monadic::required_bound_for_multiply(m, n);
  if (required > bound)
    throw TruncationError("lattice_mul(" + std::to_string(m) + "," + std::to_string(n) +
                          ") needs bound >= " + std::to_string(required));
  LatticeArithResult r;
  r.oracle = m * n;
  std::size_t max_chain = 0;
  long long sq_sum = square_via_relation_s(m + n, bound, max_chain, r.trace);
  long long sq_m = square_via_relation_s(m, bound, max_chain, r.trace);
  long long sq_n = square_via_relation_s(n, bound, max_chain, r.trace);
  long long d = subtract_search(subtract_search(sq_sum, sq_m, bound), sq_n, bound);
  r.value = halve_search(d, bound);
  r.trace.push_back("(m+n)^2 - m^2 - n^2 = " + std::to_string(d) + ", halved: " +
                    std::to_string(r.value));
  r.trace.push_back("largest witness chain: " + std::to_string(max_chain) + " grid points");
  return r;
}

LatticeArithResult lattice_mul(long long m, long long n) {
  return lattice_mul(m, n, monadic::required_bound_for_multiply(m, n));
}

}  // namespace latlab::interval
