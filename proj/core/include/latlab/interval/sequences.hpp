#pragma once

#include <set>
#include <utility>
#include <vector>

#include "latlab/monadic/weak_power.hpp"
#include "latlab/rational.hpp"

namespace latlab::interval {

// Consecutive pairs of a finite subset of the chain: x < y adjacent in b with
// nothing of b strictly between.
std::vector<std::pair<Rat, Rat>> jumps(std::vector<Rat> b);

// S(a,b,c): some jump (x,y) of b has |((x,y)) ∩ c| = |a|.
bool relation_S(const std::vector<Rat>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c);

// {|((x,y)) ∩ c| : (x,y) a jump of b} -- the spectrum of sizes the row (b,c)
// realizes through S.
std::set<std::size_t> jump_spectrum(std::vector<Rat> b, std::vector<Rat> c);

// Mask-level spectrum over the chain 0..n-1 (for the generic searchers).
std::set<std::size_t> jump_spectrum_masks(monadic::Mask b, monadic::Mask c);

// Constructive realizer: a chain {1..chain_size} with b posts and c fillers
// whose spectrum is exactly the target. Works for any finite target set.
struct SpectrumWitness {
  std::size_t chain_size = 0;
  std::vector<Rat> b, c;
};
SpectrumWitness realize_spectrum(const std::set<std::size_t>& target);

// All rows (b,c) over the chain 0..chain_size-1 with |b| <= b_cap and c
// confined to the jump gaps of b (points elsewhere never affect the
// spectrum), c gap fill <= c_cap per instance total.
std::vector<std::pair<monadic::Mask, monadic::Mask>> enumerate_rows(std::size_t chain_size,
                                                                    std::size_t b_cap,
                                                                    std::size_t c_cap);

}  // namespace latlab::interval
