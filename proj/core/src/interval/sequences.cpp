#include "latlab/interval/sequences.hpp"

#include <algorithm>
#include <functional>

namespace latlab::interval {

using monadic::Mask;

std::vector<std::pair<Rat, Rat>> jumps(std::vector<Rat> b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) out.emplace_back(b[i], b[i + 1]);
  return out;
}

std::set<std::size_t> jump_spectrum(std::vector<Rat> b, std::vector<Rat> c) {
  std::sort(c.begin(), c.end());
  std::set<std::size_t> out;
  for (const auto& [x, y] : jumps(std::move(b))) {
    std::size_t k = 0;
    for (const auto& z : c)
      if (x < z && z < y) ++k;
    out.insert(k);
  }
  return out;
}

bool relation_S(const std::vector<Rat>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c) {
  auto spectrum = jump_spectrum(b, c);
  std::set<Rat> distinct(a.begin(), a.end());
  return spectrum.count(distinct.size()) != 0;
}

std::set<std::size_t> jump_spectrum_masks(Mask b, Mask c) {
  std::set<std::size_t> out;
  int prev = -1;
  for (int i = 0; i < 64; ++i) {
    if (!(b & (1ULL << i))) continue;
    if (prev >= 0) {
      std::size_t k = 0;
      for (int t = prev + 1; t < i; ++t)
        if (c & (1ULL << t)) ++k;
      out.insert(k);
    }
    prev = i;
  }
  return out;
}

SpectrumWitness realize_spectrum(const std::set<std::size_t>& target) {
  SpectrumWitness w;
  // posts separated by gaps of exactly the target sizes, fillers in the gaps
  long long pos = 1;
  w.b.push_back(Rat(pos));
  for (std::size_t n : target) {
    for (std::size_t i = 0; i < n; ++i) w.c.push_back(Rat(++pos));
    w.b.push_back(Rat(++pos));
  }
  w.chain_size = static_cast<std::size_t>(pos);
  if (target.empty()) {
    // a single post has no jumps; the empty spectrum is realized vacuously
    w.b = {Rat(1)};
    w.c = {};
    w.chain_size = 1;
  }
  return w;
}

std::vector<std::pair<Mask, Mask>> enumerate_rows(std::size_t chain_size, std::size_t b_cap,
                                                  std::size_t c_cap) {
  std::vector<std::pair<Mask, Mask>> rows;
  auto bs = monadic::subsets_up_to(chain_size, b_cap);
  for (Mask b : bs) {
    // c points outside the jump gaps of b never change the spectrum, so
    // confine c to the union of the gaps
    Mask gap_area = 0;
    int prev = -1;
    for (int i = 0; i < static_cast<int>(chain_size); ++i) {
      if (!(b & (1ULL << i))) continue;
      if (prev >= 0)
        for (int t = prev + 1; t < i; ++t) gap_area |= 1ULL << t;
      prev = i;
    }
    // enumerate subsets of the gap area up to the cap
    std::vector<std::size_t> gap_bits;
    for (std::size_t i = 0; i < chain_size; ++i)
      if (gap_area & (1ULL << i)) gap_bits.push_back(i);
    std::vector<Mask> cs;
    std::function<void(std::size_t, Mask, std::size_t)> rec = [&](std::size_t start, Mask acc,
                                                                  std::size_t left) {
      cs.push_back(acc);
      if (left == 0) return;
      for (std::size_t i = start; i < gap_bits.size(); ++i)
        rec(i + 1, acc | (1ULL << gap_bits[i]), left - 1);
    };
    rec(0, 0, std::min(c_cap, gap_bits.size()));
    for (Mask c : cs) rows.emplace_back(b, c);
  }
  return rows;
}

}  // namespace latlab::interval
