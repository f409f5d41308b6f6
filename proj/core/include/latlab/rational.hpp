#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace latlab {

// Exact arbitrary-precision rational. All geometry and lattice code in this
// library is exact; no floating point is used anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat make_rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(num), Int(den));
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// Canonical textual form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

inline int sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

}  // namespace latlab
