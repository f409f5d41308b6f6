#include "latlab/rational.hpp"

namespace latlab {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string rat_str(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace latlab
