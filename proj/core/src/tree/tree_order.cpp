#include "latlab/tree/tree_order.hpp"

#include <stdexcept>

namespace latlab::tree {

bool valid_node(const std::string& s) {
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

static void require_valid(const std::string& s) {
  if (!valid_node(s)) throw std::invalid_argument("tree node must be a {0,1}-string");
}

bool prefix_leq(const std::string& sigma, const std::string& tau) {
  require_valid(sigma);
  require_valid(tau);
  return tau.size() >= sigma.size() && tau.compare(0, sigma.size(), sigma) == 0;
}

std::string infimum(const std::string& sigma, const std::string& tau) {
  require_valid(sigma);
  require_valid(tau);
  std::size_t n = 0;
  while (n < sigma.size() && n < tau.size() && sigma[n] == tau[n]) ++n;
  return sigma.substr(0, n);
}

bool horizontal(const std::string& sigma, const std::string& tau) {
  require_valid(sigma);
  require_valid(tau);
  if (sigma == tau) return true;
  if (prefix_leq(sigma + "1", tau)) return true;
  if (prefix_leq(tau + "0", sigma)) return true;
  bool incomparable = !prefix_leq(sigma, tau) && !prefix_leq(tau, sigma);
  if (incomparable) {
    std::string gamma = infimum(sigma, tau);
    return prefix_leq(gamma + "0", sigma);
  }
  return false;
}

std::vector<std::string> nodes_up_to_depth(std::size_t d) {
  std::vector<std::string> out{""};
  std::size_t start = 0;
  for (std::size_t depth = 1; depth <= d; ++depth) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i) {
      out.push_back(out[i] + "0");
      out.push_back(out[i] + "1");
    }
    start = end;
  }
  return out;
}

}  // namespace latlab::tree
