#pragma once

#include <string>
#include <vector>

namespace latlab::tree {

// Nodes of the binary tree: finite strings over {0,1}; "" is the root.
bool valid_node(const std::string& s);

// sigma <= tau: tau extends sigma.
bool prefix_leq(const std::string& sigma, const std::string& tau);

// longest common prefix
std::string infimum(const std::string& sigma, const std::string& tau);

// The horizontal order, by the four-clause case analysis: sigma = tau, or
// sigma1 <= tau, or tau0 <= sigma, or sigma and tau are prefix-incomparable
// and gamma0 <= sigma for their infimum gamma.
bool horizontal(const std::string& sigma, const std::string& tau);

// all nodes of depth <= d, shortlex order
std::vector<std::string> nodes_up_to_depth(std::size_t d);

}  // namespace latlab::tree
