#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

/// Rim 0..n-1 in cyclic order.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite_graph(int a, int b);
/// Rim 0..n-1, hub n.
Graph wheel_graph(int spokes);

/// Paths of the given lengths between two ends. Interior vertices come first,
/// path by path in order, then the two ends. At most one length may be 1.
Graph theta_graph(std::span<const int> lengths);
/// Theta graph plus a last vertex joined to every theta vertex of degree two.
Graph dimensional_wheel(std::span<const int> lengths);
/// Theta graph plus a last vertex joined to every theta vertex.
Graph augmented_dimensional_wheel(std::span<const int> lengths);

/// Rim 0..2n-1; vertex 2n is joined to the even ids, 2n+1 to the odd ids.
Graph alternating_double_wheel(int n);
/// K_n minus the Hamiltonian cycle 0, 1, ..., n-1.
Graph complete_minus_cycle(int n);
/// K_n minus the Hamiltonian path 0, 1, ..., n-1.
Graph complete_minus_path(int n);
/// K_n - C_n plus nonadjacent vertices n and n+1 joined to all of it.
Graph q_graph(int n);

/// Names accepted by generate(), in a fixed order.
const std::vector<std::string>& family_names();

/// Builds a family member by name: cycle, complete, complete_bipartite, wheel,
/// theta, dim_wheel, aug_dim_wheel, alt_double_wheel, kn_minus_cn, kn_minus_pn, q.
/// Throws GraphError on an unknown name or out-of-range parameters.
Graph generate(std::string_view family, std::span<const int> params);

}  // namespace kconn
