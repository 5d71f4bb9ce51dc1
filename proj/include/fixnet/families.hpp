#pragma once

#include "fixnet/digraph.hpp"

#include <string>

namespace fixnet {

/// K*_n: vertices are pairs (i,j) in {0..n-1}^2, flattened as i*n+j.
/// Arcs: (i,j) -> (i,j+1 mod n) and, for j != i, (i,i) -> (j,i).
Digraph build_k_star(int n);

/// Named generators. Families:
///   "loop-cycle"          directed n-cycle, every vertex looped
///   "sourced-loop-cycle"  source vertex feeding an (n-1) loop-cycle
///   "pendant-loop-cycle"  looped ring of n/2 vertices, each with a 2-cycle pendant (n even)
///   "star-of-2-cycles"    center joined by 2-cycles to n-1 leaves
///   "tprime" / "T'"       loops on all vertices plus arcs u -> v for u > v
///   "kstar"               K*_n
///   "complete"            loop-less symmetric K_n
///   "complete-bipartite"  loop-less symmetric K_{n,n} (2n vertices)
Digraph build_family(const std::string& name, int n);

} // namespace fixnet
