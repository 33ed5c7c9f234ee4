#pragma once

#include <cstdint>
#include <string>

#include "ssg/graph.hpp"

namespace ssg {

enum class FamilyTag {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Prism,
    Hypercube,
    Kneser,
    Subset,
    HGadget,
    TrianglePendants,
    RandomTree,
};

/// Family selector plus integer parameters (a, b, c as each family needs)
/// and a seed for the random families.
struct FamilySpec {
    FamilyTag tag = FamilyTag::Complete;
    int a = 0;
    int b = 0;
    int c = 0;
    uint64_t seed = 0;
};

Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Circular ladder CL_n: outer cycle 0..n-1, inner cycle n..2n-1, rungs i - (n+i).
Graph prism_graph(int n);
/// Vertices are the binary strings of length d (vertex i = bits of i).
Graph hypercube_graph(int d);
/// Vertices are the k-subsets of {0..n-1} in colex order; edges join disjoint subsets.
Graph kneser_graph(int n, int k);
/// Vertices are the k-subsets (colex) followed by the l-subsets (colex);
/// edges join a k-subset to the l-subsets containing it.
Graph subset_graph(int n, int k, int l);
/// Two copies of K_{2,3} joined by two edges between distinct 2-vertices:
/// vertices 0,1 / 5,6 are the 3-vertex sides, 2,3,4 / 7,8,9 the 2-vertex
/// sides, joins 2-7 and 3-8.
Graph h_gadget();
/// Triangle 0,1,2 with pendant edges 0-3, 1-4, 2-5.
Graph triangle_with_pendants();
/// Uniform random labeled tree from a seeded Pruefer sequence.
Graph random_tree(int n, uint64_t seed);

} // namespace ssg
