#pragma once

#include <string>
#include <vector>

#include "abarr/layers.hpp"
#include "abarr/poset.hpp"

namespace abarr {

/// Simple graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const;  // no loops, no multi-edges, vertices in range
};

bool is_connected(const SimpleGraph& g);

/// Maximum-cardinality-search test for a perfect elimination ordering.
bool is_chordal(const SimpleGraph& g);

/// Difference vectors of the edges, essentialized: rewritten on the
/// saturation of their span, which has rank n-1 for a connected graph.
Arrangement graphic_arrangement(const SimpleGraph& g, int d, int v);

/// Multiplication table of a finite group together with an action table on
/// a finite set. All axioms are verified at construction time via validate().
struct FiniteGroupTable {
    int order = 1;
    std::vector<std::vector<int>> mult;  // mult[g][h] = gh
    int identity = 0;
    int set_size = 0;
    std::vector<std::vector<int>> action;  // action[g][s]

    void validate() const;
    int inverse(int g) const;
};

/// Cyclic group of order m acting on a set described by orbit tokens:
/// "t" adds a fixed point, "r" adds a free orbit of size m.
FiniteGroupTable cyclic_group(int m, const std::vector<std::string>& orbit_spec = {});

/// Poset of partial group-colored partitions of {1..n} with a marking of
/// the uncovered points by elements of the group-set. Generated from the
/// all-singletons minimum by block merges (one cover per group element) and
/// block removals (one cover per equivariant marking).
FinitePoset dowling_poset(int n, const FiniteGroupTable& g);

/// The ideal of elements keeping n in a singleton block, isomorphic to the
/// poset one rank down; this is the chain step used to certify strict
/// supersolvability.
std::vector<int> dowling_top_ideal(const FinitePoset& p, int n);

FinitePoset partition_lattice(int n);
FinitePoset boolean_lattice(int n);

/// Vectors rewritten in the canonical basis of a finite-index sublattice.
/// Every vector must lie in the sublattice.
Arrangement finite_index_rewrite(const Arrangement& a, const LatticeBasis& sub);

}  // namespace abarr
