#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abarr/exact.hpp"
#include "abarr/poset.hpp"

namespace abarr {

/// Ambient group data: characters live in Z^n, the group is a product of
/// d circle factors and v line factors.
struct Ambient {
    Index n = 0;  // character lattice rank
    int d = 0;    // compact factors
    int v = 0;    // noncompact factors

    void validate() const;
    bool operator==(const Ambient& o) const = default;
};

/// A finite set of nonzero integer characters; each one cuts out the
/// subgroup where it vanishes.
struct Arrangement {
    Ambient ambient;
    std::vector<IntRowVec> vectors;

    void validate_shape() const;  // sizes and nonzero entries
};

/// One connected component of an intersection: the saturated sublattice of
/// constraints together with the torsion character picking the component.
/// Characters are recorded by their values on the HNF basis rows, one
/// fraction in [0,1) per circle factor. Equality of layers is equality of
/// fields.
struct Layer {
    LatticeBasis lattice;
    RatMatrix character;  // rank x d, entries canonical in [0,1)

    Index rank() const { return lattice.rank(); }
};

int layer_cmp(const Layer& a, const Layer& b);

/// Value of the layer's character on an arbitrary vector of the sublattice,
/// reduced into [0,1) per circle coordinate. Empty if v is not in the lattice.
std::optional<RatRowVec> character_value(const Layer& l, const IntRowVec& v);

struct ArrangementStatus {
    bool essential = false;
    bool irredundant = false;
    Index span_rank = 0;
};

/// Reports essentiality (the vectors span a finite-index subgroup, i.e. full
/// rank) and irredundancy (no two vectors share a component of their
/// subgroups).
ArrangementStatus validate(const Arrangement& a);

struct LayerPoset {
    FinitePoset poset;
    std::vector<Layer> layers;        // by element index
    std::vector<int> source_vector;   // atoms: defining vector index; else -1
    ArrangementStatus status;

    const Layer& layer_of(int elem) const { return layers.at(static_cast<size_t>(elem)); }
    std::vector<int> atoms_of_vectors(const std::vector<int>& vector_ids) const;
};

/// All layers of the arrangement, as a poset under reverse inclusion.
/// Deterministic: elements are sorted by (rank, lattice, character)
/// regardless of worker count. Throws on redundant input; non-essential
/// input is only flagged in the status.
LayerPoset build_layers(const Arrangement& a, int workers = 1, int max_vectors = 16);

/// Splitting data for a corank-one saturated sublattice L: a unimodular
/// completion whose last row generates a complement of L, and the integer
/// functional measuring the component of a vector along that complement.
struct AdmissibleProjection {
    IntRowVec beta0;       // primitive generator of the complement
    IntMatrix completion;  // rows: basis of L, then beta0
    IntRowVec epsilon;     // c(alpha) = |alpha . epsilon|
};

AdmissibleProjection admissible_from_corank1(const LatticeBasis& l);

Int c_of(const IntRowVec& alpha, const AdmissibleProjection& proj);

struct SubQuotient {
    std::vector<int> sub_indices;  // vectors with c(alpha) = 0
    Arrangement quotient;          // those vectors in the basis of L, rank n-1
};

/// The sub-arrangement of vectors vanishing on the complement direction and
/// its rewrite on the corank-one sublattice.
SubQuotient sub_and_quotient(const Arrangement& a, const LatticeBasis& l,
                             const AdmissibleProjection& proj);

struct HorizontalReport {
    std::vector<int> horizontal;  // atoms outside the candidate ideal
    std::vector<int> meet_set;    // elements meeting every max of the ideal in the bottom
    bool agree = false;           // the two coincide exactly when the ideal is modular
};

/// Atoms not in the candidate ideal, together with the meet-characterized
/// set {x : x ^ y = bottom for all maximal y of the ideal}.
HorizontalReport horizontal_set(const LayerPoset& lp, const std::vector<int>& q_atoms);

/// Number of fiber punctures: sum of c(alpha)^d over vectors outside the
/// sub-arrangement.
Int puncture_count(const Arrangement& a, const AdmissibleProjection& proj);

/// Elements of the layer poset whose lattice is contained in l; for a
/// corank-one saturated l this is the sub-arrangement's layer poset inside
/// the big one.
std::vector<int> ideal_of_sublattice(const LayerPoset& lp, const LatticeBasis& l);

std::string layer_label(const Layer& l);

}  // namespace abarr
