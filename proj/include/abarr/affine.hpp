#pragma once

#include <utility>
#include <vector>

#include "abarr/numeric.hpp"
#include "abarr/poset.hpp"

namespace abarr {

/// Rational affine hyperplanes normal . x = offset in Q^dim.
struct AffineArrangement {
    Index dim = 0;
    std::vector<std::pair<RatRowVec, Rat>> hyperplanes;

    void validate() const;  // nonzero normals, duplicates rejected
};

bool is_central(const AffineArrangement& a);

/// Nonempty intersections ordered by reverse inclusion, ranked by
/// codimension. Flats are canonical reduced row-echelon forms of their
/// defining systems, so flat equality is representation equality. When
/// requested, atom_of_hyperplane[i] receives the element index of
/// hyperplane i.
FinitePoset intersection_poset(const AffineArrangement& a,
                               std::vector<int>* atom_of_hyperplane = nullptr);

/// Homogenization: one dimension up, plus the hyperplane x_0 = 0 in front.
AffineArrangement cone(const AffineArrangement& a);

/// Inverse of coning with respect to hyperplane h of a central arrangement:
/// coordinates are chosen so h becomes the far hyperplane, which is then set
/// to one and dropped.
AffineArrangement decone(const AffineArrangement& a, int h);

struct AffineSsReport {
    bool ss = false;
    bool cone_ss_through_h0 = false;  // modular chain in the cone through the far atom
};

/// Both supersolvability routes: the ideal-chain search on the intersection
/// poset, and the classical modular-chain search in the coned lattice
/// constrained to pass through the added hyperplane. The two verdicts must
/// agree; disagreement throws. Requires an essential arrangement.
AffineSsReport affine_ss_check(const AffineArrangement& a);

}  // namespace abarr
