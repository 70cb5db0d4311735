#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abarr/numeric.hpp"

namespace abarr {

/// Row Hermite normal form: upper echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot), zero rows trailing. Unique for a
/// given row span, so equality of sublattices is entrywise equality.
struct HnfResult {
    IntMatrix h;  // the normal form
    IntMatrix u;  // unimodular, u * m == h
};

HnfResult hnf(const IntMatrix& m);

bool is_row_hnf(const IntMatrix& m);

/// Smith normal form with both transforms retained: left * m * right == d,
/// d diagonal with d(0,0) | d(1,1) | ... and nonnegative entries.
struct SnfResult {
    IntMatrix d;
    IntMatrix left;       // unimodular
    IntMatrix right;      // unimodular
    IntMatrix right_inv;  // right^-1, maintained alongside
    std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMatrix& m);

/// Torsion of Z^cols / rowspan(m), i.e. the invariant factors > 1 of the
/// cokernel restricted to the saturation. torsion_coords.row(k) is the
/// functional computing the Z/f_k coordinate of an ambient vector.
struct TorsionProfile {
    std::vector<Int> invariant_factors;  // f_1 | f_2 | ..., all > 1
    IntMatrix torsion_coords;

    Int index() const {  // product of factors
        Int p = 1;
        for (const Int& f : invariant_factors) p *= f;
        return p;
    }
};

TorsionProfile torsion_profile(const IntMatrix& m);

/// A sublattice of Z^n presented by its canonical HNF basis (full row rank).
struct LatticeBasis {
    Index ambient_dim = 0;
    IntMatrix basis;  // rank x ambient_dim, row HNF, no zero rows

    Index rank() const { return basis.rows(); }
    bool operator==(const LatticeBasis& o) const {
        return ambient_dim == o.ambient_dim && matrix_equal(basis, o.basis);
    }
};

/// Canonicalize arbitrary generating rows into a LatticeBasis.
LatticeBasis lattice_from_rows(const IntMatrix& rows);

/// Smallest direct summand of Z^n containing the row span, plus the torsion
/// of sat / rowspan.
std::pair<LatticeBasis, TorsionProfile> saturate(const IntMatrix& rows);

bool is_saturated(const LatticeBasis& b);

/// Integer coordinates of v in the basis rows, or nullopt if v is not in
/// the row span over Z. Throws on dimension mismatch.
std::optional<IntRowVec> member(const IntRowVec& v, const LatticeBasis& b);

/// Unimodular n x n matrix whose first rank(b) rows are the basis rows of b
/// and whose remaining rows span a complement. Requires b saturated.
IntMatrix complete_unimodular(const LatticeBasis& b);

/// Exact determinant (Bareiss), square input.
Int determinant(const IntMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace abarr
