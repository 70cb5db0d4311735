#pragma once

#include <vector>

#include "abarr/poly.hpp"
#include "abarr/poset.hpp"
#include "abarr/ssolv.hpp"

namespace abarr {

struct FactoredCharPoly {
    IntPolynomial poly;            // product of the linear factors
    std::vector<Int> roots;        // the block sizes a_i, ascending by level
};

/// Characteristic polynomial as the product of (t - a_i) over the blocks of
/// a strict chain; equality with the Moebius-computed polynomial of the
/// poset is asserted. Refuses non-strict chains, whose polynomial need not
/// factor.
FactoredCharPoly charpoly_factored(const FinitePoset& p, const IdealChain& chain);

/// Product formula for the Poincare polynomial of a complement with v > 0:
/// prod_i ((1+t)^d + a_i t^(d+v-1)). When the characteristic polynomial is
/// supplied, the substitution route
///   (-t^(d+v-1))^n chi(-(1+t)^d / t^(d+v-1))
/// is evaluated as well and must agree exactly.
IntPolynomial poincare(const std::vector<long>& a, int d, int v,
                       const IntPolynomial* chi = nullptr);

/// The substitution route alone; defined for any characteristic polynomial
/// with v > 0, no chain required.
IntPolynomial poincare_from_charpoly(const IntPolynomial& chi, int d, int v);

/// Ranks of the lower-central-series quotients determined by the identity
/// prod_j (1-t^j)^(phi_j) = prod_i (1-(a_i+1)t), solved by power sums:
/// sum_{j|k} j phi_j = sum_i (a_i+1)^k. Throws if the solution is not a
/// nonnegative integer sequence.
std::vector<Int> lcs_ranks(const std::vector<long>& a, int j_max);

}  // namespace abarr
