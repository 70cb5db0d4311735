#include <doctest.h>

#include "abarr/exact.hpp"
#include "oracles.hpp"

using namespace abarr;

namespace {

IntMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(static_cast<Index>(rows.size()),
                rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

bool same_row_span(const IntMatrix& a, const IntMatrix& b) {
    LatticeBasis la = lattice_from_rows(a), lb = lattice_from_rows(b);
    for (Index i = 0; i < la.basis.rows(); ++i)
        if (!member(la.basis.row(i), lb)) return false;
    for (Index i = 0; i < lb.basis.rows(); ++i)
        if (!member(lb.basis.row(i), la)) return false;
    return true;
}

}  // namespace

TEST_CASE("hnf: identity is fixed") {
    IntMatrix id = IntMatrix::Identity(2, 2);
    auto r = hnf(id);
    CHECK(matrix_equal(r.h, id));
    CHECK(matrix_equal(r.u, id));
}

TEST_CASE("hnf: generic 2x2, certified by transform identities") {
    IntMatrix m = make({{1, 2}, {3, 4}});
    auto r = hnf(m);
    CHECK(is_row_hnf(r.h));
    Int du = determinant(r.u);
    CHECK((du == 1 || du == -1));
    IntMatrix prod = r.u * m;
    CHECK(matrix_equal(prod, r.h));
    CHECK(same_row_span(m, r.h));
}

TEST_CASE("hnf: already normal") {
    IntMatrix m = make({{0, 2}});
    auto r = hnf(m);
    CHECK(matrix_equal(r.h, m));
}

TEST_CASE("hnf: zero rows trail") {
    IntMatrix m = make({{0, 0}, {2, 4}, {1, 1}});
    auto r = hnf(m);
    CHECK(is_row_hnf(r.h));
    CHECK(r.h(2, 0) == 0);
    CHECK(r.h(2, 1) == 0);
    CHECK(same_row_span(m, r.h));
}

TEST_CASE("snf: unimodular input has no torsion") {
    auto t = torsion_profile(make({{1, 0}, {0, 1}}));
    CHECK(t.invariant_factors.empty());
}

TEST_CASE("snf: [[2,4],[0,6]] has factors 2,6 (gcd-of-minors oracle)") {
    IntMatrix m = make({{2, 4}, {0, 6}});
    Int d1 = oracles::gcd_of_minors(m, 1);
    Int d1d2 = oracles::gcd_of_minors(m, 2);
    REQUIRE(d1 == 2);
    REQUIRE(d1d2 == 12);
    auto t = torsion_profile(m);
    REQUIRE(t.invariant_factors.size() == 2);
    CHECK(t.invariant_factors[0] == d1);
    CHECK(t.invariant_factors[1] == d1d2 / d1);
    CHECK(t.index() == 12);
}

TEST_CASE("snf: row (0,2) in Z^2 gives factor 2") {
    auto t = torsion_profile(make({{0, 2}}));
    REQUIRE(t.invariant_factors.size() == 1);
    CHECK(t.invariant_factors[0] == 2);
}

TEST_CASE("snf: transforms multiply back") {
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = oracles::random_int_matrix(2 + trial % 3, 2 + (trial / 3) % 3);
        auto s = snf(m);
        IntMatrix lhs = s.left * m * s.right;
        CHECK(matrix_equal(lhs, s.d));
        IntMatrix ri = s.right * s.right_inv;
        CHECK(matrix_equal(ri, IntMatrix::Identity(m.cols(), m.cols())));
        Int dl = determinant(s.left), dr = determinant(s.right);
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
        auto diag = s.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i) CHECK(divides(diag[i], diag[i + 1]));
        // first invariant factor is the gcd of entries
        if (!diag.empty()) CHECK(diag[0] == oracles::gcd_of_minors(m, 1));
    }
}

TEST_CASE("saturate: single non-primitive row") {
    auto [sat, t] = saturate(make({{0, 2}}));
    CHECK(sat.rank() == 1);
    CHECK(sat.basis(0, 0) == 0);
    CHECK(sat.basis(0, 1) == 1);
    REQUIRE(t.invariant_factors.size() == 1);
    CHECK(t.invariant_factors[0] == 2);
}

TEST_CASE("saturate: full basis is already saturated") {
    auto [sat, t] = saturate(make({{1, 0}, {0, 1}}));
    CHECK(sat.rank() == 2);
    CHECK(matrix_equal(sat.basis, IntMatrix::Identity(2, 2)));
    CHECK(t.invariant_factors.empty());
}

TEST_CASE("saturate: primitive vector is its own saturation") {
    auto [sat, t] = saturate(make({{1, 2}}));
    CHECK(sat.rank() == 1);
    CHECK(sat.basis(0, 0) == 1);
    CHECK(sat.basis(0, 1) == 2);
    CHECK(t.invariant_factors.empty());
}

TEST_CASE("saturate: idempotent and span-compatible on random input") {
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = oracles::random_int_matrix(1 + trial % 4, 2 + trial % 3, -6, 6);
        auto [sat, t] = saturate(m);
        CHECK(is_saturated(sat));
        auto [sat2, t2] = saturate(sat.basis);
        CHECK(sat == sat2);
        CHECK(t2.invariant_factors.empty());
        // every generator lies in the saturation
        LatticeBasis span = lattice_from_rows(m);
        for (Index i = 0; i < span.basis.rows(); ++i)
            CHECK(member(span.basis.row(i), sat).has_value());
        // the torsion index equals the product of invariant factors of the span
        Int idx = 1;
        auto s = snf(span.basis);
        for (const Int& d : s.diagonal()) idx *= d;
        CHECK(t.index() == idx);
    }
}

TEST_CASE("member: inside, outside, and scaled") {
    LatticeBasis e2 = lattice_from_rows(make({{0, 1}}));
    IntRowVec v(2);
    v << 0, 2;
    auto c = member(v, e2);
    REQUIRE(c.has_value());
    CHECK((*c)(0) == 2);
    v << 1, 1;
    CHECK(!member(v, e2).has_value());

    LatticeBasis diag = lattice_from_rows(make({{1, 1}}));
    v << 2, 2;
    auto c2 = member(v, diag);
    REQUIRE(c2.has_value());
    CHECK((*c2)(0) == 2);
}

TEST_CASE("member: dimension mismatch throws") {
    LatticeBasis e2 = lattice_from_rows(make({{0, 1}}));
    IntRowVec bad(3);
    bad << 1, 2, 3;
    CHECK_THROWS_AS((void)member(bad, e2), std::invalid_argument);
}

TEST_CASE("member: coordinates reproduce the vector") {
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = oracles::random_int_matrix(2, 4, -5, 5);
        LatticeBasis b = lattice_from_rows(m);
        if (b.rank() == 0) continue;
        IntRowVec combo = IntRowVec::Zero(4);
        IntMatrix coeffs = oracles::random_int_matrix(1, static_cast<int>(b.rank()), -7, 7);
        for (Index i = 0; i < b.rank(); ++i) combo += coeffs(0, i) * b.basis.row(i);
        auto c = member(combo, b);
        REQUIRE(c.has_value());
        IntRowVec back = IntRowVec::Zero(4);
        for (Index i = 0; i < b.rank(); ++i) back += (*c)(i)*b.basis.row(i);
        CHECK(matrix_equal(back, combo));
    }
}

TEST_CASE("complete_unimodular: coordinate axis") {
    LatticeBasis b = lattice_from_rows(make({{1, 0}}));
    IntMatrix c = complete_unimodular(b);
    CHECK(matrix_equal(c, IntMatrix::Identity(2, 2)));
}

TEST_CASE("complete_unimodular: primitive (1,2) and determinant oracle") {
    LatticeBasis b = lattice_from_rows(make({{1, 2}}));
    IntMatrix c = complete_unimodular(b);
    CHECK(c.row(0)(0) == 1);
    CHECK(c.row(0)(1) == 2);
    Int d = determinant(c);
    CHECK((d == 1 || d == -1));
    CHECK(oracles::perm_expansion_det(c) == d);
}

TEST_CASE("complete_unimodular: full basis returns itself") {
    LatticeBasis b = lattice_from_rows(make({{1, 1}, {0, 3}}));
    // not saturated as a proper sublattice, but full rank: completion is itself
    IntMatrix c = complete_unimodular(b);
    CHECK(matrix_equal(c, b.basis));
}

TEST_CASE("complete_unimodular: rejects unsaturated input") {
    LatticeBasis b = lattice_from_rows(make({{0, 2}}));
    CHECK_THROWS_AS((void)complete_unimodular(b), std::invalid_argument);
}

TEST_CASE("complete_unimodular: random saturated bases") {
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = oracles::random_int_matrix(1 + trial % 3, 4, -5, 5);
        auto [sat, t] = saturate(m);
        if (sat.rank() == 0) continue;
        IntMatrix c = complete_unimodular(sat);
        Int d = determinant(c);
        CHECK((d == 1 || d == -1));
        CHECK(matrix_equal(IntMatrix(c.topRows(sat.rank())), sat.basis));
    }
}

TEST_CASE("determinant: Bareiss agrees with permutation expansion") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4;
        IntMatrix m = oracles::random_int_matrix(n, n);
        CHECK(determinant(m) == oracles::perm_expansion_det(m));
    }
}

TEST_CASE("unimodular_inverse") {
    IntMatrix c = make({{1, 2}, {0, 1}});
    IntMatrix inv = unimodular_inverse(c);
    CHECK(matrix_equal(c * inv, IntMatrix::Identity(2, 2)));
    CHECK_THROWS_AS((void)unimodular_inverse(make({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("hnf: canonical form equal across generating sets of one span") {
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = oracles::random_int_matrix(3, 3, -4, 4);
        LatticeBasis b1 = lattice_from_rows(m);
        // shuffle rows and add a row combination; span unchanged
        IntMatrix m2(4, 3);
        m2.row(0) = m.row(2);
        m2.row(1) = m.row(0);
        m2.row(2) = m.row(1);
        m2.row(3) = m.row(0) + m.row(1);
        LatticeBasis b2 = lattice_from_rows(m2);
        CHECK(b1 == b2);
    }
}
