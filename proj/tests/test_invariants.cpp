#include <doctest.h>

#include "abarr/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abarr;

TEST_CASE("polynomial arithmetic basics") {
    IntPolynomial p({Int(1), Int(2)});   // 1 + 2t
    IntPolynomial q({Int(-1), Int(1)});  // t - 1
    CHECK((p * q) == IntPolynomial({Int(-1), Int(-1), Int(2)}));
    CHECK((p + q) == IntPolynomial({Int(0), Int(3)}));
    CHECK(p.eval(3) == 7);
    CHECK(IntPolynomial({Int(0), Int(0)}).is_zero());
    CHECK(IntPolynomial({Int(3), Int(-3), Int(1)}).str() == "t^2 - 3t + 3");
    CHECK(IntPolynomial({Int(4), Int(-4), Int(1)}).str() == "t^2 - 4t + 4");
    CHECK(binomial_power(2) == IntPolynomial({Int(1), Int(2), Int(1)}));
}

TEST_CASE("factored characteristic polynomial of the strict example") {
    auto p = fixtures::split_pair();
    auto chain = strictly_supersolvable_chain(p);
    REQUIRE(chain.has_value());
    auto f = charpoly_factored(p, *chain);
    CHECK(f.poly == IntPolynomial({Int(4), Int(-4), Int(1)}));
    CHECK(f.roots == std::vector<Int>({Int(2), Int(2)}));
}

TEST_CASE("rank-one poset factors as t - k") {
    FinitePoset p({"0", "x", "y", "z"}, {{0, 1}, {0, 2}, {0, 3}});
    auto chain = strictly_supersolvable_chain(p);
    REQUIRE(chain.has_value());
    auto f = charpoly_factored(p, *chain);
    CHECK(f.poly == IntPolynomial({Int(-3), Int(1)}));
}

TEST_CASE("non-strict chains are refused, and the direct polynomial does not factor") {
    auto p = fixtures::simplicial();
    auto chain = supersolvable_chain(p);
    REQUIRE(chain.has_value());
    CHECK(!chain->strict);
    CHECK_THROWS_AS((void)charpoly_factored(p, *chain), std::invalid_argument);
    // t^2 - 3t + 3 has no integer roots
    auto chi = characteristic_polynomial(p);
    for (long r = -4; r <= 4; ++r) CHECK(chi.eval(Int(r)) != 0);
}

TEST_CASE("poincare polynomial: product and substitution routes agree") {
    IntPolynomial chi({Int(4), Int(-4), Int(1)});
    auto poin = poincare({2, 2}, 1, 1, &chi);
    CHECK(poin == IntPolynomial({Int(1), Int(6), Int(9)}));  // (1+3t)^2

    // a point count in the plane: complement of k points in C
    CHECK(poincare({5}, 0, 2) == IntPolynomial({Int(1), Int(5)}));

    // linear rank-two case, both routes
    IntPolynomial chi2({Int(2), Int(-3), Int(1)});  // (t-1)(t-2)
    CHECK(poincare({1, 2}, 0, 2, &chi2) == IntPolynomial({Int(1), Int(3), Int(2)}));
}

TEST_CASE("poincare refuses the compact case") {
    CHECK_THROWS_AS((void)poincare({2, 2}, 2, 0), std::invalid_argument);
}

TEST_CASE("poincare arithmetic identities") {
    for (std::vector<long> a : {std::vector<long>{2, 2}, {1, 3}, {1, 2, 3}}) {
        auto poin = poincare(a, 1, 1);
        CHECK(poin.coeff(0) == 1);
        Int at_one = poin.eval(1);
        Int expected = 1;
        for (long ai : a) expected *= Int(2 + ai);  // 2^d + a_i at v = 1
        CHECK(at_one == expected);
    }
}

TEST_CASE("lower central series ranks of the strict toric example") {
    auto phi = lcs_ranks({2, 2}, 3);
    CHECK(phi == std::vector<Int>({Int(6), Int(6), Int(16)}));
    // twice the free-group ranks on 3 generators
    for (int j = 1; j <= 3; ++j)
        CHECK(phi[static_cast<size_t>(j - 1)] == 2 * oracles::necklace_witt(3, j));
}

TEST_CASE("single-step sequences reproduce free-group ranks") {
    // r = 2 pinned, then the full sweep against the necklace-count oracle
    CHECK(lcs_ranks({1}, 5) ==
          std::vector<Int>({Int(2), Int(1), Int(2), Int(3), Int(6)}));
    for (long r = 1; r <= 6; ++r) {
        auto phi = lcs_ranks({r - 1}, 8);
        for (int j = 1; j <= 8; ++j)
            CHECK(phi[static_cast<size_t>(j - 1)] == oracles::necklace_witt(r, j));
    }
}

TEST_CASE("free group on one generator") {
    auto phi = lcs_ranks({0}, 4);
    CHECK(phi == std::vector<Int>({Int(1), Int(0), Int(0), Int(0)}));
}

TEST_CASE("lcs generating identity re-expands to the product form") {
    for (std::vector<long> a : {std::vector<long>{2, 2}, {1, 2}, {3}}) {
        const int jmax = 6;
        auto phi = lcs_ranks(a, jmax);
        // prod_j (1 - t^j)^(phi_j) truncated at degree jmax
        auto truncate = [&](const IntPolynomial& p) {
            std::vector<Int> c;
            for (int k = 0; k <= jmax; ++k) c.push_back(p.coeff(static_cast<size_t>(k)));
            return IntPolynomial(c);
        };
        IntPolynomial lhs = IntPolynomial::constant(1);
        for (int j = 1; j <= jmax; ++j) {
            std::vector<Int> base(static_cast<size_t>(j) + 1, Int(0));
            base[0] = 1;
            base[static_cast<size_t>(j)] = -1;
            IntPolynomial factor(base);
            // exponentiate by repeated multiplication, truncating as we go
            Int e = phi[static_cast<size_t>(j - 1)];
            for (Int i = 0; i < e; ++i) lhs = truncate(lhs * factor);
        }
        IntPolynomial rhs = IntPolynomial::constant(1);
        for (long ai : a) rhs = rhs * IntPolynomial({Int(1), Int(-(ai + 1))});
        for (int k = 0; k <= jmax; ++k)
            CHECK(lhs.coeff(static_cast<size_t>(k)) == rhs.coeff(static_cast<size_t>(k)));
    }
}

TEST_CASE("invalid lcs inputs are rejected") {
    CHECK_THROWS_AS((void)lcs_ranks({2}, 0), std::invalid_argument);
}
