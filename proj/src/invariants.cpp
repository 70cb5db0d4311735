#include "abarr/invariants.hpp"

#include <stdexcept>

namespace abarr {

FactoredCharPoly charpoly_factored(const FinitePoset& p, const IdealChain& chain) {
    if (!chain.strict)
        throw std::invalid_argument(
            "charpoly_factored: factorization requires a strict chain (chain.strict = false)");
    ChainCheck check = verify_chain(p, chain);
    if (!check.ok) throw std::invalid_argument("charpoly_factored: invalid chain: " + check.message);
    FactoredCharPoly out;
    out.poly = IntPolynomial::constant(1);
    for (long ai : chain.a) {
        out.roots.push_back(Int(ai));
        out.poly = out.poly * IntPolynomial::linear_root(Int(ai));
    }
    IntPolynomial direct = characteristic_polynomial(p);
    if (!(out.poly == direct))
        throw std::logic_error("charpoly_factored: product disagrees with the Moebius computation");
    return out;
}

IntPolynomial poincare(const std::vector<long>& a, int d, int v, const IntPolynomial* chi) {
    if (v <= 0) throw std::invalid_argument("poincare: requires v > 0");
    for (long ai : a)
        if (ai < 0) throw std::invalid_argument("poincare: negative block size");
    const size_t e = static_cast<size_t>(d + v - 1);
    IntPolynomial product = IntPolynomial::constant(1);
    for (long ai : a) {
        IntPolynomial factor = binomial_power(static_cast<size_t>(d)) +
                               IntPolynomial::monomial(Int(ai), e);
        product = product * factor;
    }
    if (chi) {
        IntPolynomial subst = poincare_from_charpoly(*chi, d, v);
        if (!(subst == product))
            throw std::logic_error("poincare: substitution and product formulas disagree");
    }
    return product;
}

IntPolynomial poincare_from_charpoly(const IntPolynomial& chi, int d, int v) {
    if (v <= 0) throw std::invalid_argument("poincare_from_charpoly: requires v > 0");
    if (chi.is_zero()) throw std::invalid_argument("poincare_from_charpoly: zero polynomial");
    // substitute t -> -(1+t)^d / t^(d+v-1) and clear denominators by
    // (-t^(d+v-1))^n; every term stays polynomial since deg chi = n
    const size_t e = static_cast<size_t>(d + v - 1);
    const size_t n = static_cast<size_t>(chi.degree());
    IntPolynomial subst;
    for (size_t k = 0; k <= n; ++k) {
        Int c = chi.coeff(k);
        if (c == 0) continue;
        if ((n - k) % 2 == 1) c = -c;
        IntPolynomial term = IntPolynomial::constant(c) * binomial_power(static_cast<size_t>(d) * k) *
                             IntPolynomial::monomial(Int(1), e * (n - k));
        subst = subst + term;
    }
    return subst;
}

std::vector<Int> lcs_ranks(const std::vector<long>& a, int j_max) {
    if (j_max < 1) throw std::invalid_argument("lcs_ranks: j_max must be positive");
    std::vector<Int> phi;
    for (int k = 1; k <= j_max; ++k) {
        Int power_sum = 0;
        for (long ai : a) power_sum += pow_int(Int(ai + 1), static_cast<unsigned long>(k));
        Int rest = 0;
        for (int j = 1; j < k; ++j)
            if (k % j == 0) rest += Int(j) * phi[static_cast<size_t>(j - 1)];
        Int num = power_sum - rest;
        if (num % k != 0 || num < 0)
            throw std::invalid_argument("lcs_ranks: sequence does not solve the rank identity");
        phi.push_back(num / k);
    }
    return phi;
}

}  // namespace abarr
