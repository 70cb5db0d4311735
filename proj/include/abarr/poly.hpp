#pragma once

#include <string>
#include <vector>

#include "abarr/numeric.hpp"

namespace abarr {

/// Integer-coefficient univariate polynomial, coefficients ascending by
/// degree, trailing zeros stripped.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int a) { return IntPolynomial({std::move(a)}); }
    static IntPolynomial monomial(Int a, size_t deg);
    /// t - a
    static IntPolynomial linear_root(const Int& a) { return IntPolynomial({-a, Int(1)}); }

    const std::vector<Int>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Int coeff(size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    Int eval(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// Human-readable form in the variable t, highest degree first.
    std::string str(const std::string& var = "t") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// (1 + t)^n with integer coefficients
IntPolynomial binomial_power(size_t n);

}  // namespace abarr
