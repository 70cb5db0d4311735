#include "abarr/poly.hpp"

#include <algorithm>

namespace abarr {

IntPolynomial IntPolynomial::monomial(Int a, size_t deg) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(a);
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::eval(const Int& x) const {
    Int r = 0;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        const Int& a = c_[k];
        if (a == 0) continue;
        Int mag = abs(a);
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str();
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

IntPolynomial binomial_power(size_t n) {
    IntPolynomial p = IntPolynomial::constant(1);
    const IntPolynomial onet{std::vector<Int>{Int(1), Int(1)}};
    for (size_t i = 0; i < n; ++i) p = p * onet;
    return p;
}

}  // namespace abarr
