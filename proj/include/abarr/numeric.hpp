#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 90
    };
};

}  // namespace Eigen

namespace abarr {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatRowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

using Eigen::Index;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

struct GcdExt {
    Int g, p, q;  // p*a + q*b = g >= 0
};

inline GcdExt gcd_ext(const Int& a, const Int& b) {
    GcdExt r;
    mpz_gcdext(r.g.get_mpz_t(), r.p.get_mpz_t(), r.q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor division, denominator must be nonzero
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool divides(const Int& a, const Int& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline bool matrix_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

// lexicographic order on shape, then row-major entries
inline int matrix_cmp(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            int c = cmp(a(i, j), b(i, j));
            if (c != 0) return c < 0 ? -1 : 1;
        }
    return 0;
}

inline int matrix_cmp(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            int c = cmp(a(i, j), b(i, j));
            if (c != 0) return c < 0 ? -1 : 1;
        }
    return 0;
}

// fraction reduced into [0,1)
inline Rat mod1(const Rat& x) {
    Rat r = x - Rat(floor_div(x.get_num(), x.get_den()));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline IntMatrix rows_to_matrix(const std::vector<IntRowVec>& rows, Index cols) {
    IntMatrix m(static_cast<Index>(rows.size()), cols);
    for (Index i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<size_t>(i)].cols() != cols)
            throw std::invalid_argument("rows_to_matrix: ragged input");
        m.row(i) = rows[static_cast<size_t>(i)];
    }
    return m;
}

}  // namespace abarr
