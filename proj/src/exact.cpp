#include "abarr/exact.hpp"

#include <stdexcept>

namespace abarr {

namespace {

// Clear m(r1,c) against the pivot m(r0,c). When the pivot divides the target
// this is a plain elimination that leaves row r0 untouched; otherwise a gcd
// combination replaces the pivot by gcd(a,b), which is strictly smaller.
void gcd_row_step(IntMatrix& m, IntMatrix& u, Index r0, Index r1, Index c) {
    const Int a = m(r0, c), b = m(r1, c);
    if (b == 0) return;
    if (a != 0 && divides(a, b)) {
        const Int q = b / a;
        m.row(r1) -= q * m.row(r0);
        u.row(r1) -= q * u.row(r0);
        return;
    }
    GcdExt e = gcd_ext(a, b);
    const Int s = a / e.g, t = b / e.g;
    for (Index j = 0; j < m.cols(); ++j) {
        Int x = m(r0, j), y = m(r1, j);
        m(r0, j) = e.p * x + e.q * y;
        m(r1, j) = s * y - t * x;
    }
    for (Index j = 0; j < u.cols(); ++j) {
        Int x = u(r0, j), y = u(r1, j);
        u(r0, j) = e.p * x + e.q * y;
        u(r1, j) = s * y - t * x;
    }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    const Index r = m.rows(), n = m.cols();
    HnfResult res{m, IntMatrix::Identity(r, r)};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    Index row = 0;
    for (Index col = 0; col < n && row < r; ++col) {
        Index piv = -1;
        for (Index i = row; i < r; ++i)
            if (h(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            h.row(piv).swap(h.row(row));
            u.row(piv).swap(u.row(row));
        }
        for (Index i = row + 1; i < r; ++i) gcd_row_step(h, u, row, i, col);
        if (h(row, col) < 0) {
            h.row(row) = -h.row(row);
            u.row(row) = -u.row(row);
        }
        for (Index i = 0; i < row; ++i) {
            Int q = floor_div(h(i, col), h(row, col));
            if (q != 0) {
                h.row(i) -= q * h.row(row);
                u.row(i) -= q * u.row(row);
            }
        }
        ++row;
    }
    return res;
}

bool is_row_hnf(const IntMatrix& m) {
    Index last_pivot = -1;
    bool seen_zero_row = false;
    for (Index i = 0; i < m.rows(); ++i) {
        Index p = -1;
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;  // zero rows must trail
        if (p <= last_pivot) return false;
        if (m(i, p) <= 0) return false;
        for (Index k = 0; k < i; ++k)
            if (m(k, p) < 0 || m(k, p) >= m(i, p)) return false;
        last_pivot = p;
    }
    return true;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    const Index k = std::min(d.rows(), d.cols());
    for (Index i = 0; i < k; ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

SnfResult snf(const IntMatrix& m) {
    const Index r = m.rows(), n = m.cols();
    SnfResult res{m, IntMatrix::Identity(r, r), IntMatrix::Identity(n, n),
                  IntMatrix::Identity(n, n)};
    IntMatrix& d = res.d;
    IntMatrix& left = res.left;
    IntMatrix& right = res.right;
    IntMatrix& rinv = res.right_inv;

    auto col_swap = [&](Index j, Index k) {
        d.col(j).swap(d.col(k));
        right.col(j).swap(right.col(k));
        rinv.row(j).swap(rinv.row(k));
    };
    // cols (t, j): ct' = p*ct + q*cj, cj' = -(b/g)*ct + (a/g)*cj
    auto col_gcd_step = [&](Index t, Index j) {
        const Int a = d(t, t), b = d(t, j);
        if (b == 0) return;
        if (a != 0 && divides(a, b)) {
            const Int q = b / a;
            d.col(j) -= q * d.col(t);
            right.col(j) -= q * right.col(t);
            rinv.row(t) += q * rinv.row(j);
            return;
        }
        GcdExt e = gcd_ext(a, b);
        const Int s = a / e.g, w = b / e.g;
        for (Index i = 0; i < r; ++i) {
            Int x = d(i, t), y = d(i, j);
            d(i, t) = e.p * x + e.q * y;
            d(i, j) = s * y - w * x;
        }
        for (Index i = 0; i < n; ++i) {
            Int x = right(i, t), y = right(i, j);
            right(i, t) = e.p * x + e.q * y;
            right(i, j) = s * y - w * x;
        }
        // inverse of the 2x2 block [[p, -w],[q, s]] is [[s, w],[-q, p]]
        for (Index i = 0; i < n; ++i) {
            Int x = rinv(t, i), y = rinv(j, i);
            rinv(t, i) = s * x + w * y;
            rinv(j, i) = e.p * y - e.q * x;
        }
    };
    const Index steps = std::min(r, n);
    for (Index t = 0; t < steps; ++t) {
        // locate a nonzero entry in the trailing block, smallest |.| first
        Index bi = -1, bj = -1;
        for (Index i = t; i < r; ++i)
            for (Index j = t; j < n; ++j)
                if (d(i, j) != 0) {
                    if (bi < 0 || abs(d(i, j)) < abs(d(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
        if (bi < 0) break;
        if (bi != t) {
            d.row(bi).swap(d.row(t));
            left.row(bi).swap(left.row(t));
        }
        if (bj != t) col_swap(bj, t);

        for (;;) {
            for (Index i = t + 1; i < r; ++i) gcd_row_step(d, left, t, i, t);
            for (Index j = t + 1; j < n; ++j) col_gcd_step(t, j);
            bool clean = true;
            for (Index i = t + 1; i < r && clean; ++i)
                if (d(i, t) != 0) clean = false;
            for (Index j = t + 1; j < n && clean; ++j)
                if (d(t, j) != 0) clean = false;
            if (!clean) continue;
            // enforce divisibility of the trailing block by the pivot
            Index vi = -1, vj = -1;
            for (Index i = t + 1; i < r && vi < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (!divides(d(t, t), d(i, j))) {
                        vi = i;
                        vj = j;
                        break;
                    }
            if (vi < 0) break;
            d.row(t) += d.row(vi);
            left.row(t) += left.row(vi);
        }
        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            left.row(t) = -left.row(t);
        }
    }
    return res;
}

TorsionProfile torsion_profile(const IntMatrix& m) {
    SnfResult s = snf(m);
    TorsionProfile t;
    std::vector<std::pair<Int, Index>> keep;
    const Index k = std::min(s.d.rows(), s.d.cols());
    for (Index i = 0; i < k; ++i)
        if (s.d(i, i) > 1) keep.emplace_back(s.d(i, i), i);
    t.torsion_coords.resize(static_cast<Index>(keep.size()), m.cols());
    for (Index i = 0; i < t.torsion_coords.rows(); ++i) {
        t.invariant_factors.push_back(keep[static_cast<size_t>(i)].first);
        t.torsion_coords.row(i) = s.right.col(keep[static_cast<size_t>(i)].second).transpose();
    }
    return t;
}

LatticeBasis lattice_from_rows(const IntMatrix& rows) {
    LatticeBasis b;
    b.ambient_dim = rows.cols();
    IntMatrix h = hnf(rows).h;
    Index nz = 0;
    for (Index i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (Index j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (!zero) nz = i + 1;
    }
    b.basis = h.topRows(nz);
    return b;
}

std::pair<LatticeBasis, TorsionProfile> saturate(const IntMatrix& rows) {
    LatticeBasis span = lattice_from_rows(rows);
    const Index n = rows.cols();
    if (span.rank() == 0) {
        LatticeBasis sat;
        sat.ambient_dim = n;
        sat.basis = IntMatrix(0, n);
        return {sat, TorsionProfile{{}, IntMatrix(0, n)}};
    }
    SnfResult s = snf(span.basis);
    const Index r = span.rank();
    LatticeBasis sat = lattice_from_rows(s.right_inv.topRows(r));
    TorsionProfile t;
    t.torsion_coords = IntMatrix(0, n);
    std::vector<IntRowVec> coords;
    for (Index i = 0; i < r; ++i)
        if (s.d(i, i) > 1) {
            t.invariant_factors.push_back(s.d(i, i));
            coords.push_back(s.right.col(i).transpose());
        }
    if (!coords.empty()) t.torsion_coords = rows_to_matrix(coords, n);
    return {sat, t};
}

bool is_saturated(const LatticeBasis& b) {
    if (b.rank() == 0) return true;
    for (const Int& f : snf(b.basis).diagonal())
        if (f != 1) return false;
    return true;
}

std::optional<IntRowVec> member(const IntRowVec& v, const LatticeBasis& b) {
    if (v.cols() != b.ambient_dim)
        throw std::invalid_argument("member: dimension mismatch");
    IntRowVec rest = v;
    IntRowVec coords = IntRowVec::Zero(b.rank());
    for (Index i = 0; i < b.basis.rows(); ++i) {
        Index p = 0;
        while (b.basis(i, p) == 0) ++p;
        if (!divides(b.basis(i, p), rest(p))) return std::nullopt;
        Int q = rest(p) / b.basis(i, p);
        coords(i) = q;
        if (q != 0) rest -= q * b.basis.row(i);
    }
    for (Index j = 0; j < rest.cols(); ++j)
        if (rest(j) != 0) return std::nullopt;
    return coords;
}

IntMatrix complete_unimodular(const LatticeBasis& b) {
    const Index r = b.rank(), n = b.ambient_dim;
    if (r == n) return b.basis;
    SnfResult s = snf(b.basis);
    for (Index i = 0; i < r; ++i)
        if (s.d(i, i) != 1)
            throw std::invalid_argument("complete_unimodular: basis is not saturated");
    IntMatrix c(n, n);
    c.topRows(r) = b.basis;
    c.bottomRows(n - r) = s.right_inv.bottomRows(n - r);
    Int det = determinant(c);
    if (det != 1 && det != -1)
        throw std::logic_error("complete_unimodular: completion is not unimodular");
    return c;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square input required");
    const Index n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index p = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    HnfResult h = hnf(m);
    if (!matrix_equal(h.h, IntMatrix::Identity(m.rows(), m.cols())))
        throw std::invalid_argument("unimodular_inverse: input is not unimodular");
    return h.u;
}

}  // namespace abarr
