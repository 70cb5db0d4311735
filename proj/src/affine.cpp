#include "abarr/affine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abarr/exact.hpp"
#include "abarr/ssolv.hpp"

namespace abarr {

namespace {

bool proportional(const RatRowVec& a, const Rat& ao, const RatRowVec& b, const Rat& bo) {
    // find the first nonzero coordinate of a and scale
    Index p = -1;
    for (Index j = 0; j < a.cols(); ++j)
        if (a(j) != 0) {
            p = j;
            break;
        }
    if (p < 0) return false;
    if (b(p) == 0) return false;
    Rat s = b(p) / a(p);
    for (Index j = 0; j < a.cols(); ++j)
        if (a(j) * s != b(j)) return false;
    return ao * s == bo;
}

// canonical reduced row echelon form; returns false when inconsistent
// (a pivot lands in the last column)
bool rref_system(RatMatrix& m, Index unknowns) {
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (col >= unknowns) return false;  // 0 = nonzero
        m.row(piv).swap(m.row(row));
        Rat lead = m(row, col);
        for (Index j = 0; j < m.cols(); ++j) m(row, j) /= lead;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
    }
    m.conservativeResize(row, m.cols());
    return true;
}

std::string flat_key(const RatMatrix& m) {
    std::string s;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) s += to_string(m(i, j)) + ",";
    return s;
}

// rowspace(a) contained in rowspace(b), both in rref
bool rows_contained(const RatMatrix& a, const RatMatrix& b) {
    for (Index i = 0; i < a.rows(); ++i) {
        RatRowVec v = a.row(i);
        for (Index bi = 0; bi < b.rows(); ++bi) {
            Index p = 0;
            while (p < b.cols() && b(bi, p) == 0) ++p;
            if (p < b.cols() && v(p) != 0) {
                Rat f = v(p);
                for (Index j = 0; j < b.cols(); ++j) v(j) -= f * b(bi, j);
            }
        }
        for (Index j = 0; j < v.cols(); ++j)
            if (v(j) != 0) return false;
    }
    return true;
}

}  // namespace

void AffineArrangement::validate() const {
    for (const auto& [normal, offset] : hyperplanes) {
        if (normal.cols() != dim)
            throw std::invalid_argument("AffineArrangement: normal has wrong dimension");
        bool nonzero = false;
        for (Index j = 0; j < dim; ++j)
            if (normal(j) != 0) nonzero = true;
        if (!nonzero) throw std::invalid_argument("AffineArrangement: zero normal");
    }
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (proportional(hyperplanes[i].first, hyperplanes[i].second, hyperplanes[j].first,
                             hyperplanes[j].second))
                throw std::invalid_argument("AffineArrangement: duplicate hyperplane");
}

bool is_central(const AffineArrangement& a) {
    for (const auto& [normal, offset] : a.hyperplanes)
        if (offset != 0) return false;
    return true;
}

FinitePoset intersection_poset(const AffineArrangement& a, std::vector<int>* atom_of_hyperplane) {
    a.validate();
    const size_t m = a.hyperplanes.size();
    if (m > 16) throw std::invalid_argument("intersection_poset: too many hyperplanes");

    std::map<std::string, RatMatrix> flats;
    std::map<std::string, std::vector<size_t>> sources;  // singleton subsets per flat
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        RatMatrix sys(static_cast<Index>(__builtin_popcountl(mask)), a.dim + 1);
        Index r = 0;
        for (size_t i = 0; i < m; ++i)
            if (mask & (1ul << i)) {
                sys.row(r).head(a.dim) = a.hyperplanes[i].first;
                sys(r, a.dim) = a.hyperplanes[i].second;
                ++r;
            }
        if (!rref_system(sys, a.dim)) continue;  // empty intersection
        std::string key = flat_key(sys);
        flats.emplace(key, sys);
        if (__builtin_popcountl(mask) == 1)
            sources[key].push_back(static_cast<size_t>(__builtin_ctzl(mask)));
    }

    std::vector<std::pair<std::string, RatMatrix>> ordered(flats.begin(), flats.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        if (x.second.rows() != y.second.rows()) return x.second.rows() < y.second.rows();
        return x.first < y.first;
    });

    const int count = static_cast<int>(ordered.size());
    std::vector<ElemSet> rel(static_cast<size_t>(count), ElemSet(static_cast<size_t>(count)));
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y)
            if (rows_contained(ordered[static_cast<size_t>(x)].second,
                               ordered[static_cast<size_t>(y)].second))
                rel[static_cast<size_t>(x)].set(static_cast<size_t>(y));

    std::vector<std::string> labels;
    for (const auto& [key, sys] : ordered) {
        std::string s = "[";
        for (Index i = 0; i < sys.rows(); ++i) {
            if (i) s += "; ";
            for (Index j = 0; j < sys.cols(); ++j) {
                if (j) s += j == a.dim ? "=" : ",";
                s += to_string(sys(i, j));
            }
        }
        labels.push_back(s + "]");
    }
    FinitePoset p = FinitePoset::from_relation(std::move(labels), rel);

    if (atom_of_hyperplane) {
        atom_of_hyperplane->assign(m, -1);
        for (int x = 0; x < count; ++x) {
            auto it = sources.find(ordered[static_cast<size_t>(x)].first);
            if (it == sources.end()) continue;
            for (size_t i : it->second) (*atom_of_hyperplane)[i] = x;
        }
    }
    return p;
}

AffineArrangement cone(const AffineArrangement& a) {
    a.validate();
    AffineArrangement c;
    c.dim = a.dim + 1;
    RatRowVec far = RatRowVec::Zero(c.dim);
    far(0) = 1;
    c.hyperplanes.emplace_back(far, Rat(0));
    for (const auto& [normal, offset] : a.hyperplanes) {
        RatRowVec h = RatRowVec::Zero(c.dim);
        h(0) = -offset;
        for (Index j = 0; j < a.dim; ++j) h(j + 1) = normal(j);
        c.hyperplanes.emplace_back(h, Rat(0));
    }
    return c;
}

AffineArrangement decone(const AffineArrangement& a, int h) {
    a.validate();
    if (!is_central(a)) throw std::invalid_argument("decone: arrangement must be central");
    if (h < 0 || h >= static_cast<int>(a.hyperplanes.size()))
        throw std::invalid_argument("decone: hyperplane index out of range");

    // primitive integer normal of the chosen hyperplane
    const RatRowVec& u = a.hyperplanes[static_cast<size_t>(h)].first;
    Int lcm_den = 1;
    for (Index j = 0; j < a.dim; ++j) {
        Int den = u(j).get_den();
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    IntRowVec z(a.dim);
    Int content = 0;
    for (Index j = 0; j < a.dim; ++j) {
        Rat scaled = u(j) * Rat(lcm_den);
        z(j) = scaled.get_num();
        content = gcd(content, z(j));
    }
    for (Index j = 0; j < a.dim; ++j) z(j) /= content;

    IntMatrix zrow(1, a.dim);
    zrow.row(0) = z;
    IntMatrix basis = complete_unimodular(lattice_from_rows(zrow));
    IntMatrix inv = unimodular_inverse(basis);  // x = inv * y, columns are new axes

    AffineArrangement out;
    out.dim = a.dim - 1;
    for (int i = 0; i < static_cast<int>(a.hyperplanes.size()); ++i) {
        if (i == h) continue;
        const RatRowVec& normal = a.hyperplanes[static_cast<size_t>(i)].first;
        RatRowVec w = RatRowVec::Zero(a.dim);
        for (Index j = 0; j < a.dim; ++j)
            for (Index k = 0; k < a.dim; ++k) w(j) += normal(k) * Rat(inv(k, j));
        RatRowVec tail(out.dim);
        for (Index j = 1; j < a.dim; ++j) tail(j - 1) = w(j);
        out.hyperplanes.emplace_back(tail, -w(0));
    }
    out.validate();
    return out;
}

AffineSsReport affine_ss_check(const AffineArrangement& a) {
    FinitePoset p = intersection_poset(a);
    if (p.rank() != a.dim)
        throw std::invalid_argument("affine_ss_check: arrangement is not essential");

    AffineSsReport rep;
    rep.ss = supersolvable_chain(p).has_value();

    std::vector<int> atom_of;
    AffineArrangement coned = cone(a);
    FinitePoset lattice = intersection_poset(coned, &atom_of);
    if (!is_geometric_lattice(lattice))
        throw std::logic_error("affine_ss_check: coned poset is not a geometric lattice");
    const int far_atom = atom_of[0];

    // classical route: a maximal chain of modular elements through the far atom
    auto dfs = [&](auto&& self, int current) -> bool {
        if (!is_modular_element(lattice, current)) return false;
        if (lattice.rank(current) == lattice.rank())
            return current == lattice.maximal_elements().front();
        for (int y = 0; y < lattice.size(); ++y)
            if (lattice.rank(y) == lattice.rank(current) + 1 && lattice.leq(current, y))
                if (self(self, y)) return true;
        return false;
    };
    rep.cone_ss_through_h0 = dfs(dfs, far_atom);

    if (rep.ss != rep.cone_ss_through_h0)
        throw std::logic_error("affine_ss_check: the two supersolvability routes disagree");
    return rep;
}

}  // namespace abarr
