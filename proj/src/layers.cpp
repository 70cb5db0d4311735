#include "abarr/layers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace abarr {

void Ambient::validate() const {
    if (n < 1) throw std::invalid_argument("Ambient: rank must be at least 1");
    if (d < 0 || v < 0 || d + v < 1)
        throw std::invalid_argument("Ambient: need d >= 0, v >= 0, d + v >= 1");
}

void Arrangement::validate_shape() const {
    ambient.validate();
    for (const auto& vec : vectors) {
        if (vec.cols() != ambient.n)
            throw std::invalid_argument("Arrangement: vector has wrong dimension");
        bool nonzero = false;
        for (Index j = 0; j < vec.cols(); ++j)
            if (vec(j) != 0) nonzero = true;
        if (!nonzero) throw std::invalid_argument("Arrangement: zero vector");
    }
}

int layer_cmp(const Layer& a, const Layer& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
    int c = matrix_cmp(a.lattice.basis, b.lattice.basis);
    if (c != 0) return c;
    return matrix_cmp(a.character, b.character);
}

std::optional<RatRowVec> character_value(const Layer& l, const IntRowVec& v) {
    auto coords = member(v, l.lattice);
    if (!coords) return std::nullopt;
    RatRowVec out = RatRowVec::Zero(l.character.cols());
    for (Index k = 0; k < l.character.cols(); ++k) {
        Rat s = 0;
        for (Index i = 0; i < l.lattice.rank(); ++i) s += Rat((*coords)(i)) * l.character(i, k);
        out(k) = mod1(s);
    }
    return out;
}

std::string layer_label(const Layer& l) {
    if (l.rank() == 0) return "T";
    std::string s;
    for (Index i = 0; i < l.lattice.rank(); ++i) {
        if (i) s += ";";
        s += "(";
        for (Index j = 0; j < l.lattice.ambient_dim; ++j) {
            if (j) s += ",";
            s += to_string(l.lattice.basis(i, j));
        }
        s += ")";
        if (l.character.cols() > 0) {
            s += "@";
            for (Index k = 0; k < l.character.cols(); ++k) {
                if (k) s += ",";
                s += to_string(l.character(i, k));
            }
        }
    }
    return s;
}

namespace {

struct LayerKeyLess {
    bool operator()(const Layer& a, const Layer& b) const { return layer_cmp(a, b) < 0; }
};

// All layers supported on the span of the given generators: saturate, then
// enumerate every character of the finite quotient through the Smith form.
std::vector<Layer> layers_of_span(const LatticeBasis& span, int d) {
    const Index r = span.rank();
    auto [sat, torsion] = saturate(span.basis);
    IntMatrix coords(r, r);
    for (Index i = 0; i < r; ++i) {
        auto c = member(span.basis.row(i), sat);
        if (!c) throw std::logic_error("layers_of_span: generator escaped its saturation");
        coords.row(i) = *c;
    }
    SnfResult s = snf(coords);
    std::vector<Int> diag(static_cast<size_t>(r), Int(1));
    for (Index i = 0; i < r; ++i) diag[static_cast<size_t>(i)] = s.d(i, i);

    // one residue per invariant factor per circle coordinate
    std::vector<Layer> out;
    std::vector<Int> counter(static_cast<size_t>(r) * static_cast<size_t>(d), Int(0));
    for (;;) {
        RatMatrix z(r, d);
        for (Index i = 0; i < r; ++i)
            for (int k = 0; k < d; ++k) {
                Rat val(counter[static_cast<size_t>(i * d + k)], diag[static_cast<size_t>(i)]);
                val.canonicalize();
                z(i, k) = val;
            }
        RatMatrix y(r, d);
        for (Index i = 0; i < r; ++i)
            for (int k = 0; k < d; ++k) {
                Rat acc = 0;
                for (Index j = 0; j < r; ++j) acc += Rat(s.right(i, j)) * z(j, k);
                y(i, k) = mod1(acc);
            }
        out.push_back(Layer{sat, y});
        // odometer over the residues
        size_t pos = 0;
        for (; pos < counter.size(); ++pos) {
            Index i = static_cast<Index>(pos) / d;
            counter[pos] += 1;
            if (counter[pos] < diag[static_cast<size_t>(i)]) break;
            counter[pos] = 0;
        }
        if (pos == counter.size()) break;
    }
    return out;
}

// layers of the subgroup cut out by a single vector
std::vector<Layer> atom_layers(const IntRowVec& alpha, Index n, int d) {
    IntMatrix row(1, n);
    row.row(0) = alpha;
    return layers_of_span(lattice_from_rows(row), d);
}

bool layer_leq(const Layer& lo, const Layer& hi) {
    // reverse inclusion: lo <= hi iff lattice(lo) <= lattice(hi) and the
    // character of hi restricts to the character of lo
    for (Index i = 0; i < lo.lattice.rank(); ++i) {
        auto val = character_value(hi, lo.lattice.basis.row(i));
        if (!val) return false;
        for (Index k = 0; k < val->cols(); ++k)
            if ((*val)(k) != lo.character(i, k)) return false;
    }
    return true;
}

}  // namespace

ArrangementStatus validate(const Arrangement& a) {
    a.validate_shape();
    ArrangementStatus st;
    IntMatrix all = rows_to_matrix(a.vectors, a.ambient.n);
    st.span_rank = lattice_from_rows(all).rank();
    st.essential = (st.span_rank == a.ambient.n);
    st.irredundant = true;
    std::vector<std::vector<Layer>> per_vector;
    for (const auto& v : a.vectors)
        per_vector.push_back(atom_layers(v, a.ambient.n, a.ambient.d));
    for (size_t i = 0; i < per_vector.size() && st.irredundant; ++i)
        for (size_t j = i + 1; j < per_vector.size() && st.irredundant; ++j)
            for (const Layer& x : per_vector[i])
                for (const Layer& y : per_vector[j])
                    if (layer_cmp(x, y) == 0) {
                        st.irredundant = false;
                        break;
                    }
    return st;
}

LayerPoset build_layers(const Arrangement& a, int workers, int max_vectors) {
    a.validate_shape();
    const Index n = a.ambient.n;
    const int d = a.ambient.d;
    const size_t m = a.vectors.size();
    if (static_cast<int>(m) > max_vectors)
        throw std::invalid_argument("build_layers: too many vectors (raise max_vectors to override)");

    ArrangementStatus st = validate(a);
    if (!st.irredundant)
        throw std::invalid_argument(
            "build_layers: arrangement is redundant (two vectors share a component)");

    const unsigned long total = 1ul << m;
    const int nworkers = std::max(1, workers);
    std::vector<std::map<Layer, char, LayerKeyLess>> found(static_cast<size_t>(nworkers));

    auto run = [&](int w) {
        std::map<std::string, char> seen_spans;
        auto& sink = found[static_cast<size_t>(w)];
        for (unsigned long mask = static_cast<unsigned long>(w); mask < total;
             mask += static_cast<unsigned long>(nworkers)) {
            std::vector<IntRowVec> rows;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1ul << i)) rows.push_back(a.vectors[i]);
            IntMatrix mat = rows.empty() ? IntMatrix(0, n) : rows_to_matrix(rows, n);
            LatticeBasis span = lattice_from_rows(mat);
            std::string key;
            for (Index i = 0; i < span.basis.rows(); ++i)
                for (Index j = 0; j < span.basis.cols(); ++j)
                    key += span.basis(i, j).get_str() + ",";
            if (!seen_spans.emplace(key, 1).second) continue;
            for (Layer& l : layers_of_span(span, d)) sink.emplace(std::move(l), 1);
        }
    };
    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::map<Layer, char, LayerKeyLess> merged;
    for (auto& part : found)
        for (auto& [l, tag] : part) merged.emplace(l, tag);

    std::vector<Layer> all_layers;
    for (auto& [l, tag] : merged) all_layers.push_back(l);

    const int count = static_cast<int>(all_layers.size());
    std::vector<ElemSet> rel(static_cast<size_t>(count), ElemSet(static_cast<size_t>(count)));
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y)
            if (x == y ||
                layer_leq(all_layers[static_cast<size_t>(x)], all_layers[static_cast<size_t>(y)]))
                rel[static_cast<size_t>(x)].set(static_cast<size_t>(y));

    std::vector<std::string> labels;
    for (const Layer& l : all_layers) labels.push_back(layer_label(l));
    LayerPoset lp{FinitePoset::from_relation(std::move(labels), rel), std::move(all_layers), {}, st};

    // atoms remember which vector they came from; a second match would mean
    // redundancy, which was excluded above
    lp.source_vector.assign(static_cast<size_t>(count), -1);
    for (int x = 0; x < count; ++x) {
        if (lp.poset.rank(x) != 1) continue;
        const Layer& l = lp.layers[static_cast<size_t>(x)];
        for (size_t i = 0; i < m; ++i) {
            LatticeBasis sat_i = saturate(rows_to_matrix({a.vectors[i]}, n)).first;
            if (!(sat_i == l.lattice)) continue;
            auto val = character_value(l, a.vectors[i]);
            bool vanishes = val.has_value();
            if (vanishes)
                for (Index k = 0; k < val->cols(); ++k)
                    if ((*val)(k) != 0) vanishes = false;
            if (!vanishes) continue;
            if (lp.source_vector[static_cast<size_t>(x)] >= 0)
                throw std::logic_error("build_layers: atom with two source vectors");
            lp.source_vector[static_cast<size_t>(x)] = static_cast<int>(i);
        }
        if (lp.source_vector[static_cast<size_t>(x)] < 0)
            throw std::logic_error("build_layers: atom without a source vector");
    }
    return lp;
}

std::vector<int> LayerPoset::atoms_of_vectors(const std::vector<int>& vector_ids) const {
    std::vector<int> out;
    for (int x : poset.atoms()) {
        int src = source_vector[static_cast<size_t>(x)];
        if (std::find(vector_ids.begin(), vector_ids.end(), src) != vector_ids.end())
            out.push_back(x);
    }
    return out;
}

AdmissibleProjection admissible_from_corank1(const LatticeBasis& l) {
    if (l.rank() != l.ambient_dim - 1)
        throw std::invalid_argument("admissible_from_corank1: sublattice must have corank 1");
    if (!is_saturated(l))
        throw std::invalid_argument("admissible_from_corank1: sublattice must be saturated");
    AdmissibleProjection proj;
    proj.completion = complete_unimodular(l);
    proj.beta0 = proj.completion.row(l.ambient_dim - 1);
    IntMatrix inv = unimodular_inverse(proj.completion);
    proj.epsilon = inv.col(l.ambient_dim - 1).transpose();
    Int fix = 0;
    for (Index j = 0; j < proj.beta0.cols(); ++j) fix += proj.beta0(j) * proj.epsilon(j);
    if (fix != 1)
        throw std::logic_error("admissible_from_corank1: projection does not fix beta0");
    return proj;
}

Int c_of(const IntRowVec& alpha, const AdmissibleProjection& proj) {
    Int v = 0;
    for (Index j = 0; j < alpha.cols(); ++j) v += alpha(j) * proj.epsilon(j);
    return abs(v);
}

SubQuotient sub_and_quotient(const Arrangement& a, const LatticeBasis& l,
                             const AdmissibleProjection& proj) {
    SubQuotient sq;
    sq.quotient.ambient = Ambient{l.rank(), a.ambient.d, a.ambient.v};
    for (size_t i = 0; i < a.vectors.size(); ++i) {
        if (c_of(a.vectors[i], proj) != 0) continue;
        auto coords = member(a.vectors[i], l);
        if (!coords)
            throw std::logic_error("sub_and_quotient: vector with c=0 outside the sublattice");
        sq.sub_indices.push_back(static_cast<int>(i));
        sq.quotient.vectors.push_back(*coords);
    }
    return sq;
}

HorizontalReport horizontal_set(const LayerPoset& lp, const std::vector<int>& q_atoms) {
    const FinitePoset& p = lp.poset;
    ElemSet atom_set(static_cast<size_t>(p.size()));
    for (int a : q_atoms) {
        if (p.rank(a) != 1) throw std::invalid_argument("horizontal_set: not an atom subset");
        atom_set.set(static_cast<size_t>(a));
    }
    // the ideal generated by the atoms: elements all of whose atoms are in q
    ElemSet atom_mask(p.atoms().size());
    for (size_t k = 0; k < p.atoms().size(); ++k)
        if (atom_set.test(static_cast<size_t>(p.atoms()[k]))) atom_mask.set(k);
    ElemSet ideal(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x)
        if ((p.atoms_below(x) & ~atom_mask).none()) ideal.set(static_cast<size_t>(x));
    std::vector<int> max_q = p.maximal_of(ideal);

    HorizontalReport rep;
    for (int a : p.atoms())
        if (!atom_set.test(static_cast<size_t>(a))) rep.horizontal.push_back(a);
    for (int x = 0; x < p.size(); ++x) {
        if (x == p.bottom()) continue;
        bool meets_trivially = true;
        for (int y : max_q) {
            auto meets = p.max_lower_bounds(x, y);
            if (meets.size() != 1 || meets.front() != p.bottom()) {
                meets_trivially = false;
                break;
            }
        }
        if (meets_trivially) rep.meet_set.push_back(x);
    }
    rep.agree = (rep.horizontal == rep.meet_set);
    return rep;
}

Int puncture_count(const Arrangement& a, const AdmissibleProjection& proj) {
    Int total = 0;
    for (const auto& v : a.vectors) {
        Int c = c_of(v, proj);
        if (c != 0) total += pow_int(c, static_cast<unsigned long>(a.ambient.d));
    }
    return total;
}

std::vector<int> ideal_of_sublattice(const LayerPoset& lp, const LatticeBasis& l) {
    std::vector<int> out;
    for (int x = 0; x < lp.poset.size(); ++x) {
        const Layer& layer = lp.layers[static_cast<size_t>(x)];
        bool inside = true;
        for (Index i = 0; i < layer.lattice.rank() && inside; ++i)
            if (!member(layer.lattice.basis.row(i), l)) inside = false;
        if (inside) out.push_back(x);
    }
    return out;
}

}  // namespace abarr
