#include "abarr/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abarr {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         std::vector<std::pair<int, int>> covers)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      covers_(std::move(covers)) {
    for (auto [a, b] : covers_)
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
            throw std::invalid_argument("FinitePoset: bad cover pair");
    finish();
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<ElemSet>& leq_rows) {
    const int n = static_cast<int>(labels.size());
    // transitive reduction: x <. y iff x < y and no z with x < z < y
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n; ++x) {
        for (size_t y = leq_rows[static_cast<size_t>(x)].find_first(); y != ElemSet::npos;
             y = leq_rows[static_cast<size_t>(x)].find_next(y)) {
            if (static_cast<int>(y) == x) continue;
            bool direct = true;
            for (size_t z = leq_rows[static_cast<size_t>(x)].find_first();
                 z != ElemSet::npos && direct;
                 z = leq_rows[static_cast<size_t>(x)].find_next(z)) {
                if (static_cast<int>(z) == x || z == y) continue;
                if (leq_rows[z].test(y)) direct = false;
            }
            if (direct) covers.emplace_back(x, static_cast<int>(y));
        }
    }
    FinitePoset p;
    p.n_ = n;
    p.labels_ = std::move(labels);
    p.covers_ = std::move(covers);
    p.finish();
    // sanity: the derived closure must reproduce the input relation
    for (int x = 0; x < n; ++x)
        if (p.up_[static_cast<size_t>(x)] != leq_rows[static_cast<size_t>(x)])
            throw std::invalid_argument("FinitePoset::from_relation: input is not a partial order");
    return p;
}

void FinitePoset::finish() {
    std::vector<std::vector<int>> succ(static_cast<size_t>(n_)), pred(static_cast<size_t>(n_));
    std::vector<int> indeg(static_cast<size_t>(n_), 0), outdeg(static_cast<size_t>(n_), 0);
    for (auto [a, b] : covers_) {
        succ[static_cast<size_t>(a)].push_back(b);
        pred[static_cast<size_t>(b)].push_back(a);
        ++indeg[static_cast<size_t>(b)];
        ++outdeg[static_cast<size_t>(a)];
    }
    // topological order
    std::vector<int> order, deg = indeg;
    for (int i = 0; i < n_; ++i)
        if (deg[static_cast<size_t>(i)] == 0) order.push_back(i);
    for (size_t head = 0; head < order.size(); ++head) {
        for (int s : succ[static_cast<size_t>(order[head])])
            if (--deg[static_cast<size_t>(s)] == 0) order.push_back(s);
    }
    if (static_cast<int>(order.size()) != n_)
        throw std::invalid_argument("FinitePoset: cover digraph has a cycle");

    up_.assign(static_cast<size_t>(n_), ElemSet(static_cast<size_t>(n_)));
    down_.assign(static_cast<size_t>(n_), ElemSet(static_cast<size_t>(n_)));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        up_[static_cast<size_t>(x)].set(static_cast<size_t>(x));
        for (int s : succ[static_cast<size_t>(x)]) up_[static_cast<size_t>(x)] |= up_[static_cast<size_t>(s)];
    }
    for (int x : order) {
        down_[static_cast<size_t>(x)].set(static_cast<size_t>(x));
        for (int pr : pred[static_cast<size_t>(x)]) down_[static_cast<size_t>(x)] |= down_[static_cast<size_t>(pr)];
    }

    int minima = 0;
    for (int i = 0; i < n_; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) {
            ++minima;
            bottom_ = i;
        }
    if (n_ == 0 || minima != 1)
        throw std::invalid_argument("FinitePoset: unique minimum element required");

    rank_.assign(static_cast<size_t>(n_), 0);
    max_rank_ = 0;
    for (int x : order) {
        for (int pr : pred[static_cast<size_t>(x)])
            rank_[static_cast<size_t>(x)] =
                std::max(rank_[static_cast<size_t>(x)], rank_[static_cast<size_t>(pr)] + 1);
        max_rank_ = std::max(max_rank_, rank_[static_cast<size_t>(x)]);
    }
    graded_ = true;
    for (auto [a, b] : covers_)
        if (rank_[static_cast<size_t>(b)] != rank_[static_cast<size_t>(a)] + 1) graded_ = false;

    for (int i = 0; i < n_; ++i) {
        if (rank_[static_cast<size_t>(i)] == 1) atoms_.push_back(i);
        if (outdeg[static_cast<size_t>(i)] == 0) maximal_.push_back(i);
    }

    atom_mask_.assign(static_cast<size_t>(n_), ElemSet(atoms_.size()));
    for (size_t k = 0; k < atoms_.size(); ++k)
        for (int x = 0; x < n_; ++x)
            if (leq(atoms_[k], x)) atom_mask_[static_cast<size_t>(x)].set(k);
}

bool FinitePoset::pure() const {
    for (int m : maximal_)
        if (rank_[static_cast<size_t>(m)] != max_rank_) return false;
    return true;
}

std::vector<int> FinitePoset::minimal_of(const ElemSet& subset) const {
    std::vector<int> out;
    for (size_t x = subset.find_first(); x != ElemSet::npos; x = subset.find_next(x)) {
        ElemSet strictly_below = down_[x] & subset;
        strictly_below.reset(x);
        if (strictly_below.none()) out.push_back(static_cast<int>(x));
    }
    return out;
}

std::vector<int> FinitePoset::maximal_of(const ElemSet& subset) const {
    std::vector<int> out;
    for (size_t x = subset.find_first(); x != ElemSet::npos; x = subset.find_next(x)) {
        ElemSet strictly_above = up_[x] & subset;
        strictly_above.reset(x);
        if (strictly_above.none()) out.push_back(static_cast<int>(x));
    }
    return out;
}

std::vector<int> FinitePoset::min_upper_bounds(int x, int y) const {
    return minimal_of(up_set(x) & up_set(y));
}

std::vector<int> FinitePoset::max_lower_bounds(int x, int y) const {
    return maximal_of(down_set(x) & down_set(y));
}

std::vector<int> FinitePoset::min_upper_bounds(const std::vector<int>& xs) const {
    ElemSet common(static_cast<size_t>(n_));
    common.set();
    for (int x : xs) common &= up_set(x);
    return minimal_of(common);
}

FinitePoset FinitePoset::restrict(const std::vector<int>& elements,
                                  std::vector<int>* old_of_new) const {
    std::vector<int> new_of_old(static_cast<size_t>(n_), -1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < elements.size(); ++i) {
        new_of_old[static_cast<size_t>(check(elements[i]))] = static_cast<int>(i);
        labels.push_back(labels_[static_cast<size_t>(elements[i])]);
    }
    std::vector<ElemSet> rel(elements.size(), ElemSet(elements.size()));
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = 0; j < elements.size(); ++j)
            if (leq(elements[i], elements[j])) rel[i].set(j);
    if (old_of_new) *old_of_new = elements;
    return from_relation(std::move(labels), rel);
}

std::vector<Int> mobius(const FinitePoset& p) {
    std::vector<Int> mu(static_cast<size_t>(p.size()), Int(0));
    // process by increasing down-set size, i.e. any linear extension
    std::vector<int> order(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.rank(a) < p.rank(b); });
    for (int x : order) {
        if (x == p.bottom()) {
            mu[static_cast<size_t>(x)] = 1;
            continue;
        }
        Int s = 0;
        const ElemSet& below = p.down_set(x);
        for (size_t y = below.find_first(); y != ElemSet::npos; y = below.find_next(y))
            if (static_cast<int>(y) != x) s += mu[y];
        mu[static_cast<size_t>(x)] = -s;
    }
    return mu;
}

IntPolynomial characteristic_polynomial(const FinitePoset& p) {
    if (!p.graded())
        throw std::invalid_argument("characteristic_polynomial: poset is not graded");
    std::vector<Int> mu = mobius(p);
    std::vector<Int> coeff(static_cast<size_t>(p.rank()) + 1, Int(0));
    for (int x = 0; x < p.size(); ++x)
        coeff[static_cast<size_t>(p.rank() - p.rank(x))] += mu[static_cast<size_t>(x)];
    return IntPolynomial(std::move(coeff));
}

bool is_lattice(const FinitePoset& p) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
            if (p.min_upper_bounds(x, y).size() != 1) return false;
            if (p.max_lower_bounds(x, y).size() != 1) return false;
        }
    return true;
}

bool is_geometric_lattice(const FinitePoset& p) {
    if (!is_lattice(p)) return false;
    const auto& atoms = p.atoms();
    // x <. y must hold exactly when y = x v a for some atom a not<= x
    for (int x = 0; x < p.size(); ++x) {
        ElemSet covers_x(static_cast<size_t>(p.size()));
        for (auto [a, b] : p.covers())
            if (a == x) covers_x.set(static_cast<size_t>(b));
        ElemSet atom_joins(static_cast<size_t>(p.size()));
        for (int a : atoms) {
            if (p.leq(a, x)) continue;
            auto j = p.min_upper_bounds(x, a);
            atom_joins.set(static_cast<size_t>(j.front()));
        }
        if (covers_x != atom_joins) return false;
    }
    return true;
}

bool is_locally_geometric(const FinitePoset& p) {
    if (!p.graded()) return false;
    for (int x = 0; x < p.size(); ++x) {
        const ElemSet& ideal = p.down_set(x);
        std::vector<int> elems;
        for (size_t y = ideal.find_first(); y != ElemSet::npos; y = ideal.find_next(y))
            elems.push_back(static_cast<int>(y));
        if (!is_geometric_lattice(p.restrict(elems))) return false;
    }
    return true;
}

namespace {

// depth-first enumeration of independent atom sets of the principal ideal
// below y, extending a partial join; calls out(I) for each set with join y
bool atom_bases_below(const FinitePoset& p, int y, std::vector<int>& current, int join,
                      size_t start, const std::vector<int>& atoms,
                      const std::function<bool(const std::vector<int>&)>& out) {
    if (join == y) return out(current);
    for (size_t k = start; k < atoms.size(); ++k) {
        int a = atoms[k];
        if (!p.leq(a, y)) continue;
        if (p.leq(a, join)) continue;
        // inside the geometric lattice below y the join is unique and the
        // rank steps by one, so this extension stays independent
        ElemSet common = p.up_set(join) & p.up_set(a) & p.down_set(y);
        auto mins = p.minimal_of(common);
        int next = mins.front();
        current.push_back(a);
        if (!atom_bases_below(p, y, current, next, k + 1, atoms, out)) return false;
        current.pop_back();
    }
    return true;
}

}  // namespace

bool is_geometric_poset(const FinitePoset& p) {
    if (!is_locally_geometric(p)) return false;
    const auto& atoms = p.atoms();
    for (int y = 0; y < p.size(); ++y) {
        if (p.rank(y) < 1) continue;
        std::vector<int> current;
        auto check_sets = [&](const std::vector<int>& iset) {
            for (int x = 0; x < p.size(); ++x) {
                if (p.rank(x) >= p.rank(y)) continue;
                bool witness = false;
                for (int a : iset) {
                    if (p.leq(a, x)) continue;
                    if (!p.min_upper_bounds(a, x).empty()) {
                        witness = true;
                        break;
                    }
                }
                if (!witness) return false;
            }
            return true;
        };
        if (!atom_bases_below(p, y, current, p.bottom(), 0, atoms, check_sets)) return false;
    }
    return true;
}

bool is_modular_element(const FinitePoset& p, int x) {
    if (!is_geometric_lattice(p))
        throw std::invalid_argument("is_modular_element: geometric lattice required");
    const int top = p.maximal_elements().front();
    const int bot = p.bottom();

    // complements of x form an antichain
    std::vector<int> complements;
    for (int z = 0; z < p.size(); ++z) {
        auto j = p.min_upper_bounds(x, z);
        auto m = p.max_lower_bounds(x, z);
        if (j.front() == top && m.front() == bot) complements.push_back(z);
    }
    bool antichain = true;
    for (size_t i = 0; i < complements.size() && antichain; ++i)
        for (size_t j = 0; j < complements.size() && antichain; ++j)
            if (i != j && p.leq(complements[i], complements[j])) antichain = false;

    // rank identity against every element
    bool rank_identity = true;
    for (int y = 0; y < p.size() && rank_identity; ++y) {
        int join = p.min_upper_bounds(x, y).front();
        int meet = p.max_lower_bounds(x, y).front();
        if (p.rank(x) + p.rank(y) != p.rank(join) + p.rank(meet)) rank_identity = false;
    }

    if (antichain != rank_identity)
        throw std::logic_error("is_modular_element: characterizations disagree");
    return antichain;
}

std::vector<std::vector<int>> action_orbits(const FinitePoset& p, const GroupAction& g) {
    std::vector<int> parent(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    for (const auto& perm : g.generators)
        for (int i = 0; i < p.size(); ++i) {
            int a = find(i), b = find(perm[static_cast<size_t>(i)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < p.size(); ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : buckets) {
        std::sort(members.begin(), members.end());
        orbits.push_back(members);
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

FinitePoset quotient_by_action(const FinitePoset& p, const GroupAction& g,
                               std::vector<int>* orbit_of_elem) {
    for (const auto& perm : g.generators) {
        if (static_cast<int>(perm.size()) != p.size())
            throw std::invalid_argument("quotient_by_action: generator has wrong size");
        std::vector<char> seen(static_cast<size_t>(p.size()), 0);
        for (int v : perm) {
            if (v < 0 || v >= p.size() || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("quotient_by_action: generator is not a permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
        for (auto [a, b] : p.covers()) {
            if (!p.leq(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]))
                throw std::invalid_argument("quotient_by_action: generator is not an automorphism");
        }
        // covers must be preserved exactly (automorphisms preserve the order
        // in both directions)
        size_t preserved = 0;
        for (auto [a, b] : p.covers()) {
            int pa = perm[static_cast<size_t>(a)], pb = perm[static_cast<size_t>(b)];
            bool is_cover = false;
            for (auto [c, d] : p.covers())
                if (c == pa && d == pb) is_cover = true;
            if (is_cover) ++preserved;
        }
        if (preserved != p.covers().size())
            throw std::invalid_argument("quotient_by_action: generator is not an automorphism");
    }

    auto orbits = action_orbits(p, g);

    // translative: x and gx with any common upper bound forces x = gx
    for (const auto& orbit : orbits)
        for (size_t i = 0; i < orbit.size(); ++i)
            for (size_t j = i + 1; j < orbit.size(); ++j)
                if (!p.min_upper_bounds(orbit[i], orbit[j]).empty())
                    throw std::invalid_argument("quotient_by_action: action is not translative");

    std::vector<int> orbit_index(static_cast<size_t>(p.size()), -1);
    for (size_t k = 0; k < orbits.size(); ++k)
        for (int x : orbits[k]) orbit_index[static_cast<size_t>(x)] = static_cast<int>(k);

    // Gx <= Gy iff x <= y' for some y' in the orbit of y
    std::vector<ElemSet> rel(orbits.size(), ElemSet(orbits.size()));
    for (size_t a = 0; a < orbits.size(); ++a) {
        int x = orbits[a].front();
        for (size_t b = 0; b < orbits.size(); ++b)
            for (int y : orbits[b])
                if (p.leq(x, y)) {
                    rel[a].set(b);
                    break;
                }
    }
    std::vector<std::string> labels;
    for (const auto& orbit : orbits) labels.push_back(p.label(orbit.front()));
    FinitePoset q = FinitePoset::from_relation(std::move(labels), rel);

    // principal ideals upstairs and downstairs are isomorphic via the orbit map
    for (int z = 0; z < p.size(); ++z) {
        const ElemSet& ideal = p.down_set(z);
        ElemSet image(orbits.size());
        for (size_t y = ideal.find_first(); y != ElemSet::npos; y = ideal.find_next(y))
            image.set(static_cast<size_t>(orbit_index[y]));
        if (image.count() != ideal.count() ||
            image != q.down_set(orbit_index[static_cast<size_t>(z)]))
            throw std::logic_error("quotient_by_action: principal ideal is not preserved");
        for (size_t u = ideal.find_first(); u != ElemSet::npos; u = ideal.find_next(u))
            for (size_t v = ideal.find_first(); v != ElemSet::npos; v = ideal.find_next(v))
                if (p.leq(static_cast<int>(u), static_cast<int>(v)) !=
                    q.leq(orbit_index[u], orbit_index[v]))
                    throw std::logic_error("quotient_by_action: principal ideal is not preserved");
    }

    if (orbit_of_elem) *orbit_of_elem = orbit_index;
    return q;
}

}  // namespace abarr
