#include "abarr/families.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace abarr {

void SimpleGraph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("SimpleGraph: vertex out of range");
        if (a == b) throw std::invalid_argument("SimpleGraph: loop edge");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) throw std::invalid_argument("SimpleGraph: repeated edge");
    }
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
    for (auto [a, b] : g.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        ++reached;
        for (int y : adj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                bfs.push(y);
            }
    }
    return reached == g.n;
}

bool is_chordal(const SimpleGraph& g) {
    g.validate();
    const int n = g.n;
    std::vector<std::set<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : g.edges) {
        adj[static_cast<size_t>(a)].insert(b);
        adj[static_cast<size_t>(b)].insert(a);
    }
    // maximum cardinality search
    std::vector<int> weight(static_cast<size_t>(n), 0), order;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        used[static_cast<size_t>(best)] = 1;
        order.push_back(best);
        for (int u : adj[static_cast<size_t>(best)])
            if (!used[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    // perfect elimination: later neighbors of each vertex form a clique,
    // checked through the earliest later neighbor
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        int parent = -1;
        for (int u : adj[static_cast<size_t>(v)])
            if (pos[static_cast<size_t>(u)] > i &&
                (parent < 0 || pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(parent)]))
                parent = u;
        if (parent < 0) continue;
        for (int u : adj[static_cast<size_t>(v)]) {
            if (u == parent || pos[static_cast<size_t>(u)] <= i) continue;
            if (!adj[static_cast<size_t>(parent)].count(u)) return false;
        }
    }
    return true;
}

Arrangement graphic_arrangement(const SimpleGraph& g, int d, int v) {
    g.validate();
    if (g.edges.empty()) throw std::invalid_argument("graphic_arrangement: empty edge set");
    if (!is_connected(g)) throw std::invalid_argument("graphic_arrangement: graph must be connected");
    IntMatrix rows(static_cast<Index>(g.edges.size()), g.n);
    rows.setZero();
    for (size_t k = 0; k < g.edges.size(); ++k) {
        auto [a, b] = g.edges[k];
        rows(static_cast<Index>(k), a) = 1;
        rows(static_cast<Index>(k), b) = -1;
    }
    auto [sat, torsion] = saturate(rows);
    Arrangement out;
    out.ambient = Ambient{sat.rank(), d, v};
    for (Index k = 0; k < rows.rows(); ++k) {
        auto coords = member(rows.row(k), sat);
        if (!coords) throw std::logic_error("graphic_arrangement: edge vector escaped the span");
        out.vectors.push_back(*coords);
    }
    return out;
}

void FiniteGroupTable::validate() const {
    const int m = order;
    if (m < 1 || static_cast<int>(mult.size()) != m)
        throw std::invalid_argument("FiniteGroupTable: bad multiplication table");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("FiniteGroupTable: bad multiplication table");
        for (int x : row)
            if (x < 0 || x >= m) throw std::invalid_argument("FiniteGroupTable: entry out of range");
    }
    if (identity < 0 || identity >= m) throw std::invalid_argument("FiniteGroupTable: bad identity");
    for (int g = 0; g < m; ++g)
        if (mult[static_cast<size_t>(identity)][static_cast<size_t>(g)] != g ||
            mult[static_cast<size_t>(g)][static_cast<size_t>(identity)] != g)
            throw std::invalid_argument("FiniteGroupTable: identity fails");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                int ab_c = mult[static_cast<size_t>(mult[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                               [static_cast<size_t>(c)];
                int a_bc = mult[static_cast<size_t>(a)]
                               [static_cast<size_t>(mult[static_cast<size_t>(b)][static_cast<size_t>(c)])];
                if (ab_c != a_bc) throw std::invalid_argument("FiniteGroupTable: not associative");
            }
    for (int g = 0; g < m; ++g) inverse(g);  // throws when missing
    if (static_cast<int>(action.size()) != m)
        throw std::invalid_argument("FiniteGroupTable: action table has wrong size");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != set_size)
            throw std::invalid_argument("FiniteGroupTable: action table has wrong size");
        for (int s : row)
            if (s < 0 || s >= set_size)
                throw std::invalid_argument("FiniteGroupTable: action entry out of range");
    }
    for (int s = 0; s < set_size; ++s) {
        if (action[static_cast<size_t>(identity)][static_cast<size_t>(s)] != s)
            throw std::invalid_argument("FiniteGroupTable: identity does not fix the set");
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                int ab = mult[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int lhs = action[static_cast<size_t>(ab)][static_cast<size_t>(s)];
                int rhs = action[static_cast<size_t>(a)]
                                [static_cast<size_t>(action[static_cast<size_t>(b)][static_cast<size_t>(s)])];
                if (lhs != rhs) throw std::invalid_argument("FiniteGroupTable: action is not associative");
            }
    }
}

int FiniteGroupTable::inverse(int g) const {
    for (int h = 0; h < order; ++h)
        if (mult[static_cast<size_t>(g)][static_cast<size_t>(h)] == identity &&
            mult[static_cast<size_t>(h)][static_cast<size_t>(g)] == identity)
            return h;
    throw std::invalid_argument("FiniteGroupTable: missing inverse");
}

FiniteGroupTable cyclic_group(int m, const std::vector<std::string>& orbit_spec) {
    if (m < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    FiniteGroupTable t;
    t.order = m;
    t.identity = 0;
    t.mult.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t.mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
    int offset = 0;
    std::vector<std::vector<int>> orbits;
    for (const auto& token : orbit_spec) {
        if (token == "t") {
            orbits.push_back({offset});
            offset += 1;
        } else if (token == "r") {
            std::vector<int> orbit;
            for (int k = 0; k < m; ++k) orbit.push_back(offset + k);
            orbits.push_back(orbit);
            offset += m;
        } else {
            throw std::invalid_argument("cyclic_group: unknown orbit token '" + token + "'");
        }
    }
    t.set_size = offset;
    t.action.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(offset)));
    for (int g = 0; g < m; ++g)
        for (const auto& orbit : orbits) {
            if (orbit.size() == 1) {
                t.action[static_cast<size_t>(g)][static_cast<size_t>(orbit[0])] = orbit[0];
            } else {
                for (int k = 0; k < m; ++k)
                    t.action[static_cast<size_t>(g)][static_cast<size_t>(orbit[static_cast<size_t>(k)])] =
                        orbit[static_cast<size_t>((g + k) % m)];
            }
        }
    t.validate();
    return t;
}

namespace {

// block: sorted members plus a color per member, normalized so the least
// member carries the identity
struct DowlingElement {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    std::vector<int> marks;  // -1 when covered by a block, else a set point

    bool operator<(const DowlingElement& o) const {
        if (blocks != o.blocks) return blocks < o.blocks;
        return marks < o.marks;
    }
    bool operator==(const DowlingElement& o) const {
        return blocks == o.blocks && marks == o.marks;
    }
};

std::string dowling_label(const DowlingElement& e) {
    std::string s;
    for (const auto& [members, colors] : e.blocks) {
        s += "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(members[i] + 1);
            if (colors[i] != 0) s += "^" + std::to_string(colors[i]);
        }
        s += "}";
    }
    for (size_t i = 0; i < e.marks.size(); ++i)
        if (e.marks[i] >= 0)
            s += "|" + std::to_string(i + 1) + ">" + std::to_string(e.marks[i]);
    return s.empty() ? "()" : s;
}

}  // namespace

FinitePoset dowling_poset(int n, const FiniteGroupTable& g) {
    if (n < 1) throw std::invalid_argument("dowling_poset: n must be positive");
    g.validate();

    DowlingElement bottom;
    bottom.marks.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) bottom.blocks.push_back({{i}, {g.identity}});

    std::map<DowlingElement, int> index;
    std::vector<DowlingElement> elems;
    std::vector<std::pair<int, int>> covers;
    std::queue<int> bfs;
    index[bottom] = 0;
    elems.push_back(bottom);
    bfs.push(0);

    auto intern = [&](const DowlingElement& e, int from) {
        auto [it, fresh] = index.emplace(e, static_cast<int>(elems.size()));
        if (fresh) {
            elems.push_back(e);
            bfs.push(it->second);
        }
        covers.emplace_back(from, it->second);
    };

    while (!bfs.empty()) {
        int id = bfs.front();
        bfs.pop();
        DowlingElement cur = elems[static_cast<size_t>(id)];
        const size_t nb = cur.blocks.size();
        // merge two blocks, one cover per group element twisting the second
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = i + 1; j < nb; ++j)
                for (int tw = 0; tw < g.order; ++tw) {
                    DowlingElement next = cur;
                    auto [am, ac] = cur.blocks[i];
                    auto [bm, bc] = cur.blocks[j];
                    std::vector<std::pair<int, int>> joint;
                    for (size_t k = 0; k < am.size(); ++k) joint.emplace_back(am[k], ac[k]);
                    for (size_t k = 0; k < bm.size(); ++k)
                        joint.emplace_back(bm[k],
                                           g.mult[static_cast<size_t>(bc[k])][static_cast<size_t>(tw)]);
                    std::sort(joint.begin(), joint.end());
                    std::vector<int> members, colors;
                    for (auto [mem, col] : joint) {
                        members.push_back(mem);
                        colors.push_back(col);
                    }
                    next.blocks.erase(next.blocks.begin() + static_cast<long>(j));
                    next.blocks.erase(next.blocks.begin() + static_cast<long>(i));
                    next.blocks.emplace_back(members, colors);
                    std::sort(next.blocks.begin(), next.blocks.end());
                    intern(next, id);
                }
        // remove one block, marking its members equivariantly
        for (size_t i = 0; i < nb; ++i)
            for (int s = 0; s < g.set_size; ++s) {
                DowlingElement next = cur;
                const auto& [members, colors] = cur.blocks[i];
                for (size_t k = 0; k < members.size(); ++k)
                    next.marks[static_cast<size_t>(members[k])] =
                        g.action[static_cast<size_t>(colors[k])][static_cast<size_t>(s)];
                next.blocks.erase(next.blocks.begin() + static_cast<long>(i));
                intern(next, id);
            }
    }

    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(dowling_label(e));
    // dedupe cover pairs produced by coincident moves
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return FinitePoset(labels, covers);
}

std::vector<int> dowling_top_ideal(const FinitePoset& p, int n) {
    std::vector<int> out;
    const std::string singleton = "{" + std::to_string(n) + "}";
    for (int x = 0; x < p.size(); ++x)
        if (p.label(x).find(singleton) != std::string::npos) out.push_back(x);
    return out;
}

FinitePoset partition_lattice(int n) {
    return dowling_poset(n, cyclic_group(1, {}));
}

FinitePoset boolean_lattice(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (long mask = 0; mask < (1l << n); ++mask) {
        std::string s = "{";
        for (int b = 0; b < n; ++b)
            if (mask & (1l << b)) s += std::to_string(b + 1);
        labels.push_back(s + "}");
        for (int b = 0; b < n; ++b)
            if (mask & (1l << b)) covers.emplace_back(static_cast<int>(mask & ~(1l << b)),
                                                      static_cast<int>(mask));
    }
    return FinitePoset(labels, covers);
}

Arrangement finite_index_rewrite(const Arrangement& a, const LatticeBasis& sub) {
    a.validate_shape();
    if (sub.rank() != a.ambient.n || sub.ambient_dim != a.ambient.n)
        throw std::invalid_argument("finite_index_rewrite: sublattice must have full rank");
    Arrangement out;
    out.ambient = a.ambient;
    for (const auto& v : a.vectors) {
        auto coords = member(v, sub);
        if (!coords)
            throw std::invalid_argument("finite_index_rewrite: vector outside the sublattice");
        out.vectors.push_back(*coords);
    }
    return out;
}

}  // namespace abarr
