#include "abarr/io.hpp"

#include <sstream>
#include <stdexcept>

namespace abarr::io {

namespace {

void require_format(const json& j) {
    if (!j.is_object() || !j.contains("format") || j.at("format") != 1)
        throw std::invalid_argument("expected a JSON object with \"format\": 1");
}

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or an integer string");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("expected a rational string like \"2/3\"");
}

}  // namespace

json poset_to_json(const FinitePoset& p) {
    json j;
    j["format"] = 1;
    j["elements"] = p.labels();
    json covers = json::array();
    auto sorted = p.covers();
    std::sort(sorted.begin(), sorted.end());
    for (auto [a, b] : sorted) covers.push_back(json::array({a, b}));
    j["covers"] = covers;
    return j;
}

FinitePoset poset_from_json(const json& j) {
    require_format(j);
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return FinitePoset(std::move(labels), std::move(covers));
}

json arrangement_to_json(const Arrangement& a) {
    json j;
    j["format"] = 1;
    j["n"] = a.ambient.n;
    j["d"] = a.ambient.d;
    j["v"] = a.ambient.v;
    json vectors = json::array();
    for (const auto& v : a.vectors) {
        json row = json::array();
        for (Index k = 0; k < v.cols(); ++k) row.push_back(int_to_json(v(k)));
        vectors.push_back(row);
    }
    j["vectors"] = vectors;
    return j;
}

Arrangement arrangement_from_json(const json& j) {
    require_format(j);
    Arrangement a;
    a.ambient = Ambient{j.at("n").get<Index>(), j.at("d").get<int>(), j.at("v").get<int>()};
    for (const auto& row : j.at("vectors")) {
        IntRowVec v(a.ambient.n);
        if (static_cast<Index>(row.size()) != a.ambient.n)
            throw std::invalid_argument("arrangement vector has wrong length");
        Index k = 0;
        for (const auto& e : row) v(k++) = int_from_json(e);
        a.vectors.push_back(v);
    }
    a.validate_shape();
    return a;
}

json layers_to_json(const LayerPoset& lp) {
    json j = poset_to_json(lp.poset);
    json layer_list = json::array();
    for (const auto& l : lp.layers) {
        json entry;
        json rows = json::array();
        for (Index i = 0; i < l.lattice.rank(); ++i) {
            json row = json::array();
            for (Index k = 0; k < l.lattice.ambient_dim; ++k)
                row.push_back(int_to_json(l.lattice.basis(i, k)));
            rows.push_back(row);
        }
        entry["lattice"] = rows;
        json chars = json::array();
        for (Index i = 0; i < l.character.rows(); ++i) {
            json row = json::array();
            for (Index k = 0; k < l.character.cols(); ++k)
                row.push_back(to_string(l.character(i, k)));
            chars.push_back(row);
        }
        entry["character"] = chars;
        layer_list.push_back(entry);
    }
    j["layers"] = layer_list;
    j["essential"] = lp.status.essential;
    j["irredundant"] = lp.status.irredundant;
    return j;
}

json certificate_to_json(const IdealChain& c) {
    json j;
    j["format"] = 1;
    j["chain"] = c.atom_sets;
    j["strict"] = c.strict;
    j["a"] = c.a;
    return j;
}

IdealChain certificate_from_json(const json& j) {
    require_format(j);
    IdealChain c;
    c.atom_sets = j.at("chain").get<std::vector<std::vector<int>>>();
    c.strict = j.at("strict").get<bool>();
    c.a = j.at("a").get<std::vector<long>>();
    return c;
}

json affine_to_json(const AffineArrangement& a) {
    json j;
    j["format"] = 1;
    j["n"] = a.dim;
    json hs = json::array();
    for (const auto& [normal, offset] : a.hyperplanes) {
        json h;
        json nrm = json::array();
        for (Index k = 0; k < normal.cols(); ++k) nrm.push_back(to_string(normal(k)));
        h["normal"] = nrm;
        h["offset"] = to_string(offset);
        hs.push_back(h);
    }
    j["hyperplanes"] = hs;
    return j;
}

AffineArrangement affine_from_json(const json& j) {
    require_format(j);
    AffineArrangement a;
    a.dim = j.at("n").get<Index>();
    for (const auto& h : j.at("hyperplanes")) {
        RatRowVec normal(a.dim);
        const auto& nrm = h.at("normal");
        if (static_cast<Index>(nrm.size()) != a.dim)
            throw std::invalid_argument("affine normal has wrong length");
        Index k = 0;
        for (const auto& e : nrm) normal(k++) = rat_from_json(e);
        a.hyperplanes.emplace_back(normal, rat_from_json(h.at("offset")));
    }
    a.validate();
    return a;
}

json graph_to_json(const SimpleGraph& g) {
    json j;
    j["format"] = 1;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a + 1, b + 1}));
    j["edges"] = edges;
    return j;
}

SimpleGraph graph_from_json(const json& j) {
    require_format(j);
    SimpleGraph g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    g.validate();
    return g;
}

json group_to_json(const FiniteGroupTable& g) {
    json j;
    j["format"] = 1;
    j["order"] = g.order;
    j["mult"] = g.mult;
    j["identity"] = g.identity;
    j["set_size"] = g.set_size;
    j["action"] = g.action;
    return j;
}

FiniteGroupTable group_from_json(const json& j) {
    require_format(j);
    FiniteGroupTable g;
    g.order = j.at("order").get<int>();
    g.mult = j.at("mult").get<std::vector<std::vector<int>>>();
    g.identity = j.at("identity").get<int>();
    g.set_size = j.at("set_size").get<int>();
    g.action = j.at("action").get<std::vector<std::vector<int>>>();
    g.validate();
    return g;
}

json sublattice_to_json(const LatticeBasis& b) {
    json j;
    j["format"] = 1;
    json rows = json::array();
    for (Index i = 0; i < b.basis.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < b.basis.cols(); ++k) row.push_back(int_to_json(b.basis(i, k)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

LatticeBasis sublattice_from_json(const json& j) {
    require_format(j);
    const auto& rows = j.at("rows");
    if (rows.empty()) throw std::invalid_argument("sublattice: empty basis");
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.at(0).size()));
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != m.cols())
            throw std::invalid_argument("sublattice: ragged rows");
        Index k = 0;
        for (const auto& e : row) m(i, k++) = int_from_json(e);
        ++i;
    }
    return lattice_from_rows(m);
}

std::string dot_hasse(const FinitePoset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int r = 0; r <= p.rank(); ++r) {
        std::vector<int> level;
        for (int x = 0; x < p.size(); ++x)
            if (p.rank(x) == r) level.push_back(x);
        if (level.empty()) continue;
        out << "  { rank=same;";
        for (int x : level) out << " n" << x << ";";
        out << " }\n";
    }
    for (int x = 0; x < p.size(); ++x) {
        std::string label = p.label(x);
        std::string escaped;
        for (char c : label) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        out << "  n" << x << " [label=\"" << escaped << "\"];\n";
    }
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    for (auto [a, b] : covers) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string tower_text(const TowerReport& rep) {
    std::ostringstream out;
    out << "fibration tower report\n";
    out << "essential: " << (rep.status.essential ? "yes" : "no")
        << "  irredundant: " << (rep.status.irredundant ? "yes" : "no") << "\n";
    out << "fiber-type: " << (rep.supersolvable ? "yes" : "no") << "\n";
    if (!rep.supersolvable) {
        out << "note: " << rep.note << "\n";
        return out.str();
    }
    const int n = static_cast<int>(rep.steps.size()) + 1;
    for (size_t k = 0; k < rep.steps.size(); ++k) {
        const TowerStep& s = rep.steps[k];
        out << "step " << (n - static_cast<int>(k)) << ": kernel [";
        for (Index i = 0; i < s.kernel.basis.rows(); ++i) {
            if (i) out << "; ";
            for (Index j = 0; j < s.kernel.basis.cols(); ++j) {
                if (j) out << ",";
                out << s.kernel.basis(i, j);
            }
        }
        out << "], fiber: G minus " << s.punctures << " points, a=" << s.atoms_added
            << ", strict: " << (s.tight ? "yes" : "no") << "\n";
    }
    out << "step 1: base arrangement of rank one with " << rep.base.vectors.size()
        << " vectors, fiber: G minus " << rep.base_punctures << " points, a=" << rep.base_atoms
        << "\n";
    out << "a = [";
    for (size_t i = 0; i < rep.atom_counts.size(); ++i)
        out << (i ? "," : "") << rep.atom_counts[i];
    out << "]  punctures = [";
    for (size_t i = 0; i < rep.punctures.size(); ++i) out << (i ? "," : "") << rep.punctures[i];
    out << "]\n";
    out << "strictly supersolvable: " << (rep.strictly_supersolvable ? "yes" : "no") << "\n";
    if (rep.strictly_supersolvable) {
        out << "strict a = [";
        for (size_t i = 0; i < rep.strict_atom_counts.size(); ++i)
            out << (i ? "," : "") << rep.strict_atom_counts[i];
        out << "]  strict punctures = [";
        for (size_t i = 0; i < rep.strict_punctures.size(); ++i)
            out << (i ? "," : "") << rep.strict_punctures[i];
        out << "]\n";
    }
    out << "aspherical complement (K(pi,1)): " << (rep.kpi1 ? "yes" : "not implied") << "\n";
    out << "pulled back from configuration spaces: " << (rep.fn_pullback ? "yes" : "no") << "\n";
    out << "bundle section: " << (rep.section ? "yes" : "no") << "\n";
    if (!rep.pi1_free_ranks.empty()) {
        out << "pi1: iterated semidirect product of free groups of ranks [";
        for (size_t i = 0; i < rep.pi1_free_ranks.size(); ++i)
            out << (i ? "," : "") << rep.pi1_free_ranks[i];
        out << "]\n";
    }
    return out.str();
}

InputKind sniff(const json& j) {
    require_format(j);
    if (j.contains("hyperplanes")) return InputKind::affine;
    if (j.contains("vectors")) return InputKind::arrangement;
    if (j.contains("covers")) return InputKind::poset;
    throw std::invalid_argument("unrecognized input document");
}

}  // namespace abarr::io
