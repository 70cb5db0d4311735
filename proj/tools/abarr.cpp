#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abarr/invariants.hpp"
#include "abarr/io.hpp"

using namespace abarr;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

std::string dump(const json& j) { return j.dump(2); }

// chain search appropriate to the input document
struct SolveResult {
    bool found = false;
    IdealChain chain;
    std::string note;
};

SolveResult solve_document(const json& doc, int workers) {
    SolveResult res;
    switch (io::sniff(doc)) {
        case io::InputKind::arrangement: {
            Arrangement a = io::arrangement_from_json(doc);
            TowerReport rep = tower_report(a, workers);
            if (rep.strictly_supersolvable) {
                res.found = true;
                res.chain = rep.strict_chain;
            } else if (rep.supersolvable) {
                res.found = true;
                res.chain = rep.chain;
            } else {
                res.note = rep.note;
            }
            break;
        }
        case io::InputKind::poset: {
            FinitePoset p = io::poset_from_json(doc);
            if (auto strict = strictly_supersolvable_chain(p)) {
                res.found = true;
                res.chain = *strict;
            } else if (auto plain = supersolvable_chain(p)) {
                res.found = true;
                res.chain = *plain;
            } else {
                res.note = "exhausted all candidate atom sets at some level";
            }
            break;
        }
        case io::InputKind::affine: {
            AffineArrangement a = io::affine_from_json(doc);
            AffineSsReport rep = affine_ss_check(a);
            FinitePoset p = intersection_poset(a);
            if (rep.ss) {
                auto chain = strictly_supersolvable_chain(p);
                if (!chain) chain = supersolvable_chain(p);
                res.found = true;
                res.chain = *chain;
            } else {
                res.note = "intersection poset search and coned modular-chain search both exhausted";
            }
            break;
        }
    }
    return res;
}

FinitePoset poset_of_document(const json& doc, int workers) {
    switch (io::sniff(doc)) {
        case io::InputKind::arrangement:
            return build_layers(io::arrangement_from_json(doc), workers).poset;
        case io::InputKind::poset:
            return io::poset_from_json(doc);
        case io::InputKind::affine:
            return intersection_poset(io::affine_from_json(doc));
    }
    throw std::invalid_argument("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with arrangements in abelian Lie groups"};
    app.require_subcommand(1);
    app.fallthrough();
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for enumeration")->capture_default_str();

    std::string input, out_path, cert_path, second_path;
    bool want_dot = false, want_json = false;
    int jmax = 8;

    int max_vectors = 16;
    auto* cmd_layers = app.add_subcommand("layers", "poset of layers of an arrangement");
    cmd_layers->add_option("input", input, "arrangement JSON")->required();
    cmd_layers->add_flag("--dot", want_dot, "emit a DOT Hasse diagram instead of JSON");
    cmd_layers->add_option("--max-vectors", max_vectors, "subset enumeration guard")
        ->capture_default_str();
    cmd_layers->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cmd_ssolve = app.add_subcommand("ssolve", "search for a supersolvability certificate");
    cmd_ssolve->add_option("input", input, "arrangement, poset, or affine JSON")->required();
    cmd_ssolve->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cmd_tower = app.add_subcommand("tower", "fibration tower report");
    cmd_tower->add_option("input", input, "arrangement JSON")->required();
    cmd_tower->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cmd_inv = app.add_subcommand("invariants", "polynomial invariants of an arrangement");
    cmd_inv->add_option("input", input, "arrangement JSON")->required();
    cmd_inv->add_option("--jmax", jmax, "lower-central-series depth")->capture_default_str();
    cmd_inv->add_flag("--json", want_json, "coefficient arrays instead of text");
    cmd_inv->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cmd_verify = app.add_subcommand("verify", "re-check a certificate against a document");
    cmd_verify->add_option("certificate", cert_path, "certificate JSON")->required();
    cmd_verify->add_option("input", input, "arrangement, poset, or affine JSON")->required();

    auto* cmd_qc = app.add_subcommand("quotient-check",
                                      "supersolvability transfer to a finite-index sublattice");
    cmd_qc->add_option("arrangement", input, "arrangement JSON")->required();
    cmd_qc->add_option("sublattice", second_path, "sublattice JSON")->required();

    auto* cmd_gen = app.add_subcommand("gen", "generate example inputs");
    cmd_gen->require_subcommand(1);
    cmd_gen->fallthrough();
    int gen_n = 3, gen_d = 1, gen_v = 1, gen_order = 1;
    std::string gen_edges, gen_spec, gen_tables, gen_preset = "triangle";
    auto* gen_graphic = cmd_gen->add_subcommand("graphic", "difference arrangement of a graph");
    gen_graphic->add_option("--n", gen_n, "vertices")->required();
    gen_graphic->add_option("--edges", gen_edges, "comma list like 1-2,2-3")->required();
    gen_graphic->add_option("--d", gen_d, "circle factors")->capture_default_str();
    gen_graphic->add_option("--v", gen_v, "line factors")->capture_default_str();
    gen_graphic->add_option("--out", out_path, "write to a file instead of stdout");
    auto* gen_dowling = cmd_gen->add_subcommand("dowling", "marked colored-partition poset");
    gen_dowling->add_option("--n", gen_n, "points")->required();
    gen_dowling->add_option("--order", gen_order, "cyclic group order")->capture_default_str();
    gen_dowling->add_option("--s", gen_spec, "orbit tokens, e.g. t,t or r");
    gen_dowling->add_option("--tables", gen_tables, "group/action tables JSON (overrides --order/--s)");
    gen_dowling->add_option("--out", out_path, "write to a file instead of stdout");
    auto* gen_partition = cmd_gen->add_subcommand("partition", "partition lattice");
    gen_partition->add_option("--n", gen_n, "points")->required();
    gen_partition->add_option("--out", out_path, "write to a file instead of stdout");
    auto* gen_boolean = cmd_gen->add_subcommand("boolean", "Boolean lattice");
    gen_boolean->add_option("--n", gen_n, "atoms")->required();
    gen_boolean->add_option("--out", out_path, "write to a file instead of stdout");
    auto* gen_affine = cmd_gen->add_subcommand("affine", "affine hyperplane examples");
    gen_affine->add_option("--preset", gen_preset, "triangle | pencil | generic")
        ->capture_default_str();
    gen_affine->add_option("--out", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_layers) {
            LayerPoset lp =
                build_layers(io::arrangement_from_json(load_json(input)), workers, max_vectors);
            if (!lp.status.essential)
                std::cerr << "warning: arrangement is not essential (span rank "
                          << lp.status.span_rank << ")\n";
            emit(want_dot ? io::dot_hasse(lp.poset) : dump(io::layers_to_json(lp)), out_path);
        } else if (*cmd_ssolve) {
            SolveResult res = solve_document(load_json(input), workers);
            if (res.found)
                emit(dump(io::certificate_to_json(res.chain)), out_path);
            else
                emit("not supersolvable: " + res.note, out_path);
        } else if (*cmd_tower) {
            TowerReport rep = tower_report(io::arrangement_from_json(load_json(input)), workers);
            emit(io::tower_text(rep), out_path);
        } else if (*cmd_inv) {
            Arrangement a = io::arrangement_from_json(load_json(input));
            LayerPoset lp = build_layers(a, workers);
            if (!lp.status.essential)
                throw std::invalid_argument("invariants: arrangement is not essential");
            IntPolynomial chi = characteristic_polynomial(lp.poset);
            TowerReport rep = tower_report(a, workers);

            json out_json;
            out_json["format"] = 1;
            std::ostringstream text;
            text << "chi = " << chi.str() << "\n";
            json chi_coeffs = json::array();
            for (size_t k = 0; k <= static_cast<size_t>(chi.degree()); ++k)
                chi_coeffs.push_back(static_cast<long>(chi.coeff(k).get_si()));
            out_json["chi"] = chi_coeffs;

            if (rep.strictly_supersolvable) {
                auto f = charpoly_factored(lp.poset, rep.strict_chain);
                text << "chi factored = ";
                for (const Int& r : f.roots) text << "(t-" << r << ")";
                text << "\n";
                json roots = json::array();
                for (const Int& r : f.roots) roots.push_back(static_cast<long>(r.get_si()));
                out_json["chi_factors"] = roots;
            } else {
                text << "chi factored = unavailable (no strict chain)\n";
            }

            if (a.ambient.v > 0) {
                IntPolynomial poin = poincare_from_charpoly(chi, a.ambient.d, a.ambient.v);
                if (rep.strictly_supersolvable) {
                    std::vector<long> blocks(rep.strict_chain.a.begin(), rep.strict_chain.a.end());
                    IntPolynomial product = poincare(blocks, a.ambient.d, a.ambient.v, &chi);
                    if (!(product == poin))
                        throw std::logic_error("invariants: Poincare routes disagree");
                }
                text << "poincare = " << poin.str() << "\n";
                json pc = json::array();
                for (size_t k = 0; k <= static_cast<size_t>(poin.degree()); ++k)
                    pc.push_back(static_cast<long>(poin.coeff(k).get_si()));
                out_json["poincare"] = pc;
            } else {
                text << "poincare = skipped (requires v > 0)\n";
            }

            if (a.ambient.d == 1 && a.ambient.v == 1 && rep.strictly_supersolvable) {
                std::vector<long> blocks(rep.strict_chain.a.begin(), rep.strict_chain.a.end());
                auto phi = lcs_ranks(blocks, jmax);
                text << "lcs ranks (jmax=" << jmax << ") = [";
                for (size_t i = 0; i < phi.size(); ++i) text << (i ? "," : "") << phi[i];
                text << "]\n";
                json lcs = json::array();
                for (const Int& x : phi) lcs.push_back(static_cast<long>(x.get_si()));
                out_json["lcs"] = lcs;
            } else if (a.ambient.d == 1 && a.ambient.v == 1) {
                text << "lcs ranks = skipped (requires a strict chain)\n";
            } else {
                text << "lcs ranks = skipped (requires d = 1, v = 1)\n";
            }
            emit(want_json ? dump(out_json) : text.str(), out_path);
        } else if (*cmd_verify) {
            IdealChain chain = io::certificate_from_json(load_json(cert_path));
            FinitePoset p = poset_of_document(load_json(input), workers);
            ChainCheck check = verify_chain(p, chain);
            if (check.ok) {
                std::cout << "certificate verified\n";
                return 0;
            }
            std::cout << "certificate rejected: " << check.message << "\n";
            return 1;
        } else if (*cmd_qc) {
            Arrangement a = io::arrangement_from_json(load_json(input));
            LatticeBasis sub = io::sublattice_from_json(load_json(second_path));
            Arrangement down = finite_index_rewrite(a, sub);
            bool up_ss = supersolvable_chain(build_layers(a, workers).poset).has_value();
            bool down_ss = supersolvable_chain(build_layers(down, workers).poset).has_value();
            std::cout << "upstairs supersolvable: " << (up_ss ? "yes" : "no") << "\n";
            std::cout << "sublattice rewrite supersolvable: " << (down_ss ? "yes" : "no") << "\n";
            std::cout << "equivalence holds: " << (up_ss == down_ss ? "yes" : "NO") << "\n";
            return up_ss == down_ss ? 0 : 1;
        } else if (*gen_graphic) {
            SimpleGraph g;
            g.n = gen_n;
            std::stringstream ss(gen_edges);
            std::string token;
            while (std::getline(ss, token, ',')) {
                auto dash = token.find('-');
                if (dash == std::string::npos)
                    throw std::invalid_argument("edges must look like 1-2,2-3");
                g.edges.emplace_back(std::stoi(token.substr(0, dash)) - 1,
                                     std::stoi(token.substr(dash + 1)) - 1);
            }
            emit(dump(io::arrangement_to_json(graphic_arrangement(g, gen_d, gen_v))), out_path);
        } else if (*gen_dowling) {
            FiniteGroupTable table;
            if (!gen_tables.empty()) {
                table = io::group_from_json(load_json(gen_tables));
            } else {
                std::vector<std::string> tokens;
                std::stringstream ss(gen_spec);
                std::string token;
                while (std::getline(ss, token, ',')) tokens.push_back(token);
                table = cyclic_group(gen_order, tokens);
            }
            emit(dump(io::poset_to_json(dowling_poset(gen_n, table))), out_path);
        } else if (*gen_partition) {
            emit(dump(io::poset_to_json(partition_lattice(gen_n))), out_path);
        } else if (*gen_boolean) {
            emit(dump(io::poset_to_json(boolean_lattice(gen_n))), out_path);
        } else if (*gen_affine) {
            AffineArrangement a;
            a.dim = 2;
            auto hp = [&](std::initializer_list<long> normal, long offset) {
                RatRowVec v(a.dim);
                Index j = 0;
                for (long e : normal) v(j++) = Rat(e);
                a.hyperplanes.emplace_back(v, Rat(offset));
            };
            if (gen_preset == "triangle") {
                hp({1, 0}, 0);
                hp({0, 1}, 0);
                hp({1, 1}, 1);
            } else if (gen_preset == "pencil") {
                hp({1, 0}, 0);
                hp({0, 1}, 0);
                hp({1, -1}, 0);
            } else if (gen_preset == "generic") {
                hp({1, 0}, 0);
                hp({0, 1}, 0);
                hp({1, 1}, 1);
                hp({1, -1}, 3);
            } else {
                throw std::invalid_argument("unknown preset '" + gen_preset + "'");
            }
            emit(dump(io::affine_to_json(a)), out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
