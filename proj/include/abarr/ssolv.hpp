#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abarr/layers.hpp"
#include "abarr/poset.hpp"

namespace abarr {

/// Certificate for (strict) supersolvability: an ascending chain of atom
/// sets, one per rank level, each generating a pure join-closed order ideal
/// that sits modularly inside the next. Atom sets hold poset element ids.
struct IdealChain {
    std::vector<std::vector<int>> atom_sets;  // levels 1..n, ascending, last = all atoms
    bool strict = false;
    std::vector<long> a;  // block sizes |A(Q_i)| - |A(Q_{i-1})|
};

/// The largest order ideal whose atoms lie in the given set, with its
/// join-closure and purity diagnosis. In a locally geometric poset a
/// join-closed order ideal is determined by its atoms, so this is the only
/// candidate.
struct IdealFromAtoms {
    std::vector<int> elements;
    bool join_closed = false;
    bool pure = false;
    int rank = 0;
    std::string failure;  // names the violated condition, empty if none
};

IdealFromAtoms ideal_from_atoms(const FinitePoset& p, const std::vector<int>& atoms);

struct IdealWitness {
    bool ok = false;
    std::string reason;
    int x = -1, y = -1, a = -1;  // offending elements where applicable
    explicit operator bool() const { return ok; }
};

/// Pure join-closed order ideal whose atoms always join with outside atoms
/// and whose maxima provide a modular element below every maximal element.
/// Requires a locally geometric poset; returns a witness on failure.
IdealWitness is_modular_ideal(const FinitePoset& p, const std::vector<int>& ideal_elements);

/// As is_modular_ideal, with the join-existence condition strengthened to
/// join-uniqueness: |a v y| = 1 for y in the ideal and a an outside atom.
IdealWitness is_tight_modular_ideal(const FinitePoset& p, const std::vector<int>& ideal_elements);

/// Pair-of-atoms condition: for distinct atoms a1, a2 outside the ideal and
/// any minimal upper bound x of them, some ideal atom lies below x. On a
/// geometric poset this characterizes corank-one modular ideals; the
/// agreement is asserted whenever the generated ideal is proper, pure,
/// join-closed and of rank below rk(P) (a full-rank proper ideal can leave
/// fewer than two atoms outside, making the condition vacuous). Throws if p
/// is not geometric.
bool dagger_condition(const FinitePoset& p, const std::vector<int>& q_atoms);

/// Exhaustive agreement check of dagger_condition against the modular-ideal
/// predicate at corank one, over every atom subset generating a pure
/// join-closed proper ideal.
struct DaggerSweep {
    long ideals_checked = 0;
    long disagreements = 0;
};
DaggerSweep dagger_sweep(const FinitePoset& p);

/// Search for a full chain of (tight) modular ideals of consecutive ranks.
/// Deterministic: depth-first over candidate atom sets in lexicographic
/// order; the returned certificate is re-verified by the definitional
/// predicates. Requires a pure, locally geometric poset.
std::optional<IdealChain> supersolvable_chain(const FinitePoset& p);
std::optional<IdealChain> strictly_supersolvable_chain(const FinitePoset& p);

struct ChainCheck {
    bool ok = false;
    std::string message;
};

/// Re-check a certificate against the definitions, level by level.
ChainCheck verify_chain(const FinitePoset& p, const IdealChain& chain);

/// One stage of the fibration tower: the chosen corank-one kernel sublattice,
/// the ideal it generates, and the fiber data.
struct TowerStep {
    Arrangement arrangement;       // the arrangement at this level
    LatticeBasis kernel;           // corank-one saturated sublattice (level coordinates)
    std::vector<int> ideal_atoms;  // atoms of the level poset inside the ideal
    bool tight = false;            // unique-join condition holds at this step
    Int punctures = 0;             // points removed from the fiber
    long atoms_added = 0;          // atom-count difference at this level
};

struct TowerReport {
    ArrangementStatus status;
    bool supersolvable = false;
    bool strictly_supersolvable = false;
    std::vector<TowerStep> steps;  // top rank down to rank 2
    Arrangement base;              // the rank-one end of the tower
    Int base_punctures = 0;
    long base_atoms = 0;
    IdealChain chain;         // certificate on the full layer poset (when found)
    IdealChain strict_chain;  // certificate with every step tight (when found)
    std::vector<Int> punctures;       // per level, ascending rank
    std::vector<long> atom_counts;    // a_i per level, ascending rank
    std::vector<Int> strict_punctures;
    std::vector<long> strict_atom_counts;
    bool kpi1 = false;         // aspherical complement (linear/toric/elliptic cases)
    bool fn_pullback = false;  // bundle pulled back from configuration spaces
    bool section = false;      // bundle admits a section
    std::vector<Int> pi1_free_ranks;  // iterated semidirect factors (strict case)
    std::string note;
};

/// Decide fiber-type by building the tower of corank-one quotients, choosing
/// at each level the lexicographically smallest valid kernel, with
/// backtracking. Requires an essential, irredundant arrangement.
TowerReport tower_report(const Arrangement& a, int workers = 1);

}  // namespace abarr
