#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abarr/numeric.hpp"
#include "abarr/poly.hpp"

namespace abarr {

using ElemSet = boost::dynamic_bitset<>;

/// Finite bounded-below poset. Immutable after construction; the full order
/// relation is materialized as reachability bitsets so every query is a few
/// word operations.
class FinitePoset {
  public:
    /// Build from labels and cover pairs (lower, upper). Throws unless the
    /// cover digraph is acyclic with a unique minimum.
    FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);

    /// Build from the full order relation; covers are derived by transitive
    /// reduction. leq_rows[x] must be the bitset of {y : x <= y}.
    static FinitePoset from_relation(std::vector<std::string> labels,
                                     const std::vector<ElemSet>& leq_rows);

    int size() const { return n_; }
    const std::string& label(int x) const { return labels_.at(static_cast<size_t>(x)); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    int bottom() const { return bottom_; }
    bool leq(int x, int y) const { return up_[check(x)].test(static_cast<size_t>(check(y))); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    const ElemSet& up_set(int x) const { return up_[check(x)]; }
    const ElemSet& down_set(int x) const { return down_[check(x)]; }

    /// Rank = longest chain length below; defined for every element.
    int rank(int x) const { return rank_[check(x)]; }
    int rank() const { return max_rank_; }
    /// Graded: rank jumps by exactly one across every cover.
    bool graded() const { return graded_; }
    /// Pure: all maximal elements share the top rank.
    bool pure() const;

    const std::vector<int>& atoms() const { return atoms_; }
    const std::vector<int>& maximal_elements() const { return maximal_; }
    /// Atom-indexed bitset (positions follow atoms()) of atoms below x.
    const ElemSet& atoms_below(int x) const { return atom_mask_[check(x)]; }

    std::vector<int> min_upper_bounds(int x, int y) const;
    std::vector<int> max_lower_bounds(int x, int y) const;
    std::vector<int> min_upper_bounds(const std::vector<int>& xs) const;
    std::vector<int> minimal_of(const ElemSet& subset) const;
    std::vector<int> maximal_of(const ElemSet& subset) const;

    /// Induced subposet. old_of_new[i] gives the source index of element i.
    FinitePoset restrict(const std::vector<int>& elements,
                         std::vector<int>* old_of_new = nullptr) const;

  private:
    explicit FinitePoset() = default;
    void finish();  // closure, ranks, atoms, masks
    int check(int x) const {
        if (x < 0 || x >= n_) throw std::out_of_range("FinitePoset: unknown element id");
        return x;
    }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<ElemSet> up_, down_;
    std::vector<int> rank_;
    int max_rank_ = 0;
    bool graded_ = false;
    int bottom_ = -1;
    std::vector<int> atoms_;
    std::vector<int> maximal_;
    std::vector<ElemSet> atom_mask_;
};

/// Moebius function of a bounded-below poset, indexed by element.
std::vector<Int> mobius(const FinitePoset& p);

/// Characteristic polynomial sum mu(x) t^(rk(P)-rk(x)). Requires a graded poset.
IntPolynomial characteristic_polynomial(const FinitePoset& p);

bool is_lattice(const FinitePoset& p);

/// Lattice in which covers are exactly joins with atoms.
bool is_geometric_lattice(const FinitePoset& p);

/// Graded, bounded below, and every principal ideal is a geometric lattice.
bool is_locally_geometric(const FinitePoset& p);

/// Locally geometric poset satisfying the atom-exchange condition: whenever
/// rk(x) < rk(y) and an atom set I of size rk(y) has y among its minimal
/// upper bounds, some a in I has a not<= x and nonempty join with x.
bool is_geometric_poset(const FinitePoset& p);

/// Modular element of a geometric lattice. Evaluates both the
/// complements-form-an-antichain characterization and the rank identity
/// rk(x)+rk(y) = rk(xvy)+rk(x^y); the two must agree.
bool is_modular_element(const FinitePoset& p, int x);

/// Permutation action on a poset, given by generators.
struct GroupAction {
    std::vector<std::vector<int>> generators;
};

/// Orbit poset of a translative action by automorphisms. Verifies the
/// generators are automorphisms and the action is translative, and asserts
/// the principal-ideal isomorphism onto each orbit's ideal. orbit_of_elem
/// maps source elements to quotient indices when provided.
FinitePoset quotient_by_action(const FinitePoset& p, const GroupAction& g,
                               std::vector<int>* orbit_of_elem = nullptr);

/// Orbits of the action (sorted, each sorted ascending).
std::vector<std::vector<int>> action_orbits(const FinitePoset& p, const GroupAction& g);

}  // namespace abarr
