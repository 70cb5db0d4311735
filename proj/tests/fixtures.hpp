// Hand-built posets used across the test suite.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abarr/poset.hpp"

namespace fixtures {

using abarr::FinitePoset;

// Rank-2 simplicial poset: atoms 1,2,3 and maximal faces a >= {1,2,3}, b >= {1,3}.
inline FinitePoset simplicial() {
    return FinitePoset({"0", "1", "2", "3", "a", "b"},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}});
}

// Rank-2 poset with four atoms; atoms 1 and 4 lie under both maxima, atom 2
// only under the first, atom 3 only under the second.
inline FinitePoset split_pair() {
    return FinitePoset({"0", "h1", "h2a", "h2b", "h3", "p0", "p1"},
                       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 6}, {4, 5}, {4, 6}});
}

inline FinitePoset chain(int length) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i <= length; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i) covers.emplace_back(i - 1, i);
    }
    return FinitePoset(labels, covers);
}

inline FinitePoset boolean_lattice(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int m = 0; m < (1 << n); ++m) {
        labels.push_back("s" + std::to_string(m));
        for (int b = 0; b < n; ++b)
            if (m & (1 << b)) covers.emplace_back(m & ~(1 << b), m);
    }
    return FinitePoset(labels, covers);
}

inline FinitePoset boolean_minus_top(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int m = 0; m + 1 < (1 << n); ++m) {
        labels.push_back("s" + std::to_string(m));
        for (int b = 0; b < n; ++b)
            if ((m & (1 << b)) && (m & ~(1 << b)) != ((1 << n) - 1)) covers.emplace_back(m & ~(1 << b), m);
    }
    return FinitePoset(labels, covers);
}

// Set partitions of [n] ordered by refinement, built independently of the
// families module so the two constructions can cross-check each other.
inline FinitePoset partition_lattice(int n) {
    using Partition = std::vector<std::vector<int>>;  // sorted blocks of sorted elements
    auto normalize = [](Partition p) {
        for (auto& b : p) std::sort(b.begin(), b.end());
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<Partition> all;
    std::map<Partition, int> index;
    // enumerate by restricted growth strings
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    for (;;) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        Partition p(static_cast<size_t>(blocks));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
        p = normalize(p);
        if (!index.count(p)) {
            index[p] = static_cast<int>(all.size());
            all.push_back(p);
        }
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[static_cast<size_t>(i)] < cap) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    // covers: merge two blocks
    std::vector<std::pair<int, int>> covers;
    for (const auto& p : all) {
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) {
                Partition q;
                for (size_t k = 0; k < p.size(); ++k)
                    if (k != i && k != j) q.push_back(p[k]);
                std::vector<int> merged = p[i];
                merged.insert(merged.end(), p[j].begin(), p[j].end());
                q.push_back(merged);
                q = normalize(q);
                covers.emplace_back(index.at(p), index.at(q));
            }
    }
    std::vector<std::string> labels;
    for (const auto& p : all) {
        std::string s;
        for (const auto& b : p) {
            s += "|";
            for (int v : b) s += std::to_string(v);
        }
        labels.push_back(s);
    }
    return FinitePoset(labels, covers);
}

// Graded fails: one cover jumps two rank levels.
inline FinitePoset ungraded_example() {
    return FinitePoset({"0", "x", "y", "z", "t"}, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}});
}

// find element by label
inline int elem(const FinitePoset& p, const std::string& label) {
    for (int i = 0; i < p.size(); ++i)
        if (p.label(i) == label) return i;
    throw std::runtime_error("fixture label not found: " + label);
}

}  // namespace fixtures
