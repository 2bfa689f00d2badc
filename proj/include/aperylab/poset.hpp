#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aperylab/semigroup.hpp"

namespace aperylab {

/// Ap(S) ordered by x <= y iff y - x is in S.
///
/// Elements are kept ascending, so index order is a linear extension and
/// index 0 is the minimum 0. Cover edges are the pairs whose difference is
/// an atom.
class AperyPoset {
public:
    explicit AperyPoset(const NumericalSemigroup& s);

    const std::vector<Int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// elements()[i] <= elements()[j] in the poset.
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }

    /// Cover edges (i, j) by element index, ascending.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    /// Shortest and longest cover-path length from 0 to each element.
    const std::vector<Int>& shortest_depth() const { return shortest_depth_; }
    const std::vector<Int>& longest_depth() const { return longest_depth_; }

private:
    std::vector<Int> elements_;
    std::vector<unsigned char> leq_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<Int> shortest_depth_;
    std::vector<Int> longest_depth_;
};

inline AperyPoset build_poset(const NumericalSemigroup& s) { return AperyPoset(s); }

/// Every maximal chain from 0 to each element has the same length.
/// Uses the cover graph only.
bool is_graded(const AperyPoset& p);

/// Size of a largest antichain, via a minimum chain cover
/// (Hopcroft-Karp matching on the comparability graph).
std::size_t width(const AperyPoset& p);

/// Elements covering 0, i.e. the atoms other than the multiplicity; these
/// always form an antichain.
std::vector<Int> minimal_nonzero_elements(const AperyPoset& p);

/// Transitive reduction computed from leq() alone, ascending.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const AperyPoset& p);

/// Graphviz digraph with one node per element, one edge per cover, and
/// nodes of equal longest-path depth placed on the same rank.
std::string to_dot(const AperyPoset& p, const std::string& name = "apery");

}  // namespace aperylab
