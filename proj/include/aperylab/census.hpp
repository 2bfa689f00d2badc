#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aperylab/rational.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

/// Largest genus the fixed-width enumeration nodes can represent.
inline constexpr int kMaxCensusGenus = 40;

/// A vertex of the genus tree.
///
/// For every n below kSlots, pairs[n] counts the unordered decompositions
/// n = x + y with x <= y and both in S (0 included). So n is in S iff
/// pairs[n] > 0, and n is an atom iff pairs[n] == 1. Indices up to
/// 3 * kMaxCensusGenus + 1 stay exact for every node of genus at most
/// kMaxCensusGenus.
class EnumerationNode {
public:
    static constexpr int kSlots = 128;
    static_assert(kSlots > 3 * kMaxCensusGenus + 1);

    /// Z>=0, the root of the tree.
    static EnumerationNode root();

    bool contains(int n) const { return n >= kSlots || (n >= 0 && pairs_[static_cast<std::size_t>(n)] > 0); }
    int frobenius() const { return frobenius_; }
    int genus() const { return genus_; }
    int multiplicity() const { return multiplicity_; }

    /// Minimal generators, ascending.
    std::vector<Int> atoms() const;
    /// Minimal generators exceeding the Frobenius number; removing any one
    /// of them gives a child.
    std::vector<int> effective_generators() const;
    /// The semigroup with `generator` removed. `generator` must be effective.
    EnumerationNode child(int generator) const;

    std::vector<Int> gaps() const;
    /// Apery set with respect to the multiplicity, indexed by residue.
    std::vector<Int> apery_by_residue() const;
    /// AHF test on the node's own data, without building a NumericalSemigroup.
    bool is_ahf() const;

    NumericalSemigroup to_semigroup() const;

private:
    std::array<std::uint8_t, kSlots> pairs_{};
    int frobenius_ = -1;
    int genus_ = 0;
    int multiplicity_ = 1;
};

struct EnumerationOptions {
    /// Worker threads for the subtree phase; 1 runs everything on the caller.
    unsigned threads = 1;
    /// Nodes of this genus become independent subtree tasks.
    int split_genus = 6;
    /// Polled during the subtree phase; setting it stops the walk early.
    const std::atomic<bool>* cancel = nullptr;
};

/// Calls `visitor` once per numerical semigroup of genus <= max_genus.
/// With threads > 1 the visitor runs concurrently and must be thread-safe.
/// Returns false if cancelled.
bool enumerate_by_genus(int max_genus, const std::function<void(const NumericalSemigroup&)>& visitor,
                        const EnumerationOptions& options = {});

/// Node-level variant used by the census hot loop.
bool enumerate_nodes(int max_genus, const std::function<void(const EnumerationNode&)>& visitor,
                     const EnumerationOptions& options = {});

struct CensusCell {
    std::uint64_t count = 0;
    std::uint64_t ahf = 0;
    friend bool operator==(const CensusCell&, const CensusCell&) = default;
};

/// Counts n_{m,g} and h_{m,g} for every genus g <= max_genus.
class CensusTable {
public:
    explicit CensusTable(int max_genus = 0);

    int max_genus() const { return max_genus_; }
    const CensusCell& cell(int genus, int multiplicity) const;
    CensusCell& cell(int genus, int multiplicity);

    std::uint64_t total(int genus) const;
    std::uint64_t ahf_total(int genus) const;
    std::uint64_t cumulative_total() const;
    std::uint64_t cumulative_ahf() const;

    void merge(const CensusTable& other);

    /// False when the run was interrupted; rows with genus <= complete_through
    /// are then still exact.
    bool complete = true;
    int complete_through = 0;

    friend bool operator==(const CensusTable& a, const CensusTable& b) {
        return a.max_genus_ == b.max_genus_ && a.cells_ == b.cells_;
    }

private:
    int max_genus_;
    // cells_[g][m] for 1 <= m <= g + 1
    std::vector<std::vector<CensusCell>> cells_;
};

CensusTable census(int max_genus, const EnumerationOptions& options = {});

/// Per-genus and per-(m, g) ratios h/n, as text.
std::string ratio_report(const CensusTable& table, int multiplicity_filter = 0);

/// "genus,multiplicity,count,ahf_count" rows for the nonzero cells.
std::string census_csv(const CensusTable& table, int multiplicity_filter = 0);

/// Every semigroup of genus g (g <= 8) as its minimal generators, sorted.
/// Searches gap sets G of size g inside {1, ..., 2g} whose complement is
/// closed under addition, independently of the genus tree.
std::vector<std::vector<Int>> enumerate_small_oracle(int genus);

}  // namespace aperylab

namespace aperylab {

/// Totals for genus <= 25 as published alongside the AHF asymptotics.
inline constexpr int kReferenceGenus = 25;
inline constexpr std::uint64_t kReferenceTotal = 1179593;
inline constexpr std::uint64_t kReferenceAhf = 1032971;

struct ReferenceComparison {
    std::uint64_t expected_total = kReferenceTotal;
    std::uint64_t expected_ahf = kReferenceAhf;
    std::uint64_t computed_total = 0;
    std::uint64_t computed_ahf = 0;
    /// True when either computed total differs from the reference.
    bool discrepancy = false;
    std::string str() const;
};

/// Compares cumulative counts through genus 25 with the reference figures.
/// Requires table.max_genus() >= 25.
ReferenceComparison compare_with_reference(const CensusTable& table);

}  // namespace aperylab
