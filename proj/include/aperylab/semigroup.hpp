#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aperylab/checked.hpp"

namespace aperylab {

/// The generators do not have gcd 1, so the complement in Z>=0 is infinite.
class not_numerical_semigroup : public std::invalid_argument {
public:
    not_numerical_semigroup() : std::invalid_argument("not a numerical semigroup (infinite complement)") {}
};

/// A candidate Apery set failed validation.
class invalid_apery_set : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical semigroup, held by its minimal generating set.
///
/// Construction computes the Apery set with respect to the multiplicity
/// (one shortest-path pass over the residues mod m), then a membership sieve
/// over [0, frobenius + 2m]. Instances are immutable and safe to share
/// across threads.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `gens`. Duplicates and generators
    /// expressible through the others are dropped.
    static NumericalSemigroup from_generators(std::span<const Int> gens);
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
        return from_generators(std::span<const Int>(gens.begin(), gens.size()));
    }

    /// Builds the semigroup whose Apery set with respect to `m` is
    /// {0} U values, where values[i - 1] is the representative of residue i.
    static NumericalSemigroup from_apery_candidate(Int m, std::span<const Int> values);

    /// Minimal generators (the atoms), ascending.
    const std::vector<Int>& generators() const { return generators_; }
    Int multiplicity() const { return generators_.front(); }
    std::size_t embedding_dimension() const { return generators_.size(); }
    /// Largest gap, or -1 for Z>=0.
    Int frobenius() const { return frobenius_; }
    Int genus() const { return genus_; }

    /// Apery set with respect to the multiplicity, ascending.
    const std::vector<Int>& apery_set() const { return apery_sorted_; }
    /// The least element of the semigroup congruent to `residue` mod m.
    Int apery_element(Int residue) const { return apery_by_residue_[static_cast<std::size_t>(residue)]; }
    const std::vector<Int>& apery_by_residue() const { return apery_by_residue_; }

    bool contains(Int n) const {
        if (n < 0) return false;
        if (n > sieve_bound_) return n > frobenius_;
        return membership_[static_cast<std::size_t>(n)] != 0;
    }
    bool is_atom(Int n) const;

    /// Largest index covered by the membership sieve.
    Int sieve_bound() const { return sieve_bound_; }

    /// "<5,6,9>"
    std::string str() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;
    std::vector<Int> apery_by_residue_;
    std::vector<Int> apery_sorted_;
    std::vector<unsigned char> membership_;
    Int sieve_bound_ = 0;
    Int frobenius_ = -1;
    Int genus_ = 0;
};

/// Parses "5,6,9" or "5 6 9" into positive integers.
/// Throws std::invalid_argument on anything else.
std::vector<Int> parse_generators(std::string_view text);

/// Apery set of the semigroup generated by `gens` relative to their minimum,
/// indexed by residue. Throws not_numerical_semigroup when gcd != 1.
std::vector<Int> apery_by_residue(std::span<const Int> gens);

}  // namespace aperylab
