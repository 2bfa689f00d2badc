#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "aperylab/rational.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

class not_an_element : public std::invalid_argument {
public:
    explicit not_an_element(Int n) : std::invalid_argument("not an element: " + std::to_string(n)) {}
};

/// Exponents over the atoms of a semigroup, parallel to generators() ascending.
struct FactorizationVector {
    std::vector<Int> exponents;

    Int length() const;
    friend auto operator<=>(const FactorizationVector&, const FactorizationVector&) = default;
};

struct LengthBounds {
    Int min = 0;
    Int max = 0;
    friend bool operator==(const LengthBounds&, const LengthBounds&) = default;
};

/// Every factorization of n, by exhaustive search over atoms in descending
/// order. Intended as a reference oracle; throws std::length_error once
/// more than `cap` factorizations have been produced.
std::vector<FactorizationVector> factorizations(const NumericalSemigroup& s, Int n,
                                                std::size_t cap = 1'000'000);

/// The set of factorization lengths of n, ascending.
std::vector<Int> length_set(const NumericalSemigroup& s, Int n);

/// Shortest and longest factorization lengths of n.
LengthBounds length_bounds(const NumericalSemigroup& s, Int n);

/// max length / min length; 1 for the unit 0.
Rational elasticity(const NumericalSemigroup& s, Int n);

/// Distinct elasticities of the given elements, ascending.
std::vector<Rational> elasticity_set(const NumericalSemigroup& s, std::span<const Int> elements);
std::vector<Rational> apery_elasticity_set(const NumericalSemigroup& s);

struct AperyElementReport {
    Int element = 0;
    std::vector<Int> lengths;
    Rational elasticity;
};

/// Per-element length sets and elasticities over Ap(S), ascending by element.
std::vector<AperyElementReport> apery_elasticity_table(const NumericalSemigroup& s);

/// The largest elasticity attained on Ap(S).
Rational max_apery_elasticity(const NumericalSemigroup& s);

/// True iff every element of Ap(S) is half-factorial.
bool is_ahf(const NumericalSemigroup& s);

/// AHF test from raw data: the Apery set indexed by residue mod
/// apery.size() and the atoms other than the multiplicity, ascending.
/// Factorizations of Apery elements never use the multiplicity, and every
/// partial sum of such a factorization is again an Apery element, so the
/// min/max length recursion runs over the m Apery elements only.
bool is_ahf_from_apery(std::span<const Int> apery_by_residue, std::span<const Int> atoms);

/// Fraction of Ap(S) that is half-factorial.
Rational ahff(const NumericalSemigroup& s);

/// Mean elasticity over Ap(S).
Rational mae(const NumericalSemigroup& s);

}  // namespace aperylab
