#include "aperylab/factorization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace aperylab {

namespace {

void require_element(const NumericalSemigroup& s, Int n) {
    if (!s.contains(n)) {
        throw not_an_element(n);
    }
}

// Min/max factorization lengths for every k in [0, upto]; -1 marks gaps.
struct MinMaxTable {
    std::vector<Int> shortest;
    std::vector<Int> longest;

    MinMaxTable(const NumericalSemigroup& s, Int upto)
        : shortest(static_cast<std::size_t>(upto) + 1, -1), longest(static_cast<std::size_t>(upto) + 1, -1) {
        shortest[0] = longest[0] = 0;
        const auto& atoms = s.generators();
        for (Int k = 1; k <= upto; ++k) {
            if (!s.contains(k)) continue;
            Int lo = std::numeric_limits<Int>::max();
            Int hi = -1;
            for (Int a : atoms) {
                if (a > k) break;
                const auto rest = static_cast<std::size_t>(k - a);
                if (shortest[rest] < 0) continue;
                lo = std::min(lo, shortest[rest] + 1);
                hi = std::max(hi, longest[rest] + 1);
            }
            shortest[static_cast<std::size_t>(k)] = lo;
            longest[static_cast<std::size_t>(k)] = hi;
        }
    }

    Rational elasticity(Int k) const {
        const auto i = static_cast<std::size_t>(k);
        if (k == 0) return Rational(1);
        return Rational(longest[i], shortest[i]);
    }
};

// Achievable lengths for every k in [0, upto], one bitset per k.
class LengthSetTable {
public:
    LengthSetTable(const NumericalSemigroup& s, Int upto)
        : words_(static_cast<std::size_t>(upto / s.multiplicity()) / 64 + 1),
          bits_((static_cast<std::size_t>(upto) + 1) * words_, 0) {
        bits_[0] = 1;  // 0 has the empty factorization
        const auto& atoms = s.generators();
        for (Int k = 1; k <= upto; ++k) {
            if (!s.contains(k)) continue;
            std::uint64_t* dst = row(k);
            for (Int a : atoms) {
                if (a > k) break;
                if (!s.contains(k - a)) continue;
                const std::uint64_t* src = row(k - a);
                // dst |= src << 1
                std::uint64_t carry = 0;
                for (std::size_t w = 0; w < words_; ++w) {
                    dst[w] |= (src[w] << 1) | carry;
                    carry = src[w] >> 63;
                }
            }
        }
    }

    std::vector<Int> lengths(Int k) const {
        std::vector<Int> out;
        const std::uint64_t* r = row(k);
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
                out.push_back(static_cast<Int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
            }
        }
        return out;
    }

private:
    std::uint64_t* row(Int k) { return bits_.data() + static_cast<std::size_t>(k) * words_; }
    const std::uint64_t* row(Int k) const { return bits_.data() + static_cast<std::size_t>(k) * words_; }

    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

Int max_apery(const NumericalSemigroup& s) { return s.apery_set().back(); }

}  // namespace

Int FactorizationVector::length() const {
    return std::accumulate(exponents.begin(), exponents.end(), Int{0});
}

std::vector<FactorizationVector> factorizations(const NumericalSemigroup& s, Int n, std::size_t cap) {
    require_element(s, n);
    const auto& atoms = s.generators();
    const std::size_t k = atoms.size();
    std::vector<FactorizationVector> out;
    std::vector<Int> current(k, 0);

    // Assign exponents from the largest atom down; the smallest atom must
    // divide whatever remains.
    auto recurse = [&](auto&& self, std::size_t idx, Int remaining) -> void {
        const Int atom = atoms[idx];
        if (idx == 0) {
            if (remaining % atom != 0) return;
            current[0] = remaining / atom;
            if (out.size() >= cap) {
                throw std::length_error("more than " + std::to_string(cap) + " factorizations of " +
                                        std::to_string(n));
            }
            out.push_back(FactorizationVector{current});
            current[0] = 0;
            return;
        }
        for (Int c = remaining / atom; c >= 0; --c) {
            current[idx] = c;
            self(self, idx - 1, remaining - c * atom);
        }
        current[idx] = 0;
    };
    recurse(recurse, k - 1, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> length_set(const NumericalSemigroup& s, Int n) {
    require_element(s, n);
    return LengthSetTable(s, n).lengths(n);
}

LengthBounds length_bounds(const NumericalSemigroup& s, Int n) {
    require_element(s, n);
    const MinMaxTable table(s, n);
    return {table.shortest.back(), table.longest.back()};
}

Rational elasticity(const NumericalSemigroup& s, Int n) {
    require_element(s, n);
    return MinMaxTable(s, n).elasticity(n);
}

std::vector<Rational> elasticity_set(const NumericalSemigroup& s, std::span<const Int> elements) {
    if (elements.empty()) return {};
    for (Int n : elements) require_element(s, n);
    const MinMaxTable table(s, *std::max_element(elements.begin(), elements.end()));
    std::vector<Rational> out;
    out.reserve(elements.size());
    for (Int n : elements) out.push_back(table.elasticity(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> apery_elasticity_set(const NumericalSemigroup& s) {
    return elasticity_set(s, s.apery_set());
}

std::vector<AperyElementReport> apery_elasticity_table(const NumericalSemigroup& s) {
    const LengthSetTable table(s, max_apery(s));
    std::vector<AperyElementReport> out;
    for (Int w : s.apery_set()) {
        AperyElementReport row;
        row.element = w;
        row.lengths = table.lengths(w);
        row.elasticity = w == 0 ? Rational(1) : Rational(row.lengths.back(), row.lengths.front());
        out.push_back(std::move(row));
    }
    return out;
}

Rational max_apery_elasticity(const NumericalSemigroup& s) { return apery_elasticity_set(s).back(); }

bool is_ahf_from_apery(std::span<const Int> apery_by_residue, std::span<const Int> atoms) {
    const std::size_t m = apery_by_residue.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return apery_by_residue[a] < apery_by_residue[b]; });

    std::vector<Int> shortest(m, 0);
    std::vector<Int> longest(m, 0);
    const Int modulus = static_cast<Int>(m);
    for (std::size_t r : order) {
        const Int w = apery_by_residue[r];
        if (w == 0) continue;
        Int lo = std::numeric_limits<Int>::max();
        Int hi = -1;
        for (Int a : atoms) {
            if (a > w) break;
            const Int rest = w - a;
            const auto slot = static_cast<std::size_t>(rest % modulus);
            if (apery_by_residue[slot] != rest) continue;
            lo = std::min(lo, shortest[slot] + 1);
            hi = std::max(hi, longest[slot] + 1);
        }
        if (lo != hi) return false;
        shortest[r] = lo;
        longest[r] = hi;
    }
    return true;
}

bool is_ahf(const NumericalSemigroup& s) {
    const auto& gens = s.generators();
    return is_ahf_from_apery(s.apery_by_residue(), std::span<const Int>(gens).subspan(1));
}

Rational ahff(const NumericalSemigroup& s) {
    const MinMaxTable table(s, max_apery(s));
    Int half_factorial = 0;
    for (Int w : s.apery_set()) {
        const auto i = static_cast<std::size_t>(w);
        half_factorial += table.shortest[i] == table.longest[i] ? 1 : 0;
    }
    return Rational(half_factorial, s.multiplicity());
}

Rational mae(const NumericalSemigroup& s) {
    const MinMaxTable table(s, max_apery(s));
    Rational sum(0);
    for (Int w : s.apery_set()) sum += table.elasticity(w);
    return sum / Rational(s.multiplicity());
}

}  // namespace aperylab
