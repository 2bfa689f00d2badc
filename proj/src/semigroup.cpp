#include "aperylab/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace aperylab {

namespace {

// Sieve sizes beyond this are refused rather than allocated.
constexpr Int kMaxSieve = Int{1} << 30;

}  // namespace

std::vector<Int> apery_by_residue(std::span<const Int> gens) {
    if (gens.empty()) {
        throw std::invalid_argument("empty generator list");
    }
    Int g = 0;
    for (Int a : gens) {
        if (a <= 0) {
            throw std::invalid_argument("generators must be positive, got " + std::to_string(a));
        }
        g = std::gcd(g, a);
    }
    if (g != 1) {
        throw not_numerical_semigroup();
    }
    const Int m = *std::min_element(gens.begin(), gens.end());
    if (m > kMaxSieve) {
        throw std::length_error("multiplicity too large");
    }

    // Dijkstra over Z/m: dist[r] is the least semigroup element in class r.
    constexpr Int kUnreached = std::numeric_limits<Int>::max();
    std::vector<Int> dist(static_cast<std::size_t>(m), kUnreached);
    using Entry = std::pair<Int, Int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        const auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (Int a : gens) {
            const Int next = checked_add(d, a);
            const auto slot = static_cast<std::size_t>((r + a) % m);
            if (next < dist[slot]) {
                dist[slot] = next;
                queue.emplace(next, static_cast<Int>(slot));
            }
        }
    }
    return dist;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    NumericalSemigroup s;
    s.apery_by_residue_ = aperylab::apery_by_residue(sorted);
    const Int m = sorted.front();

    const Int max_apery = *std::max_element(s.apery_by_residue_.begin(), s.apery_by_residue_.end());
    s.frobenius_ = checked_sub(max_apery, m);
    s.sieve_bound_ = checked_add(s.frobenius_, checked_mul(2, m));
    if (s.sieve_bound_ > kMaxSieve) {
        throw std::length_error("membership sieve for " + std::to_string(s.sieve_bound_) + " exceeds capacity");
    }
    s.membership_.assign(static_cast<std::size_t>(s.sieve_bound_) + 1, 0);
    for (Int n = 0; n <= s.sieve_bound_; ++n) {
        s.membership_[static_cast<std::size_t>(n)] = n >= s.apery_by_residue_[static_cast<std::size_t>(n % m)];
    }
    s.genus_ = 0;
    for (Int n = 1; n <= s.frobenius_; ++n) {
        s.genus_ += s.membership_[static_cast<std::size_t>(n)] ? 0 : 1;
    }

    // A generator is redundant iff removing some smaller generator leaves an element.
    for (Int g : sorted) {
        const bool redundant = std::any_of(sorted.begin(), sorted.end(),
                                           [&](Int a) { return a < g && s.contains(g - a); });
        if (!redundant) {
            s.generators_.push_back(g);
        }
    }

    s.apery_sorted_ = s.apery_by_residue_;
    std::sort(s.apery_sorted_.begin(), s.apery_sorted_.end());
    return s;
}

NumericalSemigroup NumericalSemigroup::from_apery_candidate(Int m, std::span<const Int> values) {
    if (m < 1) {
        throw std::invalid_argument("multiplicity must be positive");
    }
    if (static_cast<Int>(values.size()) != m - 1) {
        throw std::invalid_argument("expected " + std::to_string(m - 1) + " Apery values, got " +
                                    std::to_string(values.size()));
    }
    for (Int i = 1; i < m; ++i) {
        const Int v = values[static_cast<std::size_t>(i - 1)];
        if (v <= 0 || v % m != i) {
            throw std::invalid_argument("Apery value " + std::to_string(v) + " is not congruent to " +
                                        std::to_string(i) + " mod " + std::to_string(m));
        }
    }
    auto value = [&](Int i) { return i == 0 ? Int{0} : values[static_cast<std::size_t>(i - 1)]; };
    for (Int i = 1; i < m; ++i) {
        for (Int j = i; j < m; ++j) {
            if (checked_add(value(i), value(j)) < value((i + j) % m)) {
                throw invalid_apery_set("not a valid Apery set: closure fails at (i, j) = (" + std::to_string(i) +
                                        ", " + std::to_string(j) + ")");
            }
        }
    }

    std::vector<Int> gens(values.begin(), values.end());
    gens.push_back(m);
    NumericalSemigroup s = from_generators(gens);

    std::vector<Int> expected(values.begin(), values.end());
    expected.push_back(0);
    std::sort(expected.begin(), expected.end());
    if (s.multiplicity() != m || s.apery_set() != expected) {
        throw invalid_apery_set("not a valid Apery set: the generated semigroup " + s.str() +
                                " has a different Apery set");
    }
    return s;
}

bool NumericalSemigroup::is_atom(Int n) const {
    return std::binary_search(generators_.begin(), generators_.end(), n);
}

std::string NumericalSemigroup::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(generators_[i]);
    }
    return out + ">";
}

std::vector<Int> parse_generators(std::string_view text) {
    std::vector<Int> gens;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        Int value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || value <= 0) {
            throw std::invalid_argument("malformed generator \"" + std::string(text.substr(pos, end - pos)) + "\"");
        }
        gens.push_back(value);
        pos = end;
    }
    if (gens.empty()) {
        throw std::invalid_argument("no generators given");
    }
    return gens;
}

}  // namespace aperylab
