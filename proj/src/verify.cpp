#include "aperylab/verify.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "aperylab/census.hpp"
#include "aperylab/factorization.hpp"
#include "aperylab/families.hpp"
#include "aperylab/poset.hpp"

namespace aperylab {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string VerificationReport::str(bool failures_only) const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& c : checks) {
        if (failures_only && c.pass) continue;
        os << (c.pass ? "  PASS " : "  FAIL ") << c.description;
        if (!c.pass || !c.expected.empty()) {
            os << "\n       expected: " << c.expected << "\n       computed: " << c.computed;
        }
        os << "\n";
    }
    os << (passed() ? "all " + std::to_string(checks.size()) + " checks passed"
                    : std::to_string(failures()) + " of " + std::to_string(checks.size()) + " checks failed")
       << "\n";
    return os.str();
}

SweepRange SweepRange::parse(const std::string& text, Int default_lo) {
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const Int hi = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {default_lo, hi};
        }
        const std::string lo_text = text.substr(0, dots);
        const std::string hi_text = text.substr(dots + 2);
        std::size_t used_hi = 0;
        SweepRange r{std::stoll(lo_text, &used), std::stoll(hi_text, &used_hi)};
        if (used != lo_text.size() || used_hi != hi_text.size() || r.lo > r.hi) throw std::invalid_argument(text);
        return r;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed sweep range \"" + text + "\" (expected LO..HI or HI)");
    }
}

namespace {

void add_family(VerificationReport& report, const FamilyInstance& inst) {
    std::string label = inst.family + " " + inst.semigroup.str();
    for (const auto& r : verify(inst)) {
        report.checks.push_back({label + ": " + r.invariant, r.expected, r.computed, r.holds});
    }
}

// Runs `check` on every semigroup with genus in the range; records one check
// per failing semigroup plus a summary line.
template <class Fn>
void over_genus_range(VerificationReport& report, SweepRange range, unsigned threads, const std::string& what,
                      Fn&& check) {
    std::mutex mutex;
    std::size_t examined = 0;
    std::vector<Check> failures;
    enumerate_by_genus(
        static_cast<int>(range.hi),
        [&](const NumericalSemigroup& s) {
            if (s.genus() < range.lo) return;
            std::optional<Check> failure = check(s);
            std::lock_guard lock(mutex);
            ++examined;
            if (failure) failures.push_back(std::move(*failure));
        },
        {.threads = threads});
    std::sort(failures.begin(), failures.end(),
              [](const Check& a, const Check& b) { return a.description < b.description; });
    report.checks.push_back({what + " over " + std::to_string(examined) + " semigroups of genus " +
                                 std::to_string(range.lo) + ".." + std::to_string(range.hi),
                             "0 counterexamples", std::to_string(failures.size()) + " counterexamples",
                             failures.empty()});
    for (auto& f : failures) report.checks.push_back(std::move(f));
}

VerificationReport graded_iff_ahf(SweepRange range, unsigned threads) {
    VerificationReport report{"graded Apery poset <=> AHF", {}};
    over_genus_range(report, range, threads, "is_graded == is_ahf",
                     [](const NumericalSemigroup& s) -> std::optional<Check> {
                         const bool graded = is_graded(build_poset(s));
                         const bool ahf = is_ahf(s);
                         if (graded == ahf) return std::nullopt;
                         return Check{s.str(), std::string("graded=") + (ahf ? "true" : "false"),
                                      std::string("graded=") + (graded ? "true" : "false"), false};
                     });
    return report;
}

VerificationReport extreme_embedding_dimension(SweepRange range, unsigned threads) {
    VerificationReport report{"e(S) = 2 or e(S) >= m(S) - 1 implies AHF; e(S) = m(S) - 2 gives R(Ap) in {{1}, {1, 3/2}}",
                              {}};
    over_genus_range(report, range, threads, "extreme embedding dimension",
                     [](const NumericalSemigroup& s) -> std::optional<Check> {
                         const auto e = static_cast<Int>(s.embedding_dimension());
                         const Int m = s.multiplicity();
                         if (e == 2 || e >= m - 1) {
                             if (!is_ahf(s)) return Check{s.str(), "AHF", "not AHF", false};
                         } else if (e == m - 2) {
                             const auto r = apery_elasticity_set(s);
                             const bool ok = r == std::vector<Rational>{1} ||
                                             r == std::vector<Rational>{Rational(1), Rational(3, 2)};
                             if (!ok) return Check{s.str(), "{1} or {1, 3/2}", format_set(r), false};
                         }
                         return std::nullopt;
                     });
    return report;
}

VerificationReport master_sweep(SweepRange range) {
    VerificationReport report{"R(Ap(S)) = {1, a/b} for <a+b, pa, pb>", {}};
    for (Int a = std::max<Int>(range.lo, 3); a <= range.hi; ++a) {
        for (Int b = 2; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (Int p : master_example_primes(a, b, 3)) add_family(report, master_example(a, b, p));
        }
    }
    return report;
}

VerificationReport small_ahff_sweep(SweepRange range) {
    VerificationReport report{"AHFF = 6/(5n) for <5n, 2p, 3p>", {}};
    for (Int n = std::max<Int>(range.lo, 2); n <= range.hi; ++n) {
        for (Int p : small_ahff_primes(n, 2)) add_family(report, small_ahff(n, p));
    }
    return report;
}

VerificationReport grid_sweep(SweepRange range) {
    VerificationReport report{"<n^2, n^2+n, 2n^2+1> is AHF with width >= n", {}};
    for (Int n = std::max<Int>(range.lo, 2); n <= range.hi; ++n) add_family(report, ahf_grid(n));
    return report;
}

VerificationReport large_mae_sweep(SweepRange range) {
    VerificationReport report{"MAE of <4q+8, 2p, qp> grows with q", {}};
    std::optional<Rational> previous;
    std::string previous_label;
    for (Int q = std::max<Int>(range.lo, 3); q <= range.hi; ++q) {
        if (q % 2 == 0 || !is_prime(q)) continue;
        const FamilyInstance inst = large_mae(q);
        add_family(report, inst);
        const Rational value = mae(inst.semigroup);
        if (previous) {
            report.checks.push_back({"MAE" + inst.semigroup.str() + " > MAE" + previous_label, "> " + previous->str(),
                                     value.str(), value > *previous});
        }
        previous = value;
        previous_label = inst.semigroup.str();
    }
    return report;
}

std::vector<std::vector<Int>> all_subsets(Int lo, Int hi) {
    std::vector<std::vector<Int>> out;
    if (hi < lo) return {{}};
    const Int k = hi - lo + 1;
    for (Int mask = 0; mask < (Int{1} << k); ++mask) {
        std::vector<Int> subset;
        for (Int i = 0; i < k; ++i) {
            if (mask >> i & 1) subset.push_back(lo + i);
        }
        out.push_back(std::move(subset));
    }
    return out;
}

VerificationReport fibonacci_floor(SweepRange range, unsigned threads) {
    VerificationReport report{"Apery-choice constructions and h_g >= f_{g+1}", {}};
    for (Int m = 2; m <= 8; ++m) {
        for (const auto& subset : all_subsets(1, m - 1)) add_family(report, apery_choice(m, subset));
    }
    for (Int m = 6; m <= 9; ++m) {
        for (const auto& subset : all_subsets(5, m - 2)) add_family(report, non_ahf_choice(m, subset));
    }
    for (Int g = 1; g <= std::max<Int>(20, range.hi); ++g) {
        const Int sum = fibonacci_binomial_sum(g);
        const Int fib = fibonacci(g + 1);
        report.checks.push_back({"sum_m C(m-1, g-(m-1)) = f_{g+1} at g = " + std::to_string(g), std::to_string(fib),
                                 std::to_string(sum), sum == fib});
    }
    const CensusTable table = census(static_cast<int>(range.hi), {.threads = threads});
    for (Int g = range.lo; g <= range.hi; ++g) {
        const auto h = static_cast<Int>(table.ahf_total(static_cast<int>(g)));
        const Int fib = fibonacci(g + 1);
        report.checks.push_back(
            {"h_" + std::to_string(g) + " >= f_" + std::to_string(g + 1), ">= " + std::to_string(fib),
             std::to_string(h), h >= fib});
    }
    return report;
}

}  // namespace

VerificationReport verify_theorem(int theorem, std::optional<SweepRange> sweep, unsigned threads) {
    switch (theorem) {
        case 1: return graded_iff_ahf(sweep.value_or(SweepRange{0, 15}), threads);
        case 2: return extreme_embedding_dimension(sweep.value_or(SweepRange{0, 15}), threads);
        case 3: return master_sweep(sweep.value_or(SweepRange{3, 8}));
        case 5: return small_ahff_sweep(sweep.value_or(SweepRange{2, 6}));
        case 6: return grid_sweep(sweep.value_or(SweepRange{2, 12}));
        case 8: return large_mae_sweep(sweep.value_or(SweepRange{3, 13}));
        case 10: return fibonacci_floor(sweep.value_or(SweepRange{0, 15}), threads);
        default:
            throw std::invalid_argument("no property suite for theorem " + std::to_string(theorem) +
                                        " (choose 1, 2, 3, 5, 6, 8 or 10)");
    }
}

}  // namespace aperylab
