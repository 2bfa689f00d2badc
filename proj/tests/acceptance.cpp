// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "aperylab/census.hpp"
#include "aperylab/factorization.hpp"
#include "aperylab/families.hpp"
#include "aperylab/poset.hpp"

using namespace aperylab;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::ostringstream log;
    bool ok = true;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            if (ok || log.tellp() < 4000) log << "    failed: " << what << "\n";
            ok = false;
        }
    }
};

int failures = 0;

void run(const std::string& id, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %s %s (%.3f s)\n", c.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs);
    std::cout << c.log.str() << std::flush;
    if (!c.ok) ++failures;
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::vector<std::vector<Int>> subsets(Int lo, Int hi) {
    std::vector<std::vector<Int>> out;
    const Int k = std::max<Int>(hi - lo + 1, 0);
    for (Int mask = 0; mask < (Int{1} << k); ++mask) {
        std::vector<Int> s;
        for (Int i = 0; i < k; ++i) {
            if (mask >> i & 1) s.push_back(lo + i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool contains_value(const std::vector<Int>& xs, Int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

int main() {
    run("AC1", "worked example <5,6,9>", [](Criterion& c) {
        const auto start = Clock::now();
        const auto s = NumericalSemigroup::from_generators({5, 6, 9});
        const auto apery = s.apery_set();
        const auto rho18 = elasticity(s, 18);
        const auto r = apery_elasticity_set(s);
        const auto fraction = ahff(s);
        const auto mean = mae(s);
        const bool ahf = is_ahf(s);
        const bool graded = is_graded(build_poset(s));
        const double elapsed = seconds_since(start);

        c.expect(apery == std::vector<Int>{0, 6, 9, 12, 18}, "Ap(S) = {0,6,9,12,18}");
        c.expect(rho18 == Rational(3, 2), "rho(18) = 3/2");
        c.expect(r == std::vector<Rational>{Rational(1), Rational(3, 2)}, "R(Ap) = {1, 3/2}");
        c.expect(fraction == Rational(4, 5), "AHFF = 4/5");
        c.expect(mean == Rational(11, 10), "MAE = 11/10");
        c.expect(!ahf, "not AHF");
        c.expect(!graded, "poset not graded");
        c.expect(elapsed < 1e-3, "runtime " + std::to_string(elapsed) + " s < 1 ms");
    });

    run("AC2", "graded Apery poset <=> AHF for every semigroup of genus <= 15", [](Criterion& c) {
        const auto start = Clock::now();
        std::size_t count = 0;
        enumerate_by_genus(15, [&](const NumericalSemigroup& s) {
            ++count;
            c.expect(is_graded(build_poset(s)) == is_ahf(s), s.str());
        });
        const double elapsed = seconds_since(start);
        c.log << "    " << count << " semigroups\n";
        c.expect(count > 1000, "several thousand semigroups enumerated");
        c.expect(elapsed < 30, "runtime " + std::to_string(elapsed) + " s < 30 s");
    });

    run("AC3", "e(S) = 2 or e(S) >= m(S)-1 implies AHF; e(S) = m(S)-2 gives R(Ap) in {{1},{1,3/2}}", [](Criterion& c) {
        std::size_t extreme = 0, near = 0;
        enumerate_by_genus(15, [&](const NumericalSemigroup& s) {
            const auto e = static_cast<Int>(s.embedding_dimension());
            const Int m = s.multiplicity();
            if (e == 2 || e >= m - 1) {
                ++extreme;
                c.expect(is_ahf(s), s.str() + " AHF");
            } else if (e == m - 2) {
                ++near;
                const auto r = apery_elasticity_set(s);
                c.expect(r == std::vector<Rational>{Rational(1)} ||
                             r == std::vector<Rational>{Rational(1), Rational(3, 2)},
                         s.str() + " R(Ap) = " + format_set(r));
            }
        });
        c.log << "    " << extreme << " extreme cases, " << near << " cases with e = m-2\n";
    });

    run("AC4", "<a+b, pa, pb>: R(Ap) = {1, a/b}, one element attains a/b, MAE = 1 + 1/b - 2/(a+b)", [](Criterion& c) {
        const auto start = Clock::now();
        std::size_t instances = 0;
        for (Int a = 3; a <= 8; ++a) {
            for (Int b = 2; b < a; ++b) {
                if (std::gcd(a, b) != 1) continue;
                for (Int p : master_example_primes(a, b, 3)) {
                    ++instances;
                    const auto s = master_example(a, b, p).semigroup;
                    const std::string label = s.str();
                    c.expect(s.generators() == std::vector<Int>{a + b, p * b, p * a}, label + " generators");
                    const Rational ratio(a, b);
                    c.expect(apery_elasticity_set(s) == std::vector<Rational>{Rational(1), ratio}, label + " R(Ap)");
                    std::vector<Int> attaining;
                    for (const auto& row : apery_elasticity_table(s)) {
                        if (row.elasticity == ratio) attaining.push_back(row.element);
                    }
                    c.expect(attaining == std::vector<Int>{p * a * b}, label + " unique element p*a*b");
                    c.expect(mae(s) == Rational(1) + Rational(1, b) - Rational(2, a + b), label + " MAE");
                }
            }
        }
        const double elapsed = seconds_since(start);
        c.log << "    " << instances << " instances\n";
        c.expect(elapsed < 10, "runtime " + std::to_string(elapsed) + " s < 10 s");
    });

    run("AC5", "<5n, 2p, 3p>: AHFF = 6/(5n), half-factorial elements {0,2p,3p,4p,5p,7p}", [](Criterion& c) {
        for (Int n = 2; n <= 6; ++n) {
            for (Int p : small_ahff_primes(n, 2)) {
                const auto s = small_ahff(n, p).semigroup;
                c.expect(s.generators() == std::vector<Int>{5 * n, 2 * p, 3 * p}, s.str() + " generators");
                c.expect(ahff(s) == Rational(6, 5 * n), s.str() + " AHFF");
                std::vector<Int> hf;
                for (const auto& row : apery_elasticity_table(s)) {
                    if (row.lengths.size() == 1) hf.push_back(row.element);
                }
                c.expect(hf == std::vector<Int>{0, 2 * p, 3 * p, 4 * p, 5 * p, 7 * p}, s.str() + " half-factorial set");
            }
        }
    });

    run("AC6", "<n^2, n^2+n, 2n^2+1>: AHF, grid Apery set, width >= n", [](Criterion& c) {
        for (Int n = 2; n <= 12; ++n) {
            const auto s = ahf_grid(n).semigroup;
            c.expect(is_ahf(s), s.str() + " AHF");
            std::vector<Int> grid;
            for (Int i = 0; i < n; ++i) {
                for (Int j = 0; j < n; ++j) grid.push_back(i * (n * n + n) + j * (2 * n * n + 1));
            }
            std::sort(grid.begin(), grid.end());
            c.expect(s.apery_set() == grid, s.str() + " Apery grid");
            const auto w = static_cast<Int>(width(build_poset(s)));
            c.expect(w >= n, s.str() + " width " + std::to_string(w) + " >= " + std::to_string(n));
        }
    });

    run("AC7", "<4q+8, 2p, qp>: rho((2q+2i)p) = (q+i)/(2+i), MAE lower bound, MAE increasing", [](Criterion& c) {
        const std::pair<Int, Int> params[] = {{3, 11}, {5, 17}, {7, 19}, {11, 29}, {13, 31}};
        std::optional<Rational> previous;
        for (const auto& [q, p] : params) {
            const auto s = large_mae(q, p).semigroup;
            const Int m = 4 * q + 8;
            c.expect(s.multiplicity() == m, s.str() + " multiplicity");
            for (Int i = 0; i < q; ++i) {
                c.expect(elasticity(s, (2 * q + 2 * i) * p) == Rational(q + i, 2 + i),
                         s.str() + " rho(" + std::to_string((2 * q + 2 * i) * p) + ")");
            }
            Rational harmonic(0);
            for (Int i = 0; i < q; ++i) harmonic += Rational(1, 2 + i);
            const Rational bound = Rational(3 * q + 8, m) + Rational(q, m) * harmonic;
            const Rational value = mae(s);
            c.log << "    " << s.str() << " MAE = " << value << " (" << value.decimal(4) << "), bound " << bound << "\n";
            c.expect(value >= bound, s.str() + " MAE bound");
            if (previous) c.expect(value > *previous, s.str() + " MAE increases");
            previous = value;
        }
    });

    run("AC8", "Apery-choice constructions, Fibonacci identity, h_g >= f_{g+1}", [](Criterion& c) {
        std::size_t built = 0;
        for (Int m = 2; m <= 8; ++m) {
            for (const auto& t : subsets(1, m - 1)) {
                const auto inst = apery_choice(m, t);
                ++built;
                c.expect(is_ahf(inst.semigroup), inst.semigroup.str() + " AHF");
                c.expect(inst.semigroup.multiplicity() == m, inst.semigroup.str() + " multiplicity");
            }
        }
        for (Int m = 6; m <= 9; ++m) {
            for (const auto& t : subsets(5, m - 2)) {
                const auto inst = non_ahf_choice(m, t);
                ++built;
                c.expect(!is_ahf(inst.semigroup), inst.semigroup.str() + " not AHF");
                const auto ls = length_set(inst.semigroup, 3 * m + 3);
                c.expect(contains_value(ls, 2) && contains_value(ls, 3), inst.semigroup.str() + " lengths of 3m+3");
            }
        }
        for (Int g = 1; g <= 20; ++g) {
            c.expect(fibonacci_binomial_sum(g) == fibonacci(g + 1), "binomial identity at g = " + std::to_string(g));
        }
        const auto table = census(15);
        for (int g = 0; g <= 15; ++g) {
            c.expect(table.ahf_total(g) >= static_cast<std::uint64_t>(fibonacci(g + 1)),
                     "h_" + std::to_string(g) + " >= f_" + std::to_string(g + 1));
        }
        c.log << "    " << built << " constructions\n";
    });

    run("AC9", "genus tree = subset-search oracle for g <= 8; census identical across 1, 2, 8 workers", [](Criterion& c) {
        std::vector<std::size_t> counts;
        for (int g = 0; g <= 8; ++g) {
            std::vector<std::vector<Int>> tree;
            enumerate_by_genus(g, [&](const NumericalSemigroup& s) {
                if (s.genus() == g) tree.push_back(s.generators());
            });
            std::sort(tree.begin(), tree.end());
            const auto reference = enumerate_small_oracle(g);
            c.expect(tree == reference, "identical sets at genus " + std::to_string(g));
            counts.push_back(reference.size());
        }
        c.expect(counts[3] == 4 && counts[4] == 7 && counts[5] == 12, "n_3 = 4, n_4 = 7, n_5 = 12");
        const auto one = census(20, {.threads = 1});
        const auto two = census(20, {.threads = 2});
        const auto eight = census(20, {.threads = 8});
        c.expect(one == two && one == eight, "bit-identical census tables");
        c.expect(census_csv(one) == census_csv(eight), "identical CSV");
    });

    run("AC10", "census through genus 25 against the reference figures; h/n = 0.88 +/- 0.01", [](Criterion& c) {
        const auto smoke_start = Clock::now();
        const auto smoke = census(18);
        const double smoke_secs = seconds_since(smoke_start);
        c.expect(smoke.complete, "genus <= 18 smoke run complete");
        c.expect(smoke_secs < 60, "genus <= 18 smoke run " + std::to_string(smoke_secs) + " s < 60 s");

        const auto table = census(25);
        const auto cmp = compare_with_reference(table);
        const double ratio = static_cast<double>(table.cumulative_ahf()) / static_cast<double>(table.cumulative_total());
        c.log << "    " << cmp.str() << "\n";
        c.log << "    cumulative h/n = " << table.cumulative_ahf() << "/" << table.cumulative_total() << " = " << ratio
              << "\n";
        if (cmp.discrepancy) {
            c.log << "    DISCREPANCY FLAG: computed totals differ from the reference; per-genus table follows\n";
            c.log << "    genus,n_g,h_g\n";
            for (int g = 0; g <= 25; ++g) {
                c.log << "    " << g << "," << table.total(g) << "," << table.ahf_total(g) << "\n";
            }
        }
        c.expect(std::abs(ratio - 0.88) <= 0.01, "cumulative h/n within 0.88 +/- 0.01");
    });

    run("AC11", "length DP extremes = brute-force factorization extremes, genus <= 10", [](Criterion& c) {
        std::size_t elements = 0;
        enumerate_by_genus(10, [&](const NumericalSemigroup& s) {
            for (Int w : s.apery_set()) {
                ++elements;
                const auto fs = factorizations(s, w);
                Int lo = fs.front().length(), hi = lo;
                for (const auto& f : fs) {
                    lo = std::min(lo, f.length());
                    hi = std::max(hi, f.length());
                }
                const auto bounds = length_bounds(s, w);
                c.expect(bounds.min == lo && bounds.max == hi, s.str() + " element " + std::to_string(w));
            }
        });
        c.log << "    " << elements << " Apery elements\n";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
