#include "aperylab/families.hpp"

#include <algorithm>
#include <numeric>

#include "aperylab/factorization.hpp"
#include "aperylab/poset.hpp"

namespace aperylab {

namespace {

Prediction equals(std::string invariant, std::string expected,
                  std::function<std::string(const NumericalSemigroup&)> compute) {
    Prediction p{std::move(invariant), expected, {}};
    p.evaluate = [expected = std::move(expected), compute = std::move(compute)](const NumericalSemigroup& s) {
        std::string got = compute(s);
        const bool same = got == expected;
        return Outcome{std::move(got), same};
    };
    return p;
}

Prediction apery_set_is(std::vector<Int> expected) {
    std::sort(expected.begin(), expected.end());
    return equals("apery_set", format_set(expected),
                  [](const NumericalSemigroup& s) { return format_set(s.apery_set()); });
}

Prediction ahf_is(bool expected) {
    return equals("is_ahf", expected ? "true" : "false",
                  [](const NumericalSemigroup& s) { return is_ahf(s) ? "true" : "false"; });
}

void require(bool condition, const std::string& what) {
    if (!condition) throw invalid_parameters("invalid parameters: " + what);
}

Int smallest_prime_above(Int n) {
    Int p = std::max<Int>(n + 1, 2);
    while (!is_prime(p)) ++p;
    return p;
}

}  // namespace

std::vector<PredictionResult> verify(const FamilyInstance& instance) {
    std::vector<PredictionResult> out;
    for (const auto& p : instance.predictions) {
        Outcome o = p.evaluate(instance.semigroup);
        out.push_back({p.invariant, p.expected, std::move(o.computed), o.holds});
    }
    return out;
}

bool all_hold(const std::vector<PredictionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const PredictionResult& r) { return r.holds; });
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// --- <a+b, pa, pb> ---------------------------------------------------------

namespace {

void check_master(Int a, Int b, Int p) {
    require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
    require((a + b) % p != 0, "p divides a + b");
    require(a + b < checked_mul(p, b), "a + b < p*b fails");
}

void check_master_ab(Int a, Int b) {
    require(b >= 1 && a > b, "need a > b >= 1");
    require(std::gcd(a, b) == 1, "gcd(a, b) != 1");
    require(b >= 2, "b = 1 is excluded: p*a = a*(p*b) is then not an atom and R(Ap(S)) collapses to {1}");
}

}  // namespace

std::vector<Int> master_example_primes(Int a, Int b, std::size_t count) {
    check_master_ab(a, b);
    std::vector<Int> out;
    for (Int p = 2; out.size() < count; ++p) {
        if (is_prime(p) && (a + b) % p != 0 && a + b < p * b) out.push_back(p);
    }
    return out;
}

FamilyInstance master_example(Int a, Int b, std::optional<Int> p_opt) {
    check_master_ab(a, b);
    const Int p = p_opt ? *p_opt : master_example_primes(a, b, 1).front();
    check_master(a, b, p);

    const Int pa = checked_mul(p, a);
    const Int pb = checked_mul(p, b);
    const Int pab = checked_mul(pa, b);
    FamilyInstance inst{"master", NumericalSemigroup::from_generators({a + b, pa, pb}), {{"a", a}, {"b", b}, {"p", p}},
                        {}, {}, {}};

    const Rational ratio(a, b);
    inst.predictions.push_back(equals("apery_elasticity_set", format_set(std::vector<Rational>{Rational(1), ratio}),
                                      [](const NumericalSemigroup& s) { return format_set(apery_elasticity_set(s)); }));
    inst.predictions.push_back(
        equals("apery_elements_with_elasticity_" + ratio.str(), format_set(std::vector<Int>{pab}),
               [ratio](const NumericalSemigroup& s) {
                   std::vector<Int> hits;
                   for (const auto& row : apery_elasticity_table(s)) {
                       if (row.elasticity == ratio) hits.push_back(row.element);
                   }
                   return format_set(hits);
               }));
    const Rational expected_mae = Rational(1) + Rational(1, b) - Rational(2, a + b);
    inst.predictions.push_back(
        equals("mae", expected_mae.str(), [](const NumericalSemigroup& s) { return mae(s).str(); }));

    std::vector<Int> apery{0, pab};
    for (Int k = 1; k < a; ++k) apery.push_back(checked_mul(k, pb));
    for (Int k = 1; k < b; ++k) apery.push_back(checked_mul(k, pa));
    inst.predictions.push_back(apery_set_is(apery));
    inst.predictions.push_back(equals("length_set(" + std::to_string(pab) + ")", format_set(std::vector<Int>{b, a}),
                                      [pab](const NumericalSemigroup& s) { return format_set(length_set(s, pab)); }));
    return inst;
}

// --- <5n, 2p, 3p> ----------------------------------------------------------

std::vector<Int> small_ahff_primes(Int n, std::size_t count) {
    require(5 * n > 5, "need 5n > 5");
    std::vector<Int> out;
    for (Int p = 2; out.size() < count; ++p) {
        if (is_prime(p) && p != 5 && 2 * p > 5 * n) out.push_back(p);
    }
    return out;
}

FamilyInstance small_ahff(Int n, std::optional<Int> p_opt) {
    require(n >= 2, "need 5n > 5");
    const Int p = p_opt ? *p_opt : small_ahff_primes(n, 1).front();
    require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
    require(p != 5, "p = 5 is excluded");
    require(2 * p > 5 * n, "2p > 5n fails");

    const Int m = checked_mul(5, n);
    FamilyInstance inst{"small-ahff",
                        NumericalSemigroup::from_generators({m, checked_mul(2, p), checked_mul(3, p)}),
                        {{"n", n}, {"p", p}},
                        {},
                        {},
                        {}};

    inst.predictions.push_back(
        equals("ahff", Rational(6, m).str(), [](const NumericalSemigroup& s) { return ahff(s).str(); }));
    std::vector<Int> apery{0, checked_mul(m + 1, p)};
    for (Int k = 2; k < m; ++k) apery.push_back(checked_mul(k, p));
    inst.predictions.push_back(apery_set_is(apery));
    inst.predictions.push_back(equals("half_factorial_apery_elements",
                                      format_set(std::vector<Int>{0, 2 * p, 3 * p, 4 * p, 5 * p, 7 * p}),
                                      [](const NumericalSemigroup& s) {
                                          std::vector<Int> hf;
                                          for (const auto& row : apery_elasticity_table(s)) {
                                              if (row.lengths.size() == 1) hf.push_back(row.element);
                                          }
                                          return format_set(hf);
                                      }));
    return inst;
}

// --- <n^2, n^2+n, 2n^2+1> --------------------------------------------------

FamilyInstance ahf_grid(Int n) {
    require(n >= 2, "need n >= 2");
    const Int sq = checked_mul(n, n);
    const Int a1 = checked_add(sq, n);
    const Int a2 = checked_add(checked_mul(2, sq), 1);
    FamilyInstance inst{"ahf-grid", NumericalSemigroup::from_generators({sq, a1, a2}), {{"n", n}}, {}, {}, {}};

    inst.predictions.push_back(ahf_is(true));
    std::vector<Int> grid;
    for (Int i = 0; i < n; ++i) {
        for (Int j = 0; j < n; ++j) grid.push_back(checked_add(checked_mul(i, a1), checked_mul(j, a2)));
    }
    inst.predictions.push_back(apery_set_is(grid));
    Prediction w{"poset_width", ">= " + std::to_string(n), {}};
    w.evaluate = [n](const NumericalSemigroup& s) {
        const auto value = static_cast<Int>(width(build_poset(s)));
        return Outcome{std::to_string(value), value >= n};
    };
    inst.predictions.push_back(std::move(w));
    return inst;
}

// --- <4q+8, 2p, qp> --------------------------------------------------------

FamilyInstance large_mae(Int q, std::optional<Int> p_opt) {
    require(is_prime(q) && q % 2 == 1, "q = " + std::to_string(q) + " is not an odd prime");
    const Int p = p_opt ? *p_opt : smallest_prime_above(2 * q + 4);
    require(is_prime(p) && p % 2 == 1, "p = " + std::to_string(p) + " is not an odd prime");
    require(p > 2 * q + 4, "p > 2q + 4 fails");

    const Int m = checked_add(checked_mul(4, q), 8);
    FamilyInstance inst{"large-mae",
                        NumericalSemigroup::from_generators({m, checked_mul(2, p), checked_mul(q, p)}),
                        {{"q", q}, {"p", p}},
                        {},
                        {},
                        {}};

    for (Int i = 0; i < q; ++i) {
        const Int element = checked_mul(2 * q + 2 * i, p);
        inst.predictions.push_back(equals("elasticity(" + std::to_string(element) + ")",
                                          Rational(q + i, 2 + i).str(), [element](const NumericalSemigroup& s) {
                                              return elasticity(s, element).str();
                                          }));
    }
    Rational bound(3 * q + 8, m);
    Rational harmonic(0);
    for (Int i = 0; i < q; ++i) harmonic += Rational(1, 2 + i);
    bound += Rational(q, m) * harmonic;
    Prediction lower{"mae", ">= " + bound.str(), {}};
    lower.evaluate = [bound](const NumericalSemigroup& s) {
        const Rational value = mae(s);
        return Outcome{value.str(), value >= bound};
    };
    inst.predictions.push_back(std::move(lower));

    // The closed-form listing {0, 2p, 4p, ..., (q-1)p, qp, ..., (9q+17)p/2} minus (4q+8)p
    // names one more value than |Ap(S)| = m.
    const Int listed = (q + 1) / 2 + (9 * q + 17) / 2 - q;
    inst.notes.push_back("closed-form Apery listing names " + std::to_string(listed) + " values; |Ap(S)| = " +
                         std::to_string(inst.semigroup.apery_set().size()) + " (Apery set taken from the sieve)");
    return inst;
}

// --- Apery-choice constructions ---------------------------------------------

namespace {

FamilyInstance from_choice(std::string family, Int m, std::vector<Int> values, std::vector<Int> subset) {
    FamilyInstance inst{std::move(family), NumericalSemigroup::from_apery_candidate(m, values),
                        {{"m", m}}, std::move(subset), {}, {}};
    inst.parameters["|T|"] = static_cast<Int>(inst.subset.size());
    values.push_back(0);
    inst.predictions.push_back(apery_set_is(values));
    inst.predictions.push_back(equals("multiplicity", std::to_string(m), [](const NumericalSemigroup& s) {
        return std::to_string(s.multiplicity());
    }));
    return inst;
}

std::vector<Int> normalized_subset(std::vector<Int> subset, Int lo, Int hi) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (Int i : subset) {
        require(i >= lo && i <= hi, "index " + std::to_string(i) + " outside {" + std::to_string(lo) + ", ..., " +
                                        std::to_string(hi) + "}");
    }
    return subset;
}

}  // namespace

FamilyInstance apery_choice(Int m, const std::vector<Int>& subset_in) {
    require(m >= 2, "need m >= 2");
    const auto subset = normalized_subset(subset_in, 1, m - 1);
    std::vector<Int> values;
    for (Int i = 1; i < m; ++i) {
        values.push_back(std::binary_search(subset.begin(), subset.end(), i) ? 2 * m + i : m + i);
    }
    FamilyInstance inst = from_choice("apery-choice", m, std::move(values), subset);
    inst.predictions.insert(inst.predictions.begin(), ahf_is(true));
    const Int genus = m - 1 + static_cast<Int>(subset.size());
    inst.predictions.push_back(equals("genus", std::to_string(genus), [](const NumericalSemigroup& s) {
        return std::to_string(s.genus());
    }));
    inst.notes.push_back("gap count gives genus (m-1)+|T| = " + std::to_string(genus) + ", not m+|T| = " +
                         std::to_string(m + static_cast<Int>(subset.size())));
    return inst;
}

FamilyInstance non_ahf_choice(Int m, const std::vector<Int>& subset_in) {
    require(m >= 6, "need m >= 6 so that indices 1, 2, 3, 4, m-1 are distinct");
    const auto subset = normalized_subset(subset_in, 5, m - 2);
    std::vector<Int> values;
    for (Int i = 1; i < m; ++i) {
        Int v = std::binary_search(subset.begin(), subset.end(), i) ? 2 * m + i : m + i;
        if (i == 2) v = 2 * m + 2;
        if (i == 3) v = 3 * m + 3;
        values.push_back(v);
    }
    FamilyInstance inst = from_choice("non-ahf-choice", m, std::move(values), subset);
    inst.predictions.insert(inst.predictions.begin(), ahf_is(false));
    const Int target = 3 * m + 3;
    inst.predictions.push_back(equals("3*a_1 == a_4 + a_{m-1}", std::to_string(target), [m](const NumericalSemigroup&) {
        const Int a1 = m + 1, a4 = m + 4, last = 2 * m - 1;
        return 3 * a1 == a4 + last ? std::to_string(3 * a1) : "mismatch";
    }));
    Prediction lengths{"length_set(" + std::to_string(target) + ")", "contains {2, 3}", {}};
    lengths.evaluate = [target](const NumericalSemigroup& s) {
        const auto ls = length_set(s, target);
        const bool ok = std::binary_search(ls.begin(), ls.end(), 2) && std::binary_search(ls.begin(), ls.end(), 3);
        return Outcome{format_set(ls), ok};
    };
    inst.predictions.push_back(std::move(lengths));
    return inst;
}

// --- Fibonacci bound ----------------------------------------------------------

Int fibonacci(Int k) {
    if (k < 1) throw std::invalid_argument("fibonacci index must be >= 1");
    Int prev = 0, cur = 1;
    for (Int i = 1; i < k; ++i) {
        const Int next = checked_add(prev, cur);
        prev = cur;
        cur = next;
    }
    return cur;
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r = checked_mul(r, n - i) / (i + 1);
    }
    return r;
}

Int fibonacci_binomial_sum(Int g) {
    Int sum = 0;
    for (Int m = 2; m <= g + 1; ++m) sum = checked_add(sum, binomial(m - 1, g - (m - 1)));
    return sum;
}

std::string format_set(const std::vector<Rational>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].str();
    }
    return out + "}";
}

std::string format_set(const std::vector<Int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

}  // namespace aperylab
