#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aperylab/rational.hpp"
#include "aperylab/semigroup.hpp"

namespace aperylab {

class invalid_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// What a prediction evaluates to on a concrete semigroup.
struct Outcome {
    std::string computed;
    bool holds = false;
};

/// A claimed invariant value, checked through the public module operations.
struct Prediction {
    std::string invariant;
    std::string expected;
    std::function<Outcome(const NumericalSemigroup&)> evaluate;
};

struct PredictionResult {
    std::string invariant;
    std::string expected;
    std::string computed;
    bool holds = false;
};

/// A member of one of the parametric families, with its predicted invariants.
struct FamilyInstance {
    std::string family;
    NumericalSemigroup semigroup;
    std::map<std::string, Int> parameters;
    /// Index set T for the Apery-choice families; empty otherwise.
    std::vector<Int> subset;
    std::vector<Prediction> predictions;
    /// Informational remarks that are reported but not checked.
    std::vector<std::string> notes;
};

std::vector<PredictionResult> verify(const FamilyInstance& instance);
bool all_hold(const std::vector<PredictionResult>& results);

/// <a+b, pa, pb> with gcd(a,b) = 1, a > b >= 2, p prime, p !| a+b, a+b < pb.
/// When p is omitted the smallest valid prime is used.
FamilyInstance master_example(Int a, Int b, std::optional<Int> p = std::nullopt);
/// The `count` smallest primes valid for master_example(a, b).
std::vector<Int> master_example_primes(Int a, Int b, std::size_t count);

/// <5n, 2p, 3p> with p prime, p != 5, 2p > 5n > 5.
FamilyInstance small_ahff(Int n, std::optional<Int> p = std::nullopt);
std::vector<Int> small_ahff_primes(Int n, std::size_t count);

/// <n^2, n^2+n, 2n^2+1> for n >= 2.
FamilyInstance ahf_grid(Int n);

/// <4q+8, 2p, qp> with p, q odd primes and p > 2q+4. When p is omitted the
/// smallest valid prime is used.
FamilyInstance large_mae(Int q, std::optional<Int> p = std::nullopt);

/// Apery set {0, a_1, ..., a_{m-1}} with a_i = 2m+i for i in T, m+i otherwise.
FamilyInstance apery_choice(Int m, const std::vector<Int>& subset);

/// a_1 = m+1, a_2 = 2m+2, a_3 = 3m+3, a_4 = m+4, a_{m-1} = 2m-1, and the
/// remaining a_i chosen as in apery_choice with T a subset of {5, ..., m-2}.
FamilyInstance non_ahf_choice(Int m, const std::vector<Int>& subset);

bool is_prime(Int n);

/// f_1 = f_2 = 1.
Int fibonacci(Int k);
Int binomial(Int n, Int k);
/// Sum over m = 2..g+1 of C(m-1, g-(m-1)).
Int fibonacci_binomial_sum(Int g);

/// "{1, 3/2}"
std::string format_set(const std::vector<Rational>& values);
std::string format_set(const std::vector<Int>& values);

}  // namespace aperylab
