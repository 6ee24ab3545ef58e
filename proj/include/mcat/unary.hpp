#ifndef MCAT_UNARY_HPP
#define MCAT_UNARY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcat::unary {

/// Largest integer not expressible as a non-negative combination of nums.
/// Requires gcd(nums) = 1; when 1 is among the nums the result is -1 (every
/// non-negative integer is expressible).
long long frobenius(std::vector<long long> nums);

/// g + n_1 + ... + n_k: the largest integer with no all-positive combination.
long long modified_frobenius(const std::vector<long long>& nums);

/// Shape (cycle length, tail length) of a unary DFA; total states = both.
struct UnarySize {
    long long lambda = 1;
    long long mu = 0;

    long long states() const { return lambda + mu; }
    bool operator==(const UnarySize&) const = default;
};

/// Size of a DFA for the concatenation of k unary cyclic languages of sizes
/// n_i: lambda = d = gcd, mu = d * f(n/d) - k + 1. Tight for the cyclic
/// witnesses a^{n_i-1}(a^{n_i})*.
UnarySize cyclic_concat_size(const std::vector<long long>& n);

/// Size for factors of the shape a^{mu_i} Y_i with Y_i lambda_i-cyclic:
/// lambda = d, mu = sum mu_i + d * f(lambda/d) - k + 1.
UnarySize tailed_cyclic_size(const std::vector<UnarySize>& sizes);

struct TailsBound {
    UnarySize size;
    std::vector<uint32_t> maximizing_subsets; // bitmask over factors, all argmax
};

/// Upper bound when factors may accept inside their tails:
/// lambda = lcm(lambda_i), mu = max over subsets I of
/// sum mu_i - k + 1 + d_I * f(I), with d_empty = 1, f(empty) = 0.
/// Guarded at k <= 25.
TailsBound tails_final_bound(const std::vector<UnarySize>& sizes);

/// Canonical eventually-periodic length set: acceptance of lengths 0..mu-1 in
/// the tail, then cyclically by cycle[(len - mu) mod lambda]. Canonical means
/// no divisor of lambda reproduces the cycle and the tail cannot be shortened.
struct UnaryLang {
    long long lambda = 1;
    long long mu = 0;
    std::vector<char> tail;  // mu bits
    std::vector<char> cycle; // lambda bits

    bool accepts(long long len) const {
        if (len < mu) return tail[static_cast<size_t>(len)] != 0;
        return cycle[static_cast<size_t>((len - mu) % lambda)] != 0;
    }
    bool operator==(const UnaryLang&) const = default;
};

struct HorizonExceeded : std::runtime_error {
    explicit HorizonExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Language of a unary automaton of size (lambda, mu) whose final states are
/// given as 0-based state indices (tail states 0..mu-1, then the cycle).
/// The result is canonicalized, so it describes the minimal DFA.
UnaryLang unary_from_automaton(long long lambda, long long mu,
                               const std::vector<long long>& finals);

UnaryLang unary_lang_of_lengths(const std::vector<long long>& lengths); // finite set

/// Exact sumset {x + y}: computed out to a provably stable horizon, then
/// canonicalized. Throws HorizonExceeded past 10^7 positions.
UnaryLang unary_concat(const UnaryLang& a, const UnaryLang& b);

UnarySize unary_minimal_size(const UnaryLang& l);

struct SplitSearchReport {
    long long m = 0, n = 0;
    long long best_i = -1, best_j = -1;
    long long best_value = 0;        // exact when winner_is_exact
    bool winner_is_exact = false;    // (1,1) construction value 2 lcm(m-1,n-1) - 1
    long long runner_up_bound = 0;   // max bound over the other splits
    long long gcd_m_n = 0, gcd_m_n1 = 0, gcd_m1_n = 0, gcd_m2_n = 0;
};

/// Scans every split (m-i, i), (n-j, j) of an m-state and n-state unary DFA,
/// scoring each with the complexity bound (m-i)(n-j)+i+j when the cycles are
/// coprime and 2 lcm(m-i, n-j)+i+j-1 otherwise. The (1,1) split is credited
/// with the exact value 2 lcm(m-1, n-1) - 1 of the two-final-state
/// construction when gcd(m-1, n-1) = 2 and neither cycle divides the other.
SplitSearchReport search_best_unary_pair(long long m, long long n,
                                         long long budget = 4'000'000);

} // namespace mcat::unary

#endif
