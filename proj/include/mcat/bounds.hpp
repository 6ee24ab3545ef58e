#ifndef MCAT_BOUNDS_HPP
#define MCAT_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcat::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// Sizes (n_1, ..., n_k) of the k factor automata.
struct SizeVector {
    std::vector<int> n;

    int k() const { return static_cast<int>(n.size()); }
    void validate() const; // k >= 1, all n_i >= 1
};

SizeVector parse_size_vector(const std::string& text); // "3,4,3"
std::string to_string(const SizeVector& n);

/// Valid-state count together with the recursion tables. U[i] counts the
/// valid suffixes (S_i,...,S_k) after a component missing its final state;
/// V[i] counts them after a component containing it. Tables are indexed by
/// the factor number, entries 2..k; slots 0 and 1 are unused.
struct BoundResult {
    BigInt tau;
    std::vector<BigInt> U;
    std::vector<BigInt> V;
};

/// Exact valid-state count #tau_k via
///   U_k = 2^{n_k},  V_k = 2^{n_k - 1},
///   U_i = 1 + (2^{n_i-1} - 1) U_{i+1} + 2^{n_i-1} V_{i+1},
///   V_i = 2^{n_i-2} (U_{i+1} + V_{i+1}),
///   tau = (n_1 - 1) U_2 + V_2.
/// Requires k >= 2 and every n_i >= 2 (route one-state factors to
/// one_state_bound / interval_bound instead).
BoundResult count_valid_states(const SizeVector& n);

/// Closed form for k = 3:
///   n1 (1 + (3/4) 2^{n2+n3} - 2^{n3}) - (3/8) 2^{n2+n3} + 2^{n3} - 1.
BigInt count_valid_k3_closed(int n1, int n2, int n3);

/// Brute-force count of tuples (q, S_2, ..., S_k) satisfying the three
/// validity conditions, with f_i the last state of each factor. Guarded by
/// n_1 * 2^{n_2+...+n_k} <= 2^24.
BigInt enumerate_valid_states(const SizeVector& n);

/// (1/2^{k-1}) n_1 2^{n_2+...+n_k}  <=  #tau_k  <=  (3/4) n_1 2^{n_2+...+n_k},
/// both sides exact integers. Requires k >= 3 and n_i >= 2.
std::pair<BigInt, BigInt> sandwich_bounds(const SizeVector& n);

/// State-complexity upper bound when exactly one factor is the one-state
/// accept-all automaton. `j` is the 0-based position of that factor.
BigInt one_state_bound(const SizeVector& n, int j);

/// Upper bound when the positions with n_i >= 2 form intervals separated by
/// one-state accept-all factors. Intervals followed by a one-state factor are
/// evaluated with the boundary U = 2^{n-1}, V = 2^{n-2}; an interval ending
/// at the last factor keeps the standard boundary. A trailing run of
/// one-state factors contributes one extra accept-all class.
BigInt interval_bound(const SizeVector& n);

/// n_1 - 1 + 2^{(n_2+...+n_k) - (2k-2)}; requires k >= 3, n_1 >= 3, n_2 >= 4,
/// n_i >= 3 for i >= 3.
BigInt binary_lower_bound(const SizeVector& n);

/// n_1 * 2^{(n_2+...+n_k) - (2k-2)}; requires k >= 2 and the same size floor.
BigInt ternary_lower_bound(const SizeVector& n);

} // namespace mcat::bounds

#endif
