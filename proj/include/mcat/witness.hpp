#ifndef MCAT_WITNESS_HPP
#define MCAT_WITNESS_HPP

#include <array>
#include <string>
#include <vector>

#include "mcat/bounds.hpp"
#include "mcat/dfa.hpp"

namespace mcat::witness {

using bounds::SizeVector;

enum class Family {
    Kp1,           // (k+1)-letter witnesses, all n_i >= 3
    Kp1Two,        // (k+1)-letter witnesses allowing two-state factors
    BinaryK2,      // binary witnesses for k = 2
    KLetter,       // k-letter witnesses
    KLetter2State, // k-letter witnesses, all factors two-state
    BinaryLb,      // binary lower-bound family
    TernaryLb,     // binary family plus the cycling third symbol
    UnaryCyclic,   // unary cycle automata a^{n_i-1}(a^{n_i})*
    ExampleK5_14,  // the fixed k=5 instance with two one-state factors
};

const char* family_name(Family f);
Family family_from_string(const std::string& name);
std::vector<Family> all_families();

/// Per-factor witnesses over {b, a_1, ..., a_k}: a_i cycles A_i and fixes the
/// others, b sends the start to its successor. Requires k >= 2, n_i >= 3.
std::vector<Dfa> gen_kp1(const SizeVector& n);

/// Variant that also covers two-state factors; a_k and b take over the chain
/// role depending on the parity of the factor index. Requires k >= 2,
/// n_i >= 2.
std::vector<Dfa> gen_kp1_two(const SizeVector& n);

/// Binary witnesses for the concatenation of two languages; n_1, n_2 >= 1
/// (one-state cases degenerate to the accept-all automaton).
std::pair<Dfa, Dfa> gen_binary_k2(int n1, int n2);

/// k-letter witnesses over {b, a_1, ..., a_{k-1}}: requires k >= 3,
/// n_1, n_k >= 2 and n_i >= 3 in between.
std::vector<Dfa> gen_k(const SizeVector& n);

/// All-two-state witnesses over the k-letter alphabet {b, c, a_2, ..., a_{k-1}};
/// requires k >= 3.
std::vector<Dfa> gen_k_twostate(int k);

/// Binary family whose concatenation needs at least
/// n_1 - 1 + 2^{(n_2+...+n_k)-(2k-2)} states. Requires k >= 3, n_1 >= 3,
/// n_2 >= 4, n_i >= 3.
std::vector<Dfa> gen_binary_lb(const SizeVector& n);

/// gen_binary_lb plus symbol c: a cycle on A_1, the step f_i -> f_i + 1 in the
/// middle factors, identity on A_k.
std::vector<Dfa> gen_ternary_lb(const SizeVector& n);

/// Unary cycle automata of sizes n_i with the final state just before the
/// start, so L_i = a^{n_i - 1} (a^{n_i})*.
std::vector<Dfa> gen_unary_cyclic(const SizeVector& n);

/// The five-factor instance over {a,b,c,d,e,f} with one-state third and
/// fourth factors whose minimal concatenation has exactly 14 states.
std::vector<Dfa> gen_example_k5_14();

std::vector<Dfa> generate(Family f, const SizeVector& n);

/// Generator precondition check (used to filter sweep grids).
bool in_precondition(Family f, const SizeVector& n);

struct TernaryOptimalityReport {
    int cases = 0;            // triples examined
    int max_minimal = 0;      // largest minimal DFA size attained
    int argmax_encoding = -1; // lexicographically smallest encoding attaining it
    int count_at_max = 0;
    bool some_case_at_least_8 = false;
};

/// Exhaustive scan of all binary two-state triples with s_i = 1, f_i = 2:
/// 4 maps per symbol, 16 per automaton, 4096 triples. With
/// `arbitrary_a3_finals` the third factor's final set ranges over all four
/// subsets (16 * 16 * 64 cases).
TernaryOptimalityReport check_ternary_optimality_k3(int jobs = 0,
                                                    bool arbitrary_a3_finals = false);

} // namespace mcat::witness

#endif
