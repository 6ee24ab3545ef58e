#ifndef MCAT_CONCAT_HPP
#define MCAT_CONCAT_HPP

#include <vector>

#include "mcat/dfa.hpp"
#include "mcat/nfa.hpp"

namespace mcat {

/// Ordered factors A_1 ... A_k over one shared alphabet, for building an NFA
/// recognizing L(A_1)L(A_2)...L(A_k).
struct ConcatInput {
    std::vector<Dfa> dfas;

    int k() const { return static_cast<int>(dfas.size()); }

    /// Cumulative state offsets of the disjoint union; offsets()[i] is where
    /// A_i's states start, offsets()[k] is the total state count.
    std::vector<int> offsets() const;

    /// Alphabets identical by name sequence, every factor valid.
    void validate() const;

    /// Tight-bound shape: every factor but the last either has a single final
    /// state distinct from its start (when it has >= 2 states) or is the
    /// one-state accept-all automaton.
    bool is_strict() const;

    /// Strict, and additionally no middle factor is one-state (so the
    /// epsilon-free construction applies directly).
    bool strict_without_one_state_middles() const;
};

/// Disjoint union with an epsilon transition from each final state of A_i to
/// the start of A_{i+1}; initial {s_1}, finals F_k. Works for any factors.
Nfa build_concat_eps_nfa(const ConcatInput& input);

struct ConcatNfaResult {
    Nfa nfa;
    /// Set when some middle factor is the one-state accept-all automaton and
    /// the epsilon construction plus elimination had to be used instead of
    /// the direct rule.
    bool used_eps_fallback = false;
};

/// Epsilon-free NFA: for each i < k, every DFA transition (q, a, f_i) into the
/// final state of A_i adds a jump (q, a, s_{i+1}); middle finals are dropped,
/// finals are F_k, initial s_1. Requires a strict input.
ConcatNfaResult build_concat_nfa(const ConcatInput& input);

/// Subset-automaton state decoded against the factor boundaries: one state of
/// A_1 plus one subset per later factor.
struct ValidTuple {
    int q = -1;                  // -1 when the first component is not a singleton
    std::vector<StateSet> sets;  // sets[i] over the states of A_{i+2}
};

ValidTuple decode_tuple(const StateSet& subset, const ConcatInput& input);

/// The three validity conditions: exactly one state of A_1; an empty
/// component forces all later components empty; a component containing its
/// factor's final state forces the next start state in.
bool is_valid(const ValidTuple& t, const ConcatInput& input);

struct InvalidReachable : std::runtime_error {
    explicit InvalidReachable(const std::string& what) : std::runtime_error(what) {}
};

struct ConcatDeterminized {
    Dfa dfa;
    std::vector<ValidTuple> labels;
    bool used_eps_fallback = false;
};

/// Determinizes the concatenation NFA and decodes every reachable subset into
/// a tuple, checking that each one is valid. A reachable non-valid state
/// throws InvalidReachable: it cannot happen unless the construction is
/// broken.
ConcatDeterminized determinize_concat(const ConcatInput& input,
                                      size_t cap = kDefaultCap);

struct PipelineResult {
    int nfa_states = 0;
    int reachable = 0;
    int minimal = 0;
    bool used_eps_fallback = false;
};

/// generate -> concat -> determinize -> minimize, with the valid-state check
/// on strict inputs. Non-strict inputs go through the epsilon construction
/// without tuple decoding.
PipelineResult run_concat_pipeline(const std::vector<Dfa>& dfas,
                                   size_t cap = kDefaultCap);

} // namespace mcat

#endif
