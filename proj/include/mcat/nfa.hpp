#ifndef MCAT_NFA_HPP
#define MCAT_NFA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mcat/dfa.hpp"
#include "mcat/state_set.hpp"

namespace mcat {

/// Symbol slot used for epsilon transitions in Nfa::Transition::sym.
inline constexpr int kEpsilon = -1;

struct Nfa {
    struct Transition {
        int from;
        int sym; // alphabet index, or kEpsilon
        int to;

        bool operator==(const Transition&) const = default;
        auto operator<=>(const Transition&) const = default;
    };

    int state_count = 0;
    std::vector<std::string> alphabet;
    std::vector<Transition> transitions; // kept sorted + deduplicated
    std::vector<int> initials; // sorted
    std::vector<int> finals;   // sorted

    void add_transition(int from, int sym, int to);
    void normalize(); // sort + dedupe transitions, initials, finals
    void validate() const;

    bool has_epsilon() const;
    StateSet finals_set() const;
};

Nfa nfa_from_dfa(const Dfa& dfa);

/// Swap initials and finals and reverse every transition (epsilon included).
Nfa reverse(const Nfa& nfa);

/// Remove epsilon transitions, preserving the language. Initial states are
/// unchanged; a state becomes final when its closure meets the final set.
Nfa eliminate_epsilon(const Nfa& nfa);

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SubsetAutomaton {
    Dfa dfa;
    std::vector<StateSet> subsets; // label of each DFA state
};

/// Breadth-first determinization with epsilon closure. Returns the reachable
/// part only; a subset is final iff it meets nfa.finals; the empty subset, if
/// reachable, stays as an ordinary dead state. Throws CapExceeded when the
/// number of reachable subsets passes `cap`.
SubsetAutomaton subset_construct_labeled(const Nfa& nfa, size_t cap);
Dfa subset_construct(const Nfa& nfa, size_t cap);

inline constexpr size_t kDefaultCap = 2'000'000;

/// Every q such that the singleton {q} is a reachable subset of the reversed
/// automaton. When this returns all states, the subset automaton of `nfa` has
/// pairwise distinguishable states.
std::vector<int> co_reachable_singletons(const Nfa& nfa, size_t cap);

} // namespace mcat

#endif
