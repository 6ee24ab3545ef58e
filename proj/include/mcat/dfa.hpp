#ifndef MCAT_DFA_HPP
#define MCAT_DFA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mcat/state_set.hpp"

namespace mcat {

/// Complete DFA over an indexed alphabet. States are 0-based everywhere in
/// memory; the 1-based numbering of the text formats exists only in io.
struct Dfa {
    int state_count = 0;
    std::vector<std::string> alphabet;
    std::vector<int> delta; // row-major: delta[q * |alphabet| + a]
    int start = 0;
    std::vector<int> finals; // sorted, unique

    int next(int q, int a) const {
        return delta[static_cast<size_t>(q) * alphabet.size() + static_cast<size_t>(a)];
    }
    int& next_ref(int q, int a) {
        return delta[static_cast<size_t>(q) * alphabet.size() + static_cast<size_t>(a)];
    }

    bool is_final(int q) const;

    /// Index of a symbol by name; throws on unknown symbol.
    int symbol_index(std::string_view name) const;

    StateSet finals_set() const;

    /// Checks totality and index ranges; throws std::invalid_argument naming
    /// the violated clause.
    void validate() const;
};

Dfa make_dfa(int states, std::vector<std::string> alphabet, int start,
             std::vector<int> finals);

bool dfa_accepts(const Dfa& dfa, const std::vector<std::string>& word);
bool dfa_accepts_indices(const Dfa& dfa, const std::vector<int>& word);

/// BFS renumbering from the start state, exploring symbols in alphabet order.
/// Unreachable states are dropped, so the result is the canonical form of the
/// reachable part.
Dfa canonical_form(const Dfa& dfa);

/// True iff the canonical renumberings coincide. Requires the same alphabet
/// (by name sequence); throws otherwise.
bool isomorphic(const Dfa& a, const Dfa& b);

/// Unique minimal complete DFA of the same language (Moore partition
/// refinement), canonically numbered.
Dfa minimize(const Dfa& dfa);

} // namespace mcat

#endif
