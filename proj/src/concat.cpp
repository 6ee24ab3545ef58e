#include "mcat/concat.hpp"

#include <sstream>
#include <stdexcept>

namespace mcat {

std::vector<int> ConcatInput::offsets() const {
    std::vector<int> off(dfas.size() + 1, 0);
    for (size_t i = 0; i < dfas.size(); ++i)
        off[i + 1] = off[i] + dfas[i].state_count;
    return off;
}

void ConcatInput::validate() const {
    if (dfas.empty()) throw std::invalid_argument("concat: need at least one factor");
    for (const auto& d : dfas) d.validate();
    for (size_t i = 1; i < dfas.size(); ++i)
        if (dfas[i].alphabet != dfas[0].alphabet)
            throw std::invalid_argument("concat: alphabet mismatch between factors 1 and " +
                                        std::to_string(i + 1));
}

bool ConcatInput::is_strict() const {
    for (int i = 0; i + 1 < k(); ++i) {
        const Dfa& d = dfas[static_cast<size_t>(i)];
        if (d.state_count == 1) {
            if (d.finals.size() != 1) return false; // sole state must accept
        } else {
            if (d.finals.size() != 1 || d.finals[0] == d.start) return false;
        }
    }
    return true;
}

bool ConcatInput::strict_without_one_state_middles() const {
    if (!is_strict()) return false;
    for (int i = 0; i + 1 < k(); ++i)
        if (dfas[static_cast<size_t>(i)].state_count == 1) return false;
    return true;
}

Nfa build_concat_eps_nfa(const ConcatInput& input) {
    input.validate();
    auto off = input.offsets();
    Nfa n;
    n.state_count = off.back();
    n.alphabet = input.dfas[0].alphabet;
    n.initials = {off[0] + input.dfas[0].start};
    for (int f : input.dfas.back().finals)
        n.finals.push_back(off[static_cast<size_t>(input.k() - 1)] + f);

    for (int i = 0; i < input.k(); ++i) {
        const Dfa& d = input.dfas[static_cast<size_t>(i)];
        for (int q = 0; q < d.state_count; ++q)
            for (int a = 0; a < static_cast<int>(d.alphabet.size()); ++a)
                n.add_transition(off[static_cast<size_t>(i)] + q, a,
                                 off[static_cast<size_t>(i)] + d.next(q, a));
        if (i + 1 < input.k())
            for (int f : d.finals)
                n.add_transition(off[static_cast<size_t>(i)] + f, kEpsilon,
                                 off[static_cast<size_t>(i + 1)] +
                                     input.dfas[static_cast<size_t>(i + 1)].start);
    }
    n.normalize();
    return n;
}

ConcatNfaResult build_concat_nfa(const ConcatInput& input) {
    input.validate();
    if (!input.is_strict())
        throw std::invalid_argument(
            "concat: strict construction needs a single final state distinct from the "
            "start in every factor but the last (or a one-state accepting factor)");

    if (!input.strict_without_one_state_middles())
        return {eliminate_epsilon(build_concat_eps_nfa(input)), true};

    auto off = input.offsets();
    Nfa n;
    n.state_count = off.back();
    n.alphabet = input.dfas[0].alphabet;
    n.initials = {off[0] + input.dfas[0].start};
    for (int f : input.dfas.back().finals)
        n.finals.push_back(off[static_cast<size_t>(input.k() - 1)] + f);

    for (int i = 0; i < input.k(); ++i) {
        const Dfa& d = input.dfas[static_cast<size_t>(i)];
        int base = off[static_cast<size_t>(i)];
        for (int q = 0; q < d.state_count; ++q) {
            for (int a = 0; a < static_cast<int>(d.alphabet.size()); ++a) {
                int t = d.next(q, a);
                n.add_transition(base + q, a, base + t);
                if (i + 1 < input.k() && t == d.finals[0])
                    n.add_transition(base + q, a,
                                     off[static_cast<size_t>(i + 1)] +
                                         input.dfas[static_cast<size_t>(i + 1)].start);
            }
        }
    }
    n.normalize();
    return {std::move(n), false};
}

ValidTuple decode_tuple(const StateSet& subset, const ConcatInput& input) {
    auto off = input.offsets();
    ValidTuple t;
    StateSet first = subset.slice(off[0], off[1]);
    t.q = first.count() == 1 ? first.min_element() : -1;
    for (int i = 1; i < input.k(); ++i)
        t.sets.push_back(subset.slice(off[static_cast<size_t>(i)],
                                      off[static_cast<size_t>(i + 1)]));
    return t;
}

bool is_valid(const ValidTuple& t, const ConcatInput& input) {
    if (static_cast<int>(t.sets.size()) != input.k() - 1)
        throw std::invalid_argument("is_valid: tuple arity mismatch");
    for (int i = 0; i < input.k() - 1; ++i)
        if (t.sets[static_cast<size_t>(i)].width() !=
            input.dfas[static_cast<size_t>(i + 1)].state_count)
            throw std::invalid_argument("is_valid: set width mismatch at component " +
                                        std::to_string(i + 2));

    // (1) exactly one state of the first factor
    if (t.q < 0 || t.q >= input.dfas[0].state_count) return false;

    auto component_empty = [&](int i) { // i in 1..k-1 counts the tuple slots
        return t.sets[static_cast<size_t>(i - 1)].empty();
    };
    auto hits_finals = [&](int i) {
        if (i == 0) return input.dfas[0].is_final(t.q);
        return t.sets[static_cast<size_t>(i - 1)].intersects(
            input.dfas[static_cast<size_t>(i)].finals_set());
    };

    for (int i = 0; i + 1 < input.k(); ++i) {
        // (2) an empty component forces the next one empty
        if (i >= 1 && component_empty(i) && !component_empty(i + 1)) return false;
        // (3) hitting a middle factor's finals forces the next start in
        if (hits_finals(i)) {
            int s_next = input.dfas[static_cast<size_t>(i + 1)].start;
            if (!t.sets[static_cast<size_t>(i)].test(s_next)) return false;
        }
    }
    return true;
}

ConcatDeterminized determinize_concat(const ConcatInput& input, size_t cap) {
    input.validate();
    if (!input.is_strict())
        throw std::invalid_argument("determinize_concat: input is not strict");

    ConcatDeterminized out;
    Nfa nfa;
    if (input.strict_without_one_state_middles()) {
        nfa = build_concat_nfa(input).nfa;
    } else {
        // keep the epsilon closure in the subset construction so reachable
        // subsets match the direct product analysis
        nfa = build_concat_eps_nfa(input);
        out.used_eps_fallback = true;
    }

    SubsetAutomaton sub = subset_construct_labeled(nfa, cap);
    out.labels.reserve(sub.subsets.size());
    for (size_t i = 0; i < sub.subsets.size(); ++i) {
        ValidTuple t = decode_tuple(sub.subsets[i], input);
        if (!is_valid(t, input)) {
            std::ostringstream msg;
            msg << "determinize_concat: reachable subset " << i
                << " decodes to a non-valid tuple";
            throw InvalidReachable(msg.str());
        }
        out.labels.push_back(std::move(t));
    }
    out.dfa = std::move(sub.dfa);
    return out;
}

PipelineResult run_concat_pipeline(const std::vector<Dfa>& dfas, size_t cap) {
    ConcatInput input{dfas};
    input.validate();
    PipelineResult r;
    if (input.is_strict()) {
        ConcatDeterminized det = determinize_concat(input, cap);
        r.nfa_states = input.offsets().back();
        r.reachable = det.dfa.state_count;
        r.minimal = minimize(det.dfa).state_count;
        r.used_eps_fallback = det.used_eps_fallback;
    } else {
        Nfa nfa = build_concat_eps_nfa(input);
        Dfa d = subset_construct(nfa, cap);
        r.nfa_states = nfa.state_count;
        r.reachable = d.state_count;
        r.minimal = minimize(d).state_count;
        r.used_eps_fallback = true;
    }
    return r;
}

} // namespace mcat
