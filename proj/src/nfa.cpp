#include "mcat/nfa.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace mcat {

void Nfa::add_transition(int from, int sym, int to) {
    transitions.push_back({from, sym, to});
}

void Nfa::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()),
                      transitions.end());
    std::sort(initials.begin(), initials.end());
    initials.erase(std::unique(initials.begin(), initials.end()), initials.end());
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
}

void Nfa::validate() const {
    if (state_count <= 0) throw std::invalid_argument("nfa: state_count must be positive");
    auto in_range = [&](int q) { return q >= 0 && q < state_count; };
    for (const auto& t : transitions) {
        if (!in_range(t.from) || !in_range(t.to))
            throw std::invalid_argument("nfa: transition state out of range");
        if (t.sym != kEpsilon &&
            (t.sym < 0 || t.sym >= static_cast<int>(alphabet.size())))
            throw std::invalid_argument("nfa: transition symbol out of range");
    }
    for (int q : initials)
        if (!in_range(q)) throw std::invalid_argument("nfa: initial state out of range");
    for (int q : finals)
        if (!in_range(q)) throw std::invalid_argument("nfa: final state out of range");
}

bool Nfa::has_epsilon() const {
    for (const auto& t : transitions)
        if (t.sym == kEpsilon) return true;
    return false;
}

StateSet Nfa::finals_set() const {
    StateSet s(state_count);
    for (int f : finals) s.set(f);
    return s;
}

Nfa nfa_from_dfa(const Dfa& dfa) {
    Nfa n;
    n.state_count = dfa.state_count;
    n.alphabet = dfa.alphabet;
    n.initials = {dfa.start};
    n.finals = dfa.finals;
    for (int q = 0; q < dfa.state_count; ++q)
        for (int a = 0; a < static_cast<int>(dfa.alphabet.size()); ++a)
            n.add_transition(q, a, dfa.next(q, a));
    n.normalize();
    return n;
}

Nfa reverse(const Nfa& nfa) {
    Nfa r;
    r.state_count = nfa.state_count;
    r.alphabet = nfa.alphabet;
    r.initials = nfa.finals;
    r.finals = nfa.initials;
    r.transitions.reserve(nfa.transitions.size());
    for (const auto& t : nfa.transitions) r.add_transition(t.to, t.sym, t.from);
    r.normalize();
    return r;
}

namespace {

// closure[q] = set of states reachable from q via epsilon transitions
std::vector<StateSet> epsilon_closures(const Nfa& nfa) {
    std::vector<std::vector<int>> eps_adj(static_cast<size_t>(nfa.state_count));
    for (const auto& t : nfa.transitions)
        if (t.sym == kEpsilon) eps_adj[static_cast<size_t>(t.from)].push_back(t.to);

    std::vector<StateSet> closure(static_cast<size_t>(nfa.state_count),
                                  StateSet(nfa.state_count));
    for (int q = 0; q < nfa.state_count; ++q) {
        std::queue<int> bfs;
        bfs.push(q);
        closure[static_cast<size_t>(q)].set(q);
        while (!bfs.empty()) {
            int p = bfs.front();
            bfs.pop();
            for (int r : eps_adj[static_cast<size_t>(p)])
                if (!closure[static_cast<size_t>(q)].test(r)) {
                    closure[static_cast<size_t>(q)].set(r);
                    bfs.push(r);
                }
        }
    }
    return closure;
}

} // namespace

Nfa eliminate_epsilon(const Nfa& nfa) {
    if (!nfa.has_epsilon()) return nfa;
    auto closure = epsilon_closures(nfa);
    StateSet fin = nfa.finals_set();

    Nfa out;
    out.state_count = nfa.state_count;
    out.alphabet = nfa.alphabet;
    out.initials = nfa.initials;
    for (int q = 0; q < nfa.state_count; ++q)
        if (closure[static_cast<size_t>(q)].intersects(fin)) out.finals.push_back(q);

    // p --a--> r  iff  exists q in E({p}) with (q,a,q0) and r in E({q0})
    for (int p = 0; p < nfa.state_count; ++p) {
        StateSet from = closure[static_cast<size_t>(p)];
        for (const auto& t : nfa.transitions) {
            if (t.sym == kEpsilon || !from.test(t.from)) continue;
            closure[static_cast<size_t>(t.to)].for_each(
                [&](int r) { out.add_transition(p, t.sym, r); });
        }
    }
    out.normalize();
    return out;
}

SubsetAutomaton subset_construct_labeled(const Nfa& nfa, size_t cap) {
    if (cap == 0) throw std::invalid_argument("subset_construct: cap must be positive");
    const int na = static_cast<int>(nfa.alphabet.size());
    const bool eps = nfa.has_epsilon();

    // adjacency per (state, symbol), epsilon-closed when needed
    std::vector<std::vector<std::vector<int>>> adj(
        static_cast<size_t>(nfa.state_count),
        std::vector<std::vector<int>>(static_cast<size_t>(na)));
    StateSet init(nfa.state_count);
    if (eps) {
        auto closure = epsilon_closures(nfa);
        for (const auto& t : nfa.transitions)
            if (t.sym != kEpsilon)
                closure[static_cast<size_t>(t.to)].for_each([&](int r) {
                    adj[static_cast<size_t>(t.from)][static_cast<size_t>(t.sym)]
                        .push_back(r);
                });
        for (auto& per_state : adj)
            for (auto& lst : per_state) {
                std::sort(lst.begin(), lst.end());
                lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
            }
        for (int q : nfa.initials) init |= closure[static_cast<size_t>(q)];
    } else {
        for (const auto& t : nfa.transitions)
            adj[static_cast<size_t>(t.from)][static_cast<size_t>(t.sym)].push_back(t.to);
        for (int q : nfa.initials) init.set(q);
    }
    StateSet fin = nfa.finals_set();

    std::unordered_map<StateSet, int, StateSetHash> index;
    std::vector<StateSet> subsets;
    std::vector<int> delta;

    index.emplace(init, 0);
    subsets.push_back(init);
    for (size_t h = 0; h < subsets.size(); ++h) {
        StateSet cur = subsets[h]; // copy: subsets may reallocate below
        for (int a = 0; a < na; ++a) {
            StateSet nxt(nfa.state_count);
            cur.for_each([&](int q) {
                for (int r : adj[static_cast<size_t>(q)][static_cast<size_t>(a)])
                    nxt.set(r);
            });
            auto [it, inserted] = index.emplace(nxt, static_cast<int>(subsets.size()));
            if (inserted) {
                if (subsets.size() >= cap)
                    throw CapExceeded("subset_construct: more than " +
                                      std::to_string(cap) + " reachable subsets");
                subsets.push_back(std::move(nxt));
            }
            delta.push_back(it->second);
        }
    }

    SubsetAutomaton out;
    out.dfa.state_count = static_cast<int>(subsets.size());
    out.dfa.alphabet = nfa.alphabet;
    out.dfa.delta = std::move(delta);
    out.dfa.start = 0;
    for (size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i].intersects(fin)) out.dfa.finals.push_back(static_cast<int>(i));
    out.subsets = std::move(subsets);
    return out;
}

Dfa subset_construct(const Nfa& nfa, size_t cap) {
    return subset_construct_labeled(nfa, cap).dfa;
}

std::vector<int> co_reachable_singletons(const Nfa& nfa, size_t cap) {
    SubsetAutomaton rev = subset_construct_labeled(reverse(nfa), cap);
    std::vector<int> out;
    for (const auto& s : rev.subsets)
        if (s.count() == 1) out.push_back(s.min_element());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace mcat
