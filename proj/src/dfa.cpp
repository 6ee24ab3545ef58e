#include "mcat/dfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mcat {

bool Dfa::is_final(int q) const {
    return std::binary_search(finals.begin(), finals.end(), q);
}

int Dfa::symbol_index(std::string_view name) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown symbol: " + std::string(name));
}

StateSet Dfa::finals_set() const {
    StateSet s(state_count);
    for (int f : finals) s.set(f);
    return s;
}

void Dfa::validate() const {
    if (state_count <= 0) throw std::invalid_argument("dfa: state_count must be positive");
    if (alphabet.empty()) throw std::invalid_argument("dfa: alphabet must be non-empty");
    if (delta.size() != static_cast<size_t>(state_count) * alphabet.size())
        throw std::invalid_argument("dfa: delta is not total");
    if (start < 0 || start >= state_count)
        throw std::invalid_argument("dfa: start out of range");
    for (int f : finals)
        if (f < 0 || f >= state_count)
            throw std::invalid_argument("dfa: final state out of range");
    if (!std::is_sorted(finals.begin(), finals.end()) ||
        std::adjacent_find(finals.begin(), finals.end()) != finals.end())
        throw std::invalid_argument("dfa: finals must be sorted and unique");
    for (int t : delta)
        if (t < 0 || t >= state_count)
            throw std::invalid_argument("dfa: delta entry out of range");
    for (size_t i = 0; i + 1 < alphabet.size(); ++i)
        for (size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j])
                throw std::invalid_argument("dfa: duplicate symbol " + alphabet[i]);
}

Dfa make_dfa(int states, std::vector<std::string> alphabet, int start,
             std::vector<int> finals) {
    Dfa d;
    d.state_count = states;
    d.alphabet = std::move(alphabet);
    d.delta.assign(static_cast<size_t>(states) * d.alphabet.size(), 0);
    // identity on every symbol until told otherwise
    for (int q = 0; q < states; ++q)
        for (size_t a = 0; a < d.alphabet.size(); ++a)
            d.delta[static_cast<size_t>(q) * d.alphabet.size() + a] = q;
    d.start = start;
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
    d.finals = std::move(finals);
    return d;
}

bool dfa_accepts_indices(const Dfa& dfa, const std::vector<int>& word) {
    int q = dfa.start;
    for (int a : word) q = dfa.next(q, a);
    return dfa.is_final(q);
}

bool dfa_accepts(const Dfa& dfa, const std::vector<std::string>& word) {
    std::vector<int> idx;
    idx.reserve(word.size());
    for (const auto& s : word) idx.push_back(dfa.symbol_index(s));
    return dfa_accepts_indices(dfa, idx);
}

Dfa canonical_form(const Dfa& dfa) {
    const int na = static_cast<int>(dfa.alphabet.size());
    std::vector<int> order(dfa.state_count, -1); // old -> new
    std::vector<int> bfs;
    bfs.reserve(static_cast<size_t>(dfa.state_count));
    order[dfa.start] = 0;
    bfs.push_back(dfa.start);
    for (size_t h = 0; h < bfs.size(); ++h) {
        int q = bfs[h];
        for (int a = 0; a < na; ++a) {
            int t = dfa.next(q, a);
            if (order[t] < 0) {
                order[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    Dfa out;
    out.state_count = static_cast<int>(bfs.size());
    out.alphabet = dfa.alphabet;
    out.delta.resize(static_cast<size_t>(out.state_count) * dfa.alphabet.size());
    out.start = 0;
    for (int q = 0; q < out.state_count; ++q)
        for (int a = 0; a < na; ++a)
            out.delta[static_cast<size_t>(q) * dfa.alphabet.size() + a] =
                order[dfa.next(bfs[q], a)];
    for (int f : dfa.finals)
        if (order[f] >= 0) out.finals.push_back(order[f]);
    std::sort(out.finals.begin(), out.finals.end());
    return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("isomorphic: alphabet mismatch");
    Dfa ca = canonical_form(a);
    Dfa cb = canonical_form(b);
    return ca.state_count == cb.state_count && ca.delta == cb.delta &&
           ca.finals == cb.finals;
}

Dfa minimize(const Dfa& dfa) {
    const int na = static_cast<int>(dfa.alphabet.size());

    // reachable part first
    Dfa r = canonical_form(dfa);
    const int n = r.state_count;

    // Moore refinement: split classes by (final?, class of each successor)
    std::vector<int> cls(n);
    for (int q = 0; q < n; ++q) cls[q] = r.is_final(q) ? 1 : 0;
    int classes = 2;
    // all-final or all-non-final collapses to one class
    {
        bool any0 = false, any1 = false;
        for (int c : cls) (c ? any1 : any0) = true;
        if (!any0 || !any1) {
            std::fill(cls.begin(), cls.end(), 0);
            classes = 1;
        }
    }

    for (;;) {
        std::map<std::vector<int>, int> sig_to_class;
        std::vector<int> next_cls(n);
        std::vector<int> key(na + 1);
        for (int q = 0; q < n; ++q) {
            key[0] = cls[q];
            for (int a = 0; a < na; ++a) key[a + 1] = cls[r.next(q, a)];
            auto [it, inserted] =
                sig_to_class.emplace(key, static_cast<int>(sig_to_class.size()));
            next_cls[q] = it->second;
            (void)inserted;
        }
        int next_classes = static_cast<int>(sig_to_class.size());
        cls.swap(next_cls);
        if (next_classes == classes) break;
        classes = next_classes;
    }

    Dfa q;
    q.state_count = classes;
    q.alphabet = r.alphabet;
    q.delta.assign(static_cast<size_t>(classes) * r.alphabet.size(), 0);
    q.start = cls[r.start];
    std::vector<char> is_fin(static_cast<size_t>(classes), 0);
    for (int s = 0; s < n; ++s) {
        for (int a = 0; a < na; ++a)
            q.delta[static_cast<size_t>(cls[s]) * r.alphabet.size() + a] =
                cls[r.next(s, a)];
        if (r.is_final(s)) is_fin[static_cast<size_t>(cls[s])] = 1;
    }
    for (int c = 0; c < classes; ++c)
        if (is_fin[static_cast<size_t>(c)]) q.finals.push_back(c);

    return canonical_form(q);
}

} // namespace mcat
