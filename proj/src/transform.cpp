#include "mcat/transform.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mcat {

namespace {

struct Scanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("transform: expected '" + std::string(1, c) + "' at offset " +
                             std::to_string(pos));
        ++pos;
    }
    bool consume(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_arrow() {
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }
    int number(int n) {
        skip_ws();
        size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == begin) throw ParseError("transform: expected state number at offset " +
                                           std::to_string(pos));
        long v = std::stol(std::string(text.substr(begin, pos - begin)));
        if (v < 1 || v > n)
            throw ParseError("transform: state " + std::to_string(v) +
                             " out of range 1.." + std::to_string(n));
        return static_cast<int>(v - 1); // to 0-based
    }
};

} // namespace

TransformSpec parse_transform(std::string_view text, int n) {
    if (n <= 0) throw ParseError("transform: state count must be positive");
    TransformSpec spec;
    Scanner sc{text};
    while (!sc.done()) {
        sc.expect('(');
        sc.skip_ws();
        TransformAtom atom;
        if (sc.consume('{')) {
            atom.kind = TransformAtom::Kind::Collapse;
            atom.states.push_back(sc.number(n));
            sc.skip_ws();
            while (sc.consume(',')) {
                atom.states.push_back(sc.number(n));
                sc.skip_ws();
            }
            sc.expect('}');
            sc.skip_ws();
            if (!sc.consume_arrow()) throw ParseError("transform: collapse needs '->'");
            atom.target = sc.number(n);
            sc.skip_ws();
        } else {
            atom.states.push_back(sc.number(n));
            sc.skip_ws();
            if (sc.consume_arrow()) {
                atom.kind = TransformAtom::Kind::Chain;
                atom.states.push_back(sc.number(n));
                sc.skip_ws();
                while (sc.consume_arrow()) {
                    atom.states.push_back(sc.number(n));
                    sc.skip_ws();
                }
            } else if (sc.peek() == ',') {
                atom.kind = TransformAtom::Kind::Cycle;
                while (sc.consume(',')) {
                    atom.states.push_back(sc.number(n));
                    sc.skip_ws();
                }
            } else {
                atom.kind = TransformAtom::Kind::Identity;
            }
        }
        sc.expect(')');
        spec.atoms.push_back(std::move(atom));
    }
    if (spec.atoms.empty()) throw ParseError("transform: empty specification");
    spec.to_map(n); // surface conflicts at parse time
    return spec;
}

std::vector<int> TransformSpec::to_map(int n) const {
    std::vector<int> map(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) map[static_cast<size_t>(i)] = i;
    std::vector<char> assigned(static_cast<size_t>(n), 0);

    auto put = [&](int src, int img) {
        if (assigned[static_cast<size_t>(src)] && map[static_cast<size_t>(src)] != img)
            throw ParseError("transform: state " + std::to_string(src + 1) +
                             " has conflicting images " +
                             std::to_string(map[static_cast<size_t>(src)] + 1) + " and " +
                             std::to_string(img + 1));
        assigned[static_cast<size_t>(src)] = 1;
        map[static_cast<size_t>(src)] = img;
    };

    for (const auto& atom : atoms) {
        switch (atom.kind) {
        case TransformAtom::Kind::Identity:
            break;
        case TransformAtom::Kind::Cycle:
            for (size_t i = 0; i < atom.states.size(); ++i)
                put(atom.states[i], atom.states[(i + 1) % atom.states.size()]);
            break;
        case TransformAtom::Kind::Chain:
            for (size_t i = 0; i + 1 < atom.states.size(); ++i)
                put(atom.states[i], atom.states[i + 1]);
            break;
        case TransformAtom::Kind::Collapse:
            for (int s : atom.states) put(s, atom.target);
            break;
        }
    }
    return map;
}

bool is_permutation(const std::vector<int>& map) {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

std::string format_transform(const std::vector<int>& map) {
    const int n = static_cast<int>(map.size());
    std::vector<char> emitted(map.size(), 0); // sources already covered
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << ' ';
        first = false;
    };

    // cycles of length >= 2
    std::vector<char> visited(map.size(), 0);
    for (int q = 0; q < n; ++q) {
        if (visited[static_cast<size_t>(q)]) continue;
        // walk to find a cycle through q's orbit
        int slow = q;
        std::vector<char> on_path(map.size(), 0);
        while (!visited[static_cast<size_t>(slow)] && !on_path[static_cast<size_t>(slow)]) {
            on_path[static_cast<size_t>(slow)] = 1;
            slow = map[static_cast<size_t>(slow)];
        }
        if (!visited[static_cast<size_t>(slow)]) {
            // slow sits on a fresh cycle
            std::vector<int> cyc;
            int c = slow;
            do {
                cyc.push_back(c);
                c = map[static_cast<size_t>(c)];
            } while (c != slow);
            if (cyc.size() >= 2) {
                std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()),
                            cyc.end());
                sep();
                out << '(';
                for (size_t i = 0; i < cyc.size(); ++i)
                    out << (i ? "," : "") << cyc[i] + 1;
                out << ')';
                for (int s : cyc) emitted[static_cast<size_t>(s)] = 1;
            }
        }
        // mark the whole orbit as visited
        int c = q;
        while (!visited[static_cast<size_t>(c)]) {
            visited[static_cast<size_t>(c)] = 1;
            c = map[static_cast<size_t>(c)];
        }
    }

    auto pending = [&](int q) {
        return map[static_cast<size_t>(q)] != q && !emitted[static_cast<size_t>(q)];
    };

    // collapse atoms for targets with several pending sources
    for (int t = 0; t < n; ++t) {
        std::vector<int> srcs;
        for (int q = 0; q < n; ++q)
            if (pending(q) && map[static_cast<size_t>(q)] == t) srcs.push_back(q);
        if (srcs.size() >= 2) {
            sep();
            out << "({";
            for (size_t i = 0; i < srcs.size(); ++i) out << (i ? "," : "") << srcs[i] + 1;
            out << "}->" << t + 1 << ')';
            for (int s : srcs) emitted[static_cast<size_t>(s)] = 1;
        }
    }

    // what remains are single-source edges; stitch maximal chains
    std::vector<int> in_deg(map.size(), 0);
    for (int q = 0; q < n; ++q)
        if (pending(q)) ++in_deg[static_cast<size_t>(map[static_cast<size_t>(q)])];
    for (int q = 0; q < n; ++q) {
        if (!pending(q) || in_deg[static_cast<size_t>(q)] > 0) continue;
        std::vector<int> chain{q};
        int c = q;
        while (pending(c)) {
            emitted[static_cast<size_t>(c)] = 1;
            c = map[static_cast<size_t>(c)];
            chain.push_back(c);
        }
        sep();
        out << '(';
        for (size_t i = 0; i < chain.size(); ++i)
            out << (i ? "->" : "") << chain[i] + 1;
        out << ')';
    }

    if (first) return "(1)";
    return out.str();
}

} // namespace mcat
