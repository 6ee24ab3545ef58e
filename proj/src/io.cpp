#include "mcat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mcat/transform.hpp"

namespace mcat::io {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_state_1based(const std::string& tok, int n, const char* what) {
    size_t used = 0;
    long v;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("automaton: bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > n)
        throw ParseError(std::string("automaton: ") + what + " " + tok +
                         " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

} // namespace

Dfa read_dfa_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    int states = -1;
    std::vector<std::string> alphabet;
    int start = -1;
    std::vector<int> finals;
    bool have_finals = false;
    std::map<std::string, std::string> transform_lines;

    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("automaton: missing ':' in line '" + t + "'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (key == "states") {
            states = static_cast<int>(std::stol(value));
            if (states <= 0) throw ParseError("automaton: states must be positive");
        } else if (key == "alphabet") {
            alphabet = split_ws(value);
            if (alphabet.empty()) throw ParseError("automaton: empty alphabet");
        } else if (key == "start") {
            if (states < 0) throw ParseError("automaton: start before states");
            start = parse_state_1based(value, states, "start state");
        } else if (key == "finals") {
            if (states < 0) throw ParseError("automaton: finals before states");
            for (const auto& tok : split_ws(value))
                finals.push_back(parse_state_1based(tok, states, "final state"));
            have_finals = true;
        } else {
            if (!transform_lines.emplace(key, value).second)
                throw ParseError("automaton: duplicate transform line for symbol " + key);
        }
    }
    if (states < 0) throw ParseError("automaton: missing states");
    if (alphabet.empty()) throw ParseError("automaton: missing alphabet");
    if (start < 0) throw ParseError("automaton: missing start");
    if (!have_finals) throw ParseError("automaton: missing finals");

    Dfa dfa = make_dfa(states, alphabet, start, finals);
    for (const auto& [sym, spec_text] : transform_lines) {
        bool known = false;
        for (const auto& a : alphabet)
            if (a == sym) known = true;
        if (!known) throw ParseError("automaton: transform for unlisted symbol " + sym);
    }
    for (size_t a = 0; a < alphabet.size(); ++a) {
        auto it = transform_lines.find(alphabet[a]);
        if (it == transform_lines.end())
            throw ParseError("automaton: missing transform line for symbol " + alphabet[a]);
        auto map = parse_transform(it->second, states).to_map(states);
        for (int q = 0; q < states; ++q)
            dfa.next_ref(q, static_cast<int>(a)) = map[static_cast<size_t>(q)];
    }
    dfa.validate();
    return dfa;
}

std::string write_dfa_text(const Dfa& dfa) {
    std::ostringstream out;
    out << "states: " << dfa.state_count << '\n';
    out << "alphabet:";
    for (const auto& a : dfa.alphabet) out << ' ' << a;
    out << '\n';
    out << "start: " << dfa.start + 1 << '\n';
    out << "finals:";
    for (int f : dfa.finals) out << ' ' << f + 1;
    out << '\n';
    for (size_t a = 0; a < dfa.alphabet.size(); ++a) {
        std::vector<int> map(static_cast<size_t>(dfa.state_count));
        for (int q = 0; q < dfa.state_count; ++q)
            map[static_cast<size_t>(q)] = dfa.next(q, static_cast<int>(a));
        out << dfa.alphabet[a] << ": " << format_transform(map) << '\n';
    }
    return out.str();
}

Dfa dfa_from_json(const nlohmann::json& j) {
    int states = j.at("states").get<int>();
    auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
    int start = j.at("start").get<int>() - 1;
    std::vector<int> finals;
    for (int f : j.at("finals").get<std::vector<int>>()) finals.push_back(f - 1);
    if (start < 0 || start >= states) throw ParseError("automaton: start out of range");
    for (int f : finals)
        if (f < 0 || f >= states) throw ParseError("automaton: final out of range");

    Dfa dfa = make_dfa(states, alphabet, start, finals);
    const auto& tr = j.at("transforms");
    for (size_t a = 0; a < dfa.alphabet.size(); ++a) {
        if (!tr.contains(dfa.alphabet[a]))
            throw ParseError("automaton: missing transform for symbol " + dfa.alphabet[a]);
        auto map = parse_transform(tr.at(dfa.alphabet[a]).get<std::string>(), states)
                       .to_map(states);
        for (int q = 0; q < states; ++q)
            dfa.next_ref(q, static_cast<int>(a)) = map[static_cast<size_t>(q)];
    }
    if (tr.size() != dfa.alphabet.size())
        throw ParseError("automaton: transform object has unlisted symbols");
    dfa.validate();
    return dfa;
}

nlohmann::json dfa_to_json(const Dfa& dfa) {
    nlohmann::json j;
    j["states"] = dfa.state_count;
    j["alphabet"] = dfa.alphabet;
    j["start"] = dfa.start + 1;
    std::vector<int> finals;
    for (int f : dfa.finals) finals.push_back(f + 1);
    j["finals"] = finals;
    nlohmann::json tr = nlohmann::json::object();
    for (size_t a = 0; a < dfa.alphabet.size(); ++a) {
        std::vector<int> map(static_cast<size_t>(dfa.state_count));
        for (int q = 0; q < dfa.state_count; ++q)
            map[static_cast<size_t>(q)] = dfa.next(q, static_cast<int>(a));
        tr[dfa.alphabet[a]] = format_transform(map);
    }
    j["transforms"] = std::move(tr);
    return j;
}

std::string write_dfa_dot(const Dfa& dfa, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point];\n";
    for (int q = 0; q < dfa.state_count; ++q) {
        out << "  q" << q + 1 << " [label=\"" << q + 1 << '"';
        if (dfa.is_final(q)) out << " shape=doublecircle";
        out << "];\n";
    }
    out << "  __start -> q" << dfa.start + 1 << ";\n";
    for (int q = 0; q < dfa.state_count; ++q) {
        // merge parallel edges into one label
        std::map<int, std::string> by_target;
        for (size_t a = 0; a < dfa.alphabet.size(); ++a) {
            int t = dfa.next(q, static_cast<int>(a));
            auto& label = by_target[t];
            if (!label.empty()) label += ",";
            label += dfa.alphabet[a];
        }
        for (const auto& [t, label] : by_target)
            out << "  q" << q + 1 << " -> q" << t + 1 << " [label=\"" << label
                << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

Dfa read_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (ends_with(path, ".json"))
        return dfa_from_json(nlohmann::json::parse(buf.str()));
    return read_dfa_text(buf.str());
}

void write_dfa_file(const Dfa& dfa, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    if (ends_with(path, ".json"))
        out << dfa_to_json(dfa).dump(2) << '\n';
    else if (ends_with(path, ".dot"))
        out << write_dfa_dot(dfa);
    else
        out << write_dfa_text(dfa);
}

} // namespace mcat::io
