#ifndef MCAT_IO_HPP
#define MCAT_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "mcat/dfa.hpp"

namespace mcat::io {

/// Text automaton format, states 1-based:
///   states: 4
///   alphabet: a1 a2 b
///   start: 1
///   finals: 4
///   a1: (1,2,3,4)
///   a2: (1)
///   b: (1->2)
/// Every alphabet symbol must have exactly one transform line; a line for an
/// unlisted symbol is an error.
Dfa read_dfa_text(std::string_view text);
std::string write_dfa_text(const Dfa& dfa);

Dfa dfa_from_json(const nlohmann::json& j);
nlohmann::json dfa_to_json(const Dfa& dfa);

/// Graphviz rendering; node labels use the 1-based numbering.
std::string write_dfa_dot(const Dfa& dfa, std::string_view name = "dfa");

Dfa read_dfa_file(const std::string& path); // .json by extension, text otherwise
void write_dfa_file(const Dfa& dfa, const std::string& path);

} // namespace mcat::io

#endif
