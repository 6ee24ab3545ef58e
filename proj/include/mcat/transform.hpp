#ifndef MCAT_TRANSFORM_HPP
#define MCAT_TRANSFORM_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcat {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// One atom of the transformation notation:
///   (1,2,3)      cycle       1->2, 2->3, 3->1
///   (1->2->3)    chain       1->2, 2->3, 3 fixed
///   ({1,2}->3)   collapse    1->3, 2->3
///   (1)          identity
/// States are 1-based in text and 0-based in `states`/`target`.
struct TransformAtom {
    enum class Kind { Cycle, Chain, Collapse, Identity };
    Kind kind = Kind::Identity;
    std::vector<int> states;
    int target = -1; // collapse only
};

struct TransformSpec {
    std::vector<TransformAtom> atoms;

    /// Induced total map on {0,...,n-1}; unmentioned states are fixed.
    /// Throws ParseError when two atoms give one state different images.
    std::vector<int> to_map(int n) const;
};

/// Parses whitespace-separated atoms; checks indices against n and rejects
/// conflicting images.
TransformSpec parse_transform(std::string_view text, int n);

/// Notation for an arbitrary total map (cycles, then maximal chains, then
/// collapses; "(1)" for the identity). parse_transform(format(m)) == m.
std::string format_transform(const std::vector<int>& map);

bool is_permutation(const std::vector<int>& map);

} // namespace mcat

#endif
