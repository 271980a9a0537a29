#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lclaw/graph.hpp"

namespace lclaw {

struct ClassTag {
    enum class Kind { ClawFree, TwoK2Free, LClaw };
    Kind kind = Kind::ClawFree;
    int l = 0; ///< meaningful for LClaw only

    bool operator==(const ClassTag&) const = default;
};

/// A named weighted graph instance with an optional (advisory, re-checkable)
/// declared class.
struct Instance {
    std::string name;
    Graph graph;
    Weights weights;
    std::optional<ClassTag> tag;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        MalformedHeader,
        MissingHeader,
        MalformedLine,
        VertexOutOfRange,
        DuplicateEdge,
        SelfLoop,
        EdgeCountMismatch,
    };

    ParseError(Kind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// DIMACS-style text: `c` comments, one `p edge <n> <m>` header, edge lines
/// `e <u> <v>` (1-based), optional vertex-weight lines `n <v> <w>` (default
/// weight 1). `c name <str>` and `c class clawfree|2k2free|lclaw <l>`
/// comments round-trip the instance metadata.
Instance parse_dimacs(std::string_view text);

/// Canonical form: metadata comments, header, weight lines for non-unit
/// weights (ascending vertex), edges with u < v in lexicographic order.
/// parse_dimacs(emit_dimacs(i)) reproduces i; emitting again is bit-exact.
std::string emit_dimacs(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

} // namespace lclaw
