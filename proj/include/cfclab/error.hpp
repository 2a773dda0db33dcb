#pragma once

#include <stdexcept>
#include <string>

namespace cfclab {

enum class errc {
    cycle_detected,
    disconnected,
    self_loop,
    duplicate_edge,
    bad_label,
    same_vertex,
    bad_edge_index,
    trivial_tree,
    coverage_error,
    not_a_leaf,
    not_a_subtree,
    bad_params,
    no_construction,
    too_large,
    budget_exceeded,
    parse_error,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::disconnected: return "Disconnected";
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::bad_label: return "BadLabel";
        case errc::same_vertex: return "SameVertex";
        case errc::bad_edge_index: return "BadEdgeIndex";
        case errc::trivial_tree: return "TrivialTree";
        case errc::coverage_error: return "CoverageError";
        case errc::not_a_leaf: return "NotALeaf";
        case errc::not_a_subtree: return "NotASubtree";
        case errc::bad_params: return "BadParams";
        case errc::no_construction: return "NoConstruction";
        case errc::too_large: return "TooLarge";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace cfclab
