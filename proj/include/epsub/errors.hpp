#pragma once

#include <stdexcept>
#include <string>

namespace epsub {

// Base for all toolkit errors; CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: loops, out-of-range vertices, violated preconditions.
struct MalformedInputError : Error {
    explicit MalformedInputError(const std::string& what) : Error(what) {}
};

// Pattern graph the search does not support (no edges, isolated vertices).
struct UnsupportedPatternError : Error {
    explicit UnsupportedPatternError(const std::string& what) : Error(what) {}
};

// A search or rewrite loop ran out of its configured budget.
struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// A property the algorithm guarantees failed to re-verify. Never swallowed.
struct InternalInvariantError : Error {
    explicit InternalInvariantError(const std::string& what) : Error(what) {}
};

// maximal_separation: no path from y to A at all.
struct NoDangerousPathError : Error {
    explicit NoDangerousPathError(const std::string& what) : Error(what) {}
};

// maximal_separation: caller should have taken the disjoint-paths branch.
struct WrongBranchError : Error {
    explicit WrongBranchError(const std::string& what) : Error(what) {}
};

}  // namespace epsub
