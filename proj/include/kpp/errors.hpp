// Copyright 2026 the kpp authors
// License: Apache License 2.0
#pragma once

#include <stdexcept>
#include <string>

namespace kpp {

// Malformed input text (edge lists, partition files).
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale limit (oracle size cap, exact-tier threshold) was exceeded.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// No [f,g]-factor exists for the given bounds.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that upstream code must establish was violated.
// Signals a bug, never a bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kpp
