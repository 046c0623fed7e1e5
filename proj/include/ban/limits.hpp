#pragma once

#include <cstddef>

namespace ban {

/// Size limits for the exhaustive analyses. Surfaced on the command line as
/// --max-support and --max-exhaustive.
struct Limits {
    /// Largest variable support for which a truth table is built.
    std::size_t max_support = 16;
    /// Largest automaton count for which the state space is enumerated.
    std::size_t max_exhaustive = 20;
};

}  // namespace ban
