#pragma once

// Networks and perspectives shared by the test suites.

#include <map>

#include "ban/network.hpp"
#include "ban/perspective.hpp"

namespace ban::testing {

/// Six automata; automata 1 to 4 form the rhythmic core of the projections.
inline Network reference_network() {
    return parse_network(
        "1: x4 & (!x2 | !x3)\n"
        "2: x3\n"
        "3: !x3\n"
        "4: x2 | x3\n"
        "5: x1 | x6\n"
        "6: x6 | x5\n");
}

/// What is seen of the reference network when 4 fires right before 1 and
/// is hidden.
inline Network xor_view() {
    return parse_network(
        "1: x2 ^ x3\n"
        "2: x3\n"
        "3: !x3\n"
        "5: x1 | x6\n"
        "6: x6 | x5\n");
}

/// What is seen when 1..4 follow the period 3,2,4,1 and 4 is hidden.
inline Network rhythm_view() {
    return parse_network(
        "1: 0\n"
        "2: !x3\n"
        "3: !x3\n"
        "5: x6\n"
        "6: x6 | x5\n");
}

inline Network negation_network(AutomatonId n) {
    std::map<AutomatonId, Expr> f;
    for (AutomatonId i = 1; i <= n; ++i) f.emplace(i, !Expr::var(i));
    return Network(std::move(f));
}

inline Network identity_network(AutomatonId n) {
    std::map<AutomatonId, Expr> f;
    for (AutomatonId i = 1; i <= n; ++i) f.emplace(i, Expr::var(i));
    return Network(std::move(f));
}

inline ObservationSpec relay_spec() {
    return ObservationSpec{{4}, {1, 4}, Schedule({{4}, {1}}, false), false};
}

inline ObservationSpec rhythm_spec() {
    return ObservationSpec{{4}, {1, 2, 3, 4}, Schedule({{3}, {2}, {4}, {1}}, false), true};
}

}  // namespace ban::testing
