#include <gtest/gtest.h>

#include "ban/dynamics.hpp"
#include "ban/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ban {
namespace {

using namespace ban::testing;
using V = std::vector<AutomatonId>;

TEST(Step, ReferenceSubsetUpdate) {
    const V updated{1, 2, 4};
    EXPECT_EQ(step(reference_network(), State::parse("111001"), updated).to_string(), "011101");
}

TEST(Step, EmptyUpdateIsIdentity) {
    const State x = State::parse("101010");
    EXPECT_EQ(step(reference_network(), x, V{}), x);
}

TEST(Step, GlobalNegation) {
    EXPECT_EQ(step(negation_network(3), State::parse("010"), V{1, 2, 3}).to_string(), "101");
}

TEST(Step, UnknownAutomaton) {
    EXPECT_THROW(step(rhythm_view(), State::parse("00000"), V{4}), std::invalid_argument);
}

TEST(ParallelStep, Examples) {
    EXPECT_EQ(parallel_step(negation_network(2), State::parse("00")).to_string(), "11");
    EXPECT_EQ(parallel_step(reference_network(), State::parse("111001")).to_string(), "010111");
    const State fixed = State::parse("0110");
    EXPECT_EQ(parallel_step(identity_network(4), fixed), fixed);
}

TEST(ScheduleText, ParseAndPrint) {
    const Schedule s = parse_schedule("3,2,4,1*");
    EXPECT_TRUE(s.periodic());
    EXPECT_EQ(s.blocks(), (std::vector<V>{{3}, {2}, {4}, {1}}));
    EXPECT_EQ(to_string(s), "3,2,4,1*");

    const Schedule b = parse_schedule(" {2, 1} , {3} * ");
    EXPECT_EQ(b.blocks(), (std::vector<V>{{1, 2}, {3}}));
    EXPECT_EQ(to_string(b), "{1,2},3*");
    EXPECT_TRUE(parse_schedule("").empty());

    EXPECT_THROW(parse_schedule("{}"), ParseError);
    EXPECT_THROW(parse_schedule("1,,2"), ParseError);
    EXPECT_THROW(parse_schedule("1*,2"), ParseError);
    EXPECT_THROW(parse_schedule("0"), ParseError);
}

TEST(RunSchedule, PeriodOfTheRhythm) {
    const auto traj = run_schedule(reference_network(), State::parse("111001"),
                                   parse_schedule("3,2,4,1"), 4);
    ASSERT_EQ(traj.size(), 5U);
    EXPECT_FALSE(traj.back()[0]);
}

TEST(RunSchedule, ZeroSteps) {
    const State x = State::parse("111001");
    EXPECT_EQ(run_schedule(reference_network(), x, parse_schedule("3,2"), 0), std::vector<State>{x});
}

TEST(RunSchedule, PeriodicRepeats) {
    const auto traj = run_schedule(negation_network(2), State::parse("01"), parse_schedule("{1,2}*"), 2);
    const std::vector<State> expected{State::parse("01"), State::parse("10"), State::parse("01")};
    EXPECT_EQ(traj, expected);
}

TEST(RunSchedule, FiniteScheduleRunsOut) {
    EXPECT_THROW(run_schedule(negation_network(2), State::parse("01"), parse_schedule("1,2"), 3),
                 std::invalid_argument);
}

TEST(TransitionGraph, NegationParallelTwoCycles) {
    const TransitionGraph g = transition_graph(negation_network(2), Mode::parallel());
    ASSERT_EQ(g.state_count(), 4U);
    EXPECT_EQ(g.successors(0b00)[0].target, 0b11U);
    EXPECT_EQ(g.successors(0b11)[0].target, 0b00U);
    EXPECT_EQ(g.successors(0b01)[0].target, 0b10U);
    EXPECT_EQ(g.successors(0b10)[0].target, 0b01U);
}

TEST(TransitionGraph, SingleNegationAsynchronous) {
    const TransitionGraph g = transition_graph(negation_network(1), Mode::asynchronous());
    ASSERT_EQ(g.edge_count(), 2U);
    EXPECT_EQ(g.successors(0)[0].target, 1U);
    EXPECT_EQ(g.successors(0)[0].automaton, 1U);
    EXPECT_EQ(g.successors(1)[0].target, 0U);
}

TEST(TransitionGraph, IdentityAsynchronousHasNoEdges) {
    EXPECT_EQ(transition_graph(identity_network(3), Mode::asynchronous()).edge_count(), 0U);
    const auto looped = transition_graph(identity_network(3), Mode::asynchronous(), {}, {true});
    EXPECT_EQ(looped.edge_count(), 8U);
}

TEST(TransitionGraph, ScheduledModeAppliesOnePass) {
    const Network net = reference_network();
    const Schedule s = parse_schedule("3,2,4,1*");
    const TransitionGraph g = transition_graph(net, Mode::scheduled(s));
    for (std::uint64_t x = 0; x < g.state_count(); ++x) {
        const auto traj = run_schedule(net, State::from_index(6, x), s, 4);
        EXPECT_EQ(g.successors(x)[0].target, traj.back().to_index());
    }
}

TEST(TransitionGraph, LimitIsEnforced) {
    Limits small;
    small.max_exhaustive = 3;
    try {
        (void)transition_graph(negation_network(4), Mode::parallel(), small);
        FAIL() << "expected LimitError";
    } catch (const LimitError& e) {
        EXPECT_EQ(e.limit(), "max-exhaustive");
        EXPECT_NE(std::string(e.what()).find("--max-exhaustive"), std::string::npos);
    }
}

TEST(TransitionGraph, Exports) {
    const TransitionGraph g = transition_graph(negation_network(1), Mode::asynchronous());
    EXPECT_EQ(to_dot(g), "digraph transitions {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"1\"];\n"
                         "  \"1\" -> \"0\" [label=\"1\"];\n}\n");
    EXPECT_EQ(to_json_lines(g),
              "{\"from\":\"0\",\"to\":\"1\",\"automaton\":1}\n{\"from\":\"1\",\"to\":\"0\",\"automaton\":1}\n");

    // Default labels put coordinate n first.
    const TransitionGraph p = transition_graph(parse_network("1: 1\n2: x2\n"), Mode::parallel());
    EXPECT_NE(to_dot(p).find("\"00\" -> \"01\""), std::string::npos);
    EXPECT_NE(to_dot(p, {true}).find("\"00\" -> \"10\""), std::string::npos);
}

TEST(FixedPoints, NegationHasNone) {
    for (AutomatonId n = 1; n <= 10; ++n) EXPECT_TRUE(fixed_points(negation_network(n)).empty());
}

TEST(FixedPoints, IdentityHasAll) { EXPECT_EQ(fixed_points(identity_network(5)).size(), 32U); }

TEST(FixedPoints, RhythmViewHasNone) {
    // Automaton 3 reads !x3, so it is unstable everywhere.
    EXPECT_TRUE(fixed_points(rhythm_view()).empty());
}

TEST(Attractors, NegationParallel) {
    const auto a = attractors(negation_network(2), Mode::parallel());
    ASSERT_EQ(a.size(), 2U);
    EXPECT_EQ(a[0].kind, Attractor::Kind::Cycle);
    EXPECT_EQ(a[0].states, (std::vector<State>{State::parse("00"), State::parse("11")}));
    EXPECT_EQ(a[1].states, (std::vector<State>{State::parse("10"), State::parse("01")}));
}

TEST(Attractors, IdentityFixedPoints) {
    const auto a = attractors(identity_network(3), Mode::asynchronous());
    ASSERT_EQ(a.size(), 8U);
    for (const auto& at : a) EXPECT_EQ(at.kind, Attractor::Kind::FixedPoint);
    EXPECT_EQ(attractors(identity_network(3), Mode::parallel()).size(), 8U);
}

TEST(Attractors, SingleNegation) {
    const Network net({{3, parse_expr("!x3")}});
    const auto a = attractors(net, Mode::parallel());
    ASSERT_EQ(a.size(), 1U);
    EXPECT_EQ(a[0].kind, Attractor::Kind::Cycle);
    EXPECT_EQ(a[0].states.size(), 2U);
}

TEST(Attractors, AsynchronousTerminalComponents) {
    // Reference network: 3 oscillates forever, so every terminal component
    // is larger than a state.
    const auto a = attractors(reference_network(), Mode::asynchronous());
    ASSERT_FALSE(a.empty());
    const TransitionGraph g = transition_graph(reference_network(), Mode::asynchronous());
    for (const auto& at : a) {
        EXPECT_EQ(at.kind, Attractor::Kind::Complex);
        for (const auto& s : at.states) {
            for (const auto& e : g.successors(s.to_index())) {
                EXPECT_TRUE(std::binary_search(at.states.begin(), at.states.end(),
                                               State::from_index(6, e.target)));
            }
        }
    }
}

TEST(Dynamics, IndependentBlocksCommute) {
    // 1 and 2 do not read each other: updating {1} then {2} equals {1,2}.
    const Network net = parse_network("1: x1 ^ x3\n2: !x2 | x3\n3: x1 & x2\n");
    for (std::uint64_t s = 0; s < 8; ++s) {
        const State x = State::from_index(3, s);
        EXPECT_EQ(step(net, step(net, x, V{1}), V{2}), step(net, x, V{1, 2}));
    }
}

}  // namespace
}  // namespace ban
