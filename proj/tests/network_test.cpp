#include <gtest/gtest.h>

#include "ban/error.hpp"
#include "ban/network.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ban {
namespace {

using namespace ban::testing;
using V = std::vector<AutomatonId>;

TEST(State, StringAndIndexOrder) {
    const State x = State::parse("111001");
    EXPECT_EQ(x.to_string(), "111001");
    EXPECT_EQ(x.to_index(), 0b100111U);
    EXPECT_EQ(State::from_index(6, 0b100111U), x);
    EXPECT_LT(State::parse("100"), State::parse("010"));
    EXPECT_THROW(State::parse("10a"), ParseError);
}

TEST(Network, RejectsDanglingVariables) {
    EXPECT_THROW(Network({{1, parse_expr("x2")}}), std::invalid_argument);
}

TEST(Network, GapsIndexBySortedIds) {
    const Network net = rhythm_view();
    EXPECT_EQ(V(net.ids().begin(), net.ids().end()), (V{1, 2, 3, 5, 6}));
    EXPECT_EQ(net.position(5), 3U);
    EXPECT_THROW(net.position(4), std::out_of_range);
}

TEST(UnstableSet, ReferenceState) {
    EXPECT_EQ(unstable_set(reference_network(), State::parse("111001")), (V{1, 3, 4, 5}));
}

TEST(UnstableSet, RhythmViewAtZero) {
    EXPECT_EQ(unstable_set(rhythm_view(), State::parse("00000")), (V{2, 3}));
}

TEST(UnstableSet, IdentityHasNone) {
    const Network id = identity_network(4);
    for (std::uint64_t s = 0; s < 16; ++s) EXPECT_TRUE(unstable_set(id, State::from_index(4, s)).empty());
}

TEST(InteractionDigraph, ReferenceArcs) {
    const SignedDigraph g = interaction_digraph(reference_network());
    // Frozen from the flip-every-coordinate oracle.
    const std::vector<Arc> expected = {
        {1, 5, InfluenceSign::Positive}, {2, 1, InfluenceSign::Negative},
        {2, 4, InfluenceSign::Positive}, {3, 1, InfluenceSign::Negative},
        {3, 2, InfluenceSign::Positive}, {3, 3, InfluenceSign::Negative},
        {3, 4, InfluenceSign::Positive}, {4, 1, InfluenceSign::Positive},
        {5, 6, InfluenceSign::Positive}, {6, 5, InfluenceSign::Positive},
        {6, 6, InfluenceSign::Positive},
    };
    EXPECT_EQ(std::vector<Arc>(g.arcs().begin(), g.arcs().end()), expected);

    std::vector<std::pair<AutomatonId, AutomatonId>> pairs;
    for (const Arc& a : g.arcs()) pairs.emplace_back(a.source, a.target);
    EXPECT_EQ(pairs, brute_arcs(reference_network()));
}

TEST(InteractionDigraph, ConstantsHaveNoArcs) {
    const Network net({{1, Expr::constant(true)}, {2, Expr::constant(false)}});
    EXPECT_TRUE(interaction_digraph(net).arcs().empty());
}

TEST(InteractionDigraph, NegationSelfLoops) {
    const SignedDigraph g = interaction_digraph(negation_network(3));
    ASSERT_EQ(g.arcs().size(), 3U);
    for (const Arc& a : g.arcs()) {
        EXPECT_EQ(a.source, a.target);
        EXPECT_EQ(a.sign, InfluenceSign::Negative);
    }
}

TEST(InteractionDigraph, SyntacticOccurrenceIsNotAnArc) {
    const Network net({{1, parse_expr("x1 | x2 & !x2")}, {2, parse_expr("x2")}});
    EXPECT_FALSE(interaction_digraph(net).has_arc(2, 1));
}

TEST(Monotony, ReferenceIsMonotone) {
    EXPECT_TRUE(is_monotone(reference_network()).monotone);
    EXPECT_TRUE(is_monotone(Network{}).monotone);
}

TEST(Monotony, XorViewWitness) {
    const Network net = xor_view();
    const MonotonyResult r = is_monotone(net);
    ASSERT_FALSE(r.monotone);
    ASSERT_TRUE(r.witness);
    const auto& w = *r.witness;
    EXPECT_EQ(w.arc.source, 2U);
    EXPECT_EQ(w.arc.target, 1U);
    EXPECT_EQ(w.rising.to_string(), "01000");
    EXPECT_EQ(w.falling.to_string(), "01100");

    const std::size_t k = net.position(w.arc.source);
    State rising_flip = w.rising;
    rising_flip.flip(k);
    State falling_flip = w.falling;
    falling_flip.flip(k);
    EXPECT_TRUE(w.rising[k]);
    EXPECT_TRUE(w.falling[k]);
    EXPECT_TRUE(net.evaluate(1, w.rising) && !net.evaluate(1, rising_flip));
    EXPECT_TRUE(!net.evaluate(1, w.falling) && net.evaluate(1, falling_flip));
}

TEST(Monotony, SimplifiedXorImpliesNonMonotone) {
    const Network net({{1, parse_expr("(x1 | x2) & !(x1 & x2)")}, {2, parse_expr("x2")}});
    ASSERT_EQ(simplify(net.function(1)).op(), Op::Xor);
    EXPECT_FALSE(is_monotone(net).monotone);
}

TEST(NetworkFile, ParsesCommentsBlanksAndGaps) {
    const Network net = parse_network("# header\n\n 5 : x6 # keep\n6: x6 | x5\r\n");
    EXPECT_EQ(net.size(), 2U);
    EXPECT_EQ(format_network(net), "5: x6\n6: x6 | x5\n");
}

TEST(NetworkFile, ErrorsCarryLineAndColumn) {
    using Pos = std::pair<std::size_t, std::size_t>;
    auto where = [](std::string_view text) {
        try {
            (void)parse_network(text);
        } catch (const ParseError& e) {
            return Pos(e.line(), e.column());
        }
        return Pos(0, 0);
    };
    EXPECT_EQ(where("1: x1\n2: x1 &\n"), Pos(2, 8));
    EXPECT_EQ(where("1: x1\nfoo\n"), Pos(2, 1));
    EXPECT_EQ(where("1: x1\n1: x1\n"), Pos(2, 1));
    EXPECT_EQ(where("1: x2\n"), Pos(1, 1));
    EXPECT_EQ(where("0: x1\n"), Pos(1, 1));
}

TEST(NetworkFile, NegationFamilyDetection) {
    EXPECT_TRUE(negation_network(5).is_negation_family());
    EXPECT_TRUE(parse_network("1: !x1\n2: x2 ^ 1\n").is_negation_family());
    EXPECT_FALSE(reference_network().is_negation_family());
}

}  // namespace
}  // namespace ban
