#include <gtest/gtest.h>

#include "ban/error.hpp"
#include "ban/expr.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace ban {
namespace {

using testing::reference_network;

Assignment bits(std::initializer_list<bool> values) {
    return Assignment::from_bits(std::vector<bool>(values));
}

TEST(Expr, EvaluatesReferenceTransitionCoordinates) {
    const Network net = reference_network();
    const Assignment x = bits({1, 1, 1, 0, 0, 1});
    EXPECT_FALSE(net.function(1).evaluate(x));
    EXPECT_TRUE(net.function(4).evaluate(x));
    EXPECT_FALSE(Expr::constant(false).evaluate(x));
}

TEST(Expr, UnboundVariableIsNamed) {
    const Expr e = parse_expr("x1 & x7");
    try {
        (void)e.evaluate(bits({1, 1}));
        FAIL() << "expected UnboundVariable";
    } catch (const UnboundVariable& err) {
        EXPECT_EQ(err.id(), 7U);
        EXPECT_NE(std::string(err.what()).find("x7"), std::string::npos);
    }
}

TEST(Expr, NaryNodesNeedTwoChildren) {
    EXPECT_THROW(Expr::conjunction({Expr::var(1)}), std::invalid_argument);
    EXPECT_THROW(Expr::exclusive_or({}), std::invalid_argument);
    EXPECT_THROW(Expr::var(0), std::invalid_argument);
}

TEST(ExprText, PrecedenceNotAndXorOr) {
    const Expr e = parse_expr("!x1 & x2 ^ x3 | x4");
    ASSERT_EQ(e.op(), Op::Or);
    EXPECT_EQ(e.children()[0].op(), Op::Xor);
    EXPECT_EQ(e.children()[0].children()[0].op(), Op::And);
    EXPECT_EQ(e.children()[0].children()[0].children()[0].op(), Op::Not);
    EXPECT_EQ(to_string(e), "!x1 & x2 ^ x3 | x4");
}

TEST(ExprText, ChainsBecomeOneNode) {
    const Expr e = parse_expr("x1 & x2 & x3");
    EXPECT_EQ(e.op(), Op::And);
    EXPECT_EQ(e.children().size(), 3U);
    EXPECT_EQ(to_string(e), "x1 & x2 & x3");
}

TEST(ExprText, PrintsMinimalParentheses) {
    EXPECT_EQ(to_string(parse_expr("x4 & (!x2 | !x3)")), "x4 & (!x2 | !x3)");
    EXPECT_EQ(to_string(parse_expr("(x1 & x2) | x3")), "x1 & x2 | x3");
    EXPECT_EQ(to_string(parse_expr("!(x1 ^ x2)")), "!(x1 ^ x2)");
    EXPECT_EQ(to_string(parse_expr("(x1 & x2) & x3")), "(x1 & x2) & x3");
    EXPECT_EQ(to_string(parse_expr("!!x1")), "!!x1");
    EXPECT_EQ(to_string(parse_expr(" 1 ")), "1");
}

TEST(ExprText, BareNamesResolveThroughTable) {
    NameTable names;
    names.add("gene", 4);
    names.add("protein", 2);
    const Expr e = parse_expr("gene & !protein", &names);
    EXPECT_EQ(to_string(e), "x4 & !x2");
    EXPECT_EQ(to_string(e, names), "gene & !protein");
    EXPECT_THROW(parse_expr("gene"), ParseError);
}

TEST(ExprText, ErrorsCarryColumns) {
    auto column_of = [](std::string_view text) -> std::size_t {
        try {
            (void)parse_expr(text);
        } catch (const ParseError& e) {
            return e.column();
        }
        return 0;
    };
    EXPECT_EQ(column_of("x1 & "), 6U);
    EXPECT_EQ(column_of("x1 + x2"), 4U);
    EXPECT_EQ(column_of("(x1 | x2"), 9U);
    EXPECT_EQ(column_of("x0"), 1U);
    EXPECT_EQ(column_of("x1 & 2"), 6U);
    EXPECT_EQ(column_of(""), 1U);
}

TEST(Substitute, RelayIntoReferenceGivesXor) {
    const Network net = reference_network();
    const Expr composed = substitute(net.function(1), {{4, net.function(4)}});
    const Expr s = simplify(composed);
    EXPECT_EQ(s, parse_expr("x2 ^ x3"));
    EXPECT_TRUE(testing::brute_equal(composed, parse_expr("x2 ^ x3")));
}

TEST(Substitute, EmptyBindingsIsIdentity) {
    const Expr e = parse_expr("x4 & (!x2 | !x3)");
    EXPECT_EQ(substitute(e, {}), e);
}

TEST(Substitute, NegationThroughCopy) {
    const Expr f2 = parse_expr("x3");
    EXPECT_EQ(substitute(f2, {{3, parse_expr("!x3")}}), parse_expr("!x3"));
}

TEST(Substitute, IsSimultaneous) {
    const Expr e = parse_expr("x1 & !x2");
    const Expr swapped = substitute(e, {{1, Expr::var(2)}, {2, Expr::var(1)}});
    EXPECT_EQ(to_string(swapped), "x2 & !x1");
}

TEST(Connectors, ReportsUsedOperators) {
    const auto ops = connectors(parse_expr("x4 & (!x2 | !x3)"));
    EXPECT_EQ(ops, (std::vector<Op>{Op::Not, Op::And, Op::Or}));
    EXPECT_TRUE(connectors(Expr::var(1)).empty());
}

}  // namespace
}  // namespace ban
