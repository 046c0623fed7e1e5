#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ban/cli.hpp"

namespace {

const std::string kData = BAN_TEST_DATA;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = ban::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

TEST(Cli, Simulate) {
    const Result r = run({"simulate", "--net", data("reference.ban"), "--x0", "111001", "--sched", "{1,2,4}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "t=0 111001\nt=1 011101 updated {1,2,4}\n");
}

TEST(Cli, SimulatePeriodic) {
    const Result r = run({"simulate", "--net", data("reference.ban"), "--x0", "111001", "--sched",
                          "3,2,4,1*", "--steps", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "t=0 111001\n"
              "t=1 110001 updated {3}\n"
              "t=2 100001 updated {2}\n"
              "t=3 100001 updated {4}\n"
              "t=4 000001 updated {1}\n"
              "t=5 001001 updated {3}\n");
}

TEST(Cli, Graph) {
    const Result r = run({"graph", "--net", data("reference.ban")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "1 -> 5 positive\n"
              "2 -> 1 negative\n"
              "2 -> 4 positive\n"
              "3 -> 1 negative\n"
              "3 -> 2 positive\n"
              "3 -> 3 negative\n"
              "3 -> 4 positive\n"
              "4 -> 1 positive\n"
              "5 -> 6 positive\n"
              "6 -> 5 positive\n"
              "6 -> 6 positive\n");
}

TEST(Cli, Monotone) {
    const Result yes = run({"monotone", "--net", data("reference.ban"), "--strict"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "monotone\n");

    const Result no = run({"monotone", "--net", data("xor_view.ban")});
    EXPECT_EQ(no.code, 0);
    EXPECT_EQ(no.out,
              "non-monotone\n"
              "witness arc: 2 -> 1\n"
              "rising: 01000 f1=1, f1=0 with x2 flipped\n"
              "falling: 01100 f1=0, f1=1 with x2 flipped\n");
    EXPECT_EQ(run({"monotone", "--net", data("xor_view.ban"), "--strict"}).code, 1);
}

TEST(Cli, ProjectRhythm) {
    const Result r = run({"project", "--net", data("reference.ban"), "--spec", data("rhythm.spec")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n1: 0\n2: !x3\n3: !x3\n5: x6\n6: x6 | x5\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("# verify: full-space disagreements 16 of 64 states\n"), std::string::npos);
    EXPECT_NE(r.out.find("# verify: invariant-region disagreements 0 of 32 states\n"), std::string::npos);
    EXPECT_EQ(run({"project", "--net", data("reference.ban"), "--spec", data("rhythm.spec"), "--strict"}).code, 0);
}

TEST(Cli, ProjectRelay) {
    const Result r = run({"project", "--net", data("reference.ban"), "--spec", data("relay.spec"), "--no-verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n1: x2 ^ x3\n2: x3\n3: !x3\n5: x1 | x6\n6: x6 | x5\n"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("# verify"), std::string::npos);
}

TEST(Cli, AuditNegation) {
    const Result r = run({"audit", "--negation", "153"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("missing arcs (ordered): 23256 of 23256\n"), std::string::npos);
    EXPECT_NE(r.out.find("schedule census: 2^(153+2^153)\n"), std::string::npos);

    const Result small = run({"audit", "--negation", "2", "--sched", "{1,2}*"});
    EXPECT_NE(small.out.find("schedule census: 64\n"), std::string::npos);
    EXPECT_NE(small.out.find("schedule {1,2}*: parallel\n"), std::string::npos);
}

TEST(Cli, AuditScheduleClassification) {
    const Result r = run({"audit", "--negation", "3", "--sched", "{1,2},3*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "automata: 3\n"
              "mode: closed form (negation family)\n"
              "conflicting pairs: 3 of 3\n"
              "missing arcs (ordered): 6 of 6\n"
              "missing arcs (unordered): 3\n"
              "pair      witness    i->j  j->i\n"
              "{1,2}     000        miss  miss\n"
              "{1,3}     000        miss  miss\n"
              "{2,3}     000        miss  miss\n"
              "schedule census: 2048\n"
              "schedule {1,2},3*: intermediary\n"
              "synchronous update: block 1 updates 1 and 2 while both are unstable in 000\n");
}

TEST(Cli, Attractors) {
    const Result r = run({"attractors", "--net", data("reference.ban"), "--mode", "sched", "--sched", "3,2,4,1*"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("attractors: ", 0), 0U);
}

TEST(Cli, Lint) {
    const Result r = run({"lint", "--net", data("xor_view.ban"), "--forbid", "^"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("forbidden connectors used by: 1\n"), std::string::npos);
    EXPECT_EQ(run({"lint", "--net", data("reference.ban"), "--forbid", "^"}).code, 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"transitions", "--net", data("reference.ban"), "--mode", "async"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, InputErrors) {
    const Result parse = run({"graph", "--net", data("broken.ban")});
    EXPECT_EQ(parse.code, 2);
    EXPECT_EQ(parse.err, "error: " + data("broken.ban") + ":1:8: expected operand\n");

    EXPECT_EQ(run({"graph", "--net", data("missing.ban")}).code, 2);
    EXPECT_EQ(run({"simulate", "--net", data("reference.ban"), "--x0", "11", "--sched", "1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);

    const Result limit = run({"--max-exhaustive", "3", "attractors", "--net", data("reference.ban")});
    EXPECT_EQ(limit.code, 2);
    EXPECT_NE(limit.err.find("--max-exhaustive"), std::string::npos);
}

}  // namespace
