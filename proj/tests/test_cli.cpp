#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "bncover/cli.hpp"

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bncover");
    std::ostringstream out, err;
    int code = bncover::cli::run(args, out, err);
    return Run{code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// drops the wall-clock line, the only nondeterministic part of a report
std::string without_elapsed(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("elapsed_ms:", 0) != 0) out += line + "\n";
    return out;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("check-rbn reports the lonely receiver as uncoverable") {
    auto r = run({"check-rbn", fixture("lonely_receiver.json"), "--target", "qp"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "VERDICT: UNCOVERABLE"));
    CHECK(contains(r.out, "unlocked: {}"));
    CHECK(count_lines(r.out, "VERDICT:") == 1);
}

TEST_CASE("check-rbn covers the pumped counter and names the unlocked letter") {
    auto r = run({"check-rbn", fixture("counter.json"), "--target", "q0:[2]"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "VERDICT: COVERABLE"));
    CHECK(contains(r.out, "unlocked: {a}"));
}

TEST_CASE("malformed models exit 2 with a field diagnostic") {
    auto r = run({"check-rbn", fixture("bad_transition.json"), "--target", "q"});
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "transitions[0].to"));
    CHECK(contains(r.err, "nowhere"));
    auto missing = run({"check-rbn", fixture("no_such_file.json"), "--target", "q"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("check-static covers the handshake over cliques and paths") {
    for (const std::string cls : {"clique", "path:1", "path:2", "diamdeg:1,3,4"}) {
        auto r = run({"check-static", fixture("handshake.json"), "--target", "r1", "--class", cls});
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "VERDICT: COVERABLE"));
    }
    auto fixed = run(
        {"check-static", fixture("handshake.json"), "--target", "r1", "--class", "fixed"});
    CHECK(fixed.exit_code == 0);
    CHECK(contains(fixed.out, "VERDICT: COVERABLE"));
}

TEST_CASE("check-static rejects bad class strings and a missing topology") {
    auto bad = run({"check-static", fixture("handshake.json"), "--target", "r1", "--class",
                    "ring"});
    CHECK(bad.exit_code == 2);
    auto nofix =
        run({"check-static", fixture("counter.json"), "--target", "q0:[1]", "--class", "fixed"});
    CHECK(nofix.exit_code == 2);
    CHECK(contains(nofix.err, "topology"));
}

TEST_CASE("an exhausted iteration budget exits 3") {
    auto r = run({"check-static", fixture("lonely_receiver.json"), "--target", "qp", "--class",
                  "clique", "--max-iterations", "0"});
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "VERDICT: LIMIT_EXCEEDED"));
}

TEST_CASE("complete-receives turns a blocked broadcast into a covering run") {
    auto blocked = run(
        {"check-static", fixture("broadcast_pair.json"), "--target", "b1", "--class", "fixed"});
    CHECK(contains(blocked.out, "VERDICT: UNCOVERABLE"));
    auto relaxed = run({"check-static", fixture("broadcast_pair.json"), "--target", "b1",
                        "--class", "fixed", "--complete-receives"});
    CHECK(contains(relaxed.out, "VERDICT: COVERABLE"));
    auto vass = run({"check-rbn", fixture("counter.json"), "--target", "q0:[1]",
                     "--complete-receives"});
    CHECK(vass.exit_code == 2);
}

TEST_CASE("the oracle prints a replayable two-step trace for the counter") {
    auto r = run({"oracle", fixture("counter.json"), "--target", "q0:[2]", "--max-nodes", "2",
                  "--max-depth", "4", "--max-counter", "3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "RESULT: FOUND"));
    CHECK(count_lines(r.out, "step ") == 2);
    CHECK(contains(r.out, "initial: {q0:[0], q0:[0]}"));
}

TEST_CASE("the oracle reports exhaustion for the lonely receiver") {
    auto r = run({"oracle", fixture("lonely_receiver.json"), "--target", "qp", "--max-nodes", "3",
                  "--max-depth", "6"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "RESULT: NOT_FOUND EXHAUSTED"));
    auto s = run({"oracle", fixture("lonely_receiver.json"), "--target", "qp", "--max-nodes", "2",
                  "--max-depth", "6", "--semantics", "static"});
    CHECK(s.exit_code == 0);
    CHECK(contains(s.out, "RESULT: NOT_FOUND EXHAUSTED"));
}

TEST_CASE("zero-depth searches with a non-initial target find nothing") {
    auto r = run({"oracle", fixture("counter.json"), "--target", "q0:[1]", "--max-nodes", "2",
                  "--max-depth", "0", "--max-counter", "3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "RESULT: NOT_FOUND"));
    CHECK_FALSE(contains(r.out, "EXHAUSTED"));
}

TEST_CASE("info summarizes rules and minimal enabling configurations") {
    auto r = run({"info", fixture("handshake.json")});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "broadcast_rules: 1"));
    CHECK(contains(r.out, "receive_rules: 1"));
    CHECK(contains(r.out, "letter a: broadcasts=1 receives=1"));
    CHECK(contains(r.out, "min_enabling tb (!!a): b0"));

    auto v = run({"info", fixture("vass_demo.json")});
    CHECK(contains(v.out, "min_enabling t3 (!!b): p:[2,0]"));

    auto invalid = run({"info", fixture("bad_transition.json")});
    CHECK(invalid.exit_code == 2);

    auto empty = run({"info", fixture("empty_process.json")});
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.out, "broadcast_rules: 0"));
    CHECK(contains(empty.out, "receive_rules: 0"));
}

TEST_CASE("an empty alphabet still answers for initial targets") {
    auto r = run({"check-rbn", fixture("empty_process.json"), "--target", "q"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "VERDICT: COVERABLE"));
    CHECK(contains(r.out, "unlocked: {}"));
}

TEST_CASE("quiet mode prints exactly the verdict line") {
    auto r = run({"check-rbn", fixture("counter.json"), "--target", "q0:[2]", "--quiet"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "VERDICT: COVERABLE\n");
}

TEST_CASE("reports are deterministic apart from the elapsed field") {
    std::vector<std::string> args{"check-static", fixture("handshake.json"), "--target", "r1",
                                  "--class", "clique"};
    auto a = run(args), b = run(args);
    CHECK(without_elapsed(a.out) == without_elapsed(b.out));
    std::vector<std::string> oargs{"oracle",      fixture("counter.json"), "--target", "q0:[2]",
                                   "--max-nodes", "2",                     "--max-depth", "4",
                                   "--max-counter", "3"};
    auto c = run(oargs), d = run(oargs);
    CHECK(without_elapsed(c.out) == without_elapsed(d.out));
}

TEST_CASE("usage errors from the parser exit 2") {
    auto r = run({"check-rbn", fixture("counter.json")});  // missing --target
    CHECK(r.exit_code == 2);
    auto unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == 2);
    auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "check-rbn"));
}
