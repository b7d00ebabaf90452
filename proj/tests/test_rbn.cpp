#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bncover/explore.hpp"
#include "bncover/rbn.hpp"
#include "test_util.hpp"

using namespace bncover;
using testutil::cfg;
using testutil::fin;

namespace {

ProcessSpec rename_everything(const ProcessSpec& spec) {
    auto state = [](const std::string& q) { return "S_" + q; };
    auto letter = [](const std::string& a) { return "L_" + a; };
    ProcessSpec out = spec;
    for (auto& q : out.states) q = state(q);
    for (auto& q : out.initial_states) q = state(q);
    for (auto& a : out.alphabet) a = letter(a);
    for (auto& t : out.transitions) {
        t.id = "R_" + t.id;
        t.from = state(t.from);
        t.to = state(t.to);
        t.letter = letter(t.letter);
    }
    return out;
}

}  // namespace

TEST_CASE("a lonely receiver is uncoverable under reconfiguration") {
    auto spec = testutil::lonely_receiver_spec();
    auto res = rbn_coverable(spec, fin("qp"));
    CHECK(res.verdict == Verdict::Uncoverable);
    CHECK(unlocked_letters(res.unlock).empty());
    // no broadcasts exist, so the one pass adds nothing
    CHECK(res.unlock.iterations == 1);
}

TEST_CASE("an initial target is coverable outright") {
    auto res = rbn_coverable(testutil::counter_spec(), cfg("q0", {0}));
    CHECK(res.verdict == Verdict::Coverable);
    auto fin_res = rbn_coverable(testutil::handshake_spec(), fin("r0"));
    CHECK(fin_res.verdict == Verdict::Coverable);
}

TEST_CASE("the counter process pumps to any value once its letter unlocks") {
    auto spec = testutil::counter_spec();
    auto res = rbn_coverable(spec, cfg("q0", {2}));
    CHECK(res.verdict == Verdict::Coverable);
    CHECK(unlocked_letters(res.unlock) == std::vector<std::string>{"a"});
    CHECK(res.unlock.sub_alphabet.empty());
    // confirmed by an explicit two-node run
    auto oracle = explore_rbn(spec, cfg("q0", {2}), ExplorationBounds{2, 3, 4});
    CHECK(oracle.found);
}

TEST_CASE("the unlock state describes the active process exactly") {
    std::mt19937 rng(1999);
    for (int round = 0; round < 60; ++round) {
        auto spec = testutil::random_finite_spec(rng, 5, 3, 8);
        auto target = fin(spec.states[testutil::pick(rng, 0, spec.states.size() - 1)]);
        auto res = rbn_coverable(spec, target);
        // broadcasts are never removed
        for (const auto& t : spec.transitions) {
            if (t.kind != ActionKind::Broadcast) continue;
            CHECK(std::count(res.unlock.active_spec.transitions.begin(),
                             res.unlock.active_spec.transitions.end(), t) == 1);
        }
        // receives present iff their letter was unlocked
        auto unlocked = unlocked_letters(res.unlock);
        for (const auto& t : spec.transitions) {
            if (t.kind != ActionKind::Receive) continue;
            bool present = std::count(res.unlock.active_spec.transitions.begin(),
                                      res.unlock.active_spec.transitions.end(), t) == 1;
            bool letter_unlocked =
                std::find(unlocked.begin(), unlocked.end(), t.letter) != unlocked.end();
            CHECK(present == letter_unlocked);
        }
        // and the main loop respects the alphabet bound
        CHECK(res.unlock.iterations <= spec.alphabet.size() + 1);
    }
}

TEST_CASE("a letter unlocks iff some broadcast of it is reachable") {
    // b0 --!!a--> b1 with b0 initial: a unlocks even though nothing receives
    auto spec = testutil::handshake_spec();
    auto res = rbn_coverable(spec, fin("r1"));
    CHECK(res.verdict == Verdict::Coverable);
    CHECK(unlocked_letters(res.unlock) == std::vector<std::string>{"a"});

    // the same broadcast moved behind an unreachable guard never unlocks
    ProcessSpec gated = spec;
    gated.transitions[0].from = "b1";  // b1 is not initial and unreachable
    auto gated_res = rbn_coverable(gated, fin("r1"));
    CHECK(gated_res.verdict == Verdict::Uncoverable);
    CHECK(unlocked_letters(gated_res.unlock).empty());
}

TEST_CASE("letters unlock in cascading passes") {
    auto spec = testutil::cascade_spec();
    auto res = rbn_coverable(spec, fin("t"));
    CHECK(res.verdict == Verdict::Coverable);
    CHECK(unlocked_letters(res.unlock) == std::vector<std::string>{"a", "b"});
    // a unlocks in pass 1, b needs the added receive and unlocks in pass 2,
    // pass 3 adds nothing: exactly the |alphabet|+1 bound
    CHECK(res.unlock.iterations == 3);
    auto oracle = explore_rbn(spec, fin("t"), ExplorationBounds{3, 0, 8});
    CHECK(oracle.found);
}

TEST_CASE("broadcast-only processes reduce to plain coverability") {
    std::mt19937 rng(262626);
    for (int round = 0; round < 80; ++round) {
        auto spec = testutil::random_finite_spec(rng, 4, 3, 8);
        std::erase_if(spec.transitions,
                      [](const TransitionRule& t) { return t.kind == ActionKind::Receive; });
        auto target = fin(spec.states[testutil::pick(rng, 0, spec.states.size() - 1)]);
        auto rbn = rbn_coverable(spec, target);
        auto plain =
            backward_coverability(process_wsts(spec), UpwardBasis<ProcessConfig>{{target}});
        CHECK(rbn.verdict == plain.verdict);
    }
}

TEST_CASE("verdicts survive renaming of states, letters and ids") {
    std::mt19937 rng(99999);
    for (int round = 0; round < 40; ++round) {
        auto spec = testutil::random_finite_spec(rng, 4, 3, 8);
        auto target = fin(spec.states[testutil::pick(rng, 0, spec.states.size() - 1)]);
        auto renamed_spec = rename_everything(spec);
        auto renamed_target = fin("S_" + target.state);
        CHECK(rbn_coverable(spec, target).verdict ==
              rbn_coverable(renamed_spec, renamed_target).verdict);
    }
}

TEST_CASE("verdicts survive permutations of the transition list") {
    std::mt19937 rng(818181);
    for (int round = 0; round < 40; ++round) {
        auto spec = testutil::random_finite_spec(rng, 5, 3, 8);
        auto target = fin(spec.states[testutil::pick(rng, 0, spec.states.size() - 1)]);
        auto base = rbn_coverable(spec, target).verdict;
        auto shuffled = spec;
        std::shuffle(shuffled.transitions.begin(), shuffled.transitions.end(), rng);
        CHECK(rbn_coverable(shuffled, target).verdict == base);
    }
}

TEST_CASE("positive verdicts are confirmed and negative ones never contradicted") {
    std::mt19937 rng(5309);
    int confirmed = 0;
    for (int round = 0; round < 60; ++round) {
        auto spec = testutil::random_finite_spec(rng, 4, 3, 8);
        auto target = fin(spec.states[testutil::pick(rng, 0, spec.states.size() - 1)]);
        auto res = rbn_coverable(spec, target);
        auto oracle = explore_rbn(spec, target, ExplorationBounds{4, 0, 64});
        if (res.verdict == Verdict::Coverable) {
            CHECK(oracle.found);
            ++confirmed;
        } else {
            CHECK_FALSE(oracle.found);
        }
    }
    CHECK(confirmed > 0);
}

TEST_CASE("an inner iteration cap surfaces as LIMIT_EXCEEDED") {
    auto spec = testutil::counter_spec();
    auto res = rbn_coverable(spec, cfg("q0", {2}), std::size_t{0});
    CHECK(res.verdict == Verdict::LimitExceeded);
    auto enough = rbn_coverable(spec, cfg("q0", {2}), std::size_t{8});
    CHECK(enough.verdict == Verdict::Coverable);
}

TEST_CASE("usage errors on targets outside the configuration space") {
    auto spec = testutil::counter_spec();
    CHECK_THROWS_AS(rbn_coverable(spec, fin("nope")), std::invalid_argument);
    CHECK_THROWS_AS(rbn_coverable(spec, cfg("q0", {1, 2})), std::invalid_argument);
}
