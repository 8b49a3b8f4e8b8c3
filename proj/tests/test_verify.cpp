#include <doctest.h>

#include <set>

#include "gaptopo/verify.hpp"
#include "oracles.hpp"

using namespace gaptopo;

TEST_CASE("enumerate_states counts and order") {
    CHECK(enumerate_states(3, false).size() == 6);
    CHECK(enumerate_states(4, true).size() == 18);
    CHECK(enumerate_states(1, false) == std::vector<PancakeState>{PancakeState::goal(1)});
    CHECK(enumerate_states(1, true).size() == 1);

    for (int n = 1; n <= 7; ++n) {
        const auto all = enumerate_states(n, false);
        const auto reference = oracle::all_perms(n);
        REQUIRE(all.size() == reference.size());
        for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(all[i].values() == reference[i]);
        CHECK(all.size() == state_count(n, false));

        const auto normalized = enumerate_states(n, true);
        CHECK(normalized.size() == state_count(n, true));
        for (const auto& s : normalized) CHECK(is_normalized(s));
    }
}

TEST_CASE("shards cover the space once in order") {
    std::vector<PancakeState> joined;
    for (int first = 1; first <= 5; ++first) {
        StateEnumerator it(5, false, first);
        PancakeState s = PancakeState::goal(1);
        while (it.next(s)) {
            CHECK(s[1] == first);
            joined.push_back(s);
        }
    }
    CHECK(joined == enumerate_states(5, false));
}

TEST_CASE("enumeration size limits") {
    CHECK_THROWS_AS(StateEnumerator(0, false), CapacityError);
    CHECK_THROWS_AS(StateEnumerator(13, false), CapacityError);
    CHECK_NOTHROW(StateEnumerator(12, true));
    CHECK_THROWS_AS(StateEnumerator(4, false, 5), ContractViolation);
}

TEST_CASE("verify_theorems on n = 4") {
    const auto report = verify_theorems(4, {1, false});
    CHECK(report.states_checked == 18);
    CHECK(report.states_enumerated == 24);
    CHECK(report.violations.empty());
    CHECK(report.passed());
    CHECK(report.class_census.at(StateClass::EasyFG) == 1);
    CHECK(report.checks_skipped.empty());
}

TEST_CASE("verify_theorems on n = 5 finds the single easy FG state") {
    const auto report = verify_theorems(5, {1, false});
    CHECK(report.class_census.at(StateClass::EasyFG) == 1);
    CHECK(report.passed());
}

TEST_CASE("census") {
    const auto four = census(4);
    for (const auto& [d, count] : four.exit_distance_histogram) CHECK((d >= 0 && d <= 2));
    CHECK(census(3).class_census.at(StateClass::HardFG) == 0);
    const auto two = census(2);
    CHECK(two.class_census.at(StateClass::ExitState) == 1);
    CHECK(two.states_checked == 1);
    CHECK(two.checks_run.empty());
    CHECK_THROWS_AS(census(1), CapacityError);
    CHECK_THROWS_AS(census(13), CapacityError);
}

TEST_CASE("census sums match states checked") {
    for (int n = 2; n <= 7; ++n) {
        const auto report = census(n);
        std::uint64_t total = 0;
        for (const auto& [c, count] : report.class_census) total += count;
        CHECK(total == report.states_checked);
        CHECK(report.states_checked == state_count(n, true));
        std::uint64_t histogram_total = 0;
        for (const auto& [d, count] : report.exit_distance_histogram) histogram_total += count;
        CHECK(histogram_total == report.states_checked - report.class_census.at(StateClass::Goal));
    }
}

TEST_CASE("verify size limits") {
    CHECK_THROWS_AS(verify_theorems(1), CapacityError);
    CHECK_THROWS_AS(verify_theorems(9), CapacityError);  // needs long_run
    CHECK_THROWS_AS(verify_theorems(11, {0, true}), CapacityError);
}

TEST_CASE("worker count does not change the report") {
    for (int n : {5, 6, 7}) {
        auto a = verify_theorems(n, {1, false});
        auto b = verify_theorems(n, {3, false});
        auto c = verify_theorems(n, {0, false});
        for (auto* r : {&a, &b, &c}) r->elapsed_seconds = 0;
        CHECK(a.class_census == b.class_census);
        CHECK(a.exit_distance_histogram == b.exit_distance_histogram);
        CHECK(a.violations == b.violations);
        CHECK(a.class_census == c.class_census);
        CHECK(a.exit_distance_histogram == c.exit_distance_histogram);
    }
}

TEST_CASE("oracle checks are skipped above the oracle limit") {
    ::setenv("GAP_TOPOLOGY_ORACLE_LIMIT", "5", 1);
    const auto report = verify_theorems(6, {1, false});
    ::unsetenv("GAP_TOPOLOGY_ORACLE_LIMIT");
    CHECK_FALSE(report.checks_skipped.empty());
    CHECK(std::set<std::string>(report.checks_skipped.begin(), report.checks_skipped.end()).count("admissibility") == 1);
    CHECK(report.passed());
}

TEST_CASE("violation log caps stored records but counts exactly") {
    ViolationLog first, second;
    const auto s = PancakeState::goal(3);
    for (int i = 0; i < 150; ++i) first.record("a", s, "first " + std::to_string(i));
    for (int i = 0; i < 30; ++i) second.record("a", s, "second " + std::to_string(i));
    second.record("b", s, "only");

    first.merge(second);
    CHECK(first.counts().at("a") == 180);
    CHECK(first.counts().at("b") == 1);
    CHECK(first.records().size() == kViolationRecordCap + 1);
    CHECK(first.records().front().details == "first 0");
    CHECK(first.records()[kViolationRecordCap - 1].details == "first 99");
    CHECK(first.records().back().check == "b");
    CHECK(first.records().back().state == "1,2,3");
}
