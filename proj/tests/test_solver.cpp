#include <doctest.h>

#include <cstdlib>

#include "gaptopo/solver.hpp"
#include "oracles.hpp"

using namespace gaptopo;

namespace {

PancakeState S(std::initializer_list<int> v) { return PancakeState::from_values(v); }

std::vector<Flip> flips(std::initializer_list<int> ks) {
    std::vector<Flip> out;
    for (int k : ks) out.push_back(Flip{k});
    return out;
}

}  // namespace

TEST_CASE("permutation rank is a bijection onto [0, n!)") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t expected = 0;
        for (const auto& p : oracle::all_perms(n)) {
            const auto s = PancakeState::from_values(p);
            REQUIRE(permutation_rank(s) == expected);  // lexicographic order
            REQUIRE(permutation_unrank(n, expected) == s);
            ++expected;
        }
        CHECK(expected == factorial(n));
    }
}

TEST_CASE("optimal_solve examples") {
    CHECK(optimal_solve(S({1, 2, 3, 4})).length == 0);
    const auto easy = optimal_solve(S({2, 1, 4, 3}));
    CHECK(easy.length == 3);
    CHECK(easy.initial_gap_count == 2);
    CHECK(is_goal(apply_moves(S({2, 1, 4, 3}), easy.moves)));
    // Frozen from an independent BFS distance table.
    CHECK(optimal_solve(S({2, 1, 5, 4, 3})).length == 4);
    CHECK(optimal_solve(S({1})).length == 0);
}

TEST_CASE("greedy_solve examples") {
    CHECK(greedy_solve(PancakeState::goal(6)).length == 0);
    CHECK(greedy_solve(S({2, 1, 4, 3})).moves == flips({3, 4, 3}));
    const auto hard = greedy_solve(S({2, 1, 5, 4, 3}));
    CHECK(hard.moves == flips({5, 3, 5, 2}));
    CHECK(hard.length <= 3 * gap_count(S({2, 1, 5, 4, 3})));
    // Sorted suffix is left alone.
    CHECK(greedy_solve(S({2, 1, 4, 3, 5, 6})).moves == flips({3, 4, 3}));
}

TEST_CASE("greedy_solve is deterministic") {
    const auto s = S({3, 6, 1, 5, 2, 4, 8, 7});
    CHECK(greedy_solve(s).moves == greedy_solve(s).moves);
}

TEST_CASE("distance table matches an independent BFS and forward search") {
    for (int n = 1; n <= 7; ++n) {
        const auto reference = oracle::distances(n);
        const DistanceTable& table = distance_table(n);
        int diameter = 0;
        for (const auto& [p, d] : reference) {
            const auto s = PancakeState::from_values(p);
            REQUIRE(table.distance(s) == d);
            diameter = std::max(diameter, d);
            // Admissibility.
            REQUIRE(gap_count(s) <= d);
            if (!is_goal(s) && is_locked(s)) REQUIRE(d >= gap_count(s) + 1);

            const auto optimal = optimal_solve(s);
            REQUIRE(optimal.length == d);
            REQUIRE(is_goal(apply_moves(s, optimal.moves)));

            const auto greedy = greedy_solve(s);
            REQUIRE(is_goal(apply_moves(s, greedy.moves)));
            REQUIRE(greedy.length <= 3 * gap_count(s));
            REQUIRE(greedy.length >= d);
        }
        CHECK(table.diameter() == diameter);
    }
}

TEST_CASE("forward IDA* agrees with the table") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            const auto s = PancakeState::from_values(p);
            const auto forward = ida_star_solve(s);
            REQUIRE(forward.length == distance_table(n).distance(s));
            REQUIRE(is_goal(apply_moves(s, forward.moves)));
        }
    }
}

TEST_CASE("normalization preserves optimal cost") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            const auto s = PancakeState::from_values(p);
            const auto m = normalize_suffix(s);
            REQUIRE(distance_table(m.size()).distance(m) == distance_table(n).distance(s));
        }
    }
}

TEST_CASE("oracle limit and its environment override") {
    ::unsetenv("GAP_TOPOLOGY_ORACLE_LIMIT");
    CHECK(oracle_limit() == kDefaultOracleLimit);
    CHECK_THROWS_AS(optimal_solve(PancakeState::goal(10)), CapacityError);

    ::setenv("GAP_TOPOLOGY_ORACLE_LIMIT", "4", 1);
    CHECK(oracle_limit() == 4);
    CHECK_THROWS_AS(optimal_solve(S({2, 1, 5, 4, 3})), CapacityError);
    CHECK(optimal_solve(S({2, 1, 4, 3})).length == 3);

    ::setenv("GAP_TOPOLOGY_ORACLE_LIMIT", "12", 1);
    CHECK_THROWS_AS(oracle_limit(), CapacityError);
    ::setenv("GAP_TOPOLOGY_ORACLE_LIMIT", "nine", 1);
    CHECK_THROWS_AS(oracle_limit(), CapacityError);
    ::unsetenv("GAP_TOPOLOGY_ORACLE_LIMIT");

    try {
        optimal_solve(PancakeState::goal(10));
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("n <= 9") != std::string::npos);
    }
}

TEST_CASE("table queries reject a mismatched size") {
    CHECK_THROWS_AS(distance_table(4).distance(PancakeState::goal(5)), ContractViolation);
}
