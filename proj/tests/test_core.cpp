#include <doctest.h>

#include "gaptopo/core.hpp"
#include "oracles.hpp"

using namespace gaptopo;

namespace {

PancakeState S(std::initializer_list<int> v) { return PancakeState::from_values(v); }

}  // namespace

TEST_CASE("apply_flip reverses the top k pancakes") {
    CHECK(apply_flip(S({2, 1, 4, 3}), Flip{3}) == S({4, 1, 2, 3}));
    CHECK(apply_flip(S({1, 2, 3}), Flip{3}) == S({3, 2, 1}));
    CHECK(apply_flip(S({1, 2}), Flip{2}) == S({2, 1}));
}

TEST_CASE("apply_flip rejects out-of-range k") {
    CHECK_THROWS_AS(apply_flip(S({1, 2, 3}), Flip{1}), ContractViolation);
    CHECK_THROWS_AS(apply_flip(S({1, 2, 3}), Flip{4}), ContractViolation);
    CHECK_THROWS_AS(apply_flip(S({1}), Flip{2}), ContractViolation);
}

TEST_CASE("from_values validates the permutation") {
    CHECK_THROWS_AS(S({}), ContractViolation);
    CHECK_THROWS_AS(S({1, 1}), ContractViolation);
    CHECK_THROWS_AS(S({0, 1}), ContractViolation);
    CHECK_THROWS_AS(S({1, 3}), ContractViolation);
    CHECK(S({3, 1, 2}).values() == std::vector<int>{3, 1, 2});
    CHECK(S({3, 1, 2}).at(1) == 3);
    CHECK_THROWS_AS(S({3, 1, 2}).at(4), ContractViolation);
}

TEST_CASE("extended_at reads the plate below the stack") {
    CHECK(extended_at(S({2, 1, 4, 3}), 5) == 5);
    CHECK(extended_at(S({2, 1, 4, 3}), 1) == 2);
    CHECK(extended_at(S({1}), 2) == 2);
    CHECK_THROWS_AS(extended_at(S({1}), 3), ContractViolation);
    CHECK_THROWS_AS(extended_at(S({1}), 0), ContractViolation);
}

TEST_CASE("gap_count") {
    CHECK(gap_count(PancakeState::goal(7)) == 0);
    CHECK(gap_count(S({2, 1, 4, 3})) == 2);
    CHECK(gap_count(S({2, 1, 4, 3, 5, 6, 7})) == 2);
    CHECK(gap_count(S({1})) == 0);
}

TEST_CASE("classify_move examples") {
    CHECK(classify_move(S({2, 1, 4, 3}), Flip{3}) == MoveClass::Neutral);
    CHECK(classify_move(S({2, 1, 3, 5, 4}), Flip{2}) == MoveClass::Decreasing);
    CHECK(classify_move(S({1, 2, 3, 4}), Flip{2}) == MoveClass::Increasing);
    CHECK_THROWS_AS(classify_move(S({1, 2}), Flip{3}), ContractViolation);
    CHECK_THROWS_AS(classify_move_local(S({1, 2}), Flip{3}), ContractViolation);
}

TEST_CASE("gap_decreasing_moves and is_locked") {
    CHECK(gap_decreasing_moves(S({2, 1, 3, 5, 4})) == std::vector<Flip>{Flip{2}});
    CHECK(gap_decreasing_moves(S({2, 1, 4, 3})).empty());
    CHECK(gap_decreasing_moves(PancakeState::goal(5)).empty());
    CHECK(is_locked(S({2, 1, 4, 3})));
    CHECK_FALSE(is_locked(S({2, 1, 3, 5, 4})));
    CHECK(is_locked(PancakeState::goal(4)));
}

TEST_CASE("is_goal") {
    CHECK(is_goal(S({1, 2, 3, 4})));
    CHECK_FALSE(is_goal(S({2, 1, 4, 3})));
    CHECK(is_goal(S({1})));
}

TEST_CASE("normalize_suffix") {
    CHECK(normalize_suffix(S({2, 1, 4, 3, 5, 6, 7})) == S({2, 1, 4, 3}));
    CHECK(normalize_suffix(S({2, 1, 4, 3})) == S({2, 1, 4, 3}));
    CHECK(normalize_suffix(S({1, 2, 3})) == S({1}));
    CHECK(normalize_suffix(S({2, 1, 3})) == S({2, 1}));
    CHECK(is_normalized(S({1})));
    CHECK_FALSE(is_normalized(S({2, 1, 3})));
}

TEST_CASE("degenerate sizes have zero or one legal flip") {
    CHECK(moves_of_class(S({1}), MoveClass::Neutral).empty());
    CHECK(moves_of_class(S({1}), MoveClass::Increasing).empty());
    CHECK(moves_of_class(S({1, 2}), MoveClass::Increasing) == std::vector<Flip>{Flip{2}});
    CHECK(moves_of_class(S({2, 1}), MoveClass::Decreasing) == std::vector<Flip>{Flip{2}});
}

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("2,1,4,3") == S({2, 1, 4, 3}));
    CHECK(parse_permutation("1") == S({1}));
    CHECK(parse_permutation(" 2, 1") == S({2, 1}));

    auto token_of = [](std::string_view text) {
        try {
            parse_permutation(text);
        } catch (const ParseError& e) {
            return e.token();
        }
        return std::string("<accepted>");
    };
    CHECK(token_of("2,1,x") == "x");
    CHECK(token_of("2,2") == "2");
    CHECK(token_of("0,1") == "0");
    CHECK(token_of("1,3") == "3");
    CHECK(token_of("1,,2") == "");
    CHECK(token_of("") == "");
    CHECK(token_of("1,2a") == "2a");
    CHECK(token_of("-1,1") == "-1");
    CHECK(token_of("1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17") == "17");
}

TEST_CASE("format_permutation round-trips through parse") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            const auto s = PancakeState::from_values(p);
            REQUIRE(parse_permutation(format_permutation(s)) == s);
        }
    }
}

TEST_CASE("packed key is injective for a fixed size") {
    std::set<std::uint64_t> keys;
    for (const auto& p : oracle::all_perms(7)) keys.insert(PancakeState::from_values(p).key());
    CHECK(keys.size() == 5040);
}

TEST_CASE("properties over every state up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : oracle::all_perms(n)) {
            const auto s = PancakeState::from_values(p);
            const int h = gap_count(s);
            REQUIRE(h == oracle::gaps(p));
            REQUIRE(is_goal(s) == (h == 0));

            std::vector<Flip> expected_decreasing;
            for (int k : oracle::decreasing(p)) expected_decreasing.push_back(Flip{k});
            const auto decreasing = gap_decreasing_moves(s);
            REQUIRE(decreasing == expected_decreasing);
            REQUIRE(decreasing.size() <= 2);
            REQUIRE(is_locked(s) == decreasing.empty());

            for (int k = 2; k <= n; ++k) {
                const auto t = apply_flip(s, Flip{k});
                REQUIRE(t.values() == oracle::flip(p, k));
                REQUIRE(apply_flip(t, Flip{k}) == s);
                const int delta = gap_count(t) - h;
                REQUIRE(std::abs(delta) <= 1);
                REQUIRE(classify_move(s, Flip{k}) == classify_move_local(s, Flip{k}));
            }

            const auto normalized = normalize_suffix(s);
            REQUIRE(gap_count(normalized) == h);
            REQUIRE(is_normalized(normalized));
        }
    }
}
