#pragma once

#include <cstdint>
#include <vector>

#include "gaptopo/core.hpp"

namespace gaptopo {

struct SolveResult {
    std::vector<Flip> moves;
    int length = 0;
    int initial_gap_count = 0;
};

// Default size cap for the optimal oracle; GAP_TOPOLOGY_ORACLE_LIMIT
// overrides it up to kOracleHardLimit.
inline constexpr int kDefaultOracleLimit = 9;
inline constexpr int kOracleHardLimit = 11;

/// Current oracle cap. Throws CapacityError if the environment override is
/// malformed or exceeds kOracleHardLimit.
int oracle_limit();

/// Index of a permutation of 1..n in lexicographic order, 0 <= rank < n!.
std::uint64_t permutation_rank(const PancakeState& state);
PancakeState permutation_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

/// Optimal cost of every state of size n, found by breadth-first search
/// outward from the goal. Flips are involutions, so distance from the goal
/// equals distance to it.
class DistanceTable {
public:
    explicit DistanceTable(int n);

    int size() const noexcept { return n_; }
    int distance(const PancakeState& state) const;
    int diameter() const noexcept { return diameter_; }

private:
    int n_;
    int diameter_ = 0;
    std::vector<std::uint8_t> dist_;
};

/// Shared table for size n, built on first use and read-only afterwards.
/// Respects oracle_limit().
const DistanceTable& distance_table(int n);

/// Minimum-length flip sequence, read off the distance table (smallest k
/// among the optimal successors at each step).
SolveResult optimal_solve(const PancakeState& state);

/// Forward iterative-deepening search bounded by the gap heuristic. No size
/// cap; slow beyond a dozen pancakes for hard instances.
SolveResult ida_star_solve(const PancakeState& state);

/// Gap-decreasing move when one exists, otherwise the escape plan of the
/// normalized prefix. Uses at most 3 flips per gap removed.
SolveResult greedy_solve(const PancakeState& state);

/// Replays `moves` from `state`.
PancakeState apply_moves(PancakeState state, const std::vector<Flip>& moves);

}  // namespace gaptopo
