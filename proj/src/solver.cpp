#include "gaptopo/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "gaptopo/topology.hpp"

namespace gaptopo {

namespace {

constexpr std::uint8_t kUnvisited = std::numeric_limits<std::uint8_t>::max();

}  // namespace

int oracle_limit() {
    const char* env = std::getenv("GAP_TOPOLOGY_ORACLE_LIMIT");
    if (env == nullptr || *env == '\0') return kDefaultOracleLimit;
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
        throw CapacityError(std::string("GAP_TOPOLOGY_ORACLE_LIMIT='") + env +
                            "' is not a positive integer");
    }
    if (value > kOracleHardLimit) {
        throw CapacityError("GAP_TOPOLOGY_ORACLE_LIMIT=" + std::to_string(value) +
                            " exceeds the hard limit of " + std::to_string(kOracleHardLimit));
    }
    return value;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t permutation_rank(const PancakeState& state) {
    const int n = state.size();
    std::uint64_t rank = 0;
    std::uint32_t used = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = state[i];
        // Count unused values smaller than v.
        const int smaller_unused = (v - 1) - std::popcount(used & ((1u << (v - 1)) - 1));
        rank = rank * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_unused);
        used |= 1u << (v - 1);
    }
    return rank;
}

PancakeState permutation_unrank(int n, std::uint64_t rank) {
    std::array<int, kMaxPancakes> digits{};
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[i] = static_cast<int>(rank % base);
        rank /= base;
    }
    std::vector<int> values(n);
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        int skip = digits[i];
        for (int v = 1; v <= n; ++v) {
            if (used & (1u << (v - 1))) continue;
            if (skip-- == 0) {
                values[i] = v;
                used |= 1u << (v - 1);
                break;
            }
        }
    }
    return PancakeState::from_values(values);
}

DistanceTable::DistanceTable(int n) : n_(n) {
    if (n < 1 || n > kOracleHardLimit) {
        throw CapacityError("distance table size " + std::to_string(n) + " outside [1, " +
                            std::to_string(kOracleHardLimit) + "]");
    }
    dist_.assign(factorial(n), kUnvisited);
    std::vector<std::uint64_t> frontier{permutation_rank(PancakeState::goal(n))};
    dist_[frontier.front()] = 0;
    std::vector<std::uint64_t> next;
    for (int depth = 0; !frontier.empty(); ++depth) {
        next.clear();
        for (std::uint64_t r : frontier) {
            const PancakeState s = permutation_unrank(n, r);
            for (int k = 2; k <= n; ++k) {
                const std::uint64_t t = permutation_rank(apply_flip(s, Flip{k}));
                if (dist_[t] != kUnvisited) continue;
                dist_[t] = static_cast<std::uint8_t>(depth + 1);
                next.push_back(t);
            }
        }
        if (!next.empty()) diameter_ = depth + 1;
        frontier.swap(next);
    }
}

int DistanceTable::distance(const PancakeState& state) const {
    if (state.size() != n_) {
        throw ContractViolation("state of size " + std::to_string(state.size()) +
                                " queried against a table for size " + std::to_string(n_));
    }
    return dist_[permutation_rank(state)];
}

const DistanceTable& distance_table(int n) {
    const int limit = oracle_limit();
    if (n > limit) {
        throw CapacityError("optimal oracle limited to n <= " + std::to_string(limit) + " (got n = " +
                            std::to_string(n) + "); raise GAP_TOPOLOGY_ORACLE_LIMIT to extend");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const DistanceTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[n];
    if (!slot) slot = std::make_unique<const DistanceTable>(n);
    return *slot;
}

SolveResult optimal_solve(const PancakeState& state) {
    const DistanceTable& table = distance_table(state.size());
    SolveResult result;
    result.initial_gap_count = gap_count(state);
    PancakeState current = state;
    int remaining = table.distance(current);
    while (remaining > 0) {
        for (int k = 2; k <= current.size(); ++k) {
            PancakeState next = apply_flip(current, Flip{k});
            if (table.distance(next) == remaining - 1) {
                result.moves.push_back(Flip{k});
                current = next;
                break;
            }
        }
        --remaining;
    }
    result.length = static_cast<int>(result.moves.size());
    return result;
}

namespace {

class IdaStar {
public:
    explicit IdaStar(const PancakeState& start) : start_(start) {}

    std::vector<Flip> run() {
        int bound = gap_count(start_);
        while (true) {
            path_.clear();
            const int next = search(start_, 0, bound, 0);
            if (next == kFound) return path_;
            bound = next;
        }
    }

private:
    static constexpr int kFound = -1;

    int search(const PancakeState& s, int g, int bound, int last_k) {
        const int h = gap_count(s);
        if (g + h > bound) return g + h;
        if (h == 0) return kFound;
        int best = std::numeric_limits<int>::max();
        for (int k = 2; k <= s.size(); ++k) {
            if (k == last_k) continue;  // immediate undo
            path_.push_back(Flip{k});
            const int t = search(apply_flip(s, Flip{k}), g + 1, bound, k);
            if (t == kFound) return kFound;
            best = std::min(best, t);
            path_.pop_back();
        }
        return best;
    }

    PancakeState start_;
    std::vector<Flip> path_;
};

}  // namespace

SolveResult ida_star_solve(const PancakeState& state) {
    SolveResult result;
    result.initial_gap_count = gap_count(state);
    result.moves = IdaStar(state).run();
    result.length = static_cast<int>(result.moves.size());
    return result;
}

SolveResult greedy_solve(const PancakeState& state) {
    SolveResult result;
    result.initial_gap_count = gap_count(state);
    PancakeState current = state;
    auto play = [&](Flip f) {
        current = apply_flip(current, f);
        result.moves.push_back(f);
    };
    while (!is_goal(current)) {
        // Decreasing moves of the full state and of its normalized prefix
        // coincide, and every plan flips only within the prefix.
        const auto decreasing = gap_decreasing_moves(current);
        if (!decreasing.empty()) {
            play(decreasing.front());
            continue;
        }
        const EscapePlan plan = escape_plan(normalize_suffix(current));
        for (Flip f : plan.moves_to_exit) play(f);
        play(plan.closing_move);
    }
    result.length = static_cast<int>(result.moves.size());
    return result;
}

PancakeState apply_moves(PancakeState state, const std::vector<Flip>& moves) {
    for (Flip f : moves) state = apply_flip(state, f);
    return state;
}

}  // namespace gaptopo
