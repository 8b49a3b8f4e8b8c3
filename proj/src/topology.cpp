#include "gaptopo/topology.hpp"

#include <deque>
#include <unordered_map>

namespace gaptopo {

std::string_view to_string(StripDirection d) {
    switch (d) {
        case StripDirection::Ascending: return "Ascending";
        case StripDirection::Descending: return "Descending";
        case StripDirection::Singleton: return "Singleton";
    }
    return "?";
}

std::string_view to_string(StateClass c) {
    switch (c) {
        case StateClass::Goal: return "Goal";
        case StateClass::ExitState: return "ExitState";
        case StateClass::LockedNonFG: return "LockedNonFG";
        case StateClass::EasyFG: return "EasyFG";
        case StateClass::HardFG: return "HardFG";
    }
    return "?";
}

std::vector<Strip> strips(const PancakeState& state) {
    std::vector<Strip> out;
    const int n = state.size();
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i < n && !has_gap_below(state, i)) continue;
        Strip s{start, i, StripDirection::Singleton};
        if (i > start) {
            bool descending = true;
            for (int j = start; j < i; ++j) descending = descending && state[j] == state[j + 1] + 1;
            s.direction = descending ? StripDirection::Descending : StripDirection::Ascending;
        }
        out.push_back(s);
        start = i + 1;
    }
    return out;
}

bool is_fg_state(const PancakeState& state) {
    const auto parts = strips(state);
    if (parts.size() < 2) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].direction != StripDirection::Descending) return false;
        // Descending strips hold consecutive values, so "in order" reduces to
        // the smallest of this strip exceeding the largest of the previous.
        if (i > 0 && state[parts[i - 1].start] >= state[parts[i].end]) return false;
    }
    return true;
}

StateClass classify_state(const PancakeState& state) {
    if (!is_normalized(state)) {
        throw ContractViolation("classify_state needs a suffix-normalized state; got " +
                                format_permutation(state) + " (apply normalize_suffix first)");
    }
    if (is_goal(state)) return StateClass::Goal;
    if (!is_locked(state)) return StateClass::ExitState;
    if (!is_fg_state(state)) return StateClass::LockedNonFG;
    const auto parts = strips(state);
    if (parts.size() == 2 && parts.back().size() == 2) return StateClass::EasyFG;
    return StateClass::HardFG;
}

Flip find_gap_neutral_move(const PancakeState& state) {
    if (is_goal(state)) throw ContractViolation("find_gap_neutral_move: state is the goal");
    if (!is_locked(state)) {
        throw ContractViolation("find_gap_neutral_move: state " + format_permutation(state) +
                                " is not locked");
    }
    const int n = state.size();
    std::vector<int> where(n + 2, 0);
    for (int i = 1; i <= n; ++i) where[state[i]] = i;

    const int top = state[1];
    if (top > 1) {
        // A locked state never has n on top, so both neighbours exist.
        int l = std::max(where[top - 1], where[top + 1]);
        return Flip{l - 1};
    }
    if (state[2] != 2) return Flip{where[2] - 1};
    for (int l = 2; l <= n; ++l) {
        if (has_gap_below(state, l)) return Flip{l};
    }
    throw TheoremViolation("no gap below position 2 in non-goal state " + format_permutation(state));
}

PlateauPath plateau_exit_path(const PancakeState& state) {
    if (is_goal(state)) throw ContractViolation("exit distance is undefined for the goal state");
    if (!is_locked(state)) return {};

    struct Visit {
        std::uint64_t parent;
        int k;
    };
    const std::uint64_t root = state.key();
    std::unordered_map<std::uint64_t, Visit> seen{{root, Visit{root, 0}}};
    std::deque<std::pair<PancakeState, int>> frontier{{state, 0}};

    auto unwind = [&](std::uint64_t key, int depth) {
        PlateauPath path{depth, std::vector<Flip>(depth)};
        for (int i = depth - 1; i >= 0; --i) {
            const Visit& v = seen.at(key);
            path.moves[i] = Flip{v.k};
            key = v.parent;
        }
        return path;
    };

    while (!frontier.empty()) {
        auto [current, depth] = frontier.front();
        frontier.pop_front();
        const std::uint64_t current_key = current.key();
        for (int k = 2; k <= current.size(); ++k) {
            if (classify_move_local(current, Flip{k}) != MoveClass::Neutral) continue;
            PancakeState next = apply_flip(current, Flip{k});
            auto [it, inserted] = seen.try_emplace(next.key(), Visit{current_key, k});
            if (!inserted) continue;
            if (!is_locked(next)) return unwind(it->first, depth + 1);
            frontier.emplace_back(next, depth + 1);
        }
    }
    throw TheoremViolation("no exit on plateau of " + format_permutation(state) + " (" +
                           std::to_string(seen.size()) + " states searched)");
}

int exit_distance(const PancakeState& state) { return plateau_exit_path(state).distance; }

EscapePlan escape_plan(const PancakeState& state) {
    const int n = state.size();
    switch (classify_state(state)) {
        case StateClass::Goal:
            throw ContractViolation("escape_plan: state is the goal");
        case StateClass::ExitState:
            return {{}, gap_decreasing_moves(state).front()};
        case StateClass::EasyFG:
            return {{Flip{n - 1}}, Flip{n}};
        case StateClass::HardFG:
            return {{Flip{n}, Flip{strips(state).back().size()}}, Flip{n}};
        case StateClass::LockedNonFG:
            for (int k = 2; k <= n; ++k) {
                if (classify_move_local(state, Flip{k}) != MoveClass::Neutral) continue;
                auto exits = gap_decreasing_moves(apply_flip(state, Flip{k}));
                if (!exits.empty()) return {{Flip{k}}, exits.front()};
            }
            throw TheoremViolation("corollary violated: locked non-FG state " +
                                   format_permutation(state) + " has no one-move exit");
    }
    throw ContractViolation("escape_plan: unknown state class");
}

}  // namespace gaptopo
