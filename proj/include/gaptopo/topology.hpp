#pragma once

#include <string_view>
#include <vector>

#include "gaptopo/core.hpp"

namespace gaptopo {

enum class StripDirection { Ascending, Descending, Singleton };

std::string_view to_string(StripDirection d);

/// Maximal gap-free run of positions [start, end] (1-based, inclusive).
struct Strip {
    int start = 1;
    int end = 1;
    StripDirection direction = StripDirection::Singleton;

    int size() const noexcept { return end - start + 1; }

    friend bool operator==(const Strip&, const Strip&) = default;
};

/// Taxonomy cell of a suffix-normalized state.
enum class StateClass { Goal, ExitState, LockedNonFG, EasyFG, HardFG };

inline constexpr StateClass kAllStateClasses[] = {StateClass::Goal, StateClass::ExitState,
                                                  StateClass::LockedNonFG, StateClass::EasyFG,
                                                  StateClass::HardFG};

std::string_view to_string(StateClass c);

struct EscapePlan {
    std::vector<Flip> moves_to_exit;
    Flip closing_move;
};

struct PlateauPath {
    int distance = 0;
    std::vector<Flip> moves;  // gap-neutral moves from the state to the exit
};

/// Strips ordered by start. Gaps to the plate are not strip boundaries.
std::vector<Strip> strips(const PancakeState& state);

/// At least two strips, all descending, of size >= 2, each holding smaller
/// pancakes than the next.
bool is_fg_state(const PancakeState& state);

/// Requires a normalized state; throws ContractViolation otherwise.
StateClass classify_state(const PancakeState& state);

/// Constructive gap-neutral move for a locked, non-goal state:
///  - top > 1: with l the deeper of the positions of top-1 and top+1, M_{l-1};
///  - top == 1, second != 2: with l the position of 2, M_{l-1};
///  - top == 1, second == 2: with l the first gap position >= 2, M_l.
Flip find_gap_neutral_move(const PancakeState& state);

/// Breadth-first search over equal-gap-count states using only
/// gap-neutral moves; returns the shallowest exit found (ties broken by
/// ascending k at every level). Throws ContractViolation on the goal and
/// TheoremViolation if the plateau has no exit.
PlateauPath plateau_exit_path(const PancakeState& state);

int exit_distance(const PancakeState& state);

/// Constructive escape: empty for exits, [M_{N-1}] then M_N for easy FG
/// states, [M_N, M_l] then M_N for hard FG states (l = rightmost strip
/// size), and a one-ply search for the remaining locked states.
EscapePlan escape_plan(const PancakeState& state);

}  // namespace gaptopo
