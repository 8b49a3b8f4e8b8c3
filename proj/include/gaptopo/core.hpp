#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaptopo/errors.hpp"

namespace gaptopo {

// Largest stack a PancakeState can hold. Values fit in one byte each.
inline constexpr int kMaxPancakes = 16;

/// A prefix reversal M_k: reverses the top k pancakes.
struct Flip {
    int k = 0;

    friend constexpr auto operator<=>(const Flip&, const Flip&) = default;
};

enum class MoveClass { Decreasing, Neutral, Increasing };

std::string_view to_string(MoveClass c);

/// A stack of n distinct pancakes 1..n, listed top to bottom.
///
/// All positions in the public interface are 1-based: position 1 is the top
/// of the stack and position n the bottom. The storage is a packed
/// fixed-width byte array so states can be hashed and copied cheaply.
class PancakeState {
public:
    /// Validates that `values` is a permutation of 1..values.size().
    /// Throws ContractViolation otherwise.
    static PancakeState from_values(std::span<const int> values);
    static PancakeState from_values(std::initializer_list<int> values) {
        return from_values(std::span<const int>(values.begin(), values.size()));
    }

    /// The sorted stack <1, 2, ..., n>.
    static PancakeState goal(int n);

    int size() const noexcept { return n_; }

    /// Pancake at `pos` (1-based, 1 <= pos <= n). Throws ContractViolation.
    int at(int pos) const;

    // Unchecked 1-based access for hot loops.
    int operator[](int pos) const noexcept { return cakes_[pos - 1]; }

    std::vector<int> values() const;

    /// 64-bit packing of the permutation, 4 bits per pancake (value - 1).
    /// Injective for a fixed n.
    std::uint64_t key() const noexcept;

    friend bool operator==(const PancakeState& a, const PancakeState& b) noexcept {
        return a.n_ == b.n_ && a.cakes_ == b.cakes_;
    }

private:
    friend PancakeState apply_flip(const PancakeState& state, Flip flip);

    PancakeState() = default;

    std::array<std::uint8_t, kMaxPancakes> cakes_{};
    std::uint8_t n_ = 0;
};

/// Reverses the top flip.k pancakes. Requires 2 <= k <= n.
PancakeState apply_flip(const PancakeState& state, Flip flip);

/// Reads the extended permutation: the stack followed by a virtual plate
/// holding value n+1. Requires 1 <= pos <= n+1.
int extended_at(const PancakeState& state, int pos);

/// Number of positions j in 1..n whose extended neighbours j, j+1 differ by
/// more than one (the gap heuristic).
int gap_count(const PancakeState& state);

inline bool has_gap_below(const PancakeState& state, int pos) noexcept {
    int a = state[pos];
    int b = pos == state.size() ? state.size() + 1 : state[pos + 1];
    return a - b > 1 || b - a > 1;
}

/// Reference semantics: recount gaps before and after the flip.
MoveClass classify_move(const PancakeState& state, Flip flip);

/// Same answer as classify_move, computed from the two pairs a flip touches.
MoveClass classify_move_local(const PancakeState& state, Flip flip);

/// Every flip that removes a gap, in ascending k. At most two exist.
std::vector<Flip> gap_decreasing_moves(const PancakeState& state);

/// All legal flips of the given class, ascending k.
std::vector<Flip> moves_of_class(const PancakeState& state, MoveClass c);

bool is_locked(const PancakeState& state);
bool is_goal(const PancakeState& state);

/// True when the bottom pancake is not already in place (or n == 1).
bool is_normalized(const PancakeState& state);

/// Drops the sorted bottom run. The goal collapses to <1>.
PancakeState normalize_suffix(const PancakeState& state);

/// Parses "2,1,4,3". Rejects empty tokens, non-numeric tokens, zero,
/// values above n, duplicates and stacks over kMaxPancakes.
PancakeState parse_permutation(std::string_view text);

std::string format_permutation(const PancakeState& state);

}  // namespace gaptopo
