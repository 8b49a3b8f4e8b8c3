#include "gaptopo/core.hpp"

#include <algorithm>
#include <charconv>

namespace gaptopo {

namespace {

bool is_gap(int a, int b) { return a - b > 1 || b - a > 1; }

}  // namespace

std::string_view to_string(MoveClass c) {
    switch (c) {
        case MoveClass::Decreasing: return "Decreasing";
        case MoveClass::Neutral: return "Neutral";
        case MoveClass::Increasing: return "Increasing";
    }
    return "?";
}

PancakeState PancakeState::from_values(std::span<const int> values) {
    const auto n = static_cast<int>(values.size());
    if (n < 1 || n > kMaxPancakes) {
        throw ContractViolation("stack size " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxPancakes) + "]");
    }
    std::array<bool, kMaxPancakes + 1> seen{};
    PancakeState s;
    s.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
        int v = values[i];
        if (v < 1 || v > n) {
            throw ContractViolation("value " + std::to_string(v) + " outside [1, " +
                                    std::to_string(n) + "]");
        }
        if (seen[v]) throw ContractViolation("duplicate value " + std::to_string(v));
        seen[v] = true;
        s.cakes_[i] = static_cast<std::uint8_t>(v);
    }
    return s;
}

PancakeState PancakeState::goal(int n) {
    if (n < 1 || n > kMaxPancakes) {
        throw ContractViolation("stack size " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxPancakes) + "]");
    }
    PancakeState s;
    s.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) s.cakes_[i] = static_cast<std::uint8_t>(i + 1);
    return s;
}

int PancakeState::at(int pos) const {
    if (pos < 1 || pos > n_) {
        throw ContractViolation("position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(n_) + "]");
    }
    return cakes_[pos - 1];
}

std::vector<int> PancakeState::values() const {
    return {cakes_.begin(), cakes_.begin() + n_};
}

std::uint64_t PancakeState::key() const noexcept {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= std::uint64_t(cakes_[i] - 1) << (4 * i);
    return k;
}

PancakeState apply_flip(const PancakeState& state, Flip flip) {
    if (flip.k < 2 || flip.k > state.size()) {
        throw ContractViolation("flip M_" + std::to_string(flip.k) + " invalid for a stack of " +
                                std::to_string(state.size()));
    }
    PancakeState out = state;
    std::reverse(out.cakes_.begin(), out.cakes_.begin() + flip.k);
    return out;
}

int extended_at(const PancakeState& state, int pos) {
    if (pos == state.size() + 1) return state.size() + 1;
    if (pos < 1 || pos > state.size() + 1) {
        throw ContractViolation("extended position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(state.size() + 1) + "]");
    }
    return state[pos];
}

int gap_count(const PancakeState& state) {
    int gaps = 0;
    for (int j = 1; j <= state.size(); ++j) gaps += has_gap_below(state, j) ? 1 : 0;
    return gaps;
}

MoveClass classify_move(const PancakeState& state, Flip flip) {
    int delta = gap_count(apply_flip(state, flip)) - gap_count(state);
    if (delta < 0) return MoveClass::Decreasing;
    if (delta > 0) return MoveClass::Increasing;
    return MoveClass::Neutral;
}

MoveClass classify_move_local(const PancakeState& state, Flip flip) {
    if (flip.k < 2 || flip.k > state.size()) {
        throw ContractViolation("flip M_" + std::to_string(flip.k) + " invalid for a stack of " +
                                std::to_string(state.size()));
    }
    // Only the pair straddling the flip boundary changes: (pi[k], pi^e[k+1])
    // becomes (pi[1], pi^e[k+1]). Pairs inside the prefix keep their distance.
    const int below = flip.k == state.size() ? state.size() + 1 : state[flip.k + 1];
    const int before = is_gap(state[flip.k], below) ? 1 : 0;
    const int after = is_gap(state[1], below) ? 1 : 0;
    if (after < before) return MoveClass::Decreasing;
    if (after > before) return MoveClass::Increasing;
    return MoveClass::Neutral;
}

std::vector<Flip> gap_decreasing_moves(const PancakeState& state) {
    std::vector<Flip> out;
    const int top = state[1];
    for (int i = 2; i <= state.size(); ++i) {
        if (!has_gap_below(state, i)) continue;
        int below = extended_at(state, i + 1);
        if (below == top + 1 || below == top - 1) out.push_back(Flip{i});
    }
    return out;
}

std::vector<Flip> moves_of_class(const PancakeState& state, MoveClass c) {
    std::vector<Flip> out;
    for (int k = 2; k <= state.size(); ++k) {
        if (classify_move_local(state, Flip{k}) == c) out.push_back(Flip{k});
    }
    return out;
}

bool is_locked(const PancakeState& state) { return gap_decreasing_moves(state).empty(); }

bool is_goal(const PancakeState& state) {
    for (int i = 1; i <= state.size(); ++i) {
        if (state[i] != i) return false;
    }
    return true;
}

bool is_normalized(const PancakeState& state) {
    return state.size() == 1 || state[state.size()] != state.size();
}

PancakeState normalize_suffix(const PancakeState& state) {
    int m = state.size();
    while (m > 1 && state[m] == m) --m;
    if (m == state.size()) return state;
    std::vector<int> prefix = state.values();
    prefix.resize(m);
    return PancakeState::from_values(prefix);
}

PancakeState parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("invalid token '" + std::string(token) + "' in permutation '" +
                                 std::string(text) + "'",
                             std::string(token));
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }

    const auto n = static_cast<int>(values.size());
    if (n > kMaxPancakes) {
        throw ParseError("permutation has " + std::to_string(n) + " values; at most " +
                             std::to_string(kMaxPancakes) + " supported",
                         std::to_string(n));
    }
    std::array<bool, kMaxPancakes + 1> seen{};
    for (int v : values) {
        if (v < 1 || v > n) {
            throw ParseError("value '" + std::to_string(v) + "' outside [1, " + std::to_string(n) + "]",
                             std::to_string(v));
        }
        if (seen[v]) throw ParseError("duplicate value '" + std::to_string(v) + "'", std::to_string(v));
        seen[v] = true;
    }
    return PancakeState::from_values(values);
}

std::string format_permutation(const PancakeState& state) {
    std::string out;
    for (int i = 1; i <= state.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(state[i]);
    }
    return out;
}

}  // namespace gaptopo
