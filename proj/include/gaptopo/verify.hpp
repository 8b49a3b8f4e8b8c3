#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaptopo/core.hpp"
#include "gaptopo/topology.hpp"

namespace gaptopo {

inline constexpr int kMaxEnumerationSize = 12;
// Sizes above this need VerifyOptions::long_run.
inline constexpr int kDefaultVerifySize = 8;
inline constexpr int kMaxVerifySize = 10;
// Stored violation records per check name; counts stay exact.
inline constexpr std::size_t kViolationRecordCap = 100;

/// Lexicographic stream of permutations of 1..n, optionally restricted to
/// normalized states (bottom pancake out of place) and/or to one shard (all
/// permutations whose top pancake is `first`).
class StateEnumerator {
public:
    StateEnumerator(int n, bool normalized_only, std::optional<int> first = std::nullopt);

    /// Writes the next state into `out`; false when exhausted.
    bool next(PancakeState& out);

private:
    bool advance();

    int n_;
    bool normalized_only_;
    std::optional<int> first_;
    std::vector<int> values_;
    bool started_ = false;
    bool done_ = false;
};

/// n! for all states, n! * (n-1) / n normalized (1 for n == 1).
std::uint64_t state_count(int n, bool normalized_only);

/// Collects the whole stream. Only sensible for small n.
std::vector<PancakeState> enumerate_states(int n, bool normalized_only);

struct Violation {
    std::string check;
    std::string state;
    std::string details;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Violation records keyed by check name: at most kViolationRecordCap
/// stored per check, exact counts kept for all.
class ViolationLog {
public:
    void record(const std::string& check, const PancakeState& state, std::string details);

    /// Appends `later` as if its records had been logged after ours.
    void merge(const ViolationLog& later);

    const std::map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }
    const std::vector<Violation>& records() const noexcept { return records_; }

private:
    void store(const Violation& v);

    std::map<std::string, std::uint64_t> counts_;
    std::map<std::string, std::size_t> stored_;
    std::vector<Violation> records_;
};

struct VerificationReport {
    int n = 0;
    std::uint64_t states_checked = 0;     // normalized states classified
    std::uint64_t states_enumerated = 0;  // all states (state-wide checks)
    std::map<StateClass, std::uint64_t> class_census;
    std::map<int, std::uint64_t> exit_distance_histogram;
    std::map<std::string, std::uint64_t> violation_counts;
    std::vector<Violation> violations;
    std::vector<std::string> checks_run;
    std::vector<std::string> checks_skipped;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return violation_counts.empty(); }
    std::uint64_t total_violations() const noexcept;
};

struct VerifyOptions {
    int jobs = 0;          // 0 = hardware concurrency
    bool long_run = false; // permits n above kDefaultVerifySize
};

/// Runs the full theorem battery over every state of size n. Oracle-backed
/// checks run only when n is within oracle_limit() and are listed in
/// checks_skipped otherwise. Throws CapacityError when n is out of range.
VerificationReport verify_theorems(int n, const VerifyOptions& options = {});

/// Class census and exit-distance histogram over normalized states, no checks.
VerificationReport census(int n, const VerifyOptions& options = {});

}  // namespace gaptopo
