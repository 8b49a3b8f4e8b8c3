#include "gaptopo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "gaptopo/solver.hpp"

namespace gaptopo {

StateEnumerator::StateEnumerator(int n, bool normalized_only, std::optional<int> first)
    : n_(n), normalized_only_(normalized_only), first_(first) {
    if (n < 1 || n > kMaxEnumerationSize) {
        throw CapacityError("enumeration size " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxEnumerationSize) + "]");
    }
    if (first && (*first < 1 || *first > n)) {
        throw ContractViolation("shard value " + std::to_string(*first) + " outside [1, " +
                                std::to_string(n) + "]");
    }
    values_.resize(n);
    if (first) {
        values_[0] = *first;
        int v = 1;
        for (int i = 1; i < n; ++i, ++v) {
            if (v == *first) ++v;
            values_[i] = v;
        }
    } else {
        for (int i = 0; i < n; ++i) values_[i] = i + 1;
    }
}

bool StateEnumerator::advance() {
    if (!started_) {
        started_ = true;
        return true;
    }
    if (first_) return std::next_permutation(values_.begin() + 1, values_.end());
    return std::next_permutation(values_.begin(), values_.end());
}

bool StateEnumerator::next(PancakeState& out) {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (normalized_only_ && n_ > 1 && values_.back() == n_) continue;
        out = PancakeState::from_values(values_);
        return true;
    }
    return false;
}

std::uint64_t state_count(int n, bool normalized_only) {
    const std::uint64_t all = factorial(n);
    if (!normalized_only || n == 1) return all;
    return all / static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
}

std::vector<PancakeState> enumerate_states(int n, bool normalized_only) {
    std::vector<PancakeState> out;
    StateEnumerator it(n, normalized_only);
    PancakeState s = PancakeState::goal(1);
    while (it.next(s)) out.push_back(s);
    return out;
}

std::uint64_t VerificationReport::total_violations() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [name, count] : violation_counts) total += count;
    return total;
}

void ViolationLog::store(const Violation& v) {
    if (stored_[v.check]++ < kViolationRecordCap) records_.push_back(v);
}

void ViolationLog::record(const std::string& check, const PancakeState& state, std::string details) {
    ++counts_[check];
    store({check, format_permutation(state), std::move(details)});
}

void ViolationLog::merge(const ViolationLog& later) {
    for (const auto& [check, count] : later.counts_) counts_[check] += count;
    for (const Violation& v : later.records_) store(v);
}

namespace {

namespace check {
constexpr const char* kGoalIffZeroGaps = "goal_iff_zero_gaps";
constexpr const char* kAtMostTwoDecreasing = "at_most_two_decreasing_moves";
constexpr const char* kDecreasingMatchesReference = "decreasing_moves_match_reference";
constexpr const char* kLocalClassMatchesReference = "local_classification_matches_reference";
constexpr const char* kUnitDelta = "unit_delta";
constexpr const char* kNeutralMoveExists = "gap_neutral_move_exists";
constexpr const char* kNeutralMoveConstructive = "gap_neutral_move_constructive";
constexpr const char* kNormalizationPreservesGaps = "normalization_preserves_gaps";
constexpr const char* kGreedyBound = "greedy_sorts_within_bound";
constexpr const char* kExitDistanceByClass = "exit_distance_by_class";
constexpr const char* kExitDistanceAtMostTwo = "exit_distance_at_most_two";
constexpr const char* kPlateauSearch = "plateau_search_finds_exit";
constexpr const char* kEasyFgForm = "easy_fg_form";
constexpr const char* kEasyFgUnique = "easy_fg_unique";
constexpr const char* kHardFgNoOneStepExit = "hard_fg_no_one_step_exit";
constexpr const char* kHardFgPlan = "hard_fg_plan";
constexpr const char* kEscapePlanValid = "escape_plan_valid";
constexpr const char* kEscapePlanMatchesExitDistance = "escape_plan_matches_exit_distance";
constexpr const char* kClassPartition = "class_partition";
// Oracle-backed.
constexpr const char* kAdmissibility = "admissibility";
constexpr const char* kLockedCostBound = "locked_cost_exceeds_gaps";
constexpr const char* kNormalizationPreservesCost = "normalization_preserves_cost";
constexpr const char* kGreedyNotBelowOptimal = "greedy_not_below_optimal";
constexpr const char* kEasyFgOptimalCost = "easy_fg_optimal_cost";
constexpr const char* kOracleSymmetry = "oracle_forward_matches_table";
}  // namespace check

const std::vector<std::string>& plain_checks() {
    static const std::vector<std::string> names{
        check::kGoalIffZeroGaps,        check::kAtMostTwoDecreasing,
        check::kDecreasingMatchesReference, check::kLocalClassMatchesReference,
        check::kUnitDelta,              check::kNeutralMoveExists,
        check::kNeutralMoveConstructive, check::kNormalizationPreservesGaps,
        check::kGreedyBound,            check::kExitDistanceByClass,
        check::kExitDistanceAtMostTwo,  check::kPlateauSearch,
        check::kEasyFgForm,             check::kEasyFgUnique,
        check::kHardFgNoOneStepExit,    check::kHardFgPlan,
        check::kEscapePlanValid,        check::kEscapePlanMatchesExitDistance,
        check::kClassPartition,
    };
    return names;
}

const std::vector<std::string>& oracle_checks() {
    static const std::vector<std::string> names{
        check::kAdmissibility,          check::kLockedCostBound,
        check::kNormalizationPreservesCost, check::kGreedyNotBelowOptimal,
        check::kEasyFgOptimalCost,      check::kOracleSymmetry,
    };
    return names;
}

// Per-shard accumulator.
struct Tally {
    std::uint64_t states_checked = 0;
    std::uint64_t states_enumerated = 0;
    std::map<StateClass, std::uint64_t> census;
    std::map<int, std::uint64_t> histogram;
    ViolationLog log;

    void fail(const char* name, const PancakeState& s, std::string details) {
        log.record(name, s, std::move(details));
    }

    template <typename Details>
    void expect(bool ok, const char* name, const PancakeState& s, Details&& details) {
        if (!ok) fail(name, s, details());
    }
};

std::string flips_text(const std::vector<Flip>& flips) {
    std::string out = "[";
    for (std::size_t i = 0; i < flips.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(flips[i].k);
    }
    return out + "]";
}

PancakeState easy_fg_form(int n) {
    std::vector<int> v;
    for (int x = n - 2; x >= 1; --x) v.push_back(x);
    v.push_back(n);
    v.push_back(n - 1);
    return PancakeState::from_values(v);
}

struct BatteryConfig {
    int n = 0;
    bool run_checks = true;
    const DistanceTable* oracle = nullptr;  // null: oracle checks skipped
    std::vector<const DistanceTable*> prefix_oracles;  // index m: table for size m
};

// Checks that hold for every state, normalized or not.
void check_any_state(const BatteryConfig& cfg, const PancakeState& s, Tally& t) {
    const int h = gap_count(s);
    const bool goal = is_goal(s);
    t.expect(goal == (h == 0), check::kGoalIffZeroGaps, s,
             [&] { return "is_goal=" + std::to_string(goal) + " gap_count=" + std::to_string(h); });

    const auto decreasing = gap_decreasing_moves(s);
    t.expect(decreasing.size() <= 2, check::kAtMostTwoDecreasing, s,
             [&] { return "decreasing moves " + flips_text(decreasing); });

    std::vector<Flip> reference_decreasing;
    bool has_neutral = false;
    for (int k = 2; k <= s.size(); ++k) {
        const Flip f{k};
        const int delta = gap_count(apply_flip(s, f)) - h;
        t.expect(delta >= -1 && delta <= 1, check::kUnitDelta, s,
                 [&] { return "M_" + std::to_string(k) + " changes gaps by " + std::to_string(delta); });
        const MoveClass reference = classify_move(s, f);
        const MoveClass local = classify_move_local(s, f);
        t.expect(reference == local, check::kLocalClassMatchesReference, s, [&] {
            return "M_" + std::to_string(k) + " reference " + std::string(to_string(reference)) +
                   " local " + std::string(to_string(local));
        });
        if (reference == MoveClass::Decreasing) reference_decreasing.push_back(f);
        if (reference == MoveClass::Neutral) has_neutral = true;
    }
    t.expect(reference_decreasing == decreasing, check::kDecreasingMatchesReference, s, [&] {
        return "scan " + flips_text(decreasing) + " recount " + flips_text(reference_decreasing);
    });

    if (!goal && decreasing.empty()) {
        t.expect(has_neutral, check::kNeutralMoveExists, s, [] { return "locked with no neutral move"; });
        const Flip f = find_gap_neutral_move(s);
        t.expect(f.k >= 2 && f.k <= s.size() && classify_move(s, f) == MoveClass::Neutral,
                 check::kNeutralMoveConstructive, s,
                 [&] { return "constructed M_" + std::to_string(f.k) + " is not neutral"; });
    }

    const PancakeState normalized = normalize_suffix(s);
    t.expect(gap_count(normalized) == h, check::kNormalizationPreservesGaps, s, [&] {
        return "normalized " + format_permutation(normalized) + " has " +
               std::to_string(gap_count(normalized)) + " gaps";
    });

    const SolveResult greedy = greedy_solve(s);
    t.expect(is_goal(apply_moves(s, greedy.moves)) && greedy.length <= 3 * h, check::kGreedyBound, s,
             [&] { return "greedy " + flips_text(greedy.moves) + " with " + std::to_string(h) + " gaps"; });

    if (cfg.oracle == nullptr) return;
    const int optimal = cfg.oracle->distance(s);
    t.expect(h <= optimal, check::kAdmissibility, s,
             [&] { return "gaps " + std::to_string(h) + " > optimal " + std::to_string(optimal); });
    if (!goal && decreasing.empty()) {
        t.expect(optimal >= h + 1, check::kLockedCostBound, s,
                 [&] { return "locked but optimal " + std::to_string(optimal) + " <= gaps"; });
    }
    const int normalized_optimal = cfg.prefix_oracles[normalized.size()]->distance(normalized);
    t.expect(normalized_optimal == optimal, check::kNormalizationPreservesCost, s, [&] {
        return "optimal " + std::to_string(optimal) + " normalized " + std::to_string(normalized_optimal);
    });
    t.expect(greedy.length >= optimal, check::kGreedyNotBelowOptimal, s, [&] {
        return "greedy " + std::to_string(greedy.length) + " < optimal " + std::to_string(optimal);
    });
    if (is_normalized(s)) {
        const SolveResult forward = ida_star_solve(s);
        const SolveResult descent = optimal_solve(s);
        t.expect(forward.length == optimal && descent.length == optimal &&
                     is_goal(apply_moves(s, forward.moves)) && is_goal(apply_moves(s, descent.moves)),
                 check::kOracleSymmetry, s, [&] {
                     return "table " + std::to_string(optimal) + " forward " + std::to_string(forward.length) +
                            " descent " + std::to_string(descent.length);
                 });
    }
}

void check_normalized_state(const BatteryConfig& cfg, const PancakeState& s, Tally& t) {
    const StateClass cls = classify_state(s);
    ++t.census[cls];
    if (cls == StateClass::Goal) return;

    const int h = gap_count(s);
    const int n = s.size();
    int distance = -1;
    try {
        distance = exit_distance(s);
        ++t.histogram[distance];
    } catch (const TheoremViolation& e) {
        t.fail(check::kPlateauSearch, s, e.what());
    }
    if (!cfg.run_checks) return;

    const int expected = cls == StateClass::ExitState ? 0 : cls == StateClass::HardFG ? 2 : 1;
    t.expect(distance == expected, check::kExitDistanceByClass, s, [&] {
        return std::string(to_string(cls)) + " exit distance " + std::to_string(distance) + " expected " +
               std::to_string(expected);
    });
    t.expect(distance >= 0 && distance <= 2, check::kExitDistanceAtMostTwo, s,
             [&] { return "exit distance " + std::to_string(distance); });

    if (cls == StateClass::EasyFG) {
        t.expect(s == easy_fg_form(n), check::kEasyFgForm, s,
                 [&] { return "expected " + format_permutation(easy_fg_form(n)); });
        if (cfg.oracle != nullptr) {
            const int optimal = cfg.oracle->distance(s);
            t.expect(optimal == 3, check::kEasyFgOptimalCost, s,
                     [&] { return "optimal cost " + std::to_string(optimal); });
        }
    }

    if (cls == StateClass::HardFG) {
        // No flip may land on a state that has a neighbour below h: this
        // covers gap-increasing successors as well as plateau exits.
        for (int k = 2; k <= n; ++k) {
            const PancakeState next = apply_flip(s, Flip{k});
            for (int j = 2; j <= n; ++j) {
                const int after = gap_count(apply_flip(next, Flip{j}));
                t.expect(after >= h, check::kHardFgNoOneStepExit, s, [&] {
                    return "M_" + std::to_string(k) + " then M_" + std::to_string(j) + " reaches " +
                           std::to_string(after) + " gaps";
                });
            }
        }
        const int l = strips(s).back().size();
        const PancakeState a = apply_flip(s, Flip{n});
        const PancakeState b = apply_flip(a, Flip{l});
        const PancakeState c = apply_flip(b, Flip{n});
        t.expect(gap_count(a) == h && gap_count(b) == h && gap_count(c) == h - 1, check::kHardFgPlan, s, [&] {
            return "M_N, M_" + std::to_string(l) + ", M_N gives gap counts " + std::to_string(gap_count(a)) +
                   "," + std::to_string(gap_count(b)) + "," + std::to_string(gap_count(c));
        });
    }

    try {
        const EscapePlan plan = escape_plan(s);
        PancakeState cur = s;
        bool neutral = true;
        for (Flip f : plan.moves_to_exit) {
            neutral = neutral && classify_move(cur, f) == MoveClass::Neutral;
            cur = apply_flip(cur, f);
        }
        const bool closes = classify_move(cur, plan.closing_move) == MoveClass::Decreasing;
        const int final_gaps = gap_count(apply_flip(cur, plan.closing_move));
        t.expect(neutral && closes && final_gaps == h - 1, check::kEscapePlanValid, s, [&] {
            return "plan " + flips_text(plan.moves_to_exit) + " closing M_" + std::to_string(plan.closing_move.k);
        });
        t.expect(static_cast<int>(plan.moves_to_exit.size()) == distance, check::kEscapePlanMatchesExitDistance,
                 s, [&] {
                     return "plan length " + std::to_string(plan.moves_to_exit.size()) + " exit distance " +
                            std::to_string(distance);
                 });
    } catch (const TheoremViolation& e) {
        t.fail(check::kEscapePlanValid, s, e.what());
    }
}

void run_shard(const BatteryConfig& cfg, int first, Tally& t) {
    const int n = cfg.n;
    StateEnumerator it(n, false, first);
    PancakeState s = PancakeState::goal(1);
    while (it.next(s)) {
        ++t.states_enumerated;
        if (cfg.run_checks) check_any_state(cfg, s, t);
        if (is_normalized(s)) {
            ++t.states_checked;
            check_normalized_state(cfg, s, t);
        }
    }
}

int resolve_jobs(int requested, int shards) {
    int jobs = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(jobs, 1, shards);
}

VerificationReport run_battery(const BatteryConfig& cfg, int jobs) {
    const auto started = std::chrono::steady_clock::now();
    const int shards = cfg.n;
    std::vector<Tally> tallies(shards);
    std::vector<std::exception_ptr> errors(shards);
    std::atomic<int> next_shard{0};
    auto worker = [&] {
        for (int i = next_shard++; i < shards; i = next_shard++) {
            try {
                run_shard(cfg, i + 1, tallies[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int w = 1; w < resolve_jobs(jobs, shards); ++w) pool.emplace_back(worker);
        worker();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    VerificationReport report;
    report.n = cfg.n;
    for (StateClass c : kAllStateClasses) report.class_census[c] = 0;
    Tally merged;
    for (Tally& t : tallies) {
        report.states_checked += t.states_checked;
        report.states_enumerated += t.states_enumerated;
        for (auto [c, count] : t.census) report.class_census[c] += count;
        for (auto [d, count] : t.histogram) report.exit_distance_histogram[d] += count;
        merged.log.merge(t.log);
    }

    if (cfg.run_checks) {
        std::uint64_t census_total = 0;
        for (auto [c, count] : report.class_census) census_total += count;
        if (census_total != report.states_checked) {
            merged.fail(check::kClassPartition, PancakeState::goal(cfg.n),
                        "census sums to " + std::to_string(census_total) + " over " +
                            std::to_string(report.states_checked) + " states");
        }
        const std::uint64_t easy = report.class_census[StateClass::EasyFG];
        const std::uint64_t expected_easy = cfg.n >= 4 ? 1 : 0;
        if (easy != expected_easy) {
            merged.fail(check::kEasyFgUnique, PancakeState::goal(cfg.n),
                        std::to_string(easy) + " easy FG states, expected " + std::to_string(expected_easy));
        }
    }

    // Group records by check name, enumeration order within each.
    report.violations = merged.log.records();
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const Violation& a, const Violation& b) { return a.check < b.check; });
    report.violation_counts = merged.log.counts();
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace

VerificationReport verify_theorems(int n, const VerifyOptions& options) {
    if (n < 2 || n > kMaxVerifySize) {
        throw CapacityError("verify supports 2 <= n <= " + std::to_string(kMaxVerifySize) + " (got " +
                            std::to_string(n) + ")");
    }
    if (n > kDefaultVerifySize && !options.long_run) {
        throw CapacityError("verify with n = " + std::to_string(n) + " > " +
                            std::to_string(kDefaultVerifySize) + " is long-running; pass --long");
    }
    BatteryConfig cfg;
    cfg.n = n;
    VerificationReport skeleton;
    skeleton.checks_run = plain_checks();
    if (n <= oracle_limit()) {
        cfg.prefix_oracles.assign(n + 1, nullptr);
        for (int m = 1; m <= n; ++m) cfg.prefix_oracles[m] = &distance_table(m);
        cfg.oracle = cfg.prefix_oracles[n];
        skeleton.checks_run.insert(skeleton.checks_run.end(), oracle_checks().begin(), oracle_checks().end());
    } else {
        skeleton.checks_skipped = oracle_checks();
    }

    VerificationReport report = run_battery(cfg, options.jobs);
    report.checks_run = std::move(skeleton.checks_run);
    report.checks_skipped = std::move(skeleton.checks_skipped);
    return report;
}

VerificationReport census(int n, const VerifyOptions& options) {
    if (n < 2 || n > kMaxEnumerationSize) {
        throw CapacityError("census supports 2 <= n <= " + std::to_string(kMaxEnumerationSize) + " (got " +
                            std::to_string(n) + ")");
    }
    BatteryConfig cfg;
    cfg.n = n;
    cfg.run_checks = false;
    return run_battery(cfg, options.jobs);
}

}  // namespace gaptopo
