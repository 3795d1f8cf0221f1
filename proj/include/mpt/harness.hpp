#pragma once

#include <mpt/cycles.hpp>
#include <mpt/digraph.hpp>
#include <mpt/families.hpp>
#include <mpt/recognizer.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace mpt {

enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };

[[nodiscard]] auto to_string(CheckStatus s) -> std::string_view;

/// Outcome of one property check on one instance. Witnesses and the
/// certificate are kept so that a failure can be audited without rerunning.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
    std::vector<CycleWitness> witnesses;
    std::optional<RecognitionResult> certificate;
};

struct RandomSource {
    int c = 0;
    std::vector<int> sizes;
    std::uint64_t seed = 0;
};

using FamilySpec = std::variant<WSpec, QSpec, HSpec>;

/// A family member with one rich-preserving arc reversal, see perturb().
struct PerturbationSource {
    FamilySpec base;
    std::uint64_t seed = 0;
};

/// Everything needed to rebuild an instance exactly.
using Provenance = std::variant<WSpec, QSpec, HSpec, RandomSource, PerturbationSource>;

[[nodiscard]] auto generate(const FamilySpec & spec) -> MultipartiteTournament;
[[nodiscard]] auto materialize(const Provenance & source) -> MultipartiteTournament;

/// Uniform integer in [0, bound) from raw generator output (rejection sampling).
[[nodiscard]] auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t;

/// Seeded uniform permutation of 0..n-1 (Fisher-Yates).
[[nodiscard]] auto seeded_permutation(int n, std::uint64_t seed) -> std::vector<Vertex>;

/// Reverses one uniformly chosen arc, redrawing until the result is rich.
/// Throws GaveUp after max_tries draws.
[[nodiscard]] auto perturb(const MultipartiteTournament & d, std::uint64_t seed, int max_tries = 1000)
    -> MultipartiteTournament;

struct CheckLimits {
    std::size_t enumeration_cap = default_enumeration_cap;
    std::size_t insertion_cap = 10'000;
    std::chrono::milliseconds per_instance{60'000};
};

/// Cycle facts shared by the checks of one instance: lengths 3..min(c+2, n).
struct InstanceFacts {
    CycleSpectrum spectrum;
    bool strong = false;
};

[[nodiscard]] auto compute_facts(const MultipartiteTournament & d, SearchMode mode = SearchMode::Fast,
    const SearchLimits & limits = {}) -> InstanceFacts;

/// Spectrum contains c+1 or c+2.
[[nodiscard]] auto check_theorem1(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord;

/// No (c+1)-cycle iff recognize_W finds a member.
[[nodiscard]] auto check_theorem2(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord;

/// No (c+2)-cycle iff recognize finds a member of Q or H. Skipped for c < 8.
[[nodiscard]] auto check_theorem3(const MultipartiteTournament & d, const InstanceFacts & facts,
    const RecognizerOptions & options = {}) -> CheckRecord;

/// Spectrum contains 3..c. Skipped when d is not strong.
[[nodiscard]] auto check_bondy(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord;

/// Every spectrum witness meeting l < c parts has all lengths k..c+k-l.
[[nodiscard]] auto check_extension_range(const MultipartiteTournament & d, const InstanceFacts & facts,
    const SearchLimits & limits = {}) -> CheckRecord;

/// When k exists and k+1 does not, no off-cycle vertex can be inserted into
/// any of the first `cap` k-cycles. Skipped when the premise fails.
[[nodiscard]] auto check_no_insertion(const MultipartiteTournament & d, const InstanceFacts & facts, int k,
    std::size_t cap = 10'000, const SearchLimits & limits = {}) -> CheckRecord;

/// With no (c+2)-cycle: if every (c+1)-cycle C has each off-cycle vertex in
/// N+(C) and N-(C), the instance is in H; and on each such C every off-cycle
/// vertex y has a cycle vertex x of its part with x^- -> y -> x^+.
/// Inconclusive when the enumeration hits the cap.
[[nodiscard]] auto check_lemma6_shape(const MultipartiteTournament & d, const InstanceFacts & facts,
    std::size_t cap = default_enumeration_cap, const RecognizerOptions & options = {}, const SearchLimits & limits = {})
    -> CheckRecord;

/// Literal strong form of the copy property: on every (c+1)-cycle C meeting
/// the premise above, each off-cycle vertex has exactly the in- and
/// out-neighbours on C of some cycle vertex of its part. Known to fail on H
/// members whose v_1 arcs split a part; the witness is the offending cycle.
[[nodiscard]] auto check_cycle_copy_literal(const MultipartiteTournament & d, const InstanceFacts & facts,
    std::size_t cap = default_enumeration_cap, const SearchLimits & limits = {}) -> CheckRecord;

/// With no (c+2)-cycle, every (c+1)-cycle visits all c parts.
[[nodiscard]] auto check_c1_meets_all_parts(const MultipartiteTournament & d, const InstanceFacts & facts,
    std::size_t cap = default_enumeration_cap, const SearchLimits & limits = {}) -> CheckRecord;

/// Q members have diameter >= c+2, H members diameter <= c+1.
[[nodiscard]] auto check_diameter(const MultipartiteTournament & d, Verdict family) -> CheckRecord;

/// Relabels d by a seeded permutation, recognizes it, and checks the verdict
/// and the certificate. W members go through recognize_W.
[[nodiscard]] auto check_round_trip(const MultipartiteTournament & d, Verdict expected, std::uint64_t relabel_seed,
    const RecognizerOptions & options = {}) -> CheckRecord;

/// Oracle search for a (c+2)-cycle must come back empty.
[[nodiscard]] auto check_no_c2_oracle(const MultipartiteTournament & d, const SearchLimits & limits = {})
    -> CheckRecord;

struct InstanceRecord {
    std::string label;
    Provenance source;
    int n = 0;
    int c = 0;
    Verdict verdict = Verdict::NotMember;
    std::vector<int> spectrum; ///< lengths found in 3..min(c+2, n)
    std::vector<CheckRecord> checks;
    double elapsed_ms = 0;
    bool open_case_candidate = false;

    [[nodiscard]] auto failed() const -> bool;
    [[nodiscard]] auto inconclusive() const -> bool;
};

struct CheckTally {
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;
    int skipped = 0;
};

struct CampaignReport {
    std::vector<InstanceRecord> records;
    std::map<std::string, CheckTally> tallies;
    std::vector<std::size_t> failures;     ///< indices into records
    std::vector<std::size_t> inconclusive; ///< indices into records
    std::vector<std::size_t> candidates;   ///< exploration: no (c+2)-cycle and NotMember, c < 8

    [[nodiscard]] auto passed() const -> bool { return failures.empty(); }
};

struct CampaignConfig {
    std::vector<HSpec> h_specs;
    std::vector<QSpec> q_specs;
    std::vector<WSpec> w_specs;
    std::uint64_t relabel_seed = 1;

    int perturbations = 0;
    std::uint64_t perturb_seed = 1;

    int fuzz_c = 8;
    int fuzz_part_size = 2;
    int fuzz_count = 0;
    std::uint64_t fuzz_seed = 1;
    bool explore = false; ///< allow fuzzing at c in {5,6,7}; nothing is asserted there

    bool lemma6 = false; ///< enumeration-heavy checks on family members
    CheckLimits limits;
    RecognizerOptions recognizer;
    unsigned threads = 1;
};

/// Acceptance grids at c = 8.
[[nodiscard]] auto h_grid(std::uint64_t seed = 1) -> std::vector<HSpec>;
[[nodiscard]] auto q_grid() -> std::vector<QSpec>;
[[nodiscard]] auto w_grid() -> std::vector<WSpec>;

/// Runs every applicable check on one instance.
[[nodiscard]] auto run_instance(const std::string & label, const Provenance & source, const CampaignConfig & config)
    -> InstanceRecord;

/// Family members first (H, Q, W), then perturbations, then fuzz seeds, in
/// that order regardless of thread count.
[[nodiscard]] auto run_campaign(const CampaignConfig & config) -> CampaignReport;

/// Plain-text table of check tallies and failures.
[[nodiscard]] auto summary_table(const CampaignReport & report) -> std::string;

/// Recomputes tallies and the failure lists from the records.
void aggregate(CampaignReport & report);

} // namespace mpt
