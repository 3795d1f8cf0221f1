#pragma once

#include <mpt/digraph.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace mpt {

/// A simple directed cycle, listed from its smallest vertex.
struct CycleWitness {
    std::vector<Vertex> vertices;

    [[nodiscard]] auto length() const -> int { return static_cast<int>(vertices.size()); }
    [[nodiscard]] auto successor(std::size_t pos) const -> Vertex { return vertices[(pos + 1) % vertices.size()]; }
    [[nodiscard]] auto contains(Vertex v) const -> bool;

    auto operator==(const CycleWitness &) const -> bool = default;
};

enum class SearchMode { Fast, Oracle };

/// Optional wall-clock budget; searches that overrun throw Error(Timeout).
struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static auto within(std::chrono::milliseconds budget) -> SearchLimits
    {
        return {std::chrono::steady_clock::now() + budget};
    }
};

/// Independent validity check: distinct vertices, every consecutive pair
/// (including last to first) an arc, at least 3 vertices.
[[nodiscard]] auto is_valid_cycle(const MultipartiteTournament & d, const CycleWitness & c) -> bool;

/// Number of distinct parts the cycle visits.
[[nodiscard]] auto parts_met(const MultipartiteTournament & d, const CycleWitness & c) -> int;

/// Lexicographically smallest q-cycle (rotated to start at its minimum), or
/// nullopt when none exists. Both modes return the same answer; Oracle is a
/// plain anchored DFS, Fast adds distance and bitset pruning.
[[nodiscard]] auto find_cycle(const MultipartiteTournament & d, int q, SearchMode mode = SearchMode::Fast,
    const SearchLimits & limits = {}) -> std::optional<CycleWitness>;

class CycleSpectrum {
public:
    CycleSpectrum() = default;
    explicit CycleSpectrum(int q_max) : q_max_(q_max), witnesses_(static_cast<std::size_t>(std::max(q_max, 2)) + 1) {}

    [[nodiscard]] auto q_max() const -> int { return q_max_; }
    [[nodiscard]] auto contains(int q) const -> bool { return witness(q) != nullptr; }
    [[nodiscard]] auto covers(int q) const -> bool { return q >= 3 && q <= q_max_; }
    [[nodiscard]] auto witness(int q) const -> const CycleWitness *;
    /// Lengths in [3, q_max] that have a cycle.
    [[nodiscard]] auto lengths() const -> std::vector<int>;

    void set(int q, std::optional<CycleWitness> w) { witnesses_.at(q) = std::move(w); }

private:
    int q_max_ = 2;
    std::vector<std::optional<CycleWitness>> witnesses_;
};

[[nodiscard]] auto cycle_spectrum(const MultipartiteTournament & d, int q_max, SearchMode mode = SearchMode::Fast,
    const SearchLimits & limits = {}) -> CycleSpectrum;

/// Cycle vertices v with v -> x and x -> v^+. Throws VertexOnCycle.
[[nodiscard]] auto can_insert(const MultipartiteTournament & d, const CycleWitness & c, Vertex x) -> std::vector<Vertex>;

struct ExtensionRangeReport {
    int k = 0;     ///< cycle length
    int l = 0;     ///< parts met
    int upper = 0; ///< c + (k - l)
    std::vector<int> missing;

    [[nodiscard]] auto passed() const -> bool { return missing.empty(); }
};

/// A strong c-partite tournament with a k-cycle meeting l < c parts has a
/// t-cycle for every k <= t <= c + k - l. Lengths already in `known` are not
/// searched again.
[[nodiscard]] auto check_extension_range(const MultipartiteTournament & d, const CycleWitness & c,
    const CycleSpectrum * known = nullptr, const SearchLimits & limits = {}) -> ExtensionRangeReport;

struct CycleEnumeration {
    std::vector<CycleWitness> cycles;
    bool exhausted = false; ///< cap reached before the search finished
};

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// All q-cycles, one per rotation class, in lexicographic order.
[[nodiscard]] auto all_cycles_of_length(const MultipartiteTournament & d, int q,
    std::size_t cap = default_enumeration_cap, const SearchLimits & limits = {}) -> CycleEnumeration;

} // namespace mpt
