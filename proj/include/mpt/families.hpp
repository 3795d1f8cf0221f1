#pragma once

#include <mpt/digraph.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace mpt {

/// W_m: path x_1..x_m plus back arcs x_i -> x_j (i - j > 1, i != j mod c),
/// partite sets the residues mod c, twin blow-ups only at {1, 2, m-1, m}.
struct WSpec {
    int c = 0;
    int m = 0;
    std::map<int, int> blowup; ///< path index (1-based) -> |A_i| >= 2

    auto operator==(const WSpec &) const -> bool = default;
};

enum class ReversalCase {
    Case1 = 1, ///< (A_2, A_3)-arcs, s = 1 and t = 3
    Case2 = 2, ///< (A_1, A_2)-arcs, s = 2 and t = c + 1
    Case3 = 3, ///< (A_{m-2}, A_{m-1})-arcs, {m-2, m} = {s, t} mod (c + 1)
    Case4 = 4, ///< (A_{m-1}, A_m)-arcs, {m-1, m-c} = {s, t} mod (c + 1)
};

/// Reverses every arc between `flipped` twins of one side and the whole
/// other side. The flipped side is A_b for cases 1 and 2 and A_a for cases 3
/// and 4; the first `flipped` copies are used. 1 <= flipped < |flip side|.
struct Reversal {
    ReversalCase which = ReversalCase::Case1;
    int flipped = 1;

    auto operator==(const Reversal &) const -> bool = default;
    auto operator<=>(const Reversal &) const = default;
};

/// A member of Q_m: Q_m' (residues mod c+1) with residue classes s and t
/// merged, optional blow-ups, optional reversals (at most one per case).
struct QSpec {
    int c = 0;
    int m = 0;
    int s = 0;
    int t = 0;
    std::map<int, int> blowup;
    std::vector<Reversal> reversals;

    auto operator==(const QSpec &) const -> bool = default;
};

/// A member of H: chain classes V_2 -> ... -> V_{c+1} with all arcs forward,
/// plus v_1 merged into V_i. Template vertex 0 is v_1; chain vertices follow
/// class by class.
struct HSpec {
    int c = 0;
    int i = 0;
    std::vector<int> sizes;          ///< sizes[j - 2] = |V_j| for j = 2..c+1
    std::vector<bool> v1_orientation; ///< over vertices outside v_1's part, ascending; true = v_1 dominates

    auto operator==(const HSpec &) const -> bool = default;
};

/// Range of the chain position i accepted for H. Literal is 2 < i < c-1;
/// Extended is 2 < i < c+1, which is closed under reversing all arcs.
enum class HRange { Literal, Extended };

/// Blow-up indices permitted for a QSpec (rules (1)-(3)).
[[nodiscard]] auto q_allowed_blowups(const QSpec & spec) -> std::vector<int>;

/// Reversal cases whose (s, t, m) condition holds.
[[nodiscard]] auto q_applicable_reversals(const QSpec & spec) -> std::vector<ReversalCase>;

/// Path indices (a, a+1) whose arcs a reversal case touches.
[[nodiscard]] auto reversal_pair(ReversalCase which, int m) -> std::pair<int, int>;

/// The index whose twins are flipped.
[[nodiscard]] auto reversal_flip_index(ReversalCase which, int m) -> int;

/// Throws InvalidSpec describing the first violated rule.
void validate(const WSpec & spec);
void validate(const QSpec & spec);
void validate(const HSpec & spec, HRange range = HRange::Literal);

/// Number of vertices the spec generates.
[[nodiscard]] auto vertex_count(const WSpec & spec) -> int;
[[nodiscard]] auto vertex_count(const QSpec & spec) -> int;
[[nodiscard]] auto vertex_count(const HSpec & spec) -> int;

/// Template vertex ids of A_index (1-based index), for W and Q layouts.
[[nodiscard]] auto blowup_vertices(const std::map<int, int> & blowup, int m, int index) -> std::vector<Vertex>;

/// Throws InvalidSpec or NotRich.
[[nodiscard]] auto gen_W(const WSpec & spec) -> MultipartiteTournament;

/// Q_m': (c+1)-partite, residues mod (c+1); only non-empty classes become parts.
[[nodiscard]] auto gen_Qprime(int c, int m) -> MultipartiteTournament;

/// Throws InvalidSpec or NotRich.
[[nodiscard]] auto gen_Q(const QSpec & spec) -> MultipartiteTournament;

/// Throws InvalidSpec or NotStrong.
[[nodiscard]] auto gen_H(const HSpec & spec, HRange range = HRange::Literal) -> MultipartiteTournament;

/// Length of HSpec::v1_orientation: vertices outside v_1's merged part.
[[nodiscard]] auto h_orientation_length(const HSpec & spec) -> int;

/// Same instance up to isomorphism, with each part's orientation block
/// sorted so that vertices dominated by v_1 come first.
[[nodiscard]] auto canonical(HSpec spec) -> HSpec;

/// Uniform orientation of the complete multipartite graph with the given
/// part sizes, resampled until rich. Throws GaveUp after max_tries.
[[nodiscard]] auto random_rich(int c, const std::vector<int> & part_sizes, std::uint64_t seed, int max_tries = 1000)
    -> MultipartiteTournament;

/// Uniform orientation without the richness requirement.
[[nodiscard]] auto random_multipartite(const std::vector<int> & part_sizes, std::uint64_t seed) -> MultipartiteTournament;

/// Random v_1 orientation for the H template that makes it strong,
/// deterministic per seed. Throws GaveUp.
[[nodiscard]] auto random_strong_orientation(HSpec spec, std::uint64_t seed, int max_tries = 1000,
    HRange range = HRange::Literal) -> std::vector<bool>;

} // namespace mpt
