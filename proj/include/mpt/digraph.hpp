#pragma once

#include <mpt/error.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mpt {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Packed set of vertex ids backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

    static auto word_count(int universe) -> std::size_t { return (static_cast<std::size_t>(universe) + 63) / 64; }

    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
    [[nodiscard]] auto contains(Vertex v) const -> bool { return (words_[v >> 6] & bit(v)) != 0; }
    [[nodiscard]] auto size() const -> int;
    [[nodiscard]] auto empty() const -> bool;
    [[nodiscard]] auto universe() const -> int { return universe_; }
    [[nodiscard]] auto words() const -> std::span<const std::uint64_t> { return words_; }
    [[nodiscard]] auto to_vector() const -> std::vector<Vertex>;
    [[nodiscard]] auto intersects(const VertexSet & other) const -> bool;

    auto operator==(const VertexSet &) const -> bool = default;

private:
    static auto bit(Vertex v) -> std::uint64_t { return std::uint64_t{1} << (v & 63); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// An orientation of a complete multipartite graph: exactly one arc between
/// vertices of distinct parts, none inside a part. Immutable once built.
///
/// Vertices are 0..n-1 and parts 0..c-1. Adjacency is a row-major packed
/// matrix, so has_arc is O(1) and neighbourhood rows are n/64 words.
class MultipartiteTournament {
public:
    /// Validates and builds. Every vertex 0..n-1 must appear in exactly one
    /// part; n is inferred from the parts.
    static auto build(const std::vector<std::vector<Vertex>> & parts, const std::vector<Arc> & arcs)
        -> MultipartiteTournament;

    [[nodiscard]] auto n() const -> int { return n_; }
    [[nodiscard]] auto c() const -> int { return static_cast<int>(parts_.size()); }
    [[nodiscard]] auto part_of(Vertex v) const -> int { return part_of_[v]; }
    [[nodiscard]] auto parts() const -> const std::vector<std::vector<Vertex>> & { return parts_; }
    [[nodiscard]] auto part(int p) const -> const std::vector<Vertex> & { return parts_[p]; }
    [[nodiscard]] auto min_part_size() const -> int;

    [[nodiscard]] auto has_arc(Vertex u, Vertex v) const -> bool
    {
        return (out_[row_index(u, v)] >> (v & 63)) & 1U;
    }
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return part_of_[u] != part_of_[v]; }

    [[nodiscard]] auto out_row(Vertex u) const -> std::span<const std::uint64_t>
    {
        return {out_.data() + static_cast<std::size_t>(u) * words_, words_};
    }
    [[nodiscard]] auto in_row(Vertex u) const -> std::span<const std::uint64_t>
    {
        return {in_.data() + static_cast<std::size_t>(u) * words_, words_};
    }
    [[nodiscard]] auto words_per_row() const -> std::size_t { return words_; }

    [[nodiscard]] auto out_neighbors(Vertex u) const -> std::vector<Vertex>;
    [[nodiscard]] auto in_neighbors(Vertex u) const -> std::vector<Vertex>;
    [[nodiscard]] auto out_degree(Vertex u) const -> int;
    [[nodiscard]] auto in_degree(Vertex u) const -> int;

    /// All arcs, sorted lexicographically.
    [[nodiscard]] auto arcs() const -> std::vector<Arc>;
    [[nodiscard]] auto arc_count() const -> std::size_t;

    auto operator==(const MultipartiteTournament & other) const -> bool;

private:
    MultipartiteTournament() = default;

    [[nodiscard]] auto row_index(Vertex u, Vertex v) const -> std::size_t
    {
        return static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<int> part_of_;
    std::vector<std::vector<Vertex>> parts_;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

[[nodiscard]] auto is_strong(const MultipartiteTournament & d) -> bool;
[[nodiscard]] auto is_rich(const MultipartiteTournament & d) -> bool;

/// Strongly connected component id of every vertex (Tarjan); ids are dense.
[[nodiscard]] auto strong_components(const MultipartiteTournament & d) -> std::vector<int>;

/// BFS shortest directed path length; nullopt when v is unreachable from u.
[[nodiscard]] auto dist(const MultipartiteTournament & d, Vertex u, Vertex v) -> std::optional<int>;

/// Distances from u to every vertex; -1 marks unreachable.
[[nodiscard]] auto distances_from(const MultipartiteTournament & d, Vertex u) -> std::vector<int>;

/// Throws NotStrong when some ordered pair is unreachable.
[[nodiscard]] auto diam(const MultipartiteTournament & d) -> int;

/// X -> Y: every vertex of X dominates every vertex of Y. Throws OverlappingSets.
[[nodiscard]] auto dominates(const MultipartiteTournament & d, std::span<const Vertex> xs, std::span<const Vertex> ys)
    -> bool;

/// X => Y: no arc from a vertex of Y to a vertex of X. Throws OverlappingSets.
[[nodiscard]] auto no_arc_back(const MultipartiteTournament & d, std::span<const Vertex> xs, std::span<const Vertex> ys)
    -> bool;

/// Image of d under the relabeling v -> perm[v].
[[nodiscard]] auto relabel(const MultipartiteTournament & d, std::span<const Vertex> perm) -> MultipartiteTournament;

/// The same parts with one arc turned around. The arc must exist.
[[nodiscard]] auto reverse_arc(const MultipartiteTournament & d, Arc arc) -> MultipartiteTournament;

/// Every arc reversed.
[[nodiscard]] auto converse(const MultipartiteTournament & d) -> MultipartiteTournament;

} // namespace mpt
