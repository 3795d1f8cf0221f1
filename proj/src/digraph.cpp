#include <mpt/digraph.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace mpt {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::MissingArc: return "MissingArc";
    case ErrorCode::DoubleArc: return "DoubleArc";
    case ErrorCode::IntraPartArc: return "IntraPartArc";
    case ErrorCode::EmptyPart: return "EmptyPart";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotRich: return "NotRich";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::VertexOnCycle: return "VertexOnCycle";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GaveUp: return "GaveUp";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Timeout: return "Timeout";
    }
    return "Unknown";
}

auto VertexSet::size() const -> int
{
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

auto VertexSet::to_vector() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (auto w = words_[i]; w != 0; w &= w - 1)
            result.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    return result;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

auto MultipartiteTournament::build(const std::vector<std::vector<Vertex>> & parts, const std::vector<Arc> & arcs)
    -> MultipartiteTournament
{
    MultipartiteTournament d;
    std::size_t total = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw Error(ErrorCode::EmptyPart, "part " + std::to_string(p + 1) + " is empty");
        total += parts[p].size();
    }
    d.n_ = static_cast<int>(total);
    d.part_of_.assign(total, -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (auto v : parts[p]) {
            if (v < 0 || v >= d.n_)
                throw Error(ErrorCode::InvalidVertex, "vertex id " + std::to_string(v) + " outside 0.." + std::to_string(d.n_ - 1));
            if (d.part_of_[v] != -1)
                throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " listed twice");
            d.part_of_[v] = static_cast<int>(p);
        }
    d.parts_ = parts;
    for (auto & part : d.parts_)
        std::sort(part.begin(), part.end());

    d.words_ = VertexSet::word_count(d.n_);
    d.out_.assign(d.words_ * total, 0);
    d.in_.assign(d.words_ * total, 0);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= d.n_ || v < 0 || v >= d.n_)
            throw Error(ErrorCode::InvalidVertex, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") has an unknown endpoint");
        if (u == v)
            throw Error(ErrorCode::Loop, "loop at " + std::to_string(u));
        if (d.part_of_[u] == d.part_of_[v])
            throw Error(ErrorCode::IntraPartArc, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") joins one part");
        if (d.has_arc(u, v) || d.has_arc(v, u))
            throw Error(ErrorCode::DoubleArc, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has more than one arc");
        d.out_[d.row_index(u, v)] |= std::uint64_t{1} << (v & 63);
        d.in_[d.row_index(v, u)] |= std::uint64_t{1} << (u & 63);
    }
    for (Vertex u = 0; u < d.n_; ++u)
        for (Vertex v = u + 1; v < d.n_; ++v)
            if (d.adjacent(u, v) && ! d.has_arc(u, v) && ! d.has_arc(v, u))
                throw Error(ErrorCode::MissingArc, "no arc between " + std::to_string(u) + " and " + std::to_string(v));
    return d;
}

auto MultipartiteTournament::min_part_size() const -> int
{
    std::size_t smallest = parts_.empty() ? 0 : parts_.front().size();
    for (const auto & part : parts_)
        smallest = std::min(smallest, part.size());
    return static_cast<int>(smallest);
}

namespace {
    auto row_members(std::span<const std::uint64_t> row) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (std::size_t i = 0; i < row.size(); ++i)
            for (auto w = row[i]; w != 0; w &= w - 1)
                result.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        return result;
    }

    auto row_count(std::span<const std::uint64_t> row) -> int
    {
        int total = 0;
        for (auto w : row)
            total += std::popcount(w);
        return total;
    }
}

auto MultipartiteTournament::out_neighbors(Vertex u) const -> std::vector<Vertex> { return row_members(out_row(u)); }
auto MultipartiteTournament::in_neighbors(Vertex u) const -> std::vector<Vertex> { return row_members(in_row(u)); }
auto MultipartiteTournament::out_degree(Vertex u) const -> int { return row_count(out_row(u)); }
auto MultipartiteTournament::in_degree(Vertex u) const -> int { return row_count(in_row(u)); }

auto MultipartiteTournament::arcs() const -> std::vector<Arc>
{
    std::vector<Arc> result;
    for (Vertex u = 0; u < n_; ++u)
        for (auto v : out_neighbors(u))
            result.emplace_back(u, v);
    return result;
}

auto MultipartiteTournament::arc_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto w : out_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

auto MultipartiteTournament::operator==(const MultipartiteTournament & other) const -> bool
{
    return n_ == other.n_ && part_of_ == other.part_of_ && out_ == other.out_;
}

auto strong_components(const MultipartiteTournament & d) -> std::vector<int>
{
    // iterative Tarjan
    const int n = d.n();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<Vertex> stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0, next_comp = 0;

    struct Frame {
        Vertex v;
        std::vector<Vertex> succ;
        std::size_t pos;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        std::vector<Frame> frames;
        auto open = [&](Vertex v) {
            index[v] = low[v] = next_index++;
            stack.push_back(v);
            on_stack[v] = true;
            frames.push_back({v, d.out_neighbors(v), 0});
        };
        open(root);
        while (! frames.empty()) {
            auto & f = frames.back();
            if (f.pos < f.succ.size()) {
                Vertex w = f.succ[f.pos++];
                if (index[w] == -1)
                    open(w);
                else if (on_stack[w])
                    low[f.v] = std::min(low[f.v], index[w]);
                continue;
            }
            Vertex v = f.v;
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            frames.pop_back();
            if (! frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
    }
    return comp;
}

auto is_strong(const MultipartiteTournament & d) -> bool
{
    if (d.n() == 0)
        return false;
    auto comp = strong_components(d);
    return std::all_of(comp.begin(), comp.end(), [&](int x) { return x == comp.front(); });
}

auto is_rich(const MultipartiteTournament & d) -> bool
{
    return d.min_part_size() >= 2 && is_strong(d);
}

auto distances_from(const MultipartiteTournament & d, Vertex u) -> std::vector<int>
{
    std::vector<int> result(d.n(), -1);
    std::deque<Vertex> queue{u};
    result[u] = 0;
    while (! queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (auto y : d.out_neighbors(x))
            if (result[y] == -1) {
                result[y] = result[x] + 1;
                queue.push_back(y);
            }
    }
    return result;
}

auto dist(const MultipartiteTournament & d, Vertex u, Vertex v) -> std::optional<int>
{
    auto all = distances_from(d, u);
    if (all[v] < 0)
        return std::nullopt;
    return all[v];
}

auto diam(const MultipartiteTournament & d) -> int
{
    int best = 0;
    for (Vertex u = 0; u < d.n(); ++u) {
        auto row = distances_from(d, u);
        for (Vertex v = 0; v < d.n(); ++v) {
            if (row[v] < 0)
                throw Error(ErrorCode::NotStrong, "vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
            best = std::max(best, row[v]);
        }
    }
    return best;
}

namespace {
    void require_disjoint(std::span<const Vertex> xs, std::span<const Vertex> ys)
    {
        for (auto x : xs)
            if (std::find(ys.begin(), ys.end(), x) != ys.end())
                throw Error(ErrorCode::OverlappingSets, "vertex " + std::to_string(x) + " is in both sets");
    }
}

auto dominates(const MultipartiteTournament & d, std::span<const Vertex> xs, std::span<const Vertex> ys) -> bool
{
    require_disjoint(xs, ys);
    for (auto x : xs)
        for (auto y : ys)
            if (! d.has_arc(x, y))
                return false;
    return true;
}

auto no_arc_back(const MultipartiteTournament & d, std::span<const Vertex> xs, std::span<const Vertex> ys) -> bool
{
    require_disjoint(xs, ys);
    for (auto x : xs)
        for (auto y : ys)
            if (d.has_arc(y, x))
                return false;
    return true;
}

auto relabel(const MultipartiteTournament & d, std::span<const Vertex> perm) -> MultipartiteTournament
{
    std::vector<std::vector<Vertex>> parts;
    for (const auto & part : d.parts()) {
        auto & mapped = parts.emplace_back();
        for (auto v : part)
            mapped.push_back(perm[v]);
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        arcs.emplace_back(perm[u], perm[v]);
    return MultipartiteTournament::build(parts, arcs);
}

auto reverse_arc(const MultipartiteTournament & d, Arc arc) -> MultipartiteTournament
{
    if (! d.has_arc(arc.first, arc.second))
        throw Error(ErrorCode::MissingArc, "cannot reverse absent arc");
    auto arcs = d.arcs();
    for (auto & a : arcs)
        if (a == arc)
            a = {arc.second, arc.first};
    return MultipartiteTournament::build(d.parts(), arcs);
}

auto converse(const MultipartiteTournament & d) -> MultipartiteTournament
{
    auto arcs = d.arcs();
    for (auto & a : arcs)
        a = {a.second, a.first};
    return MultipartiteTournament::build(d.parts(), arcs);
}

} // namespace mpt
