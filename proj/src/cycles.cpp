#include <mpt/cycles.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

namespace mpt {

auto CycleWitness::contains(Vertex v) const -> bool
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

auto is_valid_cycle(const MultipartiteTournament & d, const CycleWitness & c) -> bool
{
    const auto & vs = c.vertices;
    if (vs.size() < 3)
        return false;
    std::vector<bool> seen(d.n(), false);
    for (auto v : vs) {
        if (v < 0 || v >= d.n() || seen[v])
            return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (! d.has_arc(vs[i], vs[(i + 1) % vs.size()]))
            return false;
    return true;
}

auto parts_met(const MultipartiteTournament & d, const CycleWitness & c) -> int
{
    std::vector<bool> met(d.c(), false);
    for (auto v : c.vertices)
        met[d.part_of(v)] = true;
    return static_cast<int>(std::count(met.begin(), met.end(), true));
}

namespace {
    void check_length(const MultipartiteTournament & d, int q)
    {
        if (q < 3 || q > d.n())
            throw Error(ErrorCode::BadLength, "cycle length " + std::to_string(q) + " outside [3, " + std::to_string(d.n()) + "]");
    }

    class DeadlineGuard {
    public:
        explicit DeadlineGuard(const SearchLimits & limits) : limits_(limits) {}

        void tick()
        {
            if (limits_.deadline && (++ticks_ & 0xFFFF) == 0 && std::chrono::steady_clock::now() > *limits_.deadline)
                throw Error(ErrorCode::Timeout, "cycle search exceeded its time budget");
        }

    private:
        const SearchLimits & limits_;
        std::uint64_t ticks_ = 0;
    };

    /// Reference search: DFS over simple paths from each anchor through
    /// larger-id vertices only, with an exact arc budget. Nothing else.
    class OracleSearch {
    public:
        OracleSearch(const MultipartiteTournament & d, int q, const SearchLimits & limits) :
            q_(q), guard_(limits), used_(d.n(), false)
        {
            for (Vertex u = 0; u < d.n(); ++u)
                adj_.push_back(d.out_neighbors(u));
        }

        auto run() -> std::optional<CycleWitness>
        {
            for (Vertex a = 0; a < static_cast<Vertex>(adj_.size()); ++a) {
                anchor_ = a;
                path_ = {a};
                used_[a] = true;
                if (extend(a))
                    return CycleWitness{path_};
                used_[a] = false;
            }
            return std::nullopt;
        }

    private:
        auto extend(Vertex u) -> bool
        {
            guard_.tick();
            if (static_cast<int>(path_.size()) == q_)
                return std::find(adj_[u].begin(), adj_[u].end(), anchor_) != adj_[u].end();
            for (auto v : adj_[u]) {
                if (v <= anchor_ || used_[v])
                    continue;
                used_[v] = true;
                path_.push_back(v);
                if (extend(v))
                    return true;
                path_.pop_back();
                used_[v] = false;
            }
            return false;
        }

        int q_;
        DeadlineGuard guard_;
        std::vector<std::vector<Vertex>> adj_;
        std::vector<bool> used_;
        std::vector<Vertex> path_;
        Vertex anchor_ = 0;
    };

    /// Anchored DFS over packed rows. Per anchor a, dist_back[v] is the BFS
    /// distance from v to a through vertices > a; a partial path at v with r
    /// arcs left only continues if dist_back[v] <= r.
    class FastSearch {
    public:
        FastSearch(const MultipartiteTournament & d, int q, const SearchLimits & limits) :
            d_(d), q_(q), words_(d.words_per_row()), guard_(limits)
        {
        }

        /// Calls visit(path) on every q-cycle in lexicographic order until it returns false.
        template <typename Visit>
        void run(Visit && visit)
        {
            const int n = d_.n();
            for (Vertex a = 0; a + q_ <= n; ++a) {
                if (! prepare_anchor(a))
                    continue;
                path_.assign(1, a);
                used_.assign(words_, 0);
                set_bit(used_, a);
                if (! extend(a, visit))
                    return;
            }
        }

    private:
        static void set_bit(std::vector<std::uint64_t> & s, Vertex v) { s[v >> 6] |= std::uint64_t{1} << (v & 63); }
        static void clear_bit(std::vector<std::uint64_t> & s, Vertex v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

        auto prepare_anchor(Vertex a) -> bool
        {
            const int n = d_.n();
            constexpr int unreachable = std::numeric_limits<int>::max() / 2;
            std::vector<int> dist_back(n, unreachable);
            std::deque<Vertex> queue{a};
            dist_back[a] = 0;
            while (! queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                auto row = d_.in_row(x);
                for (std::size_t w = 0; w < words_; ++w)
                    for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
                        Vertex y = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
                        if (y > a && dist_back[y] == unreachable) {
                            dist_back[y] = dist_back[x] + 1;
                            queue.push_back(y);
                        }
                    }
            }
            // within_[r]: vertices > a that can close the cycle using at most r arcs
            within_.assign(static_cast<std::size_t>(q_) + 1, std::vector<std::uint64_t>(words_, 0));
            bool any = false;
            for (Vertex v = a + 1; v < n; ++v)
                if (dist_back[v] <= q_ - 1) {
                    for (int r = dist_back[v]; r <= q_; ++r)
                        set_bit(within_[r], v);
                    any = true;
                }
            anchor_ = a;
            return any;
        }

        template <typename Visit>
        auto extend(Vertex u, Visit & visit) -> bool
        {
            guard_.tick();
            const int depth = static_cast<int>(path_.size());
            if (depth == q_) {
                if (d_.has_arc(u, anchor_))
                    return visit(path_);
                return true;
            }
            auto row = d_.out_row(u);
            const auto & reach = within_[q_ - depth];
            for (std::size_t w = 0; w < words_; ++w) {
                for (auto bits = row[w] & reach[w] & ~used_[w]; bits != 0; bits &= bits - 1) {
                    Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
                    set_bit(used_, v);
                    path_.push_back(v);
                    bool keep_going = extend(v, visit);
                    path_.pop_back();
                    clear_bit(used_, v);
                    if (! keep_going)
                        return false;
                }
            }
            return true;
        }

        const MultipartiteTournament & d_;
        int q_;
        std::size_t words_;
        DeadlineGuard guard_;
        Vertex anchor_ = 0;
        std::vector<std::vector<std::uint64_t>> within_;
        std::vector<std::uint64_t> used_;
        std::vector<Vertex> path_;
    };
}

auto find_cycle(const MultipartiteTournament & d, int q, SearchMode mode, const SearchLimits & limits)
    -> std::optional<CycleWitness>
{
    check_length(d, q);
    if (mode == SearchMode::Oracle)
        return OracleSearch(d, q, limits).run();

    std::optional<CycleWitness> found;
    FastSearch(d, q, limits).run([&](const std::vector<Vertex> & path) {
        found = CycleWitness{path};
        return false;
    });
    return found;
}

auto CycleSpectrum::witness(int q) const -> const CycleWitness *
{
    if (! covers(q) || ! witnesses_[q])
        return nullptr;
    return &*witnesses_[q];
}

auto CycleSpectrum::lengths() const -> std::vector<int>
{
    std::vector<int> result;
    for (int q = 3; q <= q_max_; ++q)
        if (contains(q))
            result.push_back(q);
    return result;
}

auto cycle_spectrum(const MultipartiteTournament & d, int q_max, SearchMode mode, const SearchLimits & limits)
    -> CycleSpectrum
{
    if (q_max > d.n())
        throw Error(ErrorCode::BadLength, "q_max " + std::to_string(q_max) + " exceeds n=" + std::to_string(d.n()));
    CycleSpectrum spectrum(q_max);
    for (int q = 3; q <= q_max; ++q)
        spectrum.set(q, find_cycle(d, q, mode, limits));
    return spectrum;
}

auto can_insert(const MultipartiteTournament & d, const CycleWitness & c, Vertex x) -> std::vector<Vertex>
{
    if (c.contains(x))
        throw Error(ErrorCode::VertexOnCycle, "vertex " + std::to_string(x) + " lies on the cycle");
    std::vector<Vertex> positions;
    for (std::size_t p = 0; p < c.vertices.size(); ++p)
        if (d.has_arc(c.vertices[p], x) && d.has_arc(x, c.successor(p)))
            positions.push_back(c.vertices[p]);
    return positions;
}

auto check_extension_range(const MultipartiteTournament & d, const CycleWitness & c, const CycleSpectrum * known,
    const SearchLimits & limits) -> ExtensionRangeReport
{
    ExtensionRangeReport report;
    report.k = c.length();
    report.l = parts_met(d, c);
    report.upper = report.l < d.c() ? d.c() + report.k - report.l : report.k;
    for (int t = report.k; t <= report.upper; ++t) {
        bool present = false;
        if (t == report.k)
            present = true;
        else if (t > d.n())
            present = false;
        else if (known && known->covers(t))
            present = known->contains(t);
        else
            present = find_cycle(d, t, SearchMode::Fast, limits).has_value();
        if (! present)
            report.missing.push_back(t);
    }
    return report;
}

auto all_cycles_of_length(const MultipartiteTournament & d, int q, std::size_t cap, const SearchLimits & limits)
    -> CycleEnumeration
{
    check_length(d, q);
    CycleEnumeration result;
    FastSearch(d, q, limits).run([&](const std::vector<Vertex> & path) {
        if (result.cycles.size() >= cap) {
            result.exhausted = true;
            return false;
        }
        result.cycles.push_back(CycleWitness{path});
        return true;
    });
    return result;
}

} // namespace mpt
