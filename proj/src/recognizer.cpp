#include <mpt/recognizer.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

namespace mpt {

auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
    case Verdict::NotMember: return "NotMember";
    case Verdict::MemberOfW: return "MemberOfW";
    case Verdict::MemberOfQ: return "MemberOfQ";
    case Verdict::MemberOfH: return "MemberOfH";
    }
    return "Unknown";
}

auto twin_quotient(const MultipartiteTournament & d) -> TwinQuotient
{
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> class_of(d.n(), -1);
    for (Vertex v = 0; v < d.n(); ++v) {
        if (class_of[v] != -1)
            continue;
        const int id = static_cast<int>(classes.size());
        auto & members = classes.emplace_back();
        for (Vertex w = v; w < d.n(); ++w) {
            if (class_of[w] != -1 || d.part_of(w) != d.part_of(v))
                continue;
            auto ov = d.out_row(v), ow = d.out_row(w), iv = d.in_row(v), iw = d.in_row(w);
            if (std::equal(ov.begin(), ov.end(), ow.begin()) && std::equal(iv.begin(), iv.end(), iw.begin())) {
                class_of[w] = id;
                members.push_back(w);
            }
        }
    }

    std::vector<std::vector<Vertex>> parts(d.c());
    for (std::size_t k = 0; k < classes.size(); ++k)
        parts[d.part_of(classes[k].front())].push_back(static_cast<Vertex>(k));
    std::vector<Arc> arcs;
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = 0; b < classes.size(); ++b)
            if (d.has_arc(classes[a].front(), classes[b].front()))
                arcs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    auto quotient = MultipartiteTournament::build(parts, arcs);
    return {std::move(classes), std::move(class_of), std::move(quotient)};
}

auto TwinQuotient::expand() const -> MultipartiteTournament
{
    std::vector<std::vector<Vertex>> parts(quotient.c());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        auto & part = parts[quotient.part_of(static_cast<Vertex>(k))];
        part.insert(part.end(), classes[k].begin(), classes[k].end());
    }
    std::vector<Arc> arcs;
    for (auto [a, b] : quotient.arcs())
        for (auto u : classes[a])
            for (auto v : classes[b])
                arcs.emplace_back(u, v);
    return MultipartiteTournament::build(parts, arcs);
}

auto verify_certificate(const MultipartiteTournament & d, const RecognitionResult & result) -> bool
{
    if (! result.is_member())
        return false;
    std::optional<MultipartiteTournament> tpl;
    try {
        if (const auto * w = std::get_if<WSpec>(&result.spec))
            tpl = gen_W(*w);
        else if (const auto * q = std::get_if<QSpec>(&result.spec))
            tpl = gen_Q(*q);
        else if (const auto * h = std::get_if<HSpec>(&result.spec))
            tpl = gen_H(*h, HRange::Extended);
        else
            return false;
    }
    catch (const Error &) {
        return false;
    }
    const auto & corr = result.correspondence;
    if (tpl->n() != d.n() || static_cast<int>(corr.size()) != d.n())
        return false;
    std::vector<bool> hit(d.n(), false);
    for (auto v : corr) {
        if (v < 0 || v >= d.n() || hit[v])
            return false;
        hit[v] = true;
    }
    for (Vertex a = 0; a < tpl->n(); ++a)
        for (Vertex b = 0; b < tpl->n(); ++b) {
            if (a == b)
                continue;
            if (tpl->adjacent(a, b) != d.adjacent(corr[a], corr[b]) || tpl->has_arc(a, b) != d.has_arc(corr[a], corr[b]))
                return false;
        }
    return true;
}

namespace {
    constexpr int minimum_c_for_q_and_h = 8;

    auto residue(int index, int modulus) -> int { return ((index - 1) % modulus) + 1; }

    // ---- H ----------------------------------------------------------------

    /// Tries v as the special vertex v_1.
    auto try_h_candidate(const MultipartiteTournament & d, Vertex v, HRange range) -> std::optional<RecognitionResult>
    {
        const int c = d.c();
        const int pv = d.part_of(v);
        if (d.part(pv).size() < 2)
            return std::nullopt;
        auto members = [&](int p) {
            std::vector<Vertex> result;
            for (auto u : d.part(p))
                if (u != v)
                    result.push_back(u);
            return result;
        };

        // all pairs of fragments homogeneous; score = number of fragments dominated
        std::vector<int> score(c, 0);
        for (int p = 0; p < c; ++p)
            for (int q = p + 1; q < c; ++q) {
                auto mp = members(p), mq = members(q);
                bool forward = d.has_arc(mp.front(), mq.front());
                for (auto x : mp)
                    for (auto y : mq)
                        if (d.has_arc(x, y) != forward)
                            return std::nullopt;
                ++score[forward ? p : q];
            }
        std::vector<int> part_at_rank(c, -1);
        for (int p = 0; p < c; ++p) {
            int rank = c - 1 - score[p];
            if (part_at_rank[rank] != -1)
                return std::nullopt;
            part_at_rank[rank] = p;
        }

        HSpec spec;
        spec.c = c;
        std::vector<Vertex> corr{v};
        for (int rank = 0; rank < c; ++rank) {
            int p = part_at_rank[rank];
            auto m = members(p);
            // twins in one fragment are interchangeable; list v's out-neighbours first
            std::stable_partition(m.begin(), m.end(), [&](Vertex u) { return d.has_arc(v, u); });
            if (p == pv)
                spec.i = rank + 2;
            spec.sizes.push_back(static_cast<int>(m.size()));
            corr.insert(corr.end(), m.begin(), m.end());
        }
        try {
            // orientation entries are filled below; validate the rest first
            spec.v1_orientation.assign(h_orientation_length(spec), false);
            validate(spec, range);
        }
        catch (const Error &) {
            return std::nullopt;
        }
        spec.v1_orientation.clear();
        for (std::size_t k = 1; k < corr.size(); ++k)
            if (d.part_of(corr[k]) != pv)
                spec.v1_orientation.push_back(d.has_arc(v, corr[k]));

        RecognitionResult result{Verdict::MemberOfH, spec, corr};
        if (! verify_certificate(d, result))
            return std::nullopt;
        return result;
    }

    // ---- W and Q: path order recovery ---------------------------------------

    auto multi_bfs(const MultipartiteTournament & d, const std::vector<Vertex> & sources, bool forward) -> std::vector<int>
    {
        std::vector<int> dist(d.n(), -1);
        std::deque<Vertex> queue;
        for (auto s : sources) {
            dist[s] = 0;
            queue.push_back(s);
        }
        while (! queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (auto y : forward ? d.out_neighbors(x) : d.in_neighbors(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return dist;
    }

    struct PathOrder {
        int m = 0;
        std::vector<int> index_of; // 1-based path index per vertex
    };

    /// The only forward template arcs are x_i -> x_{i+1}, so BFS layers from
    /// A_1 are indices minus one, except at twins whose incoming path arcs are
    /// reversed (near the start); layers back from A_m fix those.
    auto recover_order(const MultipartiteTournament & d, const std::vector<Vertex> & start) -> std::optional<PathOrder>
    {
        auto forward = multi_bfs(d, start, true);
        if (std::find(forward.begin(), forward.end(), -1) != forward.end())
            return std::nullopt;
        const int far = *std::max_element(forward.begin(), forward.end());
        std::vector<Vertex> end;
        for (Vertex v = 0; v < d.n(); ++v)
            if (forward[v] == far)
                end.push_back(v);
        auto backward = multi_bfs(d, end, false);
        if (std::find(backward.begin(), backward.end(), -1) != backward.end())
            return std::nullopt;

        PathOrder order{far + 1, std::vector<int>(d.n(), 0)};
        for (Vertex v = 0; v < d.n(); ++v) {
            int upper = forward[v] + 1, lower = order.m - backward[v];
            if (lower > upper || lower < 1 || upper > order.m)
                return std::nullopt;
            order.index_of[v] = upper == lower || 2 * lower > order.m ? upper : lower;
        }
        return order;
    }

    struct PathFamilyMatch {
        int m = 0;
        std::optional<std::pair<int, int>> merged;
        std::map<int, int> blowup;
        std::vector<Reversal> reversals;
        std::vector<Vertex> correspondence;
    };

    /// Reads the path-family parameters off an index assignment: residues mod
    /// `modulus` must coincide with parts (with at most one merged pair when
    /// `allow_merge`), and every arc must follow the template except on
    /// reversible consecutive pairs.
    auto match_path_family(const MultipartiteTournament & d, const PathOrder & order, int modulus, bool allow_merge)
        -> std::optional<PathFamilyMatch>
    {
        const int m = order.m;
        std::vector<std::vector<Vertex>> groups(m + 1);
        for (Vertex v = 0; v < d.n(); ++v)
            groups[order.index_of[v]].push_back(v);
        for (int i = 1; i <= m; ++i)
            if (groups[i].empty())
                return std::nullopt;

        std::map<int, int> part_of_residue;
        for (int i = 1; i <= m; ++i) {
            int p = d.part_of(groups[i].front());
            for (auto v : groups[i])
                if (d.part_of(v) != p)
                    return std::nullopt;
            auto [it, inserted] = part_of_residue.emplace(residue(i, modulus), p);
            if (! inserted && it->second != p)
                return std::nullopt;
        }
        if (static_cast<int>(part_of_residue.size()) != modulus)
            return std::nullopt;
        std::map<int, std::vector<int>> residues_of_part;
        for (auto [r, p] : part_of_residue)
            residues_of_part[p].push_back(r);

        PathFamilyMatch match;
        match.m = m;
        for (const auto & [p, rs] : residues_of_part) {
            if (rs.size() == 1)
                continue;
            if (! allow_merge || rs.size() != 2 || match.merged)
                return std::nullopt;
            match.merged = std::pair{rs[0], rs[1]};
        }
        if (allow_merge && ! match.merged)
            return std::nullopt;
        for (int i = 1; i <= m; ++i)
            if (groups[i].size() > 1)
                match.blowup[i] = static_cast<int>(groups[i].size());

        // template direction between distinct indices i < j: i -> j iff j == i + 1
        std::map<int, std::vector<std::pair<Vertex, Vertex>>> deviations; // keyed by a for pair (a, a+1)
        for (Vertex u = 0; u < d.n(); ++u)
            for (Vertex v = 0; v < d.n(); ++v) {
                int i = order.index_of[u], j = order.index_of[v];
                if (i >= j || ! d.adjacent(u, v))
                    continue;
                bool expected_forward = j == i + 1;
                if (d.has_arc(u, v) == expected_forward)
                    continue;
                if (! expected_forward)
                    return std::nullopt;
                deviations[i].emplace_back(u, v);
            }

        std::map<int, std::vector<Vertex>> flipped_first; // index -> reordered group
        for (const auto & [a, pairs] : deviations) {
            std::optional<ReversalCase> which;
            for (auto candidate : {ReversalCase::Case1, ReversalCase::Case2, ReversalCase::Case3, ReversalCase::Case4})
                if (reversal_pair(candidate, m).first == a) {
                    which = candidate;
                    break;
                }
            if (! which)
                return std::nullopt;
            const int flip_index = reversal_flip_index(*which, m);
            const int other_index = flip_index == a ? a + 1 : a;
            std::vector<Vertex> flipped;
            for (auto [u, v] : pairs) {
                Vertex side = order.index_of[u] == flip_index ? u : v;
                if (std::find(flipped.begin(), flipped.end(), side) == flipped.end())
                    flipped.push_back(side);
            }
            if (pairs.size() != flipped.size() * groups[other_index].size())
                return std::nullopt;
            std::sort(flipped.begin(), flipped.end());
            std::vector<Vertex> reordered = flipped;
            for (auto v : groups[flip_index])
                if (! std::binary_search(flipped.begin(), flipped.end(), v))
                    reordered.push_back(v);
            flipped_first[flip_index] = std::move(reordered);
            match.reversals.push_back({*which, static_cast<int>(flipped.size())});
        }
        std::sort(match.reversals.begin(), match.reversals.end());

        for (int i = 1; i <= m; ++i) {
            auto it = flipped_first.find(i);
            const auto & members = it == flipped_first.end() ? groups[i] : it->second;
            match.correspondence.insert(match.correspondence.end(), members.begin(), members.end());
        }
        return match;
    }

    template <typename Spec, typename MakeSpec>
    auto recognize_path_family(const MultipartiteTournament & d, int modulus, bool allow_merge, Verdict verdict,
        MakeSpec && make_spec) -> RecognitionResult
    {
        std::optional<RecognitionResult> best;
        auto key = [](const Spec & s) {
            if constexpr (std::is_same_v<Spec, QSpec>)
                return std::tuple(s.m, s.s, s.t, s.blowup, s.reversals);
            else
                return std::tuple(s.m, s.blowup);
        };
        auto quotient = twin_quotient(d);
        for (const auto & start : quotient.classes) {
            auto order = recover_order(d, start);
            if (! order)
                continue;
            auto match = match_path_family(d, *order, modulus, allow_merge);
            if (! match)
                continue;
            std::optional<Spec> spec;
            try {
                spec = make_spec(*match);
                validate(*spec);
            }
            catch (const Error &) {
                continue;
            }
            RecognitionResult candidate{verdict, *spec, match->correspondence};
            if (! verify_certificate(d, candidate))
                continue;
            if (! best || key(*spec) < key(std::get<Spec>(best->spec)))
                best = std::move(candidate);
        }
        return best ? *best : RecognitionResult{};
    }
}

auto recognize_H(const MultipartiteTournament & d, const RecognizerOptions & options) -> RecognitionResult
{
    if (d.c() < minimum_c_for_q_and_h)
        return {};
    for (Vertex v = 0; v < d.n(); ++v)
        if (auto found = try_h_candidate(d, v, options.h_range))
            return *found;
    return {};
}

auto recognize_Q(const MultipartiteTournament & d) -> RecognitionResult
{
    const int c = d.c();
    if (c < minimum_c_for_q_and_h)
        return {};
    return recognize_path_family<QSpec>(d, c + 1, true, Verdict::MemberOfQ, [&](const PathFamilyMatch & match) {
        return QSpec{c, match.m, match.merged->first, match.merged->second, match.blowup, match.reversals};
    });
}

auto recognize_W(const MultipartiteTournament & d) -> RecognitionResult
{
    const int c = d.c();
    if (c < 5)
        return {};
    return recognize_path_family<WSpec>(d, c, false, Verdict::MemberOfW, [&](const PathFamilyMatch & match) {
        if (! match.reversals.empty())
            throw Error(ErrorCode::InvalidSpec, "W_m has no reversals");
        return WSpec{c, match.m, match.blowup};
    });
}

auto recognize(const MultipartiteTournament & d, const RecognizerOptions & options) -> RecognitionResult
{
    if (auto h = recognize_H(d, options); h.is_member())
        return h;
    return recognize_Q(d);
}

} // namespace mpt
