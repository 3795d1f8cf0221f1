#include <mpt/families.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace mpt {

namespace {
    auto residue(int index, int modulus) -> int { return ((index - 1) % modulus) + 1; }

    auto same_pair(int a, int b, int s, int t) -> bool { return (a == s && b == t) || (a == t && b == s); }

    void invalid(const std::string & why) { throw Error(ErrorCode::InvalidSpec, why); }

    struct PathTemplate {
        int m = 0;
        int modulus = 0;
        std::optional<std::pair<int, int>> merged;
        const std::map<int, int> * blowup = nullptr;
        std::vector<Reversal> reversals;
    };

    auto block_size(const std::map<int, int> & blowup, int index) -> int
    {
        auto it = blowup.find(index);
        return it == blowup.end() ? 1 : it->second;
    }

    /// Lays out A_1..A_m contiguously and orients the template: x_i -> x_{i+1},
    /// x_i -> x_j for i - j > 1, nothing between equal labels.
    auto build_path_template(const PathTemplate & tpl) -> MultipartiteTournament
    {
        std::vector<int> index_of;
        std::vector<int> copy_of;
        for (int i = 1; i <= tpl.m; ++i)
            for (int k = 0; k < block_size(*tpl.blowup, i); ++k) {
                index_of.push_back(i);
                copy_of.push_back(k);
            }
        auto label = [&](int index) {
            int r = residue(index, tpl.modulus);
            if (tpl.merged && (r == tpl.merged->first || r == tpl.merged->second))
                return tpl.merged->first;
            return r;
        };

        std::map<int, std::vector<Vertex>> by_label;
        for (Vertex v = 0; v < static_cast<Vertex>(index_of.size()); ++v)
            by_label[label(index_of[v])].push_back(v);
        std::vector<std::vector<Vertex>> parts;
        for (auto & [_, members] : by_label)
            parts.push_back(std::move(members));

        auto flipped = [&](Vertex u, Vertex v) {
            // u in A_a, v in A_{a+1}
            for (const auto & rev : tpl.reversals) {
                auto [a, b] = reversal_pair(rev.which, tpl.m);
                if (index_of[u] != a || index_of[v] != b)
                    continue;
                Vertex side = reversal_flip_index(rev.which, tpl.m) == a ? u : v;
                if (copy_of[side] < rev.flipped)
                    return true;
            }
            return false;
        };

        std::vector<Arc> arcs;
        const auto n = static_cast<Vertex>(index_of.size());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                int i = index_of[u], j = index_of[v];
                if (i == j || label(i) == label(j))
                    continue;
                if (j == i + 1)
                    arcs.emplace_back(flipped(u, v) ? Arc{v, u} : Arc{u, v});
                else if (i - j > 1)
                    arcs.emplace_back(u, v);
            }
        return MultipartiteTournament::build(parts, arcs);
    }

    void validate_blowups(const std::map<int, int> & blowup, const std::vector<int> & allowed, int m)
    {
        for (auto [index, size] : blowup) {
            if (index < 1 || index > m)
                invalid("blow-up index " + std::to_string(index) + " outside 1.." + std::to_string(m));
            if (std::find(allowed.begin(), allowed.end(), index) == allowed.end())
                invalid("blow-up at index " + std::to_string(index) + " is not permitted");
            if (size < 2)
                invalid("blow-up size at index " + std::to_string(index) + " must be at least 2");
        }
    }
}

auto q_allowed_blowups(const QSpec & spec) -> std::vector<int>
{
    const int m = spec.m, mod = spec.c + 1;
    std::set<int> allowed{1, 2, m - 1, m};
    if (spec.s == 1 && (spec.t == 3 || spec.t == 4))
        allowed.insert(spec.t);
    if (m - 2 >= 1 && same_pair(residue(m, mod), residue(m - 2, mod), spec.s, spec.t))
        allowed.insert(m - 2);
    if (m - 3 >= 1 && same_pair(residue(m, mod), residue(m - 3, mod), spec.s, spec.t))
        allowed.insert(m - 3);
    return {allowed.begin(), allowed.end()};
}

auto q_applicable_reversals(const QSpec & spec) -> std::vector<ReversalCase>
{
    const int m = spec.m, c = spec.c, mod = c + 1;
    std::vector<ReversalCase> cases;
    if (spec.s == 1 && spec.t == 3)
        cases.push_back(ReversalCase::Case1);
    if (spec.s == 2 && spec.t == c + 1)
        cases.push_back(ReversalCase::Case2);
    if (m > 2 && same_pair(residue(m - 2, mod), residue(m, mod), spec.s, spec.t))
        cases.push_back(ReversalCase::Case3);
    if (m > c && same_pair(residue(m - 1, mod), residue(m - c, mod), spec.s, spec.t))
        cases.push_back(ReversalCase::Case4);
    return cases;
}

auto reversal_pair(ReversalCase which, int m) -> std::pair<int, int>
{
    switch (which) {
    case ReversalCase::Case1: return {2, 3};
    case ReversalCase::Case2: return {1, 2};
    case ReversalCase::Case3: return {m - 2, m - 1};
    case ReversalCase::Case4: return {m - 1, m};
    }
    return {0, 0};
}

auto reversal_flip_index(ReversalCase which, int m) -> int
{
    auto [a, b] = reversal_pair(which, m);
    return which == ReversalCase::Case1 || which == ReversalCase::Case2 ? b : a;
}

void validate(const WSpec & spec)
{
    if (spec.c < 5)
        invalid("W_m needs c >= 5, got " + std::to_string(spec.c));
    if (spec.m < spec.c)
        invalid("W_m needs m >= c");
    validate_blowups(spec.blowup, {1, 2, spec.m - 1, spec.m}, spec.m);
}

void validate(const QSpec & spec)
{
    const int c = spec.c;
    if (c < 8)
        invalid("Q_m needs c >= 8, got " + std::to_string(c));
    if (spec.m < c + 1)
        invalid("Q_m needs every residue mod c+1 present, so m >= c+1");
    if (spec.s < 1 || spec.s >= spec.t - 1 || spec.t - 1 > c)
        invalid("need 1 <= s < t-1 <= c, got s=" + std::to_string(spec.s) + " t=" + std::to_string(spec.t));
    if (spec.t - spec.s == c)
        invalid("t - s = c merges cyclically consecutive residues");
    validate_blowups(spec.blowup, q_allowed_blowups(spec), spec.m);

    auto applicable = q_applicable_reversals(spec);
    std::set<ReversalCase> seen;
    for (const auto & rev : spec.reversals) {
        if (std::find(applicable.begin(), applicable.end(), rev.which) == applicable.end())
            invalid("reversal case " + std::to_string(static_cast<int>(rev.which)) + " does not apply to (s,t,m)");
        if (! seen.insert(rev.which).second)
            invalid("reversal case listed twice");
        int side = block_size(spec.blowup, reversal_flip_index(rev.which, spec.m));
        if (rev.flipped < 1 || rev.flipped >= side)
            invalid("reversal case " + std::to_string(static_cast<int>(rev.which)) + " must flip between 1 and "
                + std::to_string(side - 1) + " of " + std::to_string(side) + " twins");
    }
}

void validate(const HSpec & spec, HRange range)
{
    const int c = spec.c;
    if (c < 8)
        invalid("H needs c >= 8, got " + std::to_string(c));
    const int bound = range == HRange::Literal ? c - 1 : c + 1;
    if (! (2 < spec.i && spec.i < bound))
        invalid("H needs 2 < i < " + std::string(range == HRange::Literal ? "c-1" : "c+1") + ", got i=" + std::to_string(spec.i));
    if (static_cast<int>(spec.sizes.size()) != c)
        invalid("H needs sizes for V_2..V_{c+1}");
    for (int j = 2; j <= c + 1; ++j) {
        int need = j == spec.i ? 1 : 2;
        if (spec.sizes[j - 2] < need)
            invalid("|V_" + std::to_string(j) + "| must be at least " + std::to_string(need));
    }
    if (static_cast<int>(spec.v1_orientation.size()) != h_orientation_length(spec))
        invalid("v1 orientation must cover the " + std::to_string(h_orientation_length(spec))
            + " vertices outside the merged part");
}

auto vertex_count(const WSpec & spec) -> int
{
    int n = spec.m;
    for (auto [_, size] : spec.blowup)
        n += size - 1;
    return n;
}

auto vertex_count(const QSpec & spec) -> int
{
    int n = spec.m;
    for (auto [_, size] : spec.blowup)
        n += size - 1;
    return n;
}

auto vertex_count(const HSpec & spec) -> int
{
    int n = 1;
    for (auto size : spec.sizes)
        n += size;
    return n;
}

auto h_orientation_length(const HSpec & spec) -> int
{
    if (spec.i < 2 || spec.i - 2 >= static_cast<int>(spec.sizes.size()))
        return vertex_count(spec) - 1;
    return vertex_count(spec) - 1 - spec.sizes[spec.i - 2];
}

auto canonical(HSpec spec) -> HSpec
{
    if (static_cast<int>(spec.v1_orientation.size()) != h_orientation_length(spec))
        return spec;
    auto block = spec.v1_orientation.begin();
    for (int j = 2; j <= static_cast<int>(spec.sizes.size()) + 1; ++j) {
        if (j == spec.i)
            continue;
        auto end = block + spec.sizes[j - 2];
        auto ones = std::count(block, end, true);
        std::fill(block, block + ones, true);
        std::fill(block + ones, end, false);
        block = end;
    }
    return spec;
}

auto blowup_vertices(const std::map<int, int> & blowup, int m, int index) -> std::vector<Vertex>
{
    Vertex first = 0;
    for (int i = 1; i < index && i <= m; ++i)
        first += block_size(blowup, i);
    std::vector<Vertex> result;
    for (int k = 0; k < block_size(blowup, index); ++k)
        result.push_back(first + k);
    return result;
}

auto gen_W(const WSpec & spec) -> MultipartiteTournament
{
    validate(spec);
    auto d = build_path_template({spec.m, spec.c, std::nullopt, &spec.blowup, {}});
    if (d.c() != spec.c || ! is_rich(d))
        throw Error(ErrorCode::NotRich, "W_m instance with c=" + std::to_string(spec.c) + " m=" + std::to_string(spec.m)
            + " is not rich (smallest part " + std::to_string(d.min_part_size()) + ")");
    return d;
}

auto gen_Qprime(int c, int m) -> MultipartiteTournament
{
    if (c < 1 || m < c)
        invalid("Q_m' needs m >= c >= 1");
    const std::map<int, int> none;
    return build_path_template({m, c + 1, std::nullopt, &none, {}});
}

auto gen_Q(const QSpec & spec) -> MultipartiteTournament
{
    validate(spec);
    auto d = build_path_template({spec.m, spec.c + 1, std::pair{spec.s, spec.t}, &spec.blowup, spec.reversals});
    if (d.c() != spec.c)
        invalid("Q_m instance has " + std::to_string(d.c()) + " parts instead of c=" + std::to_string(spec.c));
    if (! is_rich(d))
        throw Error(ErrorCode::NotRich, "Q_m instance is not rich (smallest part " + std::to_string(d.min_part_size()) + ")");
    return d;
}

auto gen_H(const HSpec & spec, HRange range) -> MultipartiteTournament
{
    validate(spec, range);
    const int c = spec.c;
    std::vector<int> class_of{1}; // template vertex -> H' class index; v_1 is class 1
    for (int j = 2; j <= c + 1; ++j)
        for (int k = 0; k < spec.sizes[j - 2]; ++k)
            class_of.push_back(j);
    const auto n = static_cast<Vertex>(class_of.size());

    std::vector<std::vector<Vertex>> parts(1, std::vector<Vertex>{0});
    for (int j = 2; j <= c + 1; ++j) {
        std::vector<Vertex> members;
        for (Vertex v = 1; v < n; ++v)
            if (class_of[v] == j)
                members.push_back(v);
        if (j == spec.i)
            parts[0].insert(parts[0].end(), members.begin(), members.end());
        else
            parts.push_back(std::move(members));
    }

    std::vector<Arc> arcs;
    for (Vertex u = 1; u < n; ++u)
        for (Vertex v = 1; v < n; ++v)
            if (class_of[u] < class_of[v])
                arcs.emplace_back(u, v);
    std::size_t pos = 0;
    for (Vertex v = 1; v < n; ++v) {
        if (class_of[v] == spec.i)
            continue;
        arcs.emplace_back(spec.v1_orientation[pos++] ? Arc{0, v} : Arc{v, 0});
    }
    auto d = MultipartiteTournament::build(parts, arcs);
    if (! is_strong(d))
        throw Error(ErrorCode::NotStrong, "v1 orientation leaves the H instance not strong");
    return d;
}

auto random_multipartite(const std::vector<int> & part_sizes, std::uint64_t seed) -> MultipartiteTournament
{
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (auto size : part_sizes) {
        if (size < 1)
            invalid("part sizes must be positive");
        auto & part = parts.emplace_back();
        for (int k = 0; k < size; ++k)
            part.push_back(next++);
    }
    std::vector<int> part_of(next);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (auto v : parts[p])
            part_of[v] = static_cast<int>(p);

    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < next; ++u)
        for (Vertex v = u + 1; v < next; ++v)
            if (part_of[u] != part_of[v])
                arcs.emplace_back((rng() >> 63) != 0 ? Arc{u, v} : Arc{v, u});
    return MultipartiteTournament::build(parts, arcs);
}

auto random_rich(int c, const std::vector<int> & part_sizes, std::uint64_t seed, int max_tries) -> MultipartiteTournament
{
    if (static_cast<int>(part_sizes.size()) != c)
        invalid("expected " + std::to_string(c) + " part sizes");
    if (std::any_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s < 2; }))
        invalid("rich instances need every part of size >= 2");
    // derive one sub-seed per attempt so that attempt k is reproducible on its own
    std::mt19937_64 seeds(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        auto d = random_multipartite(part_sizes, attempt == 0 ? seed : seeds());
        if (is_strong(d))
            return d;
    }
    throw Error(ErrorCode::GaveUp, "no strong orientation after " + std::to_string(max_tries) + " tries");
}

auto random_strong_orientation(HSpec spec, std::uint64_t seed, int max_tries, HRange range) -> std::vector<bool>
{
    std::mt19937_64 rng(seed);
    const int length = h_orientation_length(spec);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        spec.v1_orientation.assign(length, false);
        for (int k = 0; k < length; ++k)
            spec.v1_orientation[k] = (rng() >> 63) != 0;
        try {
            (void)gen_H(spec, range);
            return spec.v1_orientation;
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::NotStrong)
                throw;
        }
    }
    throw Error(ErrorCode::GaveUp, "no strong v1 orientation after " + std::to_string(max_tries) + " tries");
}

} // namespace mpt
