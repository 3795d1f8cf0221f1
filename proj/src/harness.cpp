#include <mpt/harness.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace mpt {

auto to_string(CheckStatus s) -> std::string_view
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

auto generate(const FamilySpec & spec) -> MultipartiteTournament
{
    return std::visit(
        [](const auto & s) -> MultipartiteTournament {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, WSpec>)
                return gen_W(s);
            else if constexpr (std::is_same_v<S, QSpec>)
                return gen_Q(s);
            else
                return gen_H(s, HRange::Extended);
        },
        spec);
}

auto materialize(const Provenance & source) -> MultipartiteTournament
{
    return std::visit(
        [](const auto & s) -> MultipartiteTournament {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, RandomSource>)
                return random_rich(s.c, s.sizes, s.seed);
            else if constexpr (std::is_same_v<S, PerturbationSource>)
                return perturb(generate(s.base), s.seed);
            else
                return generate(FamilySpec{s});
        },
        source);
}

auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
{
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % bound;
}

auto seeded_permutation(int n, std::uint64_t seed) -> std::vector<Vertex>
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (int k = n - 1; k > 0; --k)
        std::swap(perm[k], perm[uniform_below(rng, static_cast<std::uint64_t>(k) + 1)]);
    return perm;
}

auto perturb(const MultipartiteTournament & d, std::uint64_t seed, int max_tries) -> MultipartiteTournament
{
    auto arcs = d.arcs();
    if (arcs.empty())
        throw Error(ErrorCode::GaveUp, "no arc to reverse");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        auto result = reverse_arc(d, arcs[uniform_below(rng, arcs.size())]);
        if (is_rich(result))
            return result;
    }
    throw Error(ErrorCode::GaveUp, "no rich single-arc perturbation after " + std::to_string(max_tries) + " draws");
}

auto compute_facts(const MultipartiteTournament & d, SearchMode mode, const SearchLimits & limits) -> InstanceFacts
{
    return {cycle_spectrum(d, std::min(d.c() + 2, d.n()), mode, limits), is_strong(d)};
}

namespace {
    auto make(std::string name, CheckStatus status, std::string detail = {}) -> CheckRecord
    {
        return {std::move(name), status, std::move(detail), {}, std::nullopt};
    }

    auto pass_if(std::string name, bool ok, std::string detail) -> CheckRecord
    {
        return make(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
    }

    auto has_length(const InstanceFacts & facts, int q) -> std::optional<bool>
    {
        if (! facts.spectrum.covers(q))
            return std::nullopt;
        return facts.spectrum.contains(q);
    }

    void attach_witness(CheckRecord & record, const InstanceFacts & facts, int q)
    {
        if (const auto * w = facts.spectrum.witness(q))
            record.witnesses.push_back(*w);
    }

    auto yes_no(bool b) -> std::string { return b ? "yes" : "no"; }

    auto neighbourhood_on(const MultipartiteTournament & d, Vertex y, const CycleWitness & cycle)
        -> std::pair<std::vector<bool>, std::vector<bool>>
    {
        std::vector<bool> out, in;
        for (auto x : cycle.vertices) {
            out.push_back(d.has_arc(y, x));
            in.push_back(d.has_arc(x, y));
        }
        return {out, in};
    }
}

auto check_theorem1(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord
{
    const int c = d.c();
    auto c1 = has_length(facts, c + 1), c2 = has_length(facts, c + 2);
    if (! is_rich(d) || ! c1 || ! c2)
        return make("theorem1", CheckStatus::Skipped, "needs a rich instance with n >= c+2");
    auto record = pass_if("theorem1", *c1 || *c2, "(c+1)-cycle: " + yes_no(*c1) + ", (c+2)-cycle: " + yes_no(*c2));
    attach_witness(record, facts, *c1 ? c + 1 : c + 2);
    return record;
}

auto check_theorem2(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord
{
    const int c = d.c();
    auto c1 = has_length(facts, c + 1);
    if (c < 5 || ! is_rich(d) || ! c1)
        return make("theorem2", CheckStatus::Skipped, "needs a rich instance with c >= 5 and n >= c+1");
    auto result = recognize_W(d);
    bool member = result.is_member() && verify_certificate(d, result);
    auto record = pass_if("theorem2", ! *c1 == member,
        "(c+1)-cycle: " + yes_no(*c1) + ", W member: " + yes_no(result.is_member()));
    attach_witness(record, facts, c + 1);
    if (result.is_member())
        record.certificate = std::move(result);
    return record;
}

auto check_theorem3(const MultipartiteTournament & d, const InstanceFacts & facts, const RecognizerOptions & options)
    -> CheckRecord
{
    const int c = d.c();
    auto c2 = has_length(facts, c + 2);
    if (c < 8 || ! is_rich(d) || ! c2)
        return make("theorem3", CheckStatus::Skipped, "needs a rich instance with c >= 8 and n >= c+2");
    auto result = recognize(d, options);
    bool member = result.is_member() && verify_certificate(d, result);
    auto record = pass_if("theorem3", ! *c2 == member,
        "(c+2)-cycle: " + yes_no(*c2) + ", verdict: " + std::string(to_string(result.verdict)));
    attach_witness(record, facts, c + 2);
    if (result.is_member())
        record.certificate = std::move(result);
    return record;
}

auto check_bondy(const MultipartiteTournament & d, const InstanceFacts & facts) -> CheckRecord
{
    if (! facts.strong || d.c() < 3)
        return make("bondy", CheckStatus::Skipped, "needs a strong instance with c >= 3");
    std::vector<int> missing;
    for (int q = 3; q <= d.c(); ++q)
        if (! facts.spectrum.contains(q))
            missing.push_back(q);
    std::string detail = "lengths 3.." + std::to_string(d.c());
    for (auto q : missing)
        detail += ", missing " + std::to_string(q);
    auto record = pass_if("bondy", missing.empty(), detail);
    return record;
}

auto check_extension_range(const MultipartiteTournament & d, const InstanceFacts & facts, const SearchLimits & limits)
    -> CheckRecord
{
    if (! facts.strong)
        return make("extension_range", CheckStatus::Skipped, "needs a strong instance");
    auto record = make("extension_range", CheckStatus::Pass);
    int checked = 0;
    for (int q = 3; q <= facts.spectrum.q_max(); ++q) {
        const auto * w = facts.spectrum.witness(q);
        if (w == nullptr || parts_met(d, *w) >= d.c())
            continue;
        ++checked;
        auto report = check_extension_range(d, *w, &facts.spectrum, limits);
        if (! report.passed()) {
            record.status = CheckStatus::Fail;
            record.witnesses.push_back(*w);
            record.detail += "k=" + std::to_string(report.k) + " l=" + std::to_string(report.l) + " missing";
            for (auto t : report.missing)
                record.detail += " " + std::to_string(t);
            record.detail += "; ";
        }
    }
    if (record.status == CheckStatus::Pass)
        record.detail = std::to_string(checked) + " witnesses with l < c";
    return record;
}

auto check_no_insertion(const MultipartiteTournament & d, const InstanceFacts & facts, int k, std::size_t cap,
    const SearchLimits & limits) -> CheckRecord
{
    const std::string name = "no_insertion_k" + std::to_string(k);
    auto exists = [&](int q) {
        if (q < 3 || q > d.n())
            return false;
        return facts.spectrum.covers(q) ? facts.spectrum.contains(q) : find_cycle(d, q, SearchMode::Fast, limits).has_value();
    };
    if (! exists(k) || exists(k + 1))
        return make(name, CheckStatus::Skipped, "premise fails: needs a k-cycle and no (k+1)-cycle");

    auto cycles = all_cycles_of_length(d, k, cap, limits);
    auto record = make(name, CheckStatus::Pass);
    for (const auto & cycle : cycles.cycles)
        for (Vertex x = 0; x < d.n(); ++x) {
            if (cycle.contains(x))
                continue;
            if (auto at = can_insert(d, cycle, x); ! at.empty()) {
                record.status = CheckStatus::Fail;
                record.witnesses.push_back(cycle);
                record.detail = "vertex " + std::to_string(x) + " inserts after " + std::to_string(at.front());
                return record;
            }
        }
    record.detail = std::to_string(cycles.cycles.size()) + " cycles" + (cycles.exhausted ? " (capped)" : "");
    return record;
}

namespace {
    struct PremiseCycles {
        bool exhausted = false;
        std::size_t total = 0;
        bool everywhere = true;
        std::vector<CycleWitness> cycles; // those meeting the premise
    };

    // (c+1)-cycles on which every off-cycle vertex has an in- and an out-neighbour
    auto premise_cycles(const MultipartiteTournament & d, std::size_t cap, const SearchLimits & limits) -> PremiseCycles
    {
        auto all = all_cycles_of_length(d, d.c() + 1, cap, limits);
        PremiseCycles result;
        result.exhausted = all.exhausted;
        result.total = all.cycles.size();
        for (auto & cycle : all.cycles) {
            bool premise = true;
            for (Vertex y = 0; y < d.n() && premise; ++y) {
                if (cycle.contains(y))
                    continue;
                auto [out, in] = neighbourhood_on(d, y, cycle);
                premise = std::find(out.begin(), out.end(), true) != out.end()
                    && std::find(in.begin(), in.end(), true) != in.end();
            }
            if (premise)
                result.cycles.push_back(std::move(cycle));
            else
                result.everywhere = false;
        }
        return result;
    }

    auto premise_applies(const MultipartiteTournament & d, const InstanceFacts & facts) -> bool
    {
        auto c2 = has_length(facts, d.c() + 2);
        return d.c() >= 8 && is_rich(d) && c2 && ! *c2;
    }
}

auto check_lemma6_shape(const MultipartiteTournament & d, const InstanceFacts & facts, std::size_t cap,
    const RecognizerOptions & options, const SearchLimits & limits) -> CheckRecord
{
    if (! premise_applies(d, facts))
        return make("lemma6_shape", CheckStatus::Skipped, "needs rich, c >= 8, no (c+2)-cycle");
    auto found = premise_cycles(d, cap, limits);
    if (found.exhausted)
        return make("lemma6_shape", CheckStatus::Inconclusive, "more than " + std::to_string(cap) + " (c+1)-cycles");

    auto record = make("lemma6_shape", CheckStatus::Pass);
    for (const auto & cycle : found.cycles) {
        const auto k = cycle.vertices.size();
        for (Vertex y = 0; y < d.n(); ++y) {
            if (cycle.contains(y))
                continue;
            bool replaces = false;
            for (std::size_t j = 0; j < k && ! replaces; ++j)
                replaces = d.part_of(cycle.vertices[j]) == d.part_of(y)
                    && d.has_arc(cycle.vertices[(j + k - 1) % k], y) && d.has_arc(y, cycle.vertices[(j + 1) % k]);
            if (! replaces) {
                record.status = CheckStatus::Fail;
                record.witnesses.push_back(cycle);
                record.detail = "vertex " + std::to_string(y) + " replaces no cycle vertex of its part";
                return record;
            }
        }
    }
    if (found.everywhere && found.total > 0) {
        auto result = recognize_H(d, options);
        if (! result.is_member() || ! verify_certificate(d, result)) {
            record.status = CheckStatus::Fail;
            record.detail = "premise holds on every (c+1)-cycle but the instance is not in H";
            return record;
        }
        record.certificate = std::move(result);
    }
    record.detail = std::to_string(found.total) + " (c+1)-cycles, premise on " + std::to_string(found.cycles.size())
        + (found.everywhere ? ", premise everywhere" : ", premise not everywhere");
    return record;
}

auto check_cycle_copy_literal(const MultipartiteTournament & d, const InstanceFacts & facts, std::size_t cap,
    const SearchLimits & limits) -> CheckRecord
{
    if (! premise_applies(d, facts))
        return make("cycle_copy_literal", CheckStatus::Skipped, "needs rich, c >= 8, no (c+2)-cycle");
    auto found = premise_cycles(d, cap, limits);
    if (found.exhausted)
        return make("cycle_copy_literal", CheckStatus::Inconclusive,
            "more than " + std::to_string(cap) + " (c+1)-cycles");
    for (const auto & cycle : found.cycles)
        for (Vertex y = 0; y < d.n(); ++y) {
            if (cycle.contains(y))
                continue;
            auto shape = neighbourhood_on(d, y, cycle);
            bool copied = std::any_of(cycle.vertices.begin(), cycle.vertices.end(), [&](Vertex x) {
                return d.part_of(x) == d.part_of(y) && neighbourhood_on(d, x, cycle) == shape;
            });
            if (! copied) {
                auto record = make("cycle_copy_literal", CheckStatus::Fail,
                    "vertex " + std::to_string(y) + " copies no cycle vertex of its part");
                record.witnesses.push_back(cycle);
                return record;
            }
        }
    return make("cycle_copy_literal", CheckStatus::Pass,
        "premise on " + std::to_string(found.cycles.size()) + " of " + std::to_string(found.total) + " (c+1)-cycles");
}

auto check_c1_meets_all_parts(const MultipartiteTournament & d, const InstanceFacts & facts, std::size_t cap,
    const SearchLimits & limits) -> CheckRecord
{
    const int c = d.c();
    auto c2 = has_length(facts, c + 2);
    if (! is_rich(d) || ! c2 || *c2 || c + 1 > d.n())
        return make("c1_meets_all_parts", CheckStatus::Skipped, "needs rich, no (c+2)-cycle");
    auto cycles = all_cycles_of_length(d, c + 1, cap, limits);
    if (cycles.exhausted)
        return make("c1_meets_all_parts", CheckStatus::Inconclusive, "more than " + std::to_string(cap) + " (c+1)-cycles");
    for (const auto & cycle : cycles.cycles)
        if (parts_met(d, cycle) != c) {
            auto record = make("c1_meets_all_parts", CheckStatus::Fail, "a (c+1)-cycle misses a part");
            record.witnesses.push_back(cycle);
            return record;
        }
    return make("c1_meets_all_parts", CheckStatus::Pass, std::to_string(cycles.cycles.size()) + " (c+1)-cycles");
}

auto check_diameter(const MultipartiteTournament & d, Verdict family) -> CheckRecord
{
    if (family != Verdict::MemberOfQ && family != Verdict::MemberOfH)
        return make("diameter", CheckStatus::Skipped, "only for Q and H members");
    if (! is_strong(d))
        return make("diameter", CheckStatus::Fail, "not strong");
    const int c = d.c(), dm = diam(d);
    bool ok = family == Verdict::MemberOfQ ? dm >= c + 2 : dm <= c + 1;
    return pass_if("diameter", ok, "diam " + std::to_string(dm));
}

auto check_round_trip(const MultipartiteTournament & d, Verdict expected, std::uint64_t relabel_seed,
    const RecognizerOptions & options) -> CheckRecord
{
    auto relabeled = relabel(d, seeded_permutation(d.n(), relabel_seed));
    auto result = expected == Verdict::MemberOfW ? recognize_W(relabeled) : recognize(relabeled, options);
    bool ok = result.verdict == expected && verify_certificate(relabeled, result);
    auto record = pass_if("round_trip", ok,
        "expected " + std::string(to_string(expected)) + ", got " + std::string(to_string(result.verdict)));
    if (result.is_member())
        record.certificate = std::move(result);
    return record;
}

auto check_no_c2_oracle(const MultipartiteTournament & d, const SearchLimits & limits) -> CheckRecord
{
    const int q = d.c() + 2;
    if (q > d.n())
        return make("no_c2_oracle", CheckStatus::Pass, "n < c+2");
    auto found = find_cycle(d, q, SearchMode::Oracle, limits);
    auto record = pass_if("no_c2_oracle", ! found, found ? "oracle found a (c+2)-cycle" : "oracle: none");
    if (found)
        record.witnesses.push_back(*found);
    return record;
}

auto InstanceRecord::failed() const -> bool
{
    return std::any_of(checks.begin(), checks.end(), [](const auto & r) { return r.status == CheckStatus::Fail; });
}

auto InstanceRecord::inconclusive() const -> bool
{
    return std::any_of(checks.begin(), checks.end(), [](const auto & r) { return r.status == CheckStatus::Inconclusive; });
}

// ---- grids ------------------------------------------------------------------

auto h_grid(std::uint64_t seed) -> std::vector<HSpec>
{
    constexpr int c = 8;
    constexpr int orientations = 5;
    std::vector<HSpec> grid;
    std::mt19937_64 seeds(seed);
    for (int i = 3; i <= 6; ++i) {
        // |V_j| = 2 everywhere; a singleton V_i; a triple at the chain source
        std::vector<std::vector<int>> variants(3, std::vector<int>(c, 2));
        variants[1][i - 2] = 1;
        variants[2][0] = 3;
        for (const auto & sizes : variants) {
            HSpec spec{c, i, sizes, {}};
            std::set<std::vector<bool>> seen;
            while (static_cast<int>(seen.size()) < orientations) {
                auto orientation = random_strong_orientation(spec, seeds());
                if (! seen.insert(orientation).second)
                    continue;
                spec.v1_orientation = orientation;
                grid.push_back(spec);
            }
        }
    }
    return grid;
}

auto q_grid() -> std::vector<QSpec>
{
    constexpr int c = 8;
    std::vector<QSpec> grid;
    for (int m = 18; m <= 22; ++m)
        for (int gap = 2; gap <= 7; ++gap)
            for (int s = 1; s + gap <= c + 1; ++s) {
                QSpec base{c, m, s, s + gap, {}, {}};
                grid.push_back(base);

                // every allowed index blown up to size 2, once per (s, t) at m = 18
                if (m == 18) {
                    QSpec blown = base;
                    for (auto index : q_allowed_blowups(base))
                        blown.blowup[index] = 2;
                    grid.push_back(blown);
                }

                // each applicable reversal on its own, flipping one of two twins
                auto applicable = q_applicable_reversals(base);
                for (auto which : applicable) {
                    QSpec reversed = base;
                    reversed.blowup[reversal_flip_index(which, m)] = 2;
                    reversed.reversals = {{which, 1}};
                    grid.push_back(reversed);
                }
                if (applicable.size() > 1) {
                    QSpec combined = base;
                    for (auto which : applicable) {
                        combined.blowup[reversal_flip_index(which, m)] = 3;
                        combined.reversals.push_back({which, 2});
                    }
                    grid.push_back(combined);
                }
            }
    return grid;
}

auto w_grid() -> std::vector<WSpec>
{
    constexpr int c = 8;
    std::vector<WSpec> grid;
    for (int m = 16; m <= 20; ++m) {
        grid.push_back({c, m, {}});
        grid.push_back({c, m, {{1, 2}}});
        grid.push_back({c, m, {{1, 2}, {2, 2}, {m - 1, 2}, {m, 2}}});
        grid.push_back({c, m, {{2, 3}, {m, 2}}});
    }
    return grid;
}

// ---- campaign -------------------------------------------------------------

namespace {
    auto family_of(const Provenance & source) -> Verdict
    {
        if (std::holds_alternative<WSpec>(source))
            return Verdict::MemberOfW;
        if (std::holds_alternative<QSpec>(source))
            return Verdict::MemberOfQ;
        if (std::holds_alternative<HSpec>(source))
            return Verdict::MemberOfH;
        return Verdict::NotMember;
    }

    void record_error(InstanceRecord & record, const std::string & name, const Error & e)
    {
        auto status = e.code() == ErrorCode::Timeout ? CheckStatus::Inconclusive : CheckStatus::Fail;
        record.checks.push_back(make(name, status, std::string(to_string(e.code())) + ": " + e.what()));
    }
}

auto run_instance(const std::string & label, const Provenance & source, const CampaignConfig & config)
    -> InstanceRecord
{
    const auto start = std::chrono::steady_clock::now();
    InstanceRecord record;
    record.label = label;
    record.source = source;
    try {
        auto d = materialize(source);
        record.n = d.n();
        record.c = d.c();
        const auto limits = SearchLimits::within(config.limits.per_instance);
        const auto family = family_of(source);
        auto facts = compute_facts(d, SearchMode::Fast, limits);
        record.spectrum = facts.spectrum.lengths();

        auto run = [&](const std::string & name, auto && check) {
            try {
                record.checks.push_back(check());
            }
            catch (const Error & e) {
                record_error(record, name, e);
            }
        };

        run("bondy", [&] { return check_bondy(d, facts); });
        run("extension_range", [&] { return check_extension_range(d, facts, limits); });
        run("theorem1", [&] { return check_theorem1(d, facts); });
        if (family == Verdict::MemberOfW) {
            run("theorem2", [&] { return check_theorem2(d, facts); });
            run("w_has_c2", [&] {
                bool has = facts.spectrum.contains(d.c() + 2);
                return pass_if("w_has_c2", has, has ? "(c+2)-cycle present" : "no (c+2)-cycle");
            });
            run("no_insertion_k" + std::to_string(d.c()),
                [&] { return check_no_insertion(d, facts, d.c(), config.limits.insertion_cap, limits); });
            run("round_trip", [&] { return check_round_trip(d, family, config.relabel_seed, config.recognizer); });
            record.verdict = Verdict::MemberOfW;
        }
        else if (family == Verdict::MemberOfQ || family == Verdict::MemberOfH) {
            run("no_c2_oracle", [&] { return check_no_c2_oracle(d, limits); });
            run("theorem3", [&] { return check_theorem3(d, facts, config.recognizer); });
            run("no_insertion_k" + std::to_string(d.c() + 1),
                [&] { return check_no_insertion(d, facts, d.c() + 1, config.limits.insertion_cap, limits); });
            run("diameter", [&] { return check_diameter(d, family); });
            run("round_trip", [&] { return check_round_trip(d, family, config.relabel_seed, config.recognizer); });
            if (config.lemma6) {
                run("c1_meets_all_parts",
                    [&] { return check_c1_meets_all_parts(d, facts, config.limits.enumeration_cap, limits); });
                run("cycle_copy_literal",
                    [&] { return check_cycle_copy_literal(d, facts, config.limits.enumeration_cap, limits); });
                run("lemma6_shape", [&] {
                    return check_lemma6_shape(d, facts, config.limits.enumeration_cap, config.recognizer, limits);
                });
            }
            record.verdict = family;
        }
        else {
            run("theorem2", [&] { return check_theorem2(d, facts); });
            if (d.c() >= 8) {
                run("theorem3", [&] { return check_theorem3(d, facts, config.recognizer); });
                const auto & t3 = record.checks.back();
                record.verdict = t3.certificate ? t3.certificate->verdict : Verdict::NotMember;
            }
            else {
                // exploration: the families are undefined here, report only
                auto c2 = facts.spectrum.covers(d.c() + 2) && ! facts.spectrum.contains(d.c() + 2);
                record.open_case_candidate = c2;
                record.checks.push_back(make("open_case", CheckStatus::Skipped,
                    c2 ? "no (c+2)-cycle and no family applies: candidate" : "(c+2)-cycle present"));
            }
        }
    }
    catch (const Error & e) {
        record_error(record, "materialize", e);
    }
    record.elapsed_ms
        = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return record;
}

void aggregate(CampaignReport & report)
{
    report.tallies.clear();
    report.failures.clear();
    report.inconclusive.clear();
    report.candidates.clear();
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const auto & record = report.records[k];
        for (const auto & check : record.checks) {
            auto & tally = report.tallies[check.name];
            switch (check.status) {
            case CheckStatus::Pass: ++tally.pass; break;
            case CheckStatus::Fail: ++tally.fail; break;
            case CheckStatus::Inconclusive: ++tally.inconclusive; break;
            case CheckStatus::Skipped: ++tally.skipped; break;
            }
        }
        if (record.failed())
            report.failures.push_back(k);
        if (record.inconclusive())
            report.inconclusive.push_back(k);
        if (record.open_case_candidate)
            report.candidates.push_back(k);
    }
}

auto run_campaign(const CampaignConfig & config) -> CampaignReport
{
    if (config.fuzz_count > 0 && config.fuzz_c < 8 && ! config.explore)
        throw Error(ErrorCode::InvalidSpec, "fuzzing below c = 8 needs the exploration flag");

    std::vector<std::pair<std::string, Provenance>> items;
    std::vector<FamilySpec> members;
    for (std::size_t k = 0; k < config.h_specs.size(); ++k) {
        items.emplace_back("H#" + std::to_string(k), config.h_specs[k]);
        members.emplace_back(config.h_specs[k]);
    }
    for (std::size_t k = 0; k < config.q_specs.size(); ++k) {
        items.emplace_back("Q#" + std::to_string(k), config.q_specs[k]);
        members.emplace_back(config.q_specs[k]);
    }
    for (std::size_t k = 0; k < config.w_specs.size(); ++k)
        items.emplace_back("W#" + std::to_string(k), config.w_specs[k]);
    if (config.perturbations > 0 && members.empty())
        throw Error(ErrorCode::InvalidSpec, "perturbations need H or Q specs to perturb");
    for (int k = 0; k < config.perturbations; ++k)
        items.emplace_back("perturb#" + std::to_string(k),
            PerturbationSource{members[static_cast<std::size_t>(k) % members.size()], config.perturb_seed + k});
    for (int k = 0; k < config.fuzz_count; ++k)
        items.emplace_back("fuzz#" + std::to_string(k),
            RandomSource{config.fuzz_c, std::vector<int>(config.fuzz_c, config.fuzz_part_size), config.fuzz_seed + k});

    CampaignReport report;
    report.records.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < items.size(); k = next++)
            report.records[k] = run_instance(items[k].first, items[k].second, config);
    };
    const unsigned threads = std::max(1U, config.threads);
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    aggregate(report);
    return report;
}

auto summary_table(const CampaignReport & report) -> std::string
{
    std::ostringstream out;
    out << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
        << std::setw(14) << "inconclusive" << std::setw(9) << "skipped" << '\n';
    out << std::string(63, '-') << '\n';
    for (const auto & [name, tally] : report.tallies)
        out << std::left << std::setw(24) << name << std::right << std::setw(8) << tally.pass << std::setw(8)
            << tally.fail << std::setw(14) << tally.inconclusive << std::setw(9) << tally.skipped << '\n';
    out << std::string(63, '-') << '\n';
    out << report.records.size() << " instances, " << report.failures.size() << " failed, "
        << report.inconclusive.size() << " inconclusive";
    if (! report.candidates.empty())
        out << ", " << report.candidates.size() << " open-case candidates";
    out << '\n';
    for (auto k : report.failures) {
        const auto & record = report.records[k];
        for (const auto & check : record.checks)
            if (check.status == CheckStatus::Fail)
                out << "FAIL " << record.label << ' ' << check.name << ": " << check.detail << '\n';
    }
    return out.str();
}

} // namespace mpt
