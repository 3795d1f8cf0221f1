// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <mpt/cycles.hpp>
#include <mpt/families.hpp>
#include <mpt/harness.hpp>
#include <mpt/recognizer.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace mpt;

namespace {

using Clock = std::chrono::steady_clock;

constexpr int c = 8;
constexpr std::uint64_t relabel_seed = 20240601;
constexpr int fuzz_count = 1000;
constexpr std::uint64_t fuzz_seed = 1;
constexpr int perturbation_count = 200;
constexpr std::uint64_t perturb_seed = 1;
constexpr int engine_instances = 500;
constexpr std::size_t insertion_cap = 10'000;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    std::string label;
    MultipartiteTournament d;
    InstanceFacts facts;
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> problems;

    void fail(const std::string & what)
    {
        pass = false;
        if (problems.size() < 5)
            problems.push_back(what);
    }
};

int failures = 0;

void report(int number, const std::string & title, Outcome & outcome)
{
    std::printf("[%s] criterion %2d: %s -- %s\n", outcome.pass ? "PASS" : "FAIL", number, title.c_str(),
        outcome.detail.str().c_str());
    for (const auto & p : outcome.problems)
        std::printf("        %s\n", p.c_str());
    std::fflush(stdout);
    if (! outcome.pass)
        ++failures;
}

auto make_instance(std::string label, MultipartiteTournament d) -> Instance
{
    auto facts = compute_facts(d);
    return {std::move(label), std::move(d), std::move(facts)};
}

} // namespace

int main()
{
    const auto suite_start = Clock::now();
    const auto h_specs = h_grid();
    const auto q_specs = q_grid();
    const auto w_specs = w_grid();

    std::vector<Instance> h_members, q_members, w_members, fuzz, perturbed;
    for (std::size_t k = 0; k < h_specs.size(); ++k)
        h_members.push_back(make_instance("H#" + std::to_string(k), gen_H(h_specs[k])));
    for (std::size_t k = 0; k < q_specs.size(); ++k)
        q_members.push_back(make_instance("Q#" + std::to_string(k), gen_Q(q_specs[k])));
    for (std::size_t k = 0; k < w_specs.size(); ++k)
        w_members.push_back(make_instance("W#" + std::to_string(k), gen_W(w_specs[k])));

    auto family_members = [&] {
        std::vector<const Instance *> all;
        for (const auto & i : h_members)
            all.push_back(&i);
        for (const auto & i : q_members)
            all.push_back(&i);
        return all;
    }();

    // 1: oracle finds no (c+2)-cycle on any grid member
    {
        Outcome o;
        auto start = Clock::now();
        for (const auto * inst : family_members)
            if (auto w = find_cycle(inst->d, c + 2, SearchMode::Oracle))
                o.fail(inst->label + " has a 10-cycle");
        double elapsed = seconds_since(start);
        if (elapsed > 600)
            o.fail("took longer than 10 minutes");
        o.detail << h_members.size() << " H + " << q_members.size() << " Q members, oracle time " << elapsed << " s";
        report(1, "no (c+2)-cycle in H and Q grid members", o);
    }

    // 2: every grid member has a (c+1)-cycle
    {
        Outcome o;
        for (const auto * inst : family_members) {
            auto w = find_cycle(inst->d, c + 1, SearchMode::Oracle);
            if (! w || ! is_valid_cycle(inst->d, *w))
                o.fail(inst->label + " has no 9-cycle");
        }
        o.detail << family_members.size() << " members checked";
        report(2, "every grid member has a (c+1)-cycle", o);
    }

    // 3: recognizer round trip after relabeling
    {
        Outcome o;
        for (std::size_t k = 0; k < h_members.size(); ++k) {
            auto record = check_round_trip(h_members[k].d, Verdict::MemberOfH, relabel_seed + k);
            if (record.status != CheckStatus::Pass)
                o.fail(h_members[k].label + ": " + record.detail);
        }
        for (std::size_t k = 0; k < q_members.size(); ++k) {
            auto record = check_round_trip(q_members[k].d, Verdict::MemberOfQ, relabel_seed + k);
            if (record.status != CheckStatus::Pass)
                o.fail(q_members[k].label + ": " + record.detail);
        }
        o.detail << family_members.size() << " relabeled members recognized and regenerated";
        report(3, "recognizer round trip", o);
    }

    // 4: fuzz equivalence
    std::size_t fuzz_members = 0;
    {
        Outcome o;
        for (int k = 0; k < fuzz_count; ++k)
            fuzz.push_back(make_instance("fuzz#" + std::to_string(k),
                random_rich(c, std::vector<int>(c, 2), fuzz_seed + static_cast<std::uint64_t>(k))));
        for (const auto & inst : fuzz) {
            auto record = check_theorem3(inst.d, inst.facts);
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
            if (record.certificate)
                ++fuzz_members;
        }
        o.detail << fuzz.size() << " random rich instances, " << fuzz_members << " members / "
                 << fuzz.size() - fuzz_members << " with a 10-cycle";
        report(4, "member iff no (c+2)-cycle on random instances", o);
    }

    // 5: perturbation equivalence
    {
        Outcome o;
        std::size_t members = 0;
        std::vector<FamilySpec> bases;
        for (const auto & s : h_specs)
            bases.emplace_back(s);
        for (const auto & s : q_specs)
            bases.emplace_back(s);
        for (int k = 0; k < perturbation_count; ++k) {
            // alternate between the H and Q halves of the grid
            std::size_t index = k % 2 == 0 ? (k / 2) % h_specs.size() : h_specs.size() + (k / 2) % q_specs.size();
            PerturbationSource source{bases[index], perturb_seed + static_cast<std::uint64_t>(k)};
            perturbed.push_back(make_instance("perturb#" + std::to_string(k), materialize(source)));
            const auto & inst = perturbed.back();
            auto record = check_theorem3(inst.d, inst.facts);
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
            if (record.certificate)
                ++members;
        }
        o.detail << perturbed.size() << " single-arc perturbations, " << members << " still members, "
                 << perturbed.size() - members << " NotMember with a 10-cycle";
        report(5, "member iff no (c+2)-cycle after perturbation", o);
    }

    // 6: W suite and (c+1)-equivalence over the fuzz corpus
    {
        Outcome o;
        for (std::size_t k = 0; k < w_members.size(); ++k) {
            const auto & inst = w_members[k];
            if (find_cycle(inst.d, c + 1, SearchMode::Oracle))
                o.fail(inst.label + " has a 9-cycle");
            if (! find_cycle(inst.d, c + 2, SearchMode::Oracle))
                o.fail(inst.label + " has no 10-cycle");
            auto record = check_round_trip(inst.d, Verdict::MemberOfW, relabel_seed + k);
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
        }
        std::size_t w_in_fuzz = 0;
        for (const auto & inst : fuzz) {
            auto record = check_theorem2(inst.d, inst.facts);
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
            if (record.certificate)
                ++w_in_fuzz;
        }
        o.detail << w_members.size() << " W members; " << fuzz.size() << " fuzz instances, " << w_in_fuzz
                 << " without a 9-cycle";
        report(6, "W members and no (c+1)-cycle iff W", o);
    }

    std::vector<const Instance *> touched = family_members;
    for (const auto * group : {&w_members, &fuzz, &perturbed})
        for (const auto & inst : *group)
            touched.push_back(&inst);

    // 7: lengths 3..c on every strong instance
    {
        Outcome o;
        std::size_t strong = 0;
        for (const auto * inst : touched) {
            auto record = check_bondy(inst->d, inst->facts);
            if (record.status == CheckStatus::Skipped)
                continue;
            ++strong;
            if (record.status != CheckStatus::Pass)
                o.fail(inst->label + ": " + record.detail);
        }
        o.detail << strong << " strong instances have every length 3..8";
        report(7, "cycles of every length 3..c", o);
    }

    // 8: extension range on every witness meeting fewer than c parts
    {
        Outcome o;
        std::size_t witnesses = 0;
        for (const auto * inst : touched) {
            for (int q = 3; q <= inst->facts.spectrum.q_max(); ++q) {
                const auto * w = inst->facts.spectrum.witness(q);
                if (w == nullptr || parts_met(inst->d, *w) >= c)
                    continue;
                ++witnesses;
                auto range = check_extension_range(inst->d, *w, &inst->facts.spectrum);
                if (! range.passed())
                    o.fail(inst->label + ": k=" + std::to_string(range.k) + " l=" + std::to_string(range.l)
                        + " misses " + std::to_string(range.missing.front()));
            }
        }
        o.detail << witnesses << " witnesses with l < c checked";
        report(8, "extension range k..c+k-l", o);
    }

    // 9: no insertion into k-cycles when k+1 is absent
    {
        Outcome o;
        std::size_t checked = 0, capped = 0;
        auto run = [&](const Instance & inst, int k) {
            auto record = check_no_insertion(inst.d, inst.facts, k, insertion_cap);
            if (record.status == CheckStatus::Skipped) {
                o.fail(inst.label + ": premise unexpectedly fails for k=" + std::to_string(k));
                return;
            }
            ++checked;
            capped += record.detail.find("capped") != std::string::npos ? 1 : 0;
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
        };
        for (const auto * inst : family_members)
            run(*inst, c + 1);
        for (const auto & inst : w_members)
            run(inst, c);
        o.detail << checked << " instances, " << capped << " hit the 10^4 cycle cap";
        report(9, "no vertex can be inserted", o);
    }

    // 10: fast and oracle engines agree
    {
        Outcome o;
        auto start = Clock::now();
        std::mt19937_64 rng(77);
        std::size_t queries = 0;
        for (int k = 0; k < engine_instances; ++k) {
            const int parts = 3 + k % 4;
            const int max_size = 14 / parts;
            std::vector<int> sizes(parts);
            for (auto & s : sizes)
                s = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_size)));
            auto d = random_multipartite(sizes, rng());
            for (int q = 3; q <= d.n(); ++q) {
                ++queries;
                auto fast = find_cycle(d, q, SearchMode::Fast);
                auto oracle = find_cycle(d, q, SearchMode::Oracle);
                if (fast.has_value() != oracle.has_value())
                    o.fail("instance " + std::to_string(k) + " q=" + std::to_string(q) + " disagrees");
                else if (fast && (! is_valid_cycle(d, *fast) || ! is_valid_cycle(d, *oracle)))
                    o.fail("instance " + std::to_string(k) + " q=" + std::to_string(q) + " invalid witness");
            }
        }
        double elapsed = seconds_since(start);
        if (elapsed > 300)
            o.fail("took longer than 5 minutes");
        o.detail << engine_instances << " instances, " << queries << " queries, " << elapsed << " s";
        report(10, "fast and oracle search agree", o);
    }

    // 11: diameter tripwire
    {
        Outcome o;
        int q_min = 1 << 30, h_max = 0;
        for (const auto & inst : q_members) {
            auto record = check_diameter(inst.d, Verdict::MemberOfQ);
            q_min = std::min(q_min, diam(inst.d));
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
        }
        for (const auto & inst : h_members) {
            auto record = check_diameter(inst.d, Verdict::MemberOfH);
            h_max = std::max(h_max, diam(inst.d));
            if (record.status != CheckStatus::Pass)
                o.fail(inst.label + ": " + record.detail);
        }
        o.detail << "smallest Q diameter " << q_min << ", largest H diameter " << h_max;
        report(11, "Q diameter >= c+2, H diameter <= c+1", o);
    }

    std::printf("%d of 11 criteria failed, total %.1f s\n", failures, seconds_since(suite_start));
    return failures == 0 ? 0 : 1;
}
