// mpt: generate, search, recognize and verify multipartite tournaments.
//
// Exit codes: 0 success, 1 a check failed, 2 inconclusive (cap or time
// budget hit), 3 usage or input error.

#include <mpt/cycles.hpp>
#include <mpt/families.hpp>
#include <mpt/harness.hpp>
#include <mpt/io.hpp>
#include <mpt/recognizer.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mpt;

constexpr int exit_failed = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_error = 3;

auto read_input(const std::string & path) -> std::string
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (! out)
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

auto parse_mode(const std::string & mode) -> SearchMode
{
    return mode == "oracle" ? SearchMode::Oracle : SearchMode::Fast;
}

/// Vertices printed 1-based, as in the family definitions.
auto human(const CycleWitness & w) -> std::string
{
    std::string out;
    for (auto v : w.vertices)
        out += (out.empty() ? "x_" : " x_") + std::to_string(v + 1);
    return out;
}

auto parse_blowups(const std::vector<std::string> & entries) -> std::map<int, int>
{
    std::map<int, int> blowup;
    for (const auto & entry : entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidSpec, "blow-up \"" + entry + "\" is not index=size");
        blowup[std::stoi(entry.substr(0, eq))] = std::stoi(entry.substr(eq + 1));
    }
    return blowup;
}

auto status_exit(const std::vector<CheckRecord> & checks) -> int
{
    bool inconclusive = false;
    for (const auto & check : checks) {
        if (check.status == CheckStatus::Fail)
            return exit_failed;
        inconclusive = inconclusive || check.status == CheckStatus::Inconclusive;
    }
    return inconclusive ? exit_inconclusive : 0;
}

auto report_exit(const CampaignReport & report) -> int
{
    if (! report.failures.empty())
        return exit_failed;
    return report.inconclusive.empty() ? 0 : exit_inconclusive;
}

struct GenOptions {
    std::string family;
    int c = 8;
    int m = 0;
    int s = 0;
    int t = 0;
    int i = 0;
    std::vector<std::string> blowups;
    std::vector<std::string> reversals;
    int flipped = 1;
    std::vector<int> sizes;
    int part_size = 2;
    std::string orientation;
    std::uint64_t seed = 1;
    bool dot = false;
    bool extended = false;
    std::string output;
};

auto run_gen(const GenOptions & o) -> int
{
    std::optional<MultipartiteTournament> d;
    if (o.family == "w")
        d = gen_W(WSpec{o.c, o.m, parse_blowups(o.blowups)});
    else if (o.family == "qprime")
        d = gen_Qprime(o.c, o.m);
    else if (o.family == "q") {
        QSpec spec{o.c, o.m, o.s, o.t, parse_blowups(o.blowups), {}};
        for (const auto & r : o.reversals) {
            if (r == "none")
                continue;
            int which = std::stoi(r);
            if (which < 1 || which > 4)
                throw Error(ErrorCode::InvalidSpec, "reversal must be none or 1..4");
            spec.reversals.push_back({static_cast<ReversalCase>(which), o.flipped});
        }
        d = gen_Q(spec);
    }
    else if (o.family == "h") {
        HSpec spec{o.c, o.i, o.sizes.empty() ? std::vector<int>(o.c, 2) : o.sizes, {}};
        auto range = o.extended ? HRange::Extended : HRange::Literal;
        if (! o.orientation.empty()) {
            for (char bit : o.orientation)
                spec.v1_orientation.push_back(bit == '1');
        }
        else {
            // validate the rest of the spec before sampling an orientation
            spec.v1_orientation.assign(h_orientation_length(spec), false);
            validate(spec, range);
            spec.v1_orientation = random_strong_orientation(spec, o.seed, 1000, range);
        }
        d = gen_H(spec, range);
    }
    else if (o.family == "random") {
        auto sizes = o.sizes.empty() ? std::vector<int>(o.c, o.part_size) : o.sizes;
        d = random_rich(static_cast<int>(sizes.size()), sizes, o.seed);
    }
    write_output(o.output, o.dot ? to_dot(*d) : to_json(*d));
    return 0;
}

void print_result(const MultipartiteTournament & d, const RecognitionResult & result, bool as_json)
{
    if (as_json) {
        std::cout << result_to_json(result).dump(2) << '\n';
        return;
    }
    std::cout << "verdict: " << to_string(result.verdict) << '\n';
    if (! result.is_member())
        return;
    std::visit(
        [](const auto & s) {
            if constexpr (! std::is_same_v<std::decay_t<decltype(s)>, std::monostate>)
                std::cout << "parameters: " << describe(FamilySpec{s}) << '\n';
        },
        result.spec);
    std::cout << "certificate verified: " << (verify_certificate(d, result) ? "yes" : "no") << '\n';
    std::cout << "correspondence (template -> input, 1-based):\n";
    for (std::size_t k = 0; k < result.correspondence.size(); ++k)
        std::cout << "  " << k + 1 << " -> x_" << result.correspondence[k] + 1 << '\n';
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Multipartite tournament toolkit: families, cycle search, recognition, verification"};
    app.require_subcommand(1);

    GenOptions gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a family member or a random rich instance");
    gen_cmd->add_option("--family", gen.family, "w | qprime | q | h | random")
        ->required()
        ->check(CLI::IsMember({"w", "qprime", "q", "h", "random"}));
    gen_cmd->add_option("--c", gen.c, "number of partite sets");
    gen_cmd->add_option("--m", gen.m, "path length (w, qprime, q)");
    gen_cmd->add_option("--s", gen.s, "first merged residue class (q)");
    gen_cmd->add_option("--t", gen.t, "second merged residue class (q)");
    gen_cmd->add_option("--i", gen.i, "chain position of v_1 (h)");
    gen_cmd->add_option("--blowup", gen.blowups, "index=size, repeatable (w, q)");
    gen_cmd->add_option("--reversal", gen.reversals, "none | 1 | 2 | 3 | 4, repeatable (q)");
    gen_cmd->add_option("--flipped", gen.flipped, "twins flipped by each reversal (q)");
    gen_cmd->add_option("--sizes", gen.sizes, "|V_2| .. |V_{c+1}| (h) or part sizes (random)");
    gen_cmd->add_option("--part-size", gen.part_size, "uniform part size (random)");
    gen_cmd->add_option("--orientation", gen.orientation, "v_1 arcs as a 0/1 string (h); random if omitted");
    gen_cmd->add_option("--seed", gen.seed, "seed for random instances and orientations");
    gen_cmd->add_flag("--extended", gen.extended, "accept i up to c (h)");
    auto * gen_json = gen_cmd->add_flag("--json", "emit a tournament document (default)");
    gen_cmd->add_flag("--dot", gen.dot, "emit DOT instead of JSON")->excludes(gen_json);
    gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

    std::string input = "-";
    int qmax = 0;
    int q = 0;
    std::string mode = "fast";
    bool as_json = false;
    bool as_dot = false;
    bool extended = false;

    auto * spectrum_cmd = app.add_subcommand("spectrum", "Cycle lengths 3..qmax with witnesses");
    spectrum_cmd->add_option("--input", input, "tournament document ('-' for stdin)");
    spectrum_cmd->add_option("--qmax", qmax, "largest length (default min(c+2, n))");
    spectrum_cmd->add_option("--mode", mode)->check(CLI::IsMember({"fast", "oracle"}));
    spectrum_cmd->add_flag("--json", as_json, "machine-readable output");

    auto * find_cmd = app.add_subcommand("find-cycle", "Smallest q-cycle or none");
    find_cmd->add_option("--input", input, "tournament document ('-' for stdin)");
    find_cmd->add_option("--q", q, "cycle length")->required();
    find_cmd->add_option("--mode", mode)->check(CLI::IsMember({"fast", "oracle"}));
    find_cmd->add_flag("--json", as_json, "machine-readable output");
    find_cmd->add_flag("--dot", as_dot, "DOT output with the cycle highlighted");

    auto * recognize_cmd = app.add_subcommand("recognize", "Membership in H or Q (or W with --family w)");
    std::string recognize_family = "qh";
    recognize_cmd->add_option("--input", input, "tournament document ('-' for stdin)");
    recognize_cmd->add_option("--family", recognize_family, "qh (default) | w")->check(CLI::IsMember({"qh", "w"}));
    recognize_cmd->add_flag("--extended", extended, "accept H members with i up to c");
    recognize_cmd->add_flag("--json", as_json, "machine-readable output");

    auto * verify_cmd = app.add_subcommand("verify", "Run the per-instance theorem checks");
    verify_cmd->add_option("--input", input, "tournament document ('-' for stdin)");
    verify_cmd->add_flag("--extended", extended, "accept H members with i up to c");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    CampaignConfig fuzz;
    std::string report_out;
    bool no_timings = false;
    auto * fuzz_cmd = app.add_subcommand("fuzz", "Random rich instances against the equivalences");
    fuzz_cmd->add_option("--c", fuzz.fuzz_c, "number of partite sets");
    fuzz_cmd->add_option("--part-size", fuzz.fuzz_part_size, "size of every part");
    fuzz_cmd->add_option("--count", fuzz.fuzz_count, "number of instances");
    fuzz_cmd->add_option("--seed", fuzz.fuzz_seed, "first seed; instance k uses seed + k");
    fuzz_cmd->add_flag("--explore", fuzz.explore, "allow c in {5,6,7}; candidates are reported, nothing asserted");
    fuzz_cmd->add_option("--threads", fuzz.threads, "worker threads");
    fuzz_cmd->add_flag("--extended", extended, "accept H members with i up to c");
    fuzz_cmd->add_flag("--no-timings", no_timings, "omit timings so output is reproducible byte for byte");
    fuzz_cmd->add_option("-o,--output", report_out, "report file (default stdout)");

    auto * report_cmd = app.add_subcommand("report", "Render a saved campaign report");
    report_cmd->add_option("--input", input, "report JSON ('-' for stdin)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        RecognizerOptions options;
        options.h_range = extended ? HRange::Extended : HRange::Literal;

        if (*gen_cmd)
            return run_gen(gen);

        if (*report_cmd) {
            auto report = report_from_json(nlohmann::json::parse(read_input(input)));
            std::cout << summary_table(report);
            return report_exit(report);
        }

        if (*fuzz_cmd) {
            fuzz.recognizer = options;
            auto report = run_campaign(fuzz);
            write_output(report_out, report_to_json(report, ! no_timings).dump(2) + "\n");
            std::cerr << summary_table(report);
            return report_exit(report);
        }

        auto d = from_json(read_input(input));

        if (*spectrum_cmd) {
            int top = qmax > 0 ? qmax : std::min(d.c() + 2, d.n());
            auto spectrum = cycle_spectrum(d, top, parse_mode(mode));
            if (as_json) {
                nlohmann::json doc = nlohmann::json::object();
                for (int len = 3; len <= top; ++len)
                    doc[std::to_string(len)] = spectrum.contains(len) ? nlohmann::json(spectrum.witness(len)->vertices) : nlohmann::json(nullptr);
                std::cout << doc.dump(2) << '\n';
            }
            else
                for (int len = 3; len <= top; ++len)
                    std::cout << len << ": " << (spectrum.contains(len) ? human(*spectrum.witness(len)) : "none") << '\n';
            return 0;
        }

        if (*find_cmd) {
            auto found = find_cycle(d, q, parse_mode(mode));
            if (as_dot)
                std::cout << to_dot(d, found);
            else if (as_json)
                std::cout << (found ? nlohmann::json(found->vertices) : nlohmann::json(nullptr)).dump() << '\n';
            else
                std::cout << (found ? human(*found) : "none") << '\n';
            return 0;
        }

        if (*recognize_cmd) {
            auto result = recognize_family == "w" ? recognize_W(d) : recognize(d, options);
            print_result(d, result, as_json);
            return 0;
        }

        if (*verify_cmd) {
            auto facts = compute_facts(d);
            std::vector<CheckRecord> checks{check_theorem1(d, facts), check_theorem2(d, facts),
                check_theorem3(d, facts, options), check_bondy(d, facts)};
            if (as_json) {
                nlohmann::json doc = nlohmann::json::array();
                for (const auto & check : checks)
                    doc.push_back(check_to_json(check));
                std::cout << doc.dump(2) << '\n';
            }
            else
                for (const auto & check : checks)
                    std::cout << check.name << ": " << to_string(check.status) << " (" << check.detail << ")\n";
            return status_exit(checks);
        }
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Timeout ? exit_inconclusive : exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return 0;
}
