#include <mpt/io.hpp>

#include <set>
#include <sstream>

namespace mpt {

using nlohmann::json;

namespace {
    [[noreturn]] void parse_error(const std::string & why) { throw Error(ErrorCode::ParseError, why); }

    template <typename T>
    auto field(const json & doc, const char * key) -> T
    {
        if (! doc.is_object() || ! doc.contains(key))
            parse_error(std::string("missing field \"") + key + "\"");
        try {
            return doc.at(key).get<T>();
        }
        catch (const json::exception & e) {
            parse_error(std::string("field \"") + key + "\": " + e.what());
        }
    }

    auto blowup_to_json(const std::map<int, int> & blowup) -> json
    {
        json out = json::array();
        for (auto [index, size] : blowup)
            out.push_back({index, size});
        return out;
    }

    auto blowup_from_json(const json & doc) -> std::map<int, int>
    {
        std::map<int, int> blowup;
        if (! doc.contains("blowup"))
            return blowup;
        for (const auto & entry : field<std::vector<std::vector<int>>>(doc, "blowup")) {
            if (entry.size() != 2)
                parse_error("blow-up entries are [index, size] pairs");
            blowup[entry[0]] = entry[1];
        }
        return blowup;
    }

    auto witness_to_json(const CycleWitness & w) -> json { return w.vertices; }

    auto verdict_from_string(const std::string & s) -> Verdict
    {
        for (auto v : {Verdict::NotMember, Verdict::MemberOfW, Verdict::MemberOfQ, Verdict::MemberOfH})
            if (to_string(v) == s)
                return v;
        parse_error("unknown verdict \"" + s + "\"");
    }

    auto status_from_string(const std::string & s) -> CheckStatus
    {
        for (auto v : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Inconclusive, CheckStatus::Skipped})
            if (to_string(v) == s)
                return v;
        parse_error("unknown check status \"" + s + "\"");
    }
}

auto tournament_to_json(const MultipartiteTournament & d) -> json
{
    json arcs = json::array();
    for (auto [u, v] : d.arcs())
        arcs.push_back({u, v});
    return {{"version", document_version}, {"c", d.c()}, {"parts", d.parts()}, {"arcs", arcs}};
}

auto tournament_from_json(const json & doc) -> MultipartiteTournament
{
    auto version = field<std::string>(doc, "version");
    if (version != document_version)
        parse_error("unsupported document version \"" + version + "\"");
    auto c = field<int>(doc, "c");
    auto parts = field<std::vector<std::vector<Vertex>>>(doc, "parts");
    if (static_cast<int>(parts.size()) != c)
        parse_error("\"c\" is " + std::to_string(c) + " but " + std::to_string(parts.size()) + " parts are listed");
    std::vector<Arc> arcs;
    for (const auto & pair : field<std::vector<std::vector<Vertex>>>(doc, "arcs")) {
        if (pair.size() != 2)
            parse_error("arcs are [from, to] pairs");
        arcs.emplace_back(pair[0], pair[1]);
    }
    return MultipartiteTournament::build(parts, arcs);
}

auto to_json(const MultipartiteTournament & d) -> std::string
{
    // one part and one arc per line keeps documents readable and diff-friendly
    auto doc = tournament_to_json(d);
    std::ostringstream out;
    out << "{\n  \"version\": " << doc["version"].dump() << ",\n  \"c\": " << d.c() << ",\n  \"parts\": [";
    for (std::size_t p = 0; p < doc["parts"].size(); ++p)
        out << (p == 0 ? "\n    " : ",\n    ") << doc["parts"][p].dump();
    out << "\n  ],\n  \"arcs\": [";
    for (std::size_t k = 0; k < doc["arcs"].size(); ++k)
        out << (k == 0 ? "\n    " : ",\n    ") << doc["arcs"][k].dump();
    out << (doc["arcs"].empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

auto from_json(const std::string & text) -> MultipartiteTournament
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error & e) {
        parse_error(e.what());
    }
    return tournament_from_json(doc);
}

auto spec_to_json(const FamilySpec & spec) -> json
{
    return std::visit(
        [](const auto & s) -> json {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, WSpec>)
                return {{"family", "W"}, {"c", s.c}, {"m", s.m}, {"blowup", blowup_to_json(s.blowup)}};
            else if constexpr (std::is_same_v<S, QSpec>) {
                json reversals = json::array();
                for (const auto & r : s.reversals)
                    reversals.push_back({{"case", static_cast<int>(r.which)}, {"flipped", r.flipped}});
                return {{"family", "Q"}, {"c", s.c}, {"m", s.m}, {"s", s.s}, {"t", s.t},
                    {"blowup", blowup_to_json(s.blowup)}, {"reversals", reversals}};
            }
            else {
                std::vector<int> orientation(s.v1_orientation.begin(), s.v1_orientation.end());
                return {{"family", "H"}, {"c", s.c}, {"i", s.i}, {"sizes", s.sizes}, {"v1_orientation", orientation}};
            }
        },
        spec);
}

auto spec_from_json(const json & doc) -> FamilySpec
{
    auto family = field<std::string>(doc, "family");
    if (family == "W")
        return WSpec{field<int>(doc, "c"), field<int>(doc, "m"), blowup_from_json(doc)};
    if (family == "Q") {
        QSpec spec{field<int>(doc, "c"), field<int>(doc, "m"), field<int>(doc, "s"), field<int>(doc, "t"),
            blowup_from_json(doc), {}};
        if (doc.contains("reversals"))
            for (const auto & r : doc.at("reversals")) {
                int which = field<int>(r, "case");
                if (which < 1 || which > 4)
                    parse_error("reversal case must be 1..4");
                spec.reversals.push_back({static_cast<ReversalCase>(which), field<int>(r, "flipped")});
            }
        return spec;
    }
    if (family == "H") {
        HSpec spec{field<int>(doc, "c"), field<int>(doc, "i"), field<std::vector<int>>(doc, "sizes"), {}};
        for (auto bit : field<std::vector<int>>(doc, "v1_orientation"))
            spec.v1_orientation.push_back(bit != 0);
        return spec;
    }
    parse_error("unknown family \"" + family + "\"");
}

auto provenance_to_json(const Provenance & source) -> json
{
    return std::visit(
        [](const auto & s) -> json {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, RandomSource>)
                return {{"family", "random"}, {"c", s.c}, {"sizes", s.sizes}, {"seed", s.seed}};
            else if constexpr (std::is_same_v<S, PerturbationSource>)
                return {{"family", "perturbation"}, {"base", spec_to_json(s.base)}, {"seed", s.seed}};
            else
                return spec_to_json(FamilySpec{s});
        },
        source);
}

auto provenance_from_json(const json & doc) -> Provenance
{
    auto family = field<std::string>(doc, "family");
    if (family == "random")
        return RandomSource{field<int>(doc, "c"), field<std::vector<int>>(doc, "sizes"), field<std::uint64_t>(doc, "seed")};
    if (family == "perturbation")
        return PerturbationSource{spec_from_json(field<json>(doc, "base")), field<std::uint64_t>(doc, "seed")};
    return std::visit([](const auto & s) -> Provenance { return s; }, spec_from_json(doc));
}

auto result_to_json(const RecognitionResult & result) -> json
{
    json doc{{"verdict", to_string(result.verdict)}, {"correspondence", result.correspondence}};
    std::visit(
        [&](const auto & s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, std::monostate>)
                doc["spec"] = nullptr;
            else
                doc["spec"] = spec_to_json(FamilySpec{s});
        },
        result.spec);
    return doc;
}

auto result_from_json(const json & doc) -> RecognitionResult
{
    RecognitionResult result;
    result.verdict = verdict_from_string(field<std::string>(doc, "verdict"));
    result.correspondence = field<std::vector<Vertex>>(doc, "correspondence");
    if (doc.contains("spec") && ! doc.at("spec").is_null())
        std::visit([&](const auto & s) { result.spec = s; }, spec_from_json(doc.at("spec")));
    return result;
}

auto check_to_json(const CheckRecord & check) -> json
{
    json witnesses = json::array();
    for (const auto & w : check.witnesses)
        witnesses.push_back(witness_to_json(w));
    json doc{{"name", check.name}, {"status", to_string(check.status)}, {"detail", check.detail},
        {"witnesses", witnesses}};
    if (check.certificate)
        doc["certificate"] = result_to_json(*check.certificate);
    return doc;
}

namespace {
    auto check_from_json(const json & doc) -> CheckRecord
    {
        CheckRecord check;
        check.name = field<std::string>(doc, "name");
        check.status = status_from_string(field<std::string>(doc, "status"));
        check.detail = field<std::string>(doc, "detail");
        for (const auto & w : field<std::vector<std::vector<Vertex>>>(doc, "witnesses"))
            check.witnesses.push_back(CycleWitness{w});
        if (doc.contains("certificate"))
            check.certificate = result_from_json(doc.at("certificate"));
        return check;
    }
}

auto report_to_json(const CampaignReport & report, bool include_timings) -> json
{
    json records = json::array();
    for (const auto & r : report.records) {
        json checks = json::array();
        for (const auto & check : r.checks)
            checks.push_back(check_to_json(check));
        json doc{{"label", r.label}, {"source", provenance_to_json(r.source)}, {"n", r.n}, {"c", r.c},
            {"verdict", to_string(r.verdict)}, {"spectrum", r.spectrum}, {"checks", checks},
            {"open_case_candidate", r.open_case_candidate}};
        if (include_timings)
            doc["elapsed_ms"] = r.elapsed_ms;
        records.push_back(std::move(doc));
    }
    json tallies = json::object();
    for (const auto & [name, t] : report.tallies)
        tallies[name] = {{"pass", t.pass}, {"fail", t.fail}, {"inconclusive", t.inconclusive}, {"skipped", t.skipped}};
    return {{"version", document_version}, {"passed", report.passed()}, {"instances", report.records.size()},
        {"tallies", tallies}, {"failures", report.failures}, {"inconclusive", report.inconclusive},
        {"candidates", report.candidates}, {"records", records}};
}

auto report_from_json(const json & doc) -> CampaignReport
{
    CampaignReport report;
    for (const auto & r : field<json>(doc, "records")) {
        InstanceRecord record;
        record.label = field<std::string>(r, "label");
        record.source = provenance_from_json(field<json>(r, "source"));
        record.n = field<int>(r, "n");
        record.c = field<int>(r, "c");
        record.verdict = verdict_from_string(field<std::string>(r, "verdict"));
        record.spectrum = field<std::vector<int>>(r, "spectrum");
        for (const auto & check : field<json>(r, "checks"))
            record.checks.push_back(check_from_json(check));
        if (r.contains("elapsed_ms"))
            record.elapsed_ms = field<double>(r, "elapsed_ms");
        if (r.contains("open_case_candidate"))
            record.open_case_candidate = field<bool>(r, "open_case_candidate");
        report.records.push_back(std::move(record));
    }
    aggregate(report);
    return report;
}

auto to_dot(const MultipartiteTournament & d, const std::optional<CycleWitness> & highlight) -> std::string
{
    std::set<Arc> marked;
    if (highlight)
        for (std::size_t p = 0; p < highlight->vertices.size(); ++p)
            marked.emplace(highlight->vertices[p], highlight->successor(p));

    std::ostringstream out;
    out << "digraph D {\n";
    for (int p = 0; p < d.c(); ++p) {
        out << "  subgraph cluster_" << p << " {\n    label=\"V_" << p + 1 << "\";\n";
        for (auto v : d.part(p)) {
            out << "    " << v << " [label=\"x_" << v + 1 << "\"";
            if (highlight && highlight->contains(v))
                out << ", style=filled, fillcolor=\"#ffd7d7\"";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (auto [u, v] : d.arcs()) {
        out << "  " << u << " -> " << v;
        if (marked.count({u, v}) != 0)
            out << " [color=red, penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

auto describe(const FamilySpec & spec) -> std::string
{
    auto blowups = [](const std::map<int, int> & blowup) {
        std::string out;
        for (auto [index, size] : blowup)
            out += " |A_" + std::to_string(index) + "|=" + std::to_string(size);
        return out;
    };
    return std::visit(
        [&](const auto & s) -> std::string {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, WSpec>)
                return "W_m with c=" + std::to_string(s.c) + " m=" + std::to_string(s.m) + blowups(s.blowup);
            else if constexpr (std::is_same_v<S, QSpec>) {
                std::string out = "Q_m with c=" + std::to_string(s.c) + " m=" + std::to_string(s.m)
                    + " s=" + std::to_string(s.s) + " t=" + std::to_string(s.t) + blowups(s.blowup);
                for (const auto & r : s.reversals)
                    out += " reversal case " + std::to_string(static_cast<int>(r.which)) + " (" + std::to_string(r.flipped)
                        + " flipped)";
                return out;
            }
            else {
                std::string out = "H with c=" + std::to_string(s.c) + " i=" + std::to_string(s.i) + " sizes";
                for (std::size_t j = 0; j < s.sizes.size(); ++j)
                    out += " |V_" + std::to_string(j + 2) + "|=" + std::to_string(s.sizes[j]);
                return out;
            }
        },
        spec);
}

} // namespace mpt
