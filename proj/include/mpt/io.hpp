#pragma once

#include <mpt/cycles.hpp>
#include <mpt/digraph.hpp>
#include <mpt/harness.hpp>
#include <mpt/recognizer.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace mpt {

inline constexpr const char * document_version = "1";

/// TournamentDocument: {"version", "c", "parts", "arcs"} with 0-based ids
/// and arcs sorted.
[[nodiscard]] auto to_json(const MultipartiteTournament & d) -> std::string;

/// Throws ParseError for malformed documents and the build errors for
/// invalid tournaments.
[[nodiscard]] auto from_json(const std::string & text) -> MultipartiteTournament;

[[nodiscard]] auto tournament_to_json(const MultipartiteTournament & d) -> nlohmann::json;
[[nodiscard]] auto tournament_from_json(const nlohmann::json & doc) -> MultipartiteTournament;

[[nodiscard]] auto spec_to_json(const FamilySpec & spec) -> nlohmann::json;
[[nodiscard]] auto spec_from_json(const nlohmann::json & doc) -> FamilySpec;

[[nodiscard]] auto provenance_to_json(const Provenance & source) -> nlohmann::json;
[[nodiscard]] auto provenance_from_json(const nlohmann::json & doc) -> Provenance;

[[nodiscard]] auto result_to_json(const RecognitionResult & result) -> nlohmann::json;
[[nodiscard]] auto result_from_json(const nlohmann::json & doc) -> RecognitionResult;

[[nodiscard]] auto check_to_json(const CheckRecord & check) -> nlohmann::json;

/// Timings are left out when include_timings is false, so that repeated
/// runs serialize byte for byte identically.
[[nodiscard]] auto report_to_json(const CampaignReport & report, bool include_timings = true) -> nlohmann::json;
[[nodiscard]] auto report_from_json(const nlohmann::json & doc) -> CampaignReport;

/// DOT digraph with one cluster per part and the cycle's arcs highlighted.
[[nodiscard]] auto to_dot(const MultipartiteTournament & d, const std::optional<CycleWitness> & highlight = std::nullopt)
    -> std::string;

/// Human-readable parameter line, 1-based as in the family definitions.
[[nodiscard]] auto describe(const FamilySpec & spec) -> std::string;

} // namespace mpt
