#pragma once

#include <mpt/digraph.hpp>
#include <mpt/families.hpp>

#include <string_view>
#include <variant>
#include <vector>

namespace mpt {

/// Maximal twin classes (same part, identical in- and out-neighbourhoods)
/// and the tournament they induce on one representative each.
struct TwinQuotient {
    std::vector<std::vector<Vertex>> classes; ///< ordered by minimum vertex
    std::vector<int> class_of;
    MultipartiteTournament quotient;

    /// Blows the quotient back up by class sizes, with class members in
    /// their original ids; equals the input tournament.
    [[nodiscard]] auto expand() const -> MultipartiteTournament;
};

[[nodiscard]] auto twin_quotient(const MultipartiteTournament & d) -> TwinQuotient;

enum class Verdict { NotMember, MemberOfW, MemberOfQ, MemberOfH };

[[nodiscard]] auto to_string(Verdict v) -> std::string_view;

struct RecognitionResult {
    Verdict verdict = Verdict::NotMember;
    std::variant<std::monostate, WSpec, QSpec, HSpec> spec;
    /// correspondence[template vertex] = input vertex; empty for NotMember.
    std::vector<Vertex> correspondence;

    [[nodiscard]] auto is_member() const -> bool { return verdict != Verdict::NotMember; }
};

struct RecognizerOptions {
    HRange h_range = HRange::Literal;
};

[[nodiscard]] auto recognize_H(const MultipartiteTournament & d, const RecognizerOptions & options = {})
    -> RecognitionResult;
[[nodiscard]] auto recognize_Q(const MultipartiteTournament & d) -> RecognitionResult;
[[nodiscard]] auto recognize_W(const MultipartiteTournament & d) -> RecognitionResult;

/// recognize_H, then recognize_Q.
[[nodiscard]] auto recognize(const MultipartiteTournament & d, const RecognizerOptions & options = {})
    -> RecognitionResult;

/// Regenerates the template named by `result` and checks that the
/// correspondence maps it onto d arc for arc.
[[nodiscard]] auto verify_certificate(const MultipartiteTournament & d, const RecognitionResult & result) -> bool;

} // namespace mpt
