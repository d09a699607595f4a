#pragma once

// Text format for knowledge bases, queries and MBoxes.
//
//   @tbox
//   A(X) -> D(X).
//   A(X), B(X) -> !.
//   @abox
//   A(a). B(a).
//
// '%' starts a line comment. Identifiers are ASCII letters, digits and '_'.
// An identifier followed by '(' is a predicate; other identifiers are
// variables when uppercase-initial and constants otherwise.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ita/kb.hpp"

namespace ita {

/// Throws ParseError (with position) on malformed text, arity clashes and
/// non-ground assertions.
KnowledgeBase parse_kb(std::string_view text);

/// Comma-separated atom list, optional trailing '.'.
Query parse_query(std::string_view text);

/// `[{A(a), B(a)}, {C(a)}]`; `[]` is the empty MBox.
MBox parse_mbox(std::string_view text);

std::string serialize_mbox(const MBox& m);

/// Text form accepted by parse_kb. Requires a single-ABox KB.
std::string serialize_kb(const KnowledgeBase& kb);
std::string serialize_tbox(const TBox& tbox);

/// {"modifier": name-or-null, "aboxes": [[atom, ...], ...]}
nlohmann::json mbox_to_json(const MBox& m,
                            std::optional<std::string> modifier = std::nullopt);

nlohmann::json abox_to_json(const ABox& a);

}  // namespace ita
