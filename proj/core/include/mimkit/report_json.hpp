#pragma once

#include <nlohmann/json.hpp>

#include "mimkit/transforms.hpp"
#include "mimkit/verification.hpp"

namespace mimkit {

// JSON-lines record shapes used by the command line tool.

void to_json(nlohmann::json& j, const BoundReport& r);
/// Adds "seq"; parse failures become {"seq", "error"}.
void to_json(nlohmann::json& j, const BoundRecord& r);
/// Tagged with "summary": true so it can be told apart from records.
void to_json(nlohmann::json& j, const BoundSummary& s);
void to_json(nlohmann::json& j, const RetargetCountReport& r);
void to_json(nlohmann::json& j, const TriangleFreeReport& r);
void to_json(nlohmann::json& j, const TwinCountReport& r);
void to_json(nlohmann::json& j, const Lemma6Report& r);
void to_json(nlohmann::json& j, const ExtremalFamilyReport& r);
void to_json(nlohmann::json& j, const RetargetResult& r);

}  // namespace mimkit
