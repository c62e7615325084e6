#pragma once

#include "json.hpp"
#include "normex/explanation.hpp"
#include "normex/extension.hpp"
#include "normex/parser.hpp"
#include "normex/semantics.hpp"

namespace normex {

using Json = nlohmann::ordered_json;

Json literals_json(const std::set<Literal>& lits);
Json validation_json(const std::vector<Violation>& violations);
Json extension_json(const Extension& e);
Json arguments_json(const Framework& fw);
Json justification_json(const Framework& fw, const JustificationResult& jr);
Json explanations_json(const Framework& fw, const Literal& target,
                       ExplanationMode mode, const std::vector<Explanation>& es);
// Pinned report schema: target, explanation, mode, stable, supersets_checked,
// counterexample.
Json stability_json(const Framework& fw, const Explanation& e,
                    const StabilityReport& r);
Json model_json(const SubModel& m);
Json parse_errors_json(const std::vector<ParseError>& errors);

// Display names for an explanation's canonical ids, sorted A1 < A2 < ...
std::vector<std::string> display_ids(const Framework& fw, const Explanation& e);

}  // namespace normex
