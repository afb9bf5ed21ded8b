#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ucsc/checkers.hpp"
#include "ucsc/enumeration.hpp"
#include "ucsc/family.hpp"
#include "ucsc/search.hpp"

namespace ucsc {

// Family JSON: {"n": <int>, "sets": [[<elements>...], ...]}
nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

// Verdict JSON: conjecture/status/t_value/m/n plus witnesses (Holds),
// required+achieved (Fails) or reason (NotApplicable).
nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json finding_to_json(const Finding& f);

nlohmann::json checkpoint_to_json(const EnumCheckpoint& c);
EnumCheckpoint checkpoint_from_json(const nlohmann::json& j);

// Auto-detects the text family format vs the JSON object form.
Family parse_family_auto(const std::string& text);

}  // namespace ucsc
