#pragma once

#include <nlohmann/json.hpp>

#include "grakit/series.hpp"

namespace grakit {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "grakit 0.1.0";

// JSON fragments for the machine report format. Series coefficients are
// decimal strings: they outgrow 64-bit integers quickly.
nlohmann::json json_of_betti(const BettiTable& B);
nlohmann::json json_of_biseries(const TruncatedBiseries& S);
nlohmann::json json_of_laurent(const LaurentPoly& h);
nlohmann::json json_of_leq(const LeqVerdict& v);
nlohmann::json json_of_koszul(const KoszulVerdict& v);

// Deterministic payload -> final report bytes. The timestamp lives in a
// single meta field so byte comparisons can mask it.
std::string render_json(nlohmann::json doc, bool with_timestamp);
std::string render_table(const nlohmann::json& doc);

// Drop meta.timestamp; used when comparing cached and fresh reports.
nlohmann::json strip_timestamp(nlohmann::json doc);

}  // namespace grakit
