#pragma once

#include <optional>
#include <string>

namespace rankcmp {

// True iff `code` is an assigned ISO 3166-1 alpha-2 code (uppercase).
bool is_iso_alpha2(const std::string& code);

// Resolve a country cell to an alpha-2 code. Accepts an alpha-2 code
// directly (case-insensitive) or an informal country name from the bundled
// alias table ("Great Britain" -> "GB"). Returns nullopt when unknown.
std::optional<std::string> resolve_country(const std::string& input);

// Display name for a known alpha-2 code; the code itself when unlisted.
std::string country_display_name(const std::string& code);

}  // namespace rankcmp
