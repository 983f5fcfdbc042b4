#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rankcmp {

enum class IndicatorKind { numeric, class_a_to_e, rank };

// U-Multirank style performance classes, A (excellent) .. E (weak).
enum class PerfClass : int { A = 5, B = 4, C = 3, D = 2, E = 1 };

const char* to_string(IndicatorKind k);
std::optional<IndicatorKind> indicator_kind_from_string(const std::string& s);

char to_char(PerfClass c);
std::optional<PerfClass> perf_class_from_char(char c);

// One cell of a data table: numeric or a performance class. Missing cells
// are simply absent from the containing map.
using CellValue = std::variant<double, PerfClass>;

struct IndicatorDef {
    std::string name;
    IndicatorKind kind = IndicatorKind::numeric;
    bool higher_is_better = true;
};

struct SystemManifest {
    std::string system_id;
    std::string display_name;
    int year = 0;
    std::vector<IndicatorDef> indicators;

    const IndicatorDef* find_indicator(const std::string& name) const;
};

struct InstitutionRecord {
    std::string local_id;
    std::string raw_name;
    std::string country;  // ISO 3166-1 alpha-2
    std::map<std::string, CellValue> values;  // indicator name -> value
};

struct RankingDataset {
    SystemManifest manifest;
    std::vector<InstitutionRecord> records;
};

struct IndicatorRef {
    std::string system_id;
    std::string name;

    bool operator==(const IndicatorRef&) const = default;
    auto operator<=>(const IndicatorRef&) const = default;
};

// One indicator's values over canonical institutions. Missing institutions
// are absent from the map; numeric values are finite by construction.
struct IndicatorSeries {
    IndicatorRef ref;
    IndicatorKind kind = IndicatorKind::numeric;
    bool higher_is_better = true;
    std::map<std::string, CellValue> values;  // canonical_id -> value

    std::size_t size() const { return values.size(); }
};

// FNV-1a 64-bit, used for stable canonical ids and provenance hashes.
std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);

}  // namespace rankcmp
