#include "rankcmp/types.hpp"

#include <cstdio>

namespace rankcmp {

const char* to_string(IndicatorKind k) {
    switch (k) {
        case IndicatorKind::numeric: return "numeric";
        case IndicatorKind::class_a_to_e: return "class_A_to_E";
        case IndicatorKind::rank: return "rank";
    }
    return "?";
}

std::optional<IndicatorKind> indicator_kind_from_string(const std::string& s) {
    if (s == "numeric") return IndicatorKind::numeric;
    if (s == "class_A_to_E") return IndicatorKind::class_a_to_e;
    if (s == "rank") return IndicatorKind::rank;
    return std::nullopt;
}

char to_char(PerfClass c) {
    switch (c) {
        case PerfClass::A: return 'A';
        case PerfClass::B: return 'B';
        case PerfClass::C: return 'C';
        case PerfClass::D: return 'D';
        case PerfClass::E: return 'E';
    }
    return '?';
}

std::optional<PerfClass> perf_class_from_char(char c) {
    switch (c) {
        case 'A': return PerfClass::A;
        case 'B': return PerfClass::B;
        case 'C': return PerfClass::C;
        case 'D': return PerfClass::D;
        case 'E': return PerfClass::E;
        default: return std::nullopt;
    }
}

const IndicatorDef* SystemManifest::find_indicator(const std::string& name) const {
    for (const auto& ind : indicators)
        if (ind.name == name) return &ind;
    return nullptr;
}

std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace rankcmp
