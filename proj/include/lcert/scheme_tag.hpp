#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lcert {

enum class SchemeTag {
    ProperInterval,
    Chordal,
    Interval,
    ProperCircularArc,
    CircularArc,
    Trapezoid,
    Permutation,
};

inline constexpr std::array<SchemeTag, 7> kAllSchemes = {
    SchemeTag::ProperInterval,    SchemeTag::Chordal,     SchemeTag::Interval,
    SchemeTag::ProperCircularArc, SchemeTag::CircularArc, SchemeTag::Trapezoid,
    SchemeTag::Permutation,
};

inline std::string_view scheme_name(SchemeTag t) {
    switch (t) {
        case SchemeTag::ProperInterval: return "proper-interval";
        case SchemeTag::Chordal: return "chordal";
        case SchemeTag::Interval: return "interval";
        case SchemeTag::ProperCircularArc: return "proper-circular-arc";
        case SchemeTag::CircularArc: return "circular-arc";
        case SchemeTag::Trapezoid: return "trapezoid";
        case SchemeTag::Permutation: return "permutation";
    }
    return "?";
}

inline std::optional<SchemeTag> parse_scheme(std::string_view s) {
    for (auto t : kAllSchemes)
        if (scheme_name(t) == s) return t;
    return std::nullopt;
}

}  // namespace lcert
