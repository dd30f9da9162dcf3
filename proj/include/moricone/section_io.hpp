#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "moricone/cone.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// Fixed column layout: cone,ray_a,ray_b with one row per boundary ray, in
// the stored ray order, nef block first, then mor, then psef. Ray (a, b)
// stands for the class a*lambda - b*delta.
inline std::string section_csv(const SectionRays& section) {
    std::string out = "cone,ray_a,ray_b\n";
    auto emit = [&out](const char* cone,
                       const std::vector<std::pair<Int, Int>>& rays) {
        for (const auto& [a, b] : rays) {
            out += cone;
            out += ',';
            out += a.str();
            out += ',';
            out += b.str();
            out += '\n';
        }
    };
    emit("nef", section.nef);
    emit("mor", section.mor);
    emit("psef", section.psef);
    return out;
}

namespace detail {

struct ScreenPoint {
    double x = 0;
    double y = 0;
};

// Two decimal places, fixed format, so output is byte-stable.
inline std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

// Ray (a, b) is the class a*lambda - b*delta; in (lambda, delta) plane
// coordinates that is the direction (a, -b). Screen y grows downward, so
// positive delta points down and the psef wedge opens upward from the
// lambda axis.
inline ScreenPoint ray_endpoint(const std::pair<Int, Int>& ray, double apex_x,
                                double apex_y, double radius) {
    const double dx = static_cast<double>(ray.first);
    const double dy = -static_cast<double>(ray.second);
    const double norm = std::sqrt(dx * dx + dy * dy);
    return {apex_x + radius * dx / norm, apex_y - radius * dy / norm};
}

}  // namespace detail

// Self-contained schematic of the nested cone sections. All geometry is
// decimal; the exact ray data rides along in data-* attributes.
inline std::string section_svg(const SectionRays& section,
                               const Rat& nef_bound,
                               const std::string& slope_label) {
    const double apex_x = 96;
    const double apex_y = 330;
    const double radius = 300;

    struct Wedge {
        const char* name;
        const char* fill;
        const char* stroke;
        const std::vector<std::pair<Int, Int>>* rays;
    };
    const std::vector<Wedge> wedges = {
        {"psef", "#f2e2c4", "#b08a3e", &section.psef},
        {"mor", "#d8e6f2", "#396ea5", &section.mor},
        {"nef", "#dcecd8", "#3f7d3a", &section.nef},
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"480\" viewBox=\"0 0 640 480\"";
    svg += " data-genus=\"" + std::to_string(section.genus) + "\"";
    svg += " data-nef-bound=\"" + rat_str(nef_bound) + "\"";
    svg += " data-slope=\"" + slope_label + "\">\n";
    svg += "  <rect width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";

    // Axes: lambda to the right, delta upward on screen.
    svg += "  <line x1=\"" + detail::coord(apex_x - 60) + "\" y1=\"" +
           detail::coord(apex_y) + "\" x2=\"620.00\" y2=\"" +
           detail::coord(apex_y) + "\" stroke=\"#999999\" "
           "stroke-width=\"1\"/>\n";
    svg += "  <line x1=\"" + detail::coord(apex_x) + "\" y1=\"460.00\" x2=\"" +
           detail::coord(apex_x) +
           "\" y2=\"20.00\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    svg += "  <text x=\"600.00\" y=\"" + detail::coord(apex_y + 20) +
           "\" font-family=\"sans-serif\" font-size=\"16\" "
           "fill=\"#555555\">\xce\xbb</text>\n";
    svg += "  <text x=\"" + detail::coord(apex_x - 24) +
           "\" y=\"36.00\" font-family=\"sans-serif\" font-size=\"16\" "
           "fill=\"#555555\">\xce\xb4</text>\n";

    for (const Wedge& wedge : wedges) {
        if (wedge.rays->empty()) {
            continue;
        }
        const auto first =
            detail::ray_endpoint((*wedge.rays)[0], apex_x, apex_y, radius);
        const auto second =
            detail::ray_endpoint((*wedge.rays)[1], apex_x, apex_y, radius);
        svg += "  <path d=\"M " + detail::coord(apex_x) + " " +
               detail::coord(apex_y) + " L " + detail::coord(second.x) + " " +
               detail::coord(second.y) + " A " + detail::coord(radius) + " " +
               detail::coord(radius) + " 0 0 0 " + detail::coord(first.x) +
               " " + detail::coord(first.y) + " Z\" fill=\"" + wedge.fill +
               "\" fill-opacity=\"0.85\" stroke=\"none\"/>\n";
        for (const auto& ray : *wedge.rays) {
            const auto end =
                detail::ray_endpoint(ray, apex_x, apex_y, radius);
            svg += "  <line x1=\"" + detail::coord(apex_x) + "\" y1=\"" +
                   detail::coord(apex_y) + "\" x2=\"" + detail::coord(end.x) +
                   "\" y2=\"" + detail::coord(end.y) + "\" stroke=\"" +
                   wedge.stroke + "\" stroke-width=\"2\" data-cone=\"" +
                   wedge.name + "\" data-ray-a=\"" + ray.first.str() +
                   "\" data-ray-b=\"" + ray.second.str() + "\"/>\n";
        }
        const auto label =
            detail::ray_endpoint((*wedge.rays)[1], apex_x, apex_y,
                                 radius * 0.62);
        svg += "  <text x=\"" + detail::coord(label.x + 8) + "\" y=\"" +
               detail::coord(label.y - 6) +
               "\" font-family=\"sans-serif\" font-size=\"15\" fill=\"" +
               wedge.stroke + "\">" + wedge.name + "</text>\n";
    }

    svg += "  <circle cx=\"" + detail::coord(apex_x) + "\" cy=\"" +
           detail::coord(apex_y) + "\" r=\"3\" fill=\"#333333\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace moricone
