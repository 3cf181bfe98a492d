#pragma once

#include <map>
#include <string>

#include "geometry.hpp"

namespace wrac {

struct RenderOptions {
    Rat margin = Rat(2);           // viewBox padding around the bounding box
    Rat font_fit = Rat(7, 10);     // label font size per unit of box height
    bool contact_overlay = false;  // draw every contact segment as a line
};

// SVG 1.1 subset (rect, text, line, title only). The y axis flips to screen
// coordinates; each box gets a rect plus a centered label, defaulting to the
// box id when the map has no entry. Output bytes are deterministic. Needs an
// overlap-free representation.
std::string to_svg(const Representation& rep,
                   const std::map<std::string, std::string>& labels = {},
                   const RenderOptions& options = {});

}  // namespace wrac
