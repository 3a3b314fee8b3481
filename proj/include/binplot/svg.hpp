#pragma once

#include <ostream>
#include <string>

#include "binplot/scene.hpp"

namespace binplot {

/// Fixed three-decimal formatting, locale independent; never "-0.000".
std::string format_number(double value);

std::string xml_escape(std::string_view text);

/// Element id of a bin fill. Single-panel scenes use "bin-<b>", multi-panel
/// scenes prefix the panel: "panel-<p>-bin-<b>".
std::string bin_element_id(const Scene& scene, int panel, BinIndex bin);

/// Standalone SVG 1.1 document. Output is a pure function of the scene.
std::string render_svg(const Scene& scene);

/// Throws Error{Io} if the sink fails.
void render_svg(const Scene& scene, std::ostream& out);

}  // namespace binplot
