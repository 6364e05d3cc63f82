#pragma once

#include "urigid/configuration.hpp"
#include "urigid/construction.hpp"
#include "urigid/rigidity.hpp"

#include <optional>
#include <string>

namespace urigid {

/// SVG 1.1 drawing of a framework on a 640x640 canvas.
///
/// With a stress, edges with positive weight are thin, negative ones thick and
/// near-zero ones dashed; without one, all edges are plain. Fan centers and
/// central-edge endpoints are filled black, fan neighbors grey. 3D frameworks
/// are projected along the central edge, or along z when there is no fan.
std::string render_svg(const Framework& fw, const std::optional<FanDecomposition>& fan = std::nullopt,
                       const std::optional<Stress>& stress = std::nullopt);

}  // namespace urigid
