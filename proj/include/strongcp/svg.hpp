#pragma once

#include <string>

#include "strongcp/geometry.hpp"
#include "strongcp/polytope.hpp"

namespace strongcp {

/// SVG scatter of a planar instance: one marker per distinct location (with
/// its multiplicity), each constructed halfspace boundary, region E shaded,
/// and the chosen point highlighted. Output depends only on the inputs.
std::string render_svg(const PointSetd& points, const OrientationFamilyd& family,
                       const CenterpointCertificate<double>& certificate);

}  // namespace strongcp
