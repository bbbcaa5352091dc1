#pragma once

#include <iosfwd>
#include <string>

#include "wlab/surfaces/model.hpp"

namespace wlab::surfaces {

// Polar sampling grid around a chart center. rings counts radial intervals,
// so (rings+1)*sectors vertices are emitted, ring-major.
struct PolarGrid {
    Complex center = 0.0;
    double r_min = 0.1;
    double r_max = 1.0;
    int rings = 16;
    int sectors = 32;
    bool geometric = false;

    double radius(int i) const;
    Complex point(int i, int j) const;
};

struct MeshStats {
    int vertices = 0;
    int triangles = 0;
    double diameter = 0.0;
};

// ASCII OBJ: "v x y z" lines then "f i j k" (1-based), LF endings, quads
// split into two triangles, deterministic ring-major vertex order.
MeshStats export_mesh(const ImmersionModel& model, const PolarGrid& grid, std::ostream& os);
MeshStats export_mesh(const ImmersionModel& model, const PolarGrid& grid,
                      const std::string& path);

} // namespace wlab::surfaces
