#include "wlab/surfaces/mesh.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab::surfaces {

double PolarGrid::radius(int i) const {
    if (rings == 0) return r_min;
    double t = double(i) / double(rings);
    if (geometric) return r_min * std::pow(r_max / r_min, t);
    return r_min + (r_max - r_min) * t;
}

Complex PolarGrid::point(int i, int j) const {
    double th = 2.0 * kPi * j / sectors;
    return center + radius(i) * Complex(std::cos(th), std::sin(th));
}

MeshStats export_mesh(const ImmersionModel& model, const PolarGrid& grid, std::ostream& os) {
    if (grid.rings < 1 || grid.sectors < 3)
        throw UsageError("mesh grid needs rings >= 1 and sectors >= 3");

    std::vector<Vec3> verts;
    verts.reserve((grid.rings + 1) * grid.sectors);
    for (int i = 0; i <= grid.rings; ++i)
        for (int j = 0; j < grid.sectors; ++j) verts.push_back(model.jet(grid.point(i, j)).phi);

    MeshStats stats;
    stats.vertices = static_cast<int>(verts.size());
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            stats.diameter = std::max(stats.diameter, (verts[a] - verts[b]).norm());

    os.precision(17);
    for (const auto& v : verts) os << "v " << v(0) << " " << v(1) << " " << v(2) << "\n";

    auto vid = [&](int i, int j) { return i * grid.sectors + (j % grid.sectors) + 1; };
    for (int i = 0; i < grid.rings; ++i) {
        for (int j = 0; j < grid.sectors; ++j) {
            os << "f " << vid(i, j) << " " << vid(i + 1, j) << " " << vid(i + 1, j + 1) << "\n";
            os << "f " << vid(i, j) << " " << vid(i + 1, j + 1) << " " << vid(i, j + 1) << "\n";
            stats.triangles += 2;
        }
    }
    return stats;
}

MeshStats export_mesh(const ImmersionModel& model, const PolarGrid& grid,
                      const std::string& path) {
    std::ofstream os(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!os) throw UsageError("cannot open mesh output file: " + path);
    return export_mesh(model, grid, os);
}

} // namespace wlab::surfaces
