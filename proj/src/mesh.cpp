#include "cmc/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"

namespace cmc {
namespace {

constexpr double kDegenerateArea = 1e-14;

void push_tri(SurfaceMesh& m, int a, int b, int c) {
    const auto& A = m.vertices[a];
    const auto& B = m.vertices[b];
    const auto& C = m.vertices[c];
    const double ux = B[0] - A[0], uy = B[1] - A[1], uz = B[2] - A[2];
    const double vx = C[0] - A[0], vy = C[1] - A[1], vz = C[2] - A[2];
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    if (0.5 * std::sqrt(cx * cx + cy * cy + cz * cz) < kDegenerateArea) return;
    m.faces.push_back({a, b, c});
}

}  // namespace

SurfaceMesh mesh_rotational(const ProfileParams& params, const DiskPoint& center,
                            int n_radial, int n_angular, bool reflect,
                            double s_cap) {
    if (n_radial < 2 || n_angular < 3)
        throw InputError("mesh_rotational: need n_radial >= 2 and n_angular >= 3");
    if (!(params.H >= 0.0) || !std::isfinite(params.H))
        throw InputError("mesh_rotational: H must be finite and >= 0");
    const bool horo = params.r == kInf;
    if (!horo && !(params.r > 0.0))
        throw InputError("mesh_rotational: need r > 0 (or +inf)");
    const double s_max = std::min(t_cutoff(params.H), s_cap);
    if (!std::isfinite(s_max) || !(s_max > 0.0))
        throw InputError("mesh_rotational: profile domain unbounded; pass a finite s_cap > 0");

    double theta_w = 0.0;
    double offset0 = 0.0;
    Horocycle neck;
    if (horo) {
        const double cn = std::hypot(center.x, center.y);
        if (!(cn > 0.0))
            throw InputError("mesh_rotational: r = +inf needs a nonzero center "
                             "(its direction fixes the ideal point)");
        validate_point(center);
        neck.ideal_x = center.x / cn;
        neck.ideal_y = center.y / cn;
        neck.offset = 0.0;
        offset0 = -distance_to_horocycle(center, neck);
        theta_w = std::atan2(neck.ideal_y, neck.ideal_x);
    }

    SurfaceMesh mesh;
    std::vector<double> height(n_radial);
    const double psi_half = 0.8 * M_PI;
    auto ring_vertex = [&](double s, int j) -> DiskPoint {
        if (!horo)
            return circle_point({center, params.r + s},
                                2.0 * M_PI * j / n_angular);
        Horocycle ring{neck.ideal_x, neck.ideal_y, offset0 - s};
        const EuclideanCircle ec = horocycle_to_euclidean(ring);
        const double psi =
            theta_w + M_PI - psi_half + 2.0 * psi_half * j / (n_angular - 1);
        return {ec.cx + ec.radius * std::cos(psi),
                ec.cy + ec.radius * std::sin(psi)};
    };

    for (int i = 0; i < n_radial; ++i) {
        const double s = s_max * i / (n_radial - 1);
        height[i] = horo ? horonod_eval(params.H, s) : hnod_eval(params, s);
        for (int j = 0; j < n_angular; ++j) {
            const DiskPoint p = ring_vertex(s, j);
            mesh.vertices.push_back({p.x, p.y, height[i]});
        }
    }
    const int primary = n_radial * n_angular;
    if (reflect) {
        for (int i = 1; i < n_radial; ++i)
            for (int j = 0; j < n_angular; ++j) {
                const auto& v = mesh.vertices[i * n_angular + j];
                mesh.vertices.push_back({v[0], v[1], -v[2]});
            }
    }

    auto vidx = [&](int i, int j) { return i * n_angular + j; };
    auto midx = [&](int i, int j) {
        return i == 0 ? vidx(0, j) : primary + (i - 1) * n_angular + j;
    };
    const int j_count = horo ? n_angular - 1 : n_angular;
    for (int i = 0; i + 1 < n_radial; ++i) {
        for (int j = 0; j < j_count; ++j) {
            const int jn = (j + 1) % n_angular;
            const int a = vidx(i, j), b = vidx(i, jn);
            const int c = vidx(i + 1, jn), d = vidx(i + 1, j);
            push_tri(mesh, a, b, c);
            push_tri(mesh, a, c, d);
            if (reflect) {
                const int am = midx(i, j), bm = midx(i, jn);
                const int cm = midx(i + 1, jn), dm = midx(i + 1, j);
                push_tri(mesh, am, cm, bm);
                push_tri(mesh, am, dm, cm);
            }
        }
    }
    return mesh;
}

SurfaceMesh mesh_graph(const FieldSolution& field) {
    if (!field.converged)
        throw InputError("mesh_graph: field is not converged");
    const DiskGrid& g = field.grid;
    SurfaceMesh mesh;
    mesh.vertices.reserve(g.nodes.size());
    for (size_t k = 0; k < g.nodes.size(); ++k)
        mesh.vertices.push_back({g.nodes[k].p.x, g.nodes[k].p.y, field.u[k]});

    std::vector<std::pair<int, int>> cells;
    cells.reserve(4 * g.n_interior);
    for (int k = 0; k < g.n_interior; ++k) {
        const GridNode& n = g.nodes[k];
        cells.emplace_back(n.i, n.j);
        cells.emplace_back(n.i - 1, n.j);
        cells.emplace_back(n.i, n.j - 1);
        cells.emplace_back(n.i - 1, n.j - 1);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    for (const auto& [ci, cj] : cells) {
        int corner[4];
        int found = 0;
        const int di[4] = {0, 1, 1, 0};  // cyclic CCW cell corners
        const int dj[4] = {0, 0, 1, 1};
        int present[4];
        for (int t = 0; t < 4; ++t) {
            const auto it = g.lattice.find(lattice_key(ci + di[t], cj + dj[t]));
            corner[t] = (it == g.lattice.end()) ? -1 : it->second;
            if (corner[t] >= 0) present[found++] = corner[t];
        }
        if (found == 4) {
            push_tri(mesh, corner[0], corner[1], corner[2]);
            push_tri(mesh, corner[0], corner[2], corner[3]);
        } else if (found == 3) {
            push_tri(mesh, present[0], present[1], present[2]);
        }
    }
    return mesh;
}

void check_mesh(const SurfaceMesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& f : mesh.faces)
        for (int idx : f)
            if (idx < 0 || idx >= n)
                throw InputError("check_mesh: face index out of range");
}

}  // namespace cmc
