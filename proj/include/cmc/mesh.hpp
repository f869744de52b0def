#pragma once

// Surface mesh emitters: rotational profile surfaces (circle or horocycle
// level sets, optionally reflected into the bigraph) and graph surfaces
// over solver grids. Coordinates are raw disk-model (x, y) plus height;
// hyperbolic distances are NOT preserved by this embedding.

#include <array>
#include <vector>

#include "cmc/profiles.hpp"
#include "cmc/solver.hpp"

namespace cmc {

struct SurfaceMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces;
};

// Rings of constant profile parameter s in [0, s_max], where s_max =
// min(t_cutoff(H), s_cap). Finite r: hyperbolic circles of radius r + s
// about `center`. r = +inf: horocycle arcs toward the ideal point
// center/|center|, the neck horocycle passing through `center` itself.
// reflect = true glues the sheet with its height-negated copy along the
// neck ring.
SurfaceMesh mesh_rotational(const ProfileParams& params, const DiskPoint& center,
                            int n_radial, int n_angular, bool reflect,
                            double s_cap = kInf);

// Grid nodes with u as height; faces from complete interior lattice cells
// plus the 3-corner cells along the boundary. Refuses unconverged fields.
SurfaceMesh mesh_graph(const FieldSolution& field);

void check_mesh(const SurfaceMesh& mesh);  // index validity, used by tests

}  // namespace cmc
