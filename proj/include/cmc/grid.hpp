#pragma once

// Shortley-Weller finite-difference grid over an annular domain: a uniform
// Cartesian lattice whose boundary-crossing arms are cut at the true
// boundary curves (exactly, for circle pairs).

#include <unordered_map>
#include <vector>

#include "cmc/curves.hpp"

namespace cmc {

struct Arm {
    int nb = -1;      // neighbor node index; -1 = absent
    double len = 0.0; // Euclidean arm length
};

struct GridNode {
    DiskPoint p;
    bool interior = false;
    int i = 0, j = 0;        // lattice coordinates (interior nodes only)
    int boundary_curve = -1; // 0 = outer, 1 = inner (boundary nodes only)
    Arm east, west, north, south;
};

struct DiskGrid {
    std::vector<GridNode> nodes; // interior nodes first, then boundary
    int n_interior = 0;
    double spacing = 0.0;
    double lambda_max = 0.0; // max conformal factor over all nodes
    std::unordered_map<long long, int> lattice; // (i,j) -> interior node index
};

inline long long lattice_key(int i, int j) {
    return (static_cast<long long>(i) << 32) ^
           static_cast<unsigned int>(j);
}

// Builds the lattice, classifies interior points, and cuts the four arms
// of every interior node at the boundary. Throws InputError when the
// spacing does not resolve the annulus gap with at least 4 cells.
DiskGrid build_grid(const AnnularDomain& domain, double spacing);

}  // namespace cmc
