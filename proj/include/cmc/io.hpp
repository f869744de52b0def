#pragma once

// Artifact emitters and input loaders. All float formatting is %.17g so
// artifacts are byte-stable and round-trip exactly. JSON output follows
// the library convention of serializing non-finite numbers as null.

#include <string>
#include <vector>

#include "cmc/criteria.hpp"
#include "cmc/curves.hpp"
#include "cmc/mesh.hpp"
#include "cmc/profiles.hpp"
#include "cmc/radial.hpp"
#include "cmc/solver.hpp"

namespace cmc {

std::string format_g(double v);  // %.17g

// Content builders (pure).
std::string obj_string(const SurfaceMesh& mesh);
std::string mesh_csv(const SurfaceMesh& mesh);       // x,y,z vertex rows
std::string mesh_json(const SurfaceMesh& mesh);
std::string csv_string(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows);
// Columns: s, height, phi, flux_residual.
std::string profile_csv(const ProfileParams& params, double s_max, int n);
std::string criteria_report_json(const CriteriaReport& report);
std::string solution_csv(const FieldSolution& field);         // x,y,u rows
std::string solution_header_json(const FieldSolution& field); // residual_inf, iters, converged
std::string solution_json(const FieldSolution& field);        // header + rows
std::string radial_csv(const RadialSolution& sol);            // rho,u,phi rows
std::string radial_json(const RadialSolution& sol);

// File sinks. write_obj/write_csv are thin wrappers over the builders.
void write_file(const std::string& path, const std::string& content);
void write_obj(const SurfaceMesh& mesh, const std::string& path);
void write_csv(const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows,
               const std::string& path);

// Loaders. Domain file: {"outer": curve, "inner": curve, "r": num|null,
// "R": num|null}; a curve is [[x,y],...] or {"vertices": [[x,y],...]}.
AnnularDomain load_domain_json(const std::string& path);

struct SolverConfig {
    double spacing = 0.05;
    SolveOptions opts;
};
// Config file: {"spacing":, "tol":, "max_newton":, "damping":}, all optional.
SolverConfig load_solver_config(const std::string& path);

}  // namespace cmc
