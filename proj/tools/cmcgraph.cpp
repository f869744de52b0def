// cmcgraph: profiles, existence criteria, solvers, slab bounds, and mesh
// export for CMC graphs over annular domains in the hyperbolic plane.
//
// Exit codes: 0 success; 2 criteria verdict false; 3 solver non-convergence
// (including "no rotational graph exists"); 4 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "cmc/barriers.hpp"
#include "cmc/criteria.hpp"
#include "cmc/curves.hpp"
#include "cmc/errors.hpp"
#include "cmc/io.hpp"
#include "cmc/mesh.hpp"
#include "cmc/numerics.hpp"
#include "cmc/profiles.hpp"
#include "cmc/radial.hpp"
#include "cmc/solver.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        cmc::write_file(out_path, content);
}

ordered_json report_json(const cmc::CriteriaReport& rep) {
    return ordered_json::parse(cmc::criteria_report_json(rep));
}

struct ProfileArgs {
    double H = 0.0, r = 1.0, s_max = -1.0;
    int n = 101;
    std::string out, format = "csv";
};

struct CriteriaArgs {
    double H = 0.0, h = 0.0;
    double r = 0.0, R = 0.0, d = 0.0, diam_beta = 0.0;
    std::string domain, out, format = "json";
    bool have_r = false, have_R = false, have_d = false, have_diam = false;
};

struct RadialArgs {
    double H = 0.0, rho_in = 1.0, rho_out = 2.0, h = 0.0;
    int n = 129;
    std::string out, format = "csv";
};

struct DiskArgs {
    double H = 0.0, h = 0.0, r = 1.0, R = 2.0;
    double spacing = -1.0, tol = -1.0;
    std::string domain, config, out, format = "csv";
};

struct BoundsArgs {
    double H = 0.0, r = -1.0;
    std::string out, format = "json";
};

struct MeshArgs {
    std::string kind = "rotational";
    double H = 0.0, r = 1.0, h = 0.0, R = 2.0;
    double cx = 0.0, cy = 0.0, s_cap = 2.0, spacing = 0.05, tol = -1.0;
    int n_radial = 32, n_angular = 64;
    bool reflect = false;
    std::string domain, out, format = "obj";
};

int run_profile(const ProfileArgs& a) {
    cmc::ProfileParams params{a.H, a.r};
    double s_max = a.s_max;
    if (s_max < 0.0) s_max = std::min(cmc::t_cutoff(a.H), 2.0);
    if (a.format == "json") {
        const auto table = cmc::profile_table(params, s_max, a.n);
        ordered_json j;
        j["H"] = a.H;
        j["r"] = a.r;  // +inf serializes as null: horocycle family
        ordered_json rows = ordered_json::array();
        for (const auto& s : table)
            rows.push_back({s.s, s.height, s.phi, cmc::flux_residual(params, s.s)});
        j["columns"] = {"s", "height", "phi", "flux_residual"};
        j["samples"] = std::move(rows);
        emit(a.out, j.dump(2) + "\n");
    } else {
        emit(a.out, cmc::profile_csv(params, s_max, a.n));
    }
    return 0;
}

int run_criteria(const CriteriaArgs& a) {
    cmc::ExistenceInput in;
    in.H = a.H;
    in.h = a.h;
    if (!a.domain.empty()) {
        const cmc::AnnularDomain dom = cmc::load_domain_json(a.domain);
        for (const std::string& w : dom.warnings)
            std::cerr << "warning: " << w << "\n";
        in.r = a.have_r ? a.r : dom.r;
        in.R = a.have_R ? a.R : dom.R;
        in.d = a.have_d ? a.d : dom.d;
        in.diam_beta = a.have_diam ? a.diam_beta : dom.diam_beta;
    } else {
        if (!(a.have_r && a.have_R && a.have_d && a.have_diam))
            throw cmc::InputError(
                "criteria: pass --domain or all of --r --R --d --diam-beta");
        in.r = a.r;
        in.R = a.R;
        in.d = a.d;
        in.diam_beta = a.diam_beta;
    }

    const cmc::CriteriaReport rep =
        in.h >= 0.0 ? cmc::check_exist_above(in) : cmc::check_exist_below(in);
    ordered_json j;
    j["input"] = {{"H", in.H}, {"r", in.r},          {"R", in.R},
                  {"d", in.d}, {"diam_beta", in.diam_beta}, {"h", in.h}};
    j["existence"] = report_json(rep);
    ordered_json nonex;
    nonex["horosurface_slab_bound"] = cmc::nonexist_bound_horo(in.H);
    nonex["cylinder_slab_bound"] = cmc::nonexist_bound_cyl(in.H, in.diam_beta);
    nonex["r_star"] = in.diam_beta;
    if (in.H == 0.0)
        nonex["note"] = "H = 0: the cylinder bound degenerates to twice the "
                        "minimal profile asymptote";
    j["nonexistence"] = std::move(nonex);
    emit(a.out, j.dump(2) + "\n");
    return rep.verdict ? 0 : 2;
}

int run_solve_radial(const RadialArgs& a) {
    cmc::RadialProblem prob{a.H, a.rho_in, a.rho_out, a.h};
    const cmc::RadialSolution sol = cmc::solve_radial(prob, a.n);
    emit(a.out, a.format == "json" ? cmc::radial_json(sol) : cmc::radial_csv(sol));
    return 0;
}

cmc::AnnularDomain disk_domain(const std::string& domain_file, double r, double R) {
    if (!domain_file.empty()) return cmc::load_domain_json(domain_file);
    return cmc::make_circle_domain({0.0, 0.0}, r, {0.0, 0.0}, R);
}

int run_solve_disk(const DiskArgs& a) {
    cmc::SolverConfig cfg;
    if (!a.config.empty()) cfg = cmc::load_solver_config(a.config);
    if (a.spacing > 0.0) cfg.spacing = a.spacing;
    if (a.tol > 0.0) cfg.opts.tol = a.tol;
    const cmc::AnnularDomain dom = disk_domain(a.domain, a.r, a.R);
    for (const std::string& w : dom.warnings) std::cerr << "warning: " << w << "\n";
    const cmc::FieldSolution field =
        cmc::solve_disk(dom, a.H, a.h, cfg.spacing, cfg.opts);
    if (a.format == "json") {
        emit(a.out, cmc::solution_json(field));
    } else {
        emit(a.out, cmc::solution_csv(field));
        if (!a.out.empty())
            cmc::write_file(a.out + ".meta.json", cmc::solution_header_json(field));
    }
    return 0;
}

int run_bounds(const BoundsArgs& a) {
    ordered_json j;
    j["H"] = a.H;
    j["horosurface_slab_bound"] = cmc::nonexist_bound_horo(a.H);
    if (a.r > 0.0) {
        j["r"] = a.r;
        j["cylinder_slab_bound"] = cmc::nonexist_bound_cyl(a.H, a.r);
        const double cone_gate = cmc::sq(1.0 / std::tanh(a.r)) - 4.0 * a.H * a.H;
        if (cone_gate <= 0.0) {
            j["crossover_d0"] = nullptr;
            j["crossover_note"] = "cone threshold unbounded (2H >= coth r)";
        } else {
            try {
                j["crossover_d0"] = cmc::crossover_distance(a.H, a.r);
            } catch (const cmc::ConvergenceError&) {
                j["crossover_d0"] = nullptr;
                j["crossover_note"] = "thresholds do not cross for d <= 50";
            }
        }
        if (a.H == 0.0)
            j["cylinder_note"] = "H = 0: bound is twice the minimal profile "
                                 "asymptote";
    }
    emit(a.out, j.dump(2) + "\n");
    return 0;
}

int run_mesh(const MeshArgs& a) {
    cmc::SurfaceMesh mesh;
    if (a.kind == "graph") {
        cmc::SolveOptions opts;
        if (a.tol > 0.0) opts.tol = a.tol;
        const cmc::AnnularDomain dom = disk_domain(a.domain, a.r, a.R);
        mesh = cmc::mesh_graph(cmc::solve_disk(dom, a.H, a.h, a.spacing, opts));
    } else if (a.kind == "rotational") {
        mesh = cmc::mesh_rotational({a.H, a.r}, {a.cx, a.cy}, a.n_radial,
                                    a.n_angular, a.reflect, a.s_cap);
    } else {
        throw cmc::InputError("mesh: --kind must be rotational or graph");
    }
    if (a.format == "json")
        emit(a.out, cmc::mesh_json(mesh));
    else if (a.format == "csv")
        emit(a.out, cmc::mesh_csv(mesh));
    else
        emit(a.out, cmc::obj_string(mesh));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CMC graphs over annular hyperbolic domains"};
    app.require_subcommand(1);
    // --h is a height flag on several subcommands, so help is long-form only.
    app.set_help_flag("--help", "print help");

    ProfileArgs pa;
    CLI::App* prof = app.add_subcommand("profile", "Tabulate a rotational profile");
    prof->set_help_flag("--help", "print help");
    prof->add_option("--H", pa.H, "mean curvature")->required();
    prof->add_option("--r", pa.r, "neck radius (inf = horocycle family)");
    prof->add_option("--s-max", pa.s_max, "table end (default min(T_H, 2))");
    prof->add_option("--n", pa.n, "row count");
    prof->add_option("--out", pa.out, "output path (default stdout)");
    prof->add_option("--format", pa.format)->check(CLI::IsMember({"csv", "json"}));

    CriteriaArgs ca;
    CLI::App* crit = app.add_subcommand("criteria", "Existence / non-existence report");
    crit->set_help_flag("--help", "print help");
    crit->add_option("--H", ca.H)->required();
    crit->add_option("--h", ca.h, "inner boundary height (sign picks the theorem)")
        ->required();
    crit->add_option("--domain", ca.domain, "domain JSON file");
    auto* fr = crit->add_option("--r", ca.r, "interior tangent circle radius");
    auto* fR = crit->add_option("--R", ca.R, "exterior tangent circle radius");
    auto* fd = crit->add_option("--d", ca.d, "curve separation");
    auto* fdb = crit->add_option("--diam-beta", ca.diam_beta, "outer diameter");
    crit->add_option("--out", ca.out);
    crit->add_option("--format", ca.format)->check(CLI::IsMember({"json"}));

    RadialArgs ra;
    CLI::App* rad = app.add_subcommand("solve-radial", "Concentric-annulus solver");
    rad->set_help_flag("--help", "print help");
    rad->add_option("--H", ra.H)->required();
    rad->add_option("--r", ra.rho_in, "inner geodesic radius")->required();
    rad->add_option("--R", ra.rho_out, "outer geodesic radius")->required();
    rad->add_option("--h", ra.h, "inner boundary height")->required();
    rad->add_option("--n", ra.n, "sample count");
    rad->add_option("--out", ra.out);
    rad->add_option("--format", ra.format)->check(CLI::IsMember({"csv", "json"}));

    DiskArgs da;
    CLI::App* disk = app.add_subcommand("solve-disk", "General-domain solver");
    disk->set_help_flag("--help", "print help");
    disk->add_option("--H", da.H)->required();
    disk->add_option("--h", da.h)->required();
    disk->add_option("--domain", da.domain, "domain JSON file");
    disk->add_option("--r", da.r, "inner radius of a concentric fallback domain");
    disk->add_option("--R", da.R, "outer radius of a concentric fallback domain");
    disk->add_option("--spacing", da.spacing, "grid spacing (Euclidean)");
    disk->add_option("--tol", da.tol, "residual tolerance");
    disk->add_option("--config", da.config, "solver config JSON");
    disk->add_option("--out", da.out);
    disk->add_option("--format", da.format)->check(CLI::IsMember({"csv", "json"}));

    BoundsArgs ba;
    CLI::App* bnd = app.add_subcommand("bounds", "Slab bounds and crossover distance");
    bnd->set_help_flag("--help", "print help");
    bnd->add_option("--H", ba.H)->required();
    bnd->add_option("--r", ba.r, "cylinder radius / tangent radius");
    bnd->add_option("--out", ba.out);
    bnd->add_option("--format", ba.format)->check(CLI::IsMember({"json"}));

    MeshArgs ma;
    CLI::App* msh = app.add_subcommand("mesh", "Surface mesh export");
    msh->set_help_flag("--help", "print help");
    msh->add_option("--kind", ma.kind)->check(CLI::IsMember({"rotational", "graph"}));
    msh->add_option("--H", ma.H)->required();
    msh->add_option("--r", ma.r, "neck radius (rotational; inf = horocycle) or "
                                 "inner radius (graph)");
    msh->add_option("--R", ma.R, "outer radius (graph fallback domain)");
    msh->add_option("--h", ma.h, "boundary height (graph)");
    msh->add_option("--center-x", ma.cx);
    msh->add_option("--center-y", ma.cy);
    msh->add_option("--n-radial", ma.n_radial);
    msh->add_option("--n-angular", ma.n_angular);
    msh->add_flag("--reflect", ma.reflect, "glue with the height-negated copy");
    msh->add_option("--s-cap", ma.s_cap, "profile parameter cap");
    msh->add_option("--domain", ma.domain, "domain JSON file (graph)");
    msh->add_option("--spacing", ma.spacing, "grid spacing (graph)");
    msh->add_option("--tol", ma.tol, "residual tolerance (graph)");
    msh->add_option("--out", ma.out);
    msh->add_option("--format", ma.format)
        ->check(CLI::IsMember({"obj", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        ca.have_r = fr->count() > 0;
        ca.have_R = fR->count() > 0;
        ca.have_d = fd->count() > 0;
        ca.have_diam = fdb->count() > 0;
        if (app.got_subcommand(prof)) return run_profile(pa);
        if (app.got_subcommand(crit)) return run_criteria(ca);
        if (app.got_subcommand(rad)) return run_solve_radial(ra);
        if (app.got_subcommand(disk)) return run_solve_disk(da);
        if (app.got_subcommand(bnd)) return run_bounds(ba);
        if (app.got_subcommand(msh)) return run_mesh(ma);
    } catch (const cmc::NoRadialGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (std::isfinite(e.h_lo))
            std::cerr << "attainable height range: [" << cmc::format_g(e.h_lo)
                      << ", " << cmc::format_g(e.h_hi) << "]\n";
        return 3;
    } catch (const cmc::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cmc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cmc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
