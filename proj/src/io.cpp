#include "cmc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cmc/errors.hpp"

namespace cmc {
namespace {

using ordered_json = nlohmann::ordered_json;

void append_g(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

ordered_json report_to_json(const CriteriaReport& report) {
    ordered_json j;
    j["theorem"] = theorem_name(report.theorem);
    ordered_json hyps = ordered_json::array();
    for (const Hypothesis& h : report.hypotheses) {
        ordered_json hj;
        hj["name"] = h.name;
        hj["required"] = h.required;  // non-finite -> null
        hj["actual"] = h.actual;
        hj["satisfied"] = h.satisfied;
        hj["margin"] = h.margin;
        if (!h.note.empty()) hj["note"] = h.note;
        hyps.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyps);
    j["verdict"] = report.verdict;
    return j;
}

CurvePolyline parse_curve(const nlohmann::json& j, const char* which) {
    const nlohmann::json* verts = &j;
    CurvePolyline c;
    if (j.is_object()) {
        if (!j.contains("vertices"))
            throw InputError(std::string("domain file: curve '") + which +
                             "' lacks \"vertices\"");
        verts = &j.at("vertices");
        c.closed = j.value("closed", true);
    }
    if (!verts->is_array())
        throw InputError(std::string("domain file: curve '") + which +
                         "' must be an array of [x, y] pairs");
    for (const auto& v : *verts) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw InputError(std::string("domain file: curve '") + which +
                             "' has a malformed vertex");
        c.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return c;
}

}  // namespace

std::string format_g(double v) {
    std::string s;
    append_g(s, v);
    return s;
}

std::string obj_string(const SurfaceMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 64 + mesh.faces.size() * 24);
    for (const auto& v : mesh.vertices) {
        out += "v ";
        append_g(out, v[0]); out += ' ';
        append_g(out, v[1]); out += ' ';
        append_g(out, v[2]); out += '\n';
    }
    char buf[48];
    for (const auto& f : mesh.faces) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    return out;
}

std::string csv_string(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw InputError("csv_string: row width does not match header");
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_g(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string mesh_csv(const SurfaceMesh& mesh) {
    std::vector<std::vector<double>> rows;
    rows.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) rows.push_back({v[0], v[1], v[2]});
    return csv_string({"x", "y", "z"}, rows);
}

std::string mesh_json(const SurfaceMesh& mesh) {
    ordered_json j;
    j["vertices"] = mesh.vertices;
    j["faces"] = mesh.faces;
    return j.dump(2) + "\n";
}

std::string profile_csv(const ProfileParams& params, double s_max, int n) {
    const auto table = profile_table(params, s_max, n);
    std::vector<std::vector<double>> rows;
    rows.reserve(table.size());
    for (const ProfileSample& s : table)
        rows.push_back({s.s, s.height, s.phi, flux_residual(params, s.s)});
    return csv_string({"s", "height", "phi", "flux_residual"}, rows);
}

std::string criteria_report_json(const CriteriaReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string solution_csv(const FieldSolution& field) {
    std::vector<std::vector<double>> rows;
    rows.reserve(field.grid.nodes.size());
    for (size_t k = 0; k < field.grid.nodes.size(); ++k)
        rows.push_back({field.grid.nodes[k].p.x, field.grid.nodes[k].p.y,
                        field.u[k]});
    return csv_string({"x", "y", "u"}, rows);
}

std::string solution_header_json(const FieldSolution& field) {
    ordered_json j;
    j["residual_inf"] = field.residual_inf;
    j["iters"] = field.newton_iters;
    j["converged"] = field.converged;
    return j.dump(2) + "\n";
}

std::string solution_json(const FieldSolution& field) {
    ordered_json j;
    j["residual_inf"] = field.residual_inf;
    j["iters"] = field.newton_iters;
    j["converged"] = field.converged;
    ordered_json nodes = ordered_json::array();
    for (size_t k = 0; k < field.grid.nodes.size(); ++k)
        nodes.push_back({field.grid.nodes[k].p.x, field.grid.nodes[k].p.y,
                         field.u[k]});
    j["nodes"] = std::move(nodes);
    return j.dump(2) + "\n";
}

std::string radial_csv(const RadialSolution& sol) {
    std::vector<std::vector<double>> rows;
    rows.reserve(sol.samples.size());
    for (const RadialSample& s : sol.samples) rows.push_back({s.rho, s.u, s.phi});
    return csv_string({"rho", "u", "phi"}, rows);
}

std::string radial_json(const RadialSolution& sol) {
    ordered_json j;
    j["flux_c"] = sol.flux_c;
    j["achieved_h"] = sol.achieved_h;
    ordered_json rows = ordered_json::array();
    for (const RadialSample& s : sol.samples) rows.push_back({s.rho, s.u, s.phi});
    j["samples"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed: " + path);
}

void write_obj(const SurfaceMesh& mesh, const std::string& path) {
    write_file(path, obj_string(mesh));
}

void write_csv(const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows,
               const std::string& path) {
    write_file(path, csv_string(columns, rows));
}

AnnularDomain load_domain_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open domain file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("domain file: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner"))
        throw InputError("domain file: need an object with \"outer\" and \"inner\"");
    const CurvePolyline outer = parse_curve(j.at("outer"), "outer");
    const CurvePolyline inner = parse_curve(j.at("inner"), "inner");
    std::optional<double> r, R;
    if (j.contains("r") && !j.at("r").is_null()) r = j.at("r").get<double>();
    if (j.contains("R") && !j.at("R").is_null()) R = j.at("R").get<double>();
    return make_domain(outer, inner, r, R);
}

SolverConfig load_solver_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("config file: " + std::string(e.what()));
    }
    SolverConfig cfg;
    try {
        cfg.spacing = j.value("spacing", cfg.spacing);
        cfg.opts.tol = j.value("tol", cfg.opts.tol);
        cfg.opts.max_newton = j.value("max_newton", cfg.opts.max_newton);
        cfg.opts.damping = j.value("damping", cfg.opts.damping);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("config file: " + std::string(e.what()));
    }
    return cfg;
}

}  // namespace cmc
