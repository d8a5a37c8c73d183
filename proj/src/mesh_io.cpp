#include "cas/mesh_io.hpp"

#include "cas/diffgeo.hpp"
#include "cas/error.hpp"
#include "cas/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace cas {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPoleMargin = 1e-6;

double try_scalar(const auto& fn)
{
    try {
        return fn();
    } catch (const Error&) {
        return kNaN;
    }
}

} // namespace

std::string format_real(double x)
{
    if (std::isnan(x)) return {};
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Mesh sample_grid(const Chart& chart, const GridSpec& grid, bool with_scalars)
{
    grid.validate();
    Mesh m;
    m.space = chart.space();
    m.dim = chart.dim();
    m.nu = grid.nu;
    m.nv = grid.nv;
    m.has_H = chart.space() == Space::E3;
    for (int i = 0; i < grid.nu; ++i) m.us.push_back(grid.u_at(i));
    for (int j = 0; j < grid.nv; ++j) m.vs.push_back(grid.v_at(j));

    const std::size_t n = grid.size();
    m.vertices.resize(n);
    m.angle.assign(n, kNaN);
    m.K.assign(n, kNaN);
    if (m.has_H) m.H.assign(n, kNaN);
    std::vector<char> ok(n, 0);
    std::vector<double> side(n, 0.0);

    std::size_t admissible = 0;
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            const double u = m.us[i];
            const double v = m.vs[j];
            const std::size_t k = m.index(i, j);
            const Vec4 p = chart.eval(u, v);
            if (!is_finite(p)) throw Error(ErrorCode::SingularPoint, "non-finite vertex");
            m.vertices[k] = p;
            if (!chart.admissible(u, v, grid.exclusion)) continue;
            ok[k] = 1;
            side[k] = chart.singular_indicator(u, v);
            ++admissible;
            if (!with_scalars) continue;
            const Jet2 jet = chart.jet(u, v);
            m.angle[k] = angle_with_k(chart, jet);
            m.K[k] = try_scalar([&] { return gauss_curvature_brioschi(chart, u, v); });
            if (m.has_H) m.H[k] = try_scalar([&] { return mean_curvature(chart, jet); });
        }
    }
    if (admissible == 0) throw Error(ErrorCode::EmptyGrid, "no admissible grid node");

    for (int i = 0; i + 1 < grid.nu; ++i) {
        for (int j = 0; j + 1 < grid.nv; ++j) {
            const std::array<std::size_t, 4> q{m.index(i, j), m.index(i + 1, j), m.index(i + 1, j + 1),
                                               m.index(i, j + 1)};
            bool keep = true;
            for (const std::size_t c : q) keep = keep && ok[c] && side[c] * side[q[0]] > 0.0;
            if (keep)
                m.faces.push_back({static_cast<int>(q[0]), static_cast<int>(q[1]), static_cast<int>(q[2]),
                                   static_cast<int>(q[3])});
        }
    }
    return m;
}

std::string obj_string(const Mesh& mesh)
{
    if (mesh.dim != 3)
        throw Error(ErrorCode::DimensionMismatch, "OBJ export needs a 3D mesh; project the 4D mesh first");
    std::string out;
    out.reserve(mesh.vertices.size() * 64 + mesh.faces.size() * 32);
    for (const Vec4& p : mesh.vertices) {
        out += "v ";
        out += format_real(p.x1);
        out += ' ';
        out += format_real(p.x2);
        out += ' ';
        out += format_real(p.x3);
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        out += 'f';
        for (const int idx : f) {
            out += ' ';
            out += std::to_string(idx + 1);
        }
        out += '\n';
    }
    return out;
}

void write_obj(const Mesh& mesh, const std::filesystem::path& path) { write_file_atomic(path, obj_string(mesh)); }

std::vector<Vec3> read_obj_vertices(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::vector<Vec3> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.size() < 2 || line[0] != 'v' || line[1] != ' ') continue;
        std::istringstream is(line.substr(2));
        Vec3 p;
        if (!(is >> p.x >> p.y >> p.z)) throw Error(ErrorCode::Io, "malformed vertex line: " + line);
        out.push_back(p);
    }
    return out;
}

Mesh project4d(const Mesh& mesh, Projection mode)
{
    if (mesh.dim != 4) throw Error(ErrorCode::DimensionMismatch, "projection needs a 4D mesh");
    if (mode == Projection::Stereographic && mesh.space != Space::S2xR)
        throw Error(ErrorCode::UnsupportedSpace, "stereographic projection is defined for S2xR meshes only");
    Mesh out = mesh;
    out.dim = 3;
    for (Vec4& p : out.vertices) {
        if (mode == Projection::DropT) {
            p = {p.x1, p.x2, p.x3, 0.0};
            continue;
        }
        if (p.x3 > 1.0 - kPoleMargin) {
            std::ostringstream os;
            os << "vertex (" << p.x1 << ", " << p.x2 << ", " << p.x3 << ", " << p.t << ") is at the north pole";
            throw Error(ErrorCode::PoleInRange, os.str());
        }
        const double s = 1.0 / (1.0 - p.x3);
        p = {s * p.x1, s * p.x2, p.t, 0.0};
    }
    return out;
}

std::string csv_string(const Mesh& mesh)
{
    const bool four = mesh.dim == 4;
    std::string out = four ? "u,v,x1,x2,x3,t,angle,K" : "u,v,x1,x2,x3,angle,K";
    if (mesh.has_H) out += ",H";
    out += '\n';
    for (int i = 0; i < mesh.nu; ++i) {
        for (int j = 0; j < mesh.nv; ++j) {
            const std::size_t k = mesh.index(i, j);
            const Vec4& p = mesh.vertices[k];
            out += format_real(mesh.us[i]) + ',' + format_real(mesh.vs[j]) + ',' + format_real(p.x1) + ','
                 + format_real(p.x2) + ',' + format_real(p.x3);
            if (four) out += ',' + format_real(p.t);
            out += ',' + format_real(mesh.angle[k]) + ',' + format_real(mesh.K[k]);
            if (mesh.has_H) out += ',' + format_real(mesh.H[k]);
            out += '\n';
        }
    }
    return out;
}

void write_csv(const Mesh& mesh, const std::filesystem::path& path) { write_file_atomic(path, csv_string(mesh)); }

std::string csv_string(const SuiteReport& report)
{
    std::string out = "name,max_residual,tol,pass,n_samples,worst_u,worst_v\n";
    for (const CheckResult& r : report.checks) {
        out += r.name + ',' + (std::isinf(r.max_residual) ? std::string("inf") : format_real(r.max_residual)) + ','
             + format_real(r.tol) + ',' + (r.pass ? "true" : "false") + ',' + std::to_string(r.n_samples) + ','
             + format_real(r.worst_u) + ',' + format_real(r.worst_v) + '\n';
    }
    return out;
}

void write_csv(const SuiteReport& report, const std::filesystem::path& path)
{
    write_file_atomic(path, csv_string(report));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::Io, "cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(ErrorCode::Io, "short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::Io, "cannot move output into '" + path.string() + "'");
    }
}

} // namespace cas
