#pragma once

#include "cas/chart.hpp"
#include "cas/grid.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace cas {

struct SuiteReport;

/// Chart sampled on a grid. Vertices are stored row-major over (u, v):
/// index = i * nv + j for u-node i and v-node j. Quads join admissible
/// neighbours on the same side of the singular locus only.
struct Mesh {
    Space space = Space::E3;
    int dim = 3;
    int nu = 0;
    int nv = 0;
    std::vector<double> us;
    std::vector<double> vs;
    std::vector<Vec4> vertices;
    std::vector<std::array<int, 4>> faces; // 0-based vertex indices
    /// Per-vertex scalars; NaN where the quantity is undefined (singular
    /// band, or a curvature stencil that would cross it).
    std::vector<double> angle;
    std::vector<double> K;
    std::vector<double> H; // E^3 meshes only
    bool has_H = false;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(nv) + j; }
};

enum class Projection { DropT, Stereographic };

/// Throws EmptyGrid when no vertex is admissible.
Mesh sample_grid(const Chart& chart, const GridSpec& grid, bool with_scalars = true);

/// `v x y z` (17 significant digits) then 1-based `f a b c d`, LF endings.
/// Throws DimensionMismatch for 4D meshes.
std::string obj_string(const Mesh& mesh);
void write_obj(const Mesh& mesh, const std::filesystem::path& path);

/// Vertices of the `v` lines of an OBJ file.
std::vector<Vec3> read_obj_vertices(const std::filesystem::path& path);

/// drop_t keeps (x1, x2, x3). Stereographic (S^2 x R only) maps the sphere
/// part from the north pole, (x1, x2) / (1 - x3), and keeps t as the third
/// coordinate; throws PoleInRange when x3 > 1 - 1e-6.
Mesh project4d(const Mesh& mesh, Projection mode);

/// Header `u,v,x1,x2,x3[,t],angle,K[,H]`, one row per vertex in grid order.
/// Undefined scalars are left empty.
std::string csv_string(const Mesh& mesh);
void write_csv(const Mesh& mesh, const std::filesystem::path& path);

/// Header `name,max_residual,tol,pass,n_samples,worst_u,worst_v`.
std::string csv_string(const SuiteReport& report);
void write_csv(const SuiteReport& report, const std::filesystem::path& path);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// %.17g with negative zero printed as 0; empty for NaN.
std::string format_real(double x);

} // namespace cas
