#include "cas/error.hpp"
#include "cas/generators.hpp"
#include "cas/mesh_io.hpp"
#include "cas/verify.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace cas;
using test::pi;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "cas_mesh_io_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GridSpec grid(double u0, double u1, int nu, int nv)
{
    GridSpec g;
    g.u_min = u0;
    g.u_max = u1;
    g.nu = nu;
    g.nv = nv;
    return g;
}

} // namespace

TEST_SUITE("mesh_io")
{
    TEST_CASE("OBJ layout and round trip")
    {
        const auto ex1 = paper_example(1);
        const Mesh m = sample_grid(*ex1, grid(0.0, 2.0, 8, 16));
        CHECK(m.vertices.size() == 128);
        CHECK(m.faces.size() == 7 * 15);
        const std::string obj = obj_string(m);
        CHECK(obj.rfind("v 0 0 0\n", 0) == 0); // r(0, 0) = 0, printed without -0
        CHECK(obj.find('\r') == std::string::npos);
        CHECK(obj.find("\nf 1 17 18 2\n") != std::string::npos);

        const fs::path p = scratch("ex1.obj");
        write_obj(m, p);
        CHECK(slurp(p) == obj);
        const auto back = read_obj_vertices(p);
        REQUIRE(back.size() == m.vertices.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            const Vec3 a = back[i], b = xyz(m.vertices[i]);
            const double scale = std::max(1.0, norm(b));
            CHECK(norm(a - b) <= 1e-15 * scale);
        }
        write_obj(m, p);
        CHECK(slurp(p) == obj);
    }

    TEST_CASE("faces stay off the singular band")
    {
        // u + alpha = 0 at u = -1 lies inside [-2, 1]
        const auto ex1 = paper_example(1);
        const Mesh m = sample_grid(*ex1, grid(-2.0, 1.0, 31, 8));
        CHECK(m.faces.size() < 30u * 7u);
        for (const auto& f : m.faces) {
            double side = 0.0;
            for (const int idx : f) {
                REQUIRE(idx >= 0);
                REQUIRE(static_cast<std::size_t>(idx) < m.vertices.size());
                const double u = m.us[idx / m.nv], v = m.vs[idx % m.nv];
                CHECK(ex1->admissible(u, v, 1e-3));
                const double s = ex1->singular_indicator(u, v);
                if (side == 0.0) side = s;
                CHECK(s * side > 0.0);
            }
        }
        // scalars are undefined exactly at the inadmissible node u = -1
        const int i = 10; // u = -2 + 10 * 0.1
        CHECK(std::isnan(m.angle[m.index(i, 0)]));
        CHECK(m.angle[m.index(0, 0)] == doctest::Approx(pi / 4));
    }

    TEST_CASE("CSV columns")
    {
        const auto ex2 = paper_example(2);
        const Mesh m = sample_grid(*ex2, grid(0.5, 1.0, 2, 2));
        const std::string csv = csv_string(m);
        CHECK(csv.rfind("u,v,x1,x2,x3,angle,K,H\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

        const auto s = s2r_chart(pi / 3);
        const Mesh m4 = sample_grid(*s, grid(0.0, 1.0, 2, 3));
        const std::string csv4 = csv_string(m4);
        CHECK(csv4.rfind("u,v,x1,x2,x3,t,angle,K\n", 0) == 0);
        CHECK_THROWS_AS(obj_string(m4), Error);
    }

    TEST_CASE("projections of 4D meshes")
    {
        const auto s = s2r_chart(pi / 4);
        const Mesh m = sample_grid(*s, grid(0.0, 1.0, 4, 8));
        const Mesh d = project4d(m, Projection::DropT);
        CHECK(d.dim == 3);
        CHECK(d.vertices[5].x3 == m.vertices[5].x3);
        const Mesh st = project4d(m, Projection::Stereographic);
        for (std::size_t i = 0; i < m.vertices.size(); ++i) {
            const Vec4 p = m.vertices[i], q = st.vertices[i];
            CHECK(q.x1 == doctest::Approx(p.x1 / (1 - p.x3)));
            CHECK(q.x3 == p.t);
        }
        CHECK_NOTHROW(obj_string(st));

        // the pole (0, 0, 1) is reached at u cos(theta) = pi/2 on the equator
        const Mesh polar = sample_grid(*s, grid(0.0, std::sqrt(2.0) * pi / 2, 3, 4), false);
        try {
            project4d(polar, Projection::Stereographic);
            FAIL("expected PoleInRange");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PoleInRange);
        }
        const auto h = h2r_chart(pi / 4);
        const Mesh mh = sample_grid(*h, grid(0.0, 1.0, 2, 2));
        CHECK_THROWS_AS(project4d(mh, Projection::Stereographic), Error);
        CHECK_NOTHROW(project4d(mh, Projection::DropT));
    }

    TEST_CASE("report CSV")
    {
        const auto ex1 = paper_example(1);
        const SuiteReport r = run_suite(*ex1, grid(0.0, 2.0, 4, 8));
        const std::string csv = csv_string(r);
        CHECK(csv.rfind("name,max_residual,tol,pass,n_samples,worst_u,worst_v\nconstant_angle,", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.checks.size() + 1));
    }

    TEST_CASE("number formatting")
    {
        CHECK(format_real(-0.0) == "0");
        CHECK(format_real(0.1) == "0.10000000000000001");
        CHECK(format_real(std::nan("")).empty());
    }

    TEST_CASE("empty grid")
    {
        const auto ex1 = paper_example(1);
        CHECK_THROWS_AS(sample_grid(*ex1, grid(-1.0 - 1e-4, -1.0 + 1e-4, 2, 2)), Error);
    }
    TEST_CASE("worked values")
    {
        const double r = 1.0 / std::sqrt(2.0);
        const auto ex1 = paper_example(1);
        GridSpec g = grid(0.0, 1.0, 2, 2);
        g.v_max = pi;
        const Mesh m = sample_grid(*ex1, g);
        REQUIRE(m.vertices.size() == 4);
        CHECK(test::dist(m.vertices[0], {0, 0, 0, 0}) <= 1e-15);
        CHECK(test::dist(m.vertices[2], {r, 0, r, 0}) <= 1e-15);
        const std::string obj = obj_string(m);
        CHECK(std::count(obj.begin(), obj.end(), 'v') == 4);
        CHECK(std::count(obj.begin(), obj.end(), 'f') == 1);
        CHECK(obj.rfind("v 0 0 0\n", 0) == 0);

        const Mesh big = sample_grid(*ex1, grid(0.0, 2.0, 16, 16));
        for (double a : big.angle) CHECK(a == doctest::Approx(0.7853981633974483).epsilon(1e-10));

        const auto flat = e3_plane_chart(0.0);
        for (const Vec4& p : sample_grid(*flat, grid(-1.0, 3.0, 5, 7)).vertices) CHECK(p.x3 == 0.0);

        Mesh pt;
        pt.space = Space::S2xR;
        pt.dim = 4;
        pt.nu = pt.nv = 1;
        pt.us = pt.vs = {0.0};
        pt.vertices = {{1, 0, 0, 5}};
        const Mesh d = project4d(pt, Projection::DropT), st = project4d(pt, Projection::Stereographic);
        CHECK(test::dist(d.vertices[0], {1, 0, 0, 0}) == 0.0);
        CHECK(test::dist(st.vertices[0], {1, 0, 5, 0}) == 0.0);
        pt.vertices = {{0, 0, 1, 0}};
        CHECK_THROWS_AS(project4d(pt, Projection::Stereographic), Error);
        CHECK_THROWS_AS(project4d(d, Projection::DropT), Error);
    }
}

