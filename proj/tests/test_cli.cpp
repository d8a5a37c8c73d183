#include "cas/app.hpp"
#include "cas/mesh_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace cas;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "cas");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "cas_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// One line, `error: <field>: <reason>`.
bool is_error_line(const std::string& s, const std::string& field)
{
    const std::string head = "error: " + field + ": ";
    return s.rfind(head, 0) == 0 && s.size() > head.size() + 1 && s.back() == '\n'
        && std::count(s.begin(), s.end(), '\n') == 1;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("generate Example 1 as OBJ")
    {
        const fs::path dir = scratch_dir("gen1");
        const Run r = cli({"generate", "--space", "e3", "--theta", "0.7853981634", "--alpha", "const:1", "--out",
                           (dir / "ex1.obj").string()});
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        REQUIRE(fs::exists(dir / "ex1.obj"));
        CHECK(fs::exists(dir / "ex1.csv"));
        const auto v = read_obj_vertices(dir / "ex1.obj");
        CHECK(v.size() == 64u * 128u);
        // last node (u, v) = (2, 2 pi): (1/sqrt 2) (3 cos v - 1, 3 sin v, 2)
        CHECK(v.back().x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
        CHECK(v.back().z == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    }

    TEST_CASE("generate on S^2 x R writes a 4D CSV and a projected OBJ")
    {
        const fs::path dir = scratch_dir("gen4");
        const Run r = cli({"generate", "--space", "s2r", "--theta", "1.0471975512", "--out", (dir / "s.csv").string()});
        CHECK(r.code == 0);
        const std::string csv = slurp(dir / "s.csv");
        CHECK(csv.rfind("u,v,x1,x2,x3,t,", 0) == 0);
        // S^2 x R meshes are projected stereographically by default: z carries t = u sin(theta)
        const auto v = read_obj_vertices(dir / "s.obj");
        REQUIRE(v.size() == 64u * 128u);
        CHECK(v.back().z == doctest::Approx(2 * std::sin(1.0471975512)).epsilon(1e-12));

        CHECK(cli({"generate", "--space", "h2r", "--out", (dir / "h.obj").string()}).code == 0);
        CHECK(slurp(dir / "h.csv").rfind("u,v,x1,x2,x3,t,", 0) == 0);
    }

    TEST_CASE("configuration errors exit 2 with one error line")
    {
        Run r = cli({"generate", "--theta", "3.5"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "theta"));
        r = cli({"verify", "--space", "r4"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "space"));
        r = cli({"verify", "--alpha", "cubic"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "alpha"));
        r = cli({"verify", "--nu", "0"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "nu"));
        r = cli({"verify", "--u-range", "2:1"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "u-range"));
        r = cli({"verify", "--space", "s2r", "--alpha", "cos"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "alpha"));
        r = cli({"generate", "--space", "h2r", "--project", "stereo"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "project"));
        r = cli({"verify", "--tol-fd", "-1"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "tol-fd"));
        r = cli({"verify", "--bogus"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "args"));
        r = cli({"examples", "5"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "example"));
        r = cli({"verify", "--config", "/nonexistent/run.json"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "config"));
    }

    TEST_CASE("singular and domain errors exit 3")
    {
        const fs::path dir = scratch_dir("gen3");
        Run r = cli({"generate", "--u-range", "-1.0001:-0.9999", "--nu", "2", "--nv", "2", "--out",
                     (dir / "x.obj").string()});
        CHECK(r.code == 3);
        CHECK(is_error_line(r.err, "grid"));
        r = cli({"generate", "--space", "s2r", "--theta", "0.7853981633974483", "--u-range", "0:2.2214414690791831",
                 "--nu", "3", "--project", "stereo", "--out", (dir / "p.obj").string()});
        CHECK(r.code == 3);
        CHECK(is_error_line(r.err, "project"));
    }

    TEST_CASE("verify exits 0 on pass and 1 on failure, report either way")
    {
        const fs::path dir = scratch_dir("verify");
        Run r = cli({"verify", "--theta", "0.7853981633974483", "--alpha", "const:1", "--nu", "16", "--nv", "32",
                     "--report", (dir / "ok.json").string()});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["pass"] == true);
        CHECK(slurp(dir / "ok.json") == r.out);

        r = cli({"verify", "--perturb", "0.01", "--nu", "16", "--nv", "32", "--report", (dir / "bad.csv").string()});
        CHECK(r.code == 1);
        j = nlohmann::json::parse(r.out);
        CHECK(j["pass"] == false);
        CHECK(j["checks"][0]["name"] == "constant_angle");
        CHECK(j["checks"][0]["pass"] == false);
        CHECK(slurp(dir / "bad.csv").rfind("name,max_residual", 0) == 0);

        r = cli({"verify", "--space", "h2r", "--nu", "16", "--nv", "32"});
        CHECK(r.code == 0);
        CHECK(r.out.find("mean_curvature_formula") == std::string::npos);
    }

    TEST_CASE("JSON config merges with flags, flags win")
    {
        const fs::path dir = scratch_dir("config");
        {
            std::ofstream cfg(dir / "run.json");
            cfg << R"({"space": "e3", "theta": 0.5, "alpha": "cos", "nu": 8, "nv": 16, "u_range": [0.5, 1.5]})";
        }
        Run r = cli({"verify", "--config", (dir / "run.json").string(), "--theta", "0.6"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["chart"]["theta"] == 0.6);
        CHECK(j["chart"]["detail"] == "cos");
        CHECK(j["chart"]["grid"]["nu"] == 8);
        CHECK(j["chart"]["grid"]["u_min"] == 0.5);

        {
            std::ofstream cfg(dir / "bad.json");
            cfg << R"({"thetta": 0.5})";
        }
        r = cli({"verify", "--config", (dir / "bad.json").string()});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "thetta"));
    }

    TEST_CASE("cylinders and planes from the command line")
    {
        Run r = cli({"verify", "--theta", "1.5707963267948966", "--curve", "circle:2", "--nu", "8", "--nv", "16"});
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["chart"]["kind"] == "cylinder");
        r = cli({"verify", "--theta", "0.6283185307179586", "--plane", "--nu", "8", "--nv", "16"});
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["chart"]["kind"] == "plane");
        r = cli({"verify", "--theta", "0.5", "--curve", "line"});
        CHECK(r.code == 2);
        CHECK(is_error_line(r.err, "curve"));
    }

    TEST_CASE("examples: one or all, reproducibly")
    {
        const fs::path a = scratch_dir("ex_a"), b = scratch_dir("ex_b"), one = scratch_dir("ex_one");
        Run r = cli({"examples", "2", "--out-dir", one.string()});
        CHECK(r.code == 0);
        CHECK(fs::exists(one / "ex2.obj"));
        CHECK_FALSE(fs::exists(one / "ex1.obj"));

        CHECK(cli({"examples", "all", "--out-dir", a.string()}).code == 0);
        CHECK(cli({"examples", "all", "--out-dir", b.string()}).code == 0);
        for (const char* f : {"ex1.obj", "ex2.obj", "ex3.obj", "ex4.obj", "ex1.csv", "ex4.csv", "report.json"}) {
            INFO(f);
            CHECK(slurp(a / f) == slurp(b / f));
        }
        const auto j = nlohmann::json::parse(slurp(a / "report.json"));
        CHECK(j["pass"] == true);
        CHECK(j["examples"].size() == 4);
    }
}
