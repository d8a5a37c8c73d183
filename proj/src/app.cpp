#include "cas/app.hpp"

#include "cas/error.hpp"
#include "cas/generators.hpp"
#include "cas/mesh_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

namespace cas {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Single-line form of any message.
std::string one_line(std::string s)
{
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

Space parse_space(const std::string& s)
{
    if (s == "e3") return Space::E3;
    if (s == "s2r") return Space::S2xR;
    if (s == "h2r") return Space::H2xR;
    throw ConfigError("space", "expected e3, s2r or h2r, got '" + s + "'");
}

std::pair<double, double> parse_range(const std::string& field, const std::string& s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ConfigError(field, "expected a:b, got '" + s + "'");
    try {
        std::size_t n1 = 0, n2 = 0;
        const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
        const double lo = std::stod(a, &n1);
        const double hi = std::stod(b, &n2);
        if (n1 != a.size() || n2 != b.size()) throw std::invalid_argument("trailing characters");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ConfigError(field, "expected a:b with numeric ends, got '" + s + "'");
    }
}

double parse_number(const std::string& field, const std::string& s)
{
    try {
        std::size_t n = 0;
        const double x = std::stod(s, &n);
        if (n == s.size()) return x;
    } catch (const std::logic_error&) {
    }
    throw ConfigError(field, "expected a number, got '" + s + "'");
}

PlaneCurve plane_curve(const std::string& spec)
{
    if (spec == "line") return PlaneCurve::line();
    if (spec.rfind("circle:", 0) == 0) {
        const double r = parse_number("curve", spec.substr(7));
        if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("curve", "circle radius must be positive");
        return PlaneCurve::circle(r);
    }
    throw ConfigError("curve", "expected circle:<R> or line for e3, got '" + spec + "'");
}

SphereCurve sphere_curve(const std::string& spec)
{
    if (spec == "great") return SphereCurve::great_circle();
    if (spec.rfind("small:", 0) == 0) return SphereCurve::small_circle(parse_number("curve", spec.substr(6)));
    throw ConfigError("curve", "expected great or small:<h> for s2r, got '" + spec + "'");
}

HyperbolicCurve hyperbolic_curve(const std::string& spec)
{
    if (spec == "geodesic") return HyperbolicCurve::geodesic();
    if (spec.rfind("circle:", 0) == 0) return HyperbolicCurve::circle(parse_number("curve", spec.substr(7)));
    throw ConfigError("curve", "expected geodesic or circle:<rho> for h2r, got '" + spec + "'");
}

/// Runs fn and re-labels library errors raised while validating `field`.
template <class F>
auto as_field(const std::string& field, F&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        throw ConfigError(field, e.what());
    }
}

fs::path sibling(const fs::path& p, const char* ext)
{
    fs::path q = p;
    q.replace_extension(ext);
    return q;
}

std::string lower_ext(const fs::path& p)
{
    std::string e = p.extension().string();
    for (char& c : e) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return e;
}

/// Field named in runtime (exit 3) error lines.
std::string runtime_field(ErrorCode code)
{
    switch (code) {
    case ErrorCode::PoleInRange: return "project";
    case ErrorCode::EmptyGrid:
    case ErrorCode::SingularPoint:
    case ErrorCode::OutOfDomain: return "grid";
    case ErrorCode::Io: return "out";
    default: return "run";
    }
}

/// Flags as given on the command line; unset ones leave the config alone.
struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> space;
    std::optional<double> theta;
    std::optional<std::string> alpha;
    std::optional<std::string> curve;
    bool plane = false;
    std::optional<std::string> u_range;
    std::optional<std::string> v_range;
    std::optional<int> nu;
    std::optional<int> nv;
    std::optional<double> tol_analytic;
    std::optional<double> tol_fd;
    std::optional<std::string> out;
    std::optional<std::string> report;
    std::optional<std::string> project;
    std::optional<double> perturb;
};

void add_run_flags(CLI::App& cmd, Flags& f)
{
    cmd.add_option("--config", f.config, "JSON config file; flags override its values");
    cmd.add_option("--space", f.space, "e3 | s2r | h2r");
    cmd.add_option("--theta", f.theta, "angle with k in radians, [0, pi)");
    cmd.add_option("--alpha", f.alpha, "const:<c> | linear | cos | sin2 | csv:<path>");
    cmd.add_option("--curve", f.curve, "e3 cylinder: circle:<R> | line; s2r: great | small:<h>; h2r: geodesic | circle:<rho>");
    cmd.add_flag("--plane", f.plane, "e3: the plane of angle theta");
    cmd.add_option("--u-range", f.u_range, "a:b");
    cmd.add_option("--v-range", f.v_range, "a:b");
    cmd.add_option("--nu", f.nu, "u samples");
    cmd.add_option("--nv", f.nv, "v samples");
    cmd.add_option("--tol-analytic", f.tol_analytic, "tolerance of analytic residuals");
    cmd.add_option("--tol-fd", f.tol_fd, "tolerance of finite-difference comparisons");
    cmd.add_option("--out", f.out, "output mesh (.obj or .csv)");
    cmd.add_option("--report", f.report, "verification report (.json or .csv)");
    cmd.add_option("--project", f.project, "4D to 3D: drop_t | stereo (default stereo on s2r, drop_t on h2r)");
    cmd.add_option("--perturb", f.perturb, "test hook: add eps u^2 along k");
}

RunConfig resolve(const Flags& f)
{
    RunConfig c = f.config ? load_config(*f.config) : RunConfig{};
    if (f.space) c.space = parse_space(*f.space);
    if (f.theta) c.theta = *f.theta;
    if (f.alpha) c.alpha = *f.alpha;
    if (f.curve) c.curve = *f.curve;
    if (f.plane) c.plane = true;
    if (f.u_range) c.u_range = parse_range("u-range", *f.u_range);
    if (f.v_range) c.v_range = parse_range("v-range", *f.v_range);
    if (f.nu) c.nu = *f.nu;
    if (f.nv) c.nv = *f.nv;
    if (f.tol_analytic) c.tol_analytic = *f.tol_analytic;
    if (f.tol_fd) c.tol_fd = *f.tol_fd;
    if (f.out) c.out = *f.out;
    if (f.report) c.report = *f.report;
    if (f.project) c.project = *f.project;
    if (f.perturb) c.perturb = *f.perturb;
    return c;
}

int cmd_generate(const RunConfig& config, std::ostream& out)
{
    const ChartPtr chart = build_chart(config);
    const GridSpec grid = build_grid(config, *chart);
    const std::string project = config.project.value_or(chart->space() == Space::S2xR ? "stereo" : "drop_t");
    if (project != "drop_t" && project != "stereo")
        throw ConfigError("project", "expected drop_t or stereo, got '" + project + "'");
    if (project == "stereo" && chart->space() != Space::S2xR)
        throw ConfigError("project", "stereographic projection needs --space s2r");

    const fs::path target = config.out.value_or(chart->dim() == 3 ? "surface.obj" : "surface.csv");
    const std::string ext = lower_ext(target);
    if (ext != ".obj" && ext != ".csv") throw ConfigError("out", "expected a .obj or .csv path");

    const Mesh mesh = sample_grid(*chart, grid);
    const fs::path obj = ext == ".obj" ? target : sibling(target, ".obj");
    const fs::path csv = ext == ".csv" ? target : sibling(target, ".csv");
    write_csv(mesh, csv);
    if (mesh.dim == 3) {
        write_obj(mesh, obj);
    } else {
        const Projection mode = project == "stereo" ? Projection::Stereographic : Projection::DropT;
        write_obj(project4d(mesh, mode), obj);
    }
    out << "wrote " << obj.string() << " and " << csv.string() << " (" << mesh.vertices.size() << " vertices, "
        << mesh.faces.size() << " quads)\n";
    return 0;
}

void write_report(const SuiteReport& report, const fs::path& path)
{
    if (lower_ext(path) == ".csv")
        write_csv(report, path);
    else
        write_file_atomic(path, report.to_json() + "\n");
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    const ChartPtr chart = build_chart(config);
    const GridSpec grid = build_grid(config, *chart);
    const SuiteTolerances tol = build_tolerances(config);
    const SuiteReport report = run_suite(*chart, grid, tol);
    out << report.to_json() << "\n";
    if (config.report) write_report(report, *config.report);
    return report.pass ? 0 : 1;
}

int cmd_examples(const std::string& which, const std::string& out_dir, std::ostream& out)
{
    std::vector<int> ns;
    if (which == "all")
        ns = {1, 2, 3, 4};
    else if (which.size() == 1 && which[0] >= '1' && which[0] <= '4')
        ns = {which[0] - '0'};
    else
        throw ConfigError("example", "expected 1, 2, 3, 4 or all, got '" + which + "'");

    const fs::path dir = out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("out-dir", "cannot create '" + out_dir + "'");

    ordered_json combined;
    combined["examples"] = ordered_json::array();
    bool pass = true;
    for (const int n : ns) {
        const auto chart = paper_example(n);
        const GridSpec grid = GridSpec::default_for(*chart);
        const Mesh mesh = sample_grid(*chart, grid);
        const std::string stem = "ex" + std::to_string(n);
        write_obj(mesh, dir / (stem + ".obj"));
        write_csv(mesh, dir / (stem + ".csv"));
        const SuiteReport report = run_suite(*chart, grid);
        pass = pass && report.pass;
        ordered_json entry;
        entry["example"] = n;
        entry["obj"] = stem + ".obj";
        entry["csv"] = stem + ".csv";
        entry["report"] = ordered_json::parse(report.to_json());
        combined["examples"].push_back(std::move(entry));
        out << stem << ": " << (report.pass ? "pass" : "FAIL") << "\n";
    }
    combined["pass"] = pass;
    write_file_atomic(dir / "report.json", combined.dump(2) + "\n");
    return pass ? 0 : 1;
}

} // namespace

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config", one_line(e.what()));
    }
    if (!j.is_object()) throw ConfigError("config", "top level must be a JSON object");

    RunConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "space")
                c.space = parse_space(value.get<std::string>());
            else if (key == "theta")
                c.theta = value.get<double>();
            else if (key == "alpha")
                c.alpha = value.get<std::string>();
            else if (key == "curve")
                c.curve = value.get<std::string>();
            else if (key == "plane")
                c.plane = value.get<bool>();
            else if (key == "u_range" || key == "v_range") {
                const auto r = value.get<std::vector<double>>();
                if (r.size() != 2) throw ConfigError(key, "expected [a, b]");
                (key == "u_range" ? c.u_range : c.v_range) = std::pair{r[0], r[1]};
            } else if (key == "nu")
                c.nu = value.get<int>();
            else if (key == "nv")
                c.nv = value.get<int>();
            else if (key == "tol_analytic")
                c.tol_analytic = value.get<double>();
            else if (key == "tol_fd")
                c.tol_fd = value.get<double>();
            else if (key == "out")
                c.out = value.get<std::string>();
            else if (key == "report")
                c.report = value.get<std::string>();
            else if (key == "project")
                c.project = value.get<std::string>();
            else if (key == "perturb")
                c.perturb = value.get<double>();
            else
                throw ConfigError(key, "unknown config key");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(key, one_line(e.what()));
        }
    }
    return c;
}

ChartPtr build_chart(const RunConfig& c)
{
    as_field("theta", [&] {
        validate_theta(c.theta);
        return 0;
    });
    if (!std::isfinite(c.perturb)) throw ConfigError("perturb", "must be finite");

    ChartPtr chart;
    if (c.space == Space::E3) {
        if (c.plane && c.alpha) throw ConfigError("alpha", "--plane takes no alpha profile");
        std::optional<AlphaProfile> alpha;
        if (!c.plane) alpha = as_field("alpha", [&] { return AlphaProfile::parse(c.alpha.value_or("const:1")); });
        if (c.curve && !is_vertical(c.theta))
            throw ConfigError("curve", "a base curve applies to theta = pi/2 (cylinders) only");
        const PlaneCurve curve = c.curve ? plane_curve(*c.curve) : PlaneCurve::circle(1.0);
        CaseIOptions options;
        options.v_range = c.v_range;
        chart = as_field("theta", [&] { return e3_chart(c.theta, alpha, curve, options); });
    } else {
        if (c.alpha) throw ConfigError("alpha", "alpha profiles apply to --space e3 only");
        if (c.plane) throw ConfigError("plane", "--plane applies to --space e3 only");
        if (c.space == Space::S2xR) {
            const SphereCurve f = as_field("curve", [&] {
                return c.curve ? sphere_curve(*c.curve) : SphereCurve::great_circle();
            });
            chart = as_field("curve", [&] { return s2r_chart(c.theta, f); });
        } else {
            const HyperbolicCurve f = as_field("curve", [&] {
                return c.curve ? hyperbolic_curve(*c.curve) : HyperbolicCurve::geodesic();
            });
            chart = as_field("curve", [&] { return h2r_chart(c.theta, f); });
        }
    }
    if (c.perturb != 0.0) chart = std::make_shared<PerturbedChart>(chart, c.perturb);
    return chart;
}

GridSpec build_grid(const RunConfig& c, const Chart& chart)
{
    GridSpec g = GridSpec::default_for(chart);
    if (c.u_range) {
        if (!(c.u_range->first < c.u_range->second)) throw ConfigError("u-range", "needs a < b");
        g.u_min = c.u_range->first;
        g.u_max = c.u_range->second;
    }
    if (c.v_range) {
        if (!(c.v_range->first < c.v_range->second)) throw ConfigError("v-range", "needs a < b");
        g.v_min = c.v_range->first;
        g.v_max = c.v_range->second;
    }
    if (c.nu) {
        if (*c.nu < 1) throw ConfigError("nu", "must be at least 1");
        g.nu = *c.nu;
    }
    if (c.nv) {
        if (*c.nv < 1) throw ConfigError("nv", "must be at least 1");
        g.nv = *c.nv;
    }
    as_field("grid", [&] {
        g.validate();
        return 0;
    });
    return g;
}

SuiteTolerances build_tolerances(const RunConfig& c)
{
    if (!(c.tol_analytic > 0.0)) throw ConfigError("tol-analytic", "must be positive");
    if (!(c.tol_fd > 0.0)) throw ConfigError("tol-fd", "must be positive");
    SuiteTolerances t;
    t.analytic = c.tol_analytic;
    t.fd = c.tol_fd;
    return t;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constant angle surfaces: generate, verify, reproduce examples", "cas"};
    app.require_subcommand(1);

    Flags gen_flags, ver_flags;
    CLI::App* gen = app.add_subcommand("generate", "sample a chart and write OBJ / CSV");
    add_run_flags(*gen, gen_flags);
    CLI::App* ver = app.add_subcommand("verify", "run the verification suite, JSON report on stdout");
    add_run_flags(*ver, ver_flags);
    std::string which;
    std::string out_dir = ".";
    CLI::App* ex = app.add_subcommand("examples", "reproduce the four example surfaces");
    ex->add_option("which", which, "1 | 2 | 3 | 4 | all")->required();
    ex->add_option("--out-dir", out_dir, "directory for exN.obj, exN.csv and report.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: args: " << one_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (*gen) return cmd_generate(resolve(gen_flags), out);
        if (*ver) return cmd_verify(resolve(ver_flags), out);
        return cmd_examples(which, out_dir, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.field() << ": " << one_line(e.what()) << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << runtime_field(e.code()) << ": " << one_line(e.what()) << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: run: " << one_line(e.what()) << "\n";
        return 3;
    }
}

} // namespace cas
