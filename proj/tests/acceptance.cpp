// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cas/app.hpp"
#include "cas/diffgeo.hpp"
#include "cas/error.hpp"
#include "cas/generators.hpp"
#include "cas/mesh_io.hpp"
#include "cas/verify.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cas;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::vector<std::shared_ptr<const CaseIChart>> case1_charts()
{
    std::vector<std::shared_ptr<const CaseIChart>> out;
    for (int n = 1; n <= 4; ++n) out.push_back(paper_example(n));
    for (double th : {pi / 6, pi / 3, 2 * pi / 3})
        for (const auto& a : {AlphaProfile::constant(1.0), AlphaProfile::linear(), AlphaProfile::cosine()})
            out.push_back(e3_case1_chart(th, a));
    return out;
}

std::vector<ChartPtr> e3_charts()
{
    const auto case1 = case1_charts();
    std::vector<ChartPtr> out(case1.begin(), case1.end());
    out.push_back(e3_plane_chart(0.0));
    out.push_back(e3_plane_chart(pi / 5));
    out.push_back(e3_cylinder_chart(PlaneCurve::circle(1.0)));
    out.push_back(e3_cylinder_chart(PlaneCurve::circle(2.0)));
    out.push_back(e3_cylinder_chart(PlaneCurve::line()));
    return out;
}

std::vector<ChartPtr> all_charts()
{
    std::vector<ChartPtr> out = e3_charts();
    for (double th : {pi / 6, pi / 4, pi / 3}) {
        out.push_back(s2r_chart(th));
        out.push_back(h2r_chart(th));
    }
    return out;
}

std::string name_of(const Chart& c)
{
    std::ostringstream os;
    os << to_string(c.space()) << '/' << to_string(c.kind()) << "(theta=" << c.theta() << ", " << c.detail() << ")";
    return os.str();
}

/// Worst residual / tol over a family of results; the first failure sticks.
struct Worst {
    double residual = 0.0;
    double tol = 1.0;
    std::string where = "-";
    bool pass = true;

    void add(const CheckResult& r, const std::string& who)
    {
        if (!pass) return;
        if (r.pass && r.max_residual / r.tol <= residual / tol) return;
        pass = r.pass;
        residual = r.max_residual;
        tol = r.tol;
        where = who + " " + r.name + (r.error ? " [" + *r.error + "]" : "");
    }
    std::string text() const { return "worst " + sci(residual) + " (tol " + sci(tol) + ") at " + where; }
};

Outcome ac1()
{
    Worst w;
    for (const auto& c : case1_charts()) w.add(check_constant_angle(*c, GridSpec::default_for(*c), 1e-9), name_of(*c));
    return {w.pass, w.text()};
}

Outcome ac2()
{
    Worst wi, we;
    for (const auto& c : e3_charts()) {
        const auto r = check_curvatures(*c, GridSpec::default_for(*c), 1e-4, 1e-9);
        wi.add(r[0], name_of(*c));
        we.add(r[1], name_of(*c));
    }
    return {wi.pass && we.pass, "Brioschi " + wi.text() + "; extrinsic " + we.text()};
}

Outcome ac3()
{
    Worst w;
    for (double th : {pi / 6, pi / 4, pi / 3}) {
        const auto s = s2r_chart(th);
        const auto h = h2r_chart(th);
        w.add(check_curvatures(*s, GridSpec::default_for(*s), 1e-4, 1e-9)[0], name_of(*s));
        w.add(check_curvatures(*h, GridSpec::default_for(*h), 1e-4, 1e-9)[0], name_of(*h));
    }
    return {w.pass, w.text()};
}

Outcome ac4()
{
    Worst ws, wo;
    for (const auto& c : case1_charts()) {
        const GridSpec g = GridSpec::default_for(*c);
        for (const auto& r : check_structural_pdes(*c, g, 1e-9)) ws.add(r, name_of(*c));
        for (const auto& r : check_ode_residuals(c->theta(), c->alpha(), g, 1e-12)) wo.add(r, name_of(*c));
    }
    return {ws.pass && wo.pass, "structural " + ws.text() + "; ODE " + wo.text()};
}

Outcome ac5()
{
    // N_u and lambda-hat from central differences of the analytic normal at
    // random admissible points.
    const double h = kNormalFdStep;
    double worst_nu = 0.0, worst_lambda = 0.0;
    long samples = 0;
    std::mt19937_64 rng(20240605);
    for (const auto& c : case1_charts()) {
        const auto [v0, v1] = c->v_domain();
        std::uniform_real_distribution<double> U(0.0, 2.0), V(v0, v1);
        int taken = 0;
        while (taken < 200) {
            const double u = U(rng), v = V(rng);
            // the central stencil must itself stay admissible
            if (!c->admissible(u - h, v) || !c->admissible(u + h, v) || !c->admissible(u, v - h)
                || !c->admissible(u, v + h) || !c->admissible(u, v))
                continue;
            const auto n = [&](double a, double b) { return normal(*c, c->jet(a, b)); };
            const Vec4 N_u = (1.0 / (2 * h)) * (n(u + h, v) - n(u - h, v));
            const Vec4 N_v = (1.0 / (2 * h)) * (n(u, v + h) - n(u, v - h));
            const Jet2 j = c->jet(u, v);
            const double lambda_hat = -dot4(N_v, j.r_v) / dot4(j.r_v, j.r_v);
            const double lambda = std::tan(c->theta()) / (u + c->alpha().value(v));
            worst_nu = std::max(worst_nu, norm(N_u));
            worst_lambda = std::max(worst_lambda, std::abs(lambda_hat - lambda));
            ++taken;
            ++samples;
        }
    }
    const bool pass = worst_nu <= 1e-6 && worst_lambda <= 1e-6;
    return {pass, "max|N_u| " + sci(worst_nu) + ", max|lambda_hat - lambda| " + sci(worst_lambda) + " over "
                      + std::to_string(samples) + " points (tol 1e-6)"};
}

Outcome ac6()
{
    Worst wh;
    for (const auto& c : case1_charts())
        wh.add(check_curvatures(*c, GridSpec::default_for(*c), 1e-4, 1e-8)[2], name_of(*c));

    double plane_h = 0.0;
    for (double th : {0.0, pi / 5, 1.0}) {
        const auto p = e3_plane_chart(th);
        const auto r = check_classification(*p, GridSpec::default_for(*p), 1e-12);
        plane_h = std::max(plane_h, r.pass ? r.max_residual : std::numeric_limits<double>::infinity());
    }

    bool cyl_ok = true;
    std::string cyl_text;
    for (double R : {1.0, 2.0}) {
        const auto c = e3_cylinder_chart(PlaneCurve::circle(R));
        const GridSpec g = GridSpec::default_for(*c);
        std::vector<double> hs;
        double dev = 0.0;
        for (int i = 0; i < g.nu; ++i)
            for (int k = 0; k < g.nv; ++k) {
                const double H = std::abs(mean_curvature(*c, c->jet(g.u_at(i), g.v_at(k))));
                hs.push_back(H);
                dev = std::max(dev, std::abs(H - 0.5 / R));
            }
        double mean = 0.0;
        for (double H : hs) mean += H;
        mean /= static_cast<double>(hs.size());
        double ss = 0.0;
        for (double H : hs) ss += (H - mean) * (H - mean);
        const double sd = std::sqrt(ss / static_cast<double>(hs.size()));
        cyl_ok = cyl_ok && dev <= 1e-9 && sd <= 1e-9;
        cyl_text += " R=" + std::to_string(static_cast<int>(R)) + ": max||H|-1/(2R)| " + sci(dev) + " sd " + sci(sd) + ";";
    }
    const bool pass = wh.pass && plane_h <= 1e-12 && cyl_ok;
    return {pass, "H-formula " + wh.text() + "; plane max|H| " + sci(plane_h) + ";" + cyl_text};
}

Outcome ac7()
{
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const auto c = paper_example(n);
        for (int i = 0; i <= 4096; ++i) {
            const double v = 2 * pi * i / 4096.0;
            const Vec2 q = gamma_integral(c->alpha(), pi / 4, v, GammaPath::Quadrature);
            const Vec2 e = *gamma_closed_form(c->alpha(), pi / 4, v);
            worst = std::max({worst, std::abs(q.x - e.x), std::abs(q.y - e.y)});
        }
    }
    return {worst <= 1e-9, "max |gamma_quad - gamma_exact| " + sci(worst) + " over 4 x 4097 points (tol 1e-9)"};
}

Outcome ac8()
{
    Worst w;
    long min_samples = std::numeric_limits<long>::max();
    for (const auto& c : all_charts()) {
        const auto r = check_oracle_agreement(*c, GridSpec::default_for(*c), 1e-5);
        min_samples = std::min(min_samples, r.n_samples);
        w.add(r, name_of(*c));
    }
    return {w.pass && min_samples >= 200, w.text() + ", fewest samples " + std::to_string(min_samples)};
}

int quiet_cli(std::vector<std::string> args, std::string* out = nullptr)
{
    args.insert(args.begin(), "cas");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    return code;
}

Outcome ac9()
{
    std::string json;
    const int code = quiet_cli({"verify", "--perturb", "0.01"}, &json);
    const bool angle_fails = json.find("\"name\": \"constant_angle\"") != std::string::npos
                          && code == 1;
    const auto bent = std::make_shared<PerturbedChart>(paper_example(1), 0.01);
    const auto angle = check_constant_angle(*bent, GridSpec::default_for(*bent), 1e-9);
    const auto ode =
        check_ode_residuals(pi / 4, AlphaProfile::constant(1.0), GridSpec{}, 1e-12, {LambdaBranch::Closed, 0.01});
    const bool pass = angle_fails && !angle.pass && !ode[1].pass;
    return {pass, "cli verify --perturb 0.01 exit " + std::to_string(code) + ", constant_angle residual "
                      + sci(angle.max_residual) + "; perturbed-lambda ODE residual " + sci(ode[1].max_residual)
                      + " (both must exceed tol)"};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome ac10()
{
    const fs::path root = fs::temp_directory_path() / "cas_acceptance";
    fs::remove_all(root);
    const fs::path a = root / "a", b = root / "b";
    const int ca = quiet_cli({"examples", "all", "--out-dir", a.string()});
    const int cb = quiet_cli({"examples", "all", "--out-dir", b.string()});
    int compared = 0, differing = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const fs::path other = b / entry.path().filename();
        ++compared;
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) ++differing;
    }
    fs::remove_all(root);
    const bool pass = ca == 0 && cb == 0 && compared == 9 && differing == 0;
    return {pass, std::to_string(compared) + " files compared (4 OBJ, 4 CSV, report.json), " +
                      std::to_string(differing) + " differ; exit codes " + std::to_string(ca) + "/" +
                      std::to_string(cb)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 constant angle", ac1},       {"AC2 flatness", ac2},
        {"AC3 product curvature", ac3},    {"AC4 structural PDEs and ODEs", ac4},
        {"AC5 Weingarten recovery", ac5},  {"AC6 mean curvature", ac6},
        {"AC7 gamma quadrature", ac7},     {"AC8 oracle agreement", ac8},
        {"AC9 negative controls", ac9},    {"AC10 determinism", ac10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
