#include "cas/verify.hpp"

#include "cas/diffgeo.hpp"
#include "cas/error.hpp"
#include "cas/generators.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace cas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Accumulator {
public:
    Accumulator(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

    void add(double residual, double u, double v)
    {
        if (std::isnan(residual)) residual = kInf;
        ++n_;
        if (n_ == 1 || residual > max_) {
            max_ = residual;
            u_ = u;
            v_ = v;
        }
    }

    long count() const { return n_; }

    CheckResult finish() const
    {
        if (n_ == 0) throw Error(ErrorCode::EmptyGrid, name_ + ": no admissible grid point");
        CheckResult r;
        r.name = name_;
        r.max_residual = max_;
        r.tol = tol_;
        r.pass = max_ <= tol_;
        r.n_samples = n_;
        r.worst_u = u_;
        r.worst_v = v_;
        return r;
    }

private:
    std::string name_;
    double tol_;
    long n_ = 0;
    double max_ = 0.0;
    double u_ = 0.0;
    double v_ = 0.0;
};

// Calls fn(u, v) on every admissible node of the grid. Nodes whose stencil
// reaches the singular set (SingularPoint thrown by fn) are skipped.
void for_each_node(const Chart& chart, const GridSpec& grid, const std::function<void(double, double)>& fn)
{
    grid.validate();
    for (int i = 0; i < grid.nu; ++i) {
        const double u = grid.u_at(i);
        for (int j = 0; j < grid.nv; ++j) {
            const double v = grid.v_at(j);
            if (!chart.admissible(u, v, grid.exclusion)) continue;
            try {
                fn(u, v);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SingularPoint) throw;
            }
        }
    }
}

const CaseIChart& require_case1(const Chart& chart, const char* check)
{
    const auto* c = dynamic_cast<const CaseIChart*>(&chart);
    if (!c)
        throw Error(ErrorCode::UnsupportedChart,
                    std::string(check) + " needs a Case I chart, got " + to_string(chart.kind()));
    return *c;
}

double dist(Vec4 a, Vec4 b) { return norm(a - b); }

double max_abs_component(Vec4 a)
{
    return std::max({std::abs(a.x1), std::abs(a.x2), std::abs(a.x3), std::abs(a.t)});
}

double cot(double theta) { return std::cos(theta) / std::sin(theta); }

Vec4 r_vv_model(const Jet2& j, const ClosedFormData& cf, Vec4 n, double theta, double sign)
{
    const double b2l = cf.beta * cf.beta * cf.lambda;
    return (cf.beta_v / cf.beta) * j.r_v + (-sign * b2l * cot(theta)) * j.r_u + (sign * b2l) * n;
}

CheckResult failed(const std::string& name, double tol, const std::string& message)
{
    CheckResult r;
    r.name = name;
    r.max_residual = kInf;
    r.tol = tol;
    r.pass = false;
    r.worst_u = kNaN;
    r.worst_v = kNaN;
    r.error = message;
    return r;
}

struct Stats {
    double mean = 0.0;
    double stdev = 0.0;
    double max_abs = 0.0;
    double worst_u = 0.0, worst_v = 0.0; // largest deviation from the mean
};

Stats mean_curvature_stats(const Chart& chart, const GridSpec& grid, long& n)
{
    std::vector<std::array<double, 3>> samples;
    for_each_node(chart, grid, [&](double u, double v) {
        samples.push_back({u, v, mean_curvature(chart, chart.jet(u, v))});
    });
    n = static_cast<long>(samples.size());
    if (samples.empty()) throw Error(ErrorCode::EmptyGrid, "classification: no admissible grid point");
    Stats s;
    for (const auto& p : samples) s.mean += p[2];
    s.mean /= static_cast<double>(samples.size());
    double dev = -1.0;
    for (const auto& p : samples) {
        const double d = std::abs(p[2] - s.mean);
        s.stdev += d * d;
        s.max_abs = std::max(s.max_abs, std::abs(p[2]));
        if (d > dev) {
            dev = d;
            s.worst_u = p[0];
            s.worst_v = p[1];
        }
    }
    s.stdev = std::sqrt(s.stdev / static_cast<double>(samples.size()));
    return s;
}

bool is_case1(const Chart& c) { return c.kind() == ChartKind::CaseI; }
bool is_plane(const Chart& c) { return c.kind() == ChartKind::Plane; }

bool classifiable(const Chart& c)
{
    if (is_case1(c) || is_plane(c)) return true;
    if (const auto* cyl = dynamic_cast<const CylinderChart*>(&c))
        return cyl->curve().shape != PlaneCurve::Shape::Other;
    return false;
}

} // namespace

ChartDescriptor describe(const Chart& chart)
{
    return {chart.space(), chart.kind(), chart.theta(), chart.detail()};
}

CheckResult check_constant_angle(const Chart& chart, const GridSpec& grid, double tol)
{
    Accumulator acc("constant_angle", tol);
    const double c = std::cos(chart.theta());
    const Vec4 k = fixed_direction(chart.space());
    for_each_node(chart, grid, [&](double u, double v) {
        const Vec4 n = normal(chart, chart.jet(u, v));
        acc.add(std::abs(ambient_dot(chart.space(), n, k) - c), u, v);
    });
    return acc.finish();
}

std::array<CheckResult, 3> check_structural_pdes(const Chart& chart, const GridSpec& grid, double tol)
{
    const CaseIChart& c1 = require_case1(chart, "structural equations");
    Accumulator uu("structural_r_uu", tol), uv("structural_r_uv", tol), vv("structural_r_vv", tol);
    for_each_node(chart, grid, [&](double u, double v) {
        const Jet2 j = chart.jet(u, v);
        const ClosedFormData cf = c1.closed_form(u, v);
        const Vec4 n = normal(chart, j);
        uu.add(norm(j.r_uu), u, v);
        uv.add(dist(j.r_uv, (cf.beta_u / cf.beta) * j.r_v), u, v);
        vv.add(dist(j.r_vv, r_vv_model(j, cf, n, c1.theta(), 1.0)), u, v);
    });
    return {uu.finish(), uv.finish(), vv.finish()};
}

double r_vv_flipped_sign_residual(const Chart& chart, double u, double v)
{
    const CaseIChart& c1 = require_case1(chart, "structural equations");
    const Jet2 j = chart.jet(u, v);
    return dist(j.r_vv, r_vv_model(j, c1.closed_form(u, v), normal(chart, j), c1.theta(), -1.0));
}

std::array<CheckResult, 2> check_ode_residuals(double theta, const AlphaProfile& alpha, const GridSpec& grid,
                                               double tol, OdeOptions options)
{
    validate_theta(theta);
    if (is_horizontal(theta) || is_vertical(theta))
        throw Error(ErrorCode::WrongCase, "structure ODEs need theta outside {0, pi/2}");
    grid.validate();
    const double ct = cot(theta);
    Accumulator rb("ode_beta", tol), rl("ode_lambda", tol);
    for (int i = 0; i < grid.nu; ++i) {
        const double u = grid.u_at(i);
        for (int jv = 0; jv < grid.nv; ++jv) {
            const double v = grid.v_at(jv);
            if (!alpha.contains(v)) continue;
            double lambda = 0.0, lambda_u = 0.0, beta = 1.0, beta_u = 0.0;
            if (options.branch == LambdaBranch::Closed) {
                if (std::abs(u + alpha.value(v)) < grid.exclusion) continue;
                const ClosedFormData cf = closed_form_lambda_beta(theta, alpha, u, v, grid.exclusion);
                lambda = cf.lambda;
                lambda_u = cf.lambda_u;
                beta = cf.beta;
                beta_u = cf.beta_u;
            }
            lambda += options.lambda_shift;
            const double t19 = beta * lambda * ct;
            const double t21 = lambda * lambda * ct;
            rb.add(std::abs(beta_u - t19) / std::max({1.0, std::abs(beta_u), std::abs(t19)}), u, v);
            rl.add(std::abs(lambda_u + t21) / std::max({1.0, std::abs(lambda_u), std::abs(t21)}), u, v);
        }
    }
    return {rb.finish(), rl.finish()};
}

std::array<CheckResult, 3> check_weingarten(const Chart& chart, const GridSpec& grid, double tol)
{
    const auto* c1 = dynamic_cast<const CaseIChart*>(&chart);
    if (!c1 && !is_plane(chart))
        throw Error(ErrorCode::UnsupportedChart, "Weingarten check needs a Case I or plane chart, got "
                                                     + to_string(chart.kind()));
    Accumulator nu("weingarten_N_u", tol), nv("weingarten_N_v", tol), lr("lambda_recovery", tol);
    for_each_node(chart, grid, [&](double u, double v) {
        const double h = kNormalFdStep * std::max({1.0, std::abs(u), std::abs(v)});
        const auto n_at = [&](double uu, double vv) { return normal(chart, chart.jet(uu, vv)); };
        const Vec4 n_u = (1.0 / (2.0 * h)) * (n_at(u + h, v) - n_at(u - h, v));
        const Vec4 n_v = (1.0 / (2.0 * h)) * (n_at(u, v + h) - n_at(u, v - h));
        const Jet2 j = chart.jet(u, v);
        const double lambda = c1 ? c1->closed_form(u, v).lambda : 0.0;
        const double lambda_hat = -dot4(n_v, j.r_v) / dot4(j.r_v, j.r_v);
        nu.add(norm(n_u), u, v);
        nv.add(norm(n_v + lambda * j.r_v), u, v);
        lr.add(std::abs(lambda_hat - lambda), u, v);
    });
    return {nu.finish(), nv.finish(), lr.finish()};
}

std::vector<CheckResult> check_curvatures(const Chart& chart, const GridSpec& grid, double tol_K,
                                          double tol_analytic)
{
    const double c = std::cos(chart.theta());
    double target = 0.0;
    if (chart.space() == Space::S2xR) target = c * c;
    if (chart.space() == Space::H2xR) target = -c * c;

    Accumulator ki("gauss_curvature_intrinsic", tol_K);
    for_each_node(chart, grid, [&](double u, double v) {
        ki.add(std::abs(gauss_curvature_brioschi(chart, u, v) - target), u, v);
    });
    std::vector<CheckResult> out{ki.finish()};
    if (chart.space() != Space::E3) return out;

    Accumulator ke("gauss_curvature_extrinsic", tol_analytic);
    for_each_node(chart, grid, [&](double u, double v) {
        ke.add(std::abs(gauss_curvature_extrinsic(chart, chart.jet(u, v))), u, v);
    });
    out.push_back(ke.finish());

    if (const auto* c1 = dynamic_cast<const CaseIChart*>(&chart)) {
        Accumulator hf("mean_curvature_formula", tol_analytic);
        for_each_node(chart, grid, [&](double u, double v) {
            const Jet2 j = chart.jet(u, v);
            const double beta = c1->closed_form(u, v).beta;
            const double g = fundamental_forms(chart, j).g;
            hf.add(std::abs(mean_curvature(chart, j) - g / (2.0 * beta * beta)), u, v);
        });
        out.push_back(hf.finish());
    }
    return out;
}

CheckResult check_classification(const Chart& chart, const GridSpec& grid, double tol)
{
    if (chart.space() != Space::E3 || !classifiable(chart))
        throw Error(ErrorCode::UnsupportedChart, "classification has no statement for " + to_string(chart.kind())
                                                     + " chart " + chart.detail());
    long n = 0;
    const Stats s = mean_curvature_stats(chart, grid, n);
    double residual = 0.0;
    const auto* cyl = dynamic_cast<const CylinderChart*>(&chart);
    if (is_plane(chart) || (cyl && cyl->curve().shape == PlaneCurve::Shape::Line)) {
        residual = s.max_abs; // minimal
    } else if (cyl) {
        residual = s.stdev + std::max(0.0, kNonCmcSpread - std::abs(s.mean)); // non-zero CMC
    } else {
        residual = std::max(0.0, kNonCmcSpread - s.stdev); // Case I is never CMC
    }
    CheckResult r;
    r.name = "classification";
    r.max_residual = residual;
    r.tol = tol;
    r.pass = residual <= tol;
    r.n_samples = n;
    r.worst_u = s.worst_u;
    r.worst_v = s.worst_v;
    return r;
}

CheckResult check_oracle_agreement(const Chart& chart, const GridSpec& grid, double tol)
{
    Accumulator acc("oracle_agreement", tol);
    for_each_node(chart, grid, [&](double u, double v) {
        const Jet2 fd = fd_jet(chart, u, v);
        const Jet2 an = chart.jet(u, v);
        const double d = std::max({max_abs_component(an.r - fd.r), max_abs_component(an.r_u - fd.r_u),
                                   max_abs_component(an.r_v - fd.r_v), max_abs_component(an.r_uu - fd.r_uu),
                                   max_abs_component(an.r_uv - fd.r_uv), max_abs_component(an.r_vv - fd.r_vv)});
        acc.add(d, u, v);
    });
    return acc.finish();
}

std::vector<std::string> applicable_checks(const Chart& chart)
{
    std::vector<std::string> names{"constant_angle"};
    if (is_case1(chart)) {
        names.insert(names.end(), {"structural_r_uu", "structural_r_uv", "structural_r_vv", "ode_beta", "ode_lambda"});
    }
    if (is_case1(chart) || is_plane(chart))
        names.insert(names.end(), {"weingarten_N_u", "weingarten_N_v", "lambda_recovery"});
    names.push_back("gauss_curvature_intrinsic");
    if (chart.space() == Space::E3) names.push_back("gauss_curvature_extrinsic");
    if (is_case1(chart)) names.push_back("mean_curvature_formula");
    if (chart.space() == Space::E3 && classifiable(chart)) names.push_back("classification");
    names.push_back("oracle_agreement");
    return names;
}

SuiteReport run_suite(const Chart& chart, const GridSpec& grid, const SuiteTolerances& tol)
{
    SuiteReport rep;
    rep.chart = describe(chart);
    rep.grid = grid;

    const auto run = [&](std::initializer_list<std::pair<const char*, double>> names, auto&& body) {
        try {
            for (const CheckResult& r : body()) rep.checks.push_back(r);
        } catch (const std::exception& e) {
            for (const auto& [name, t] : names) rep.checks.push_back(failed(name, t, e.what()));
        }
    };
    const auto one = [](CheckResult r) { return std::vector<CheckResult>{std::move(r)}; };
    const auto many = [](const auto& rs) { return std::vector<CheckResult>(rs.begin(), rs.end()); };

    run({{"constant_angle", tol.analytic}}, [&] { return one(check_constant_angle(chart, grid, tol.analytic)); });
    if (const auto* c1 = dynamic_cast<const CaseIChart*>(&chart)) {
        run({{"structural_r_uu", tol.analytic}, {"structural_r_uv", tol.analytic}, {"structural_r_vv", tol.analytic}},
            [&] { return many(check_structural_pdes(chart, grid, tol.analytic)); });
        run({{"ode_beta", tol.ode}, {"ode_lambda", tol.ode}},
            [&] { return many(check_ode_residuals(c1->theta(), c1->alpha(), grid, tol.ode)); });
    }
    if (is_case1(chart) || is_plane(chart)) {
        run({{"weingarten_N_u", tol.fd}, {"weingarten_N_v", tol.fd}, {"lambda_recovery", tol.fd}},
            [&] { return many(check_weingarten(chart, grid, tol.fd)); });
    }
    {
        try {
            for (CheckResult& r : check_curvatures(chart, grid, tol.brioschi, tol.analytic))
                rep.checks.push_back(std::move(r));
        } catch (const std::exception& e) {
            rep.checks.push_back(failed("gauss_curvature_intrinsic", tol.brioschi, e.what()));
            if (chart.space() == Space::E3)
                rep.checks.push_back(failed("gauss_curvature_extrinsic", tol.analytic, e.what()));
            if (is_case1(chart)) rep.checks.push_back(failed("mean_curvature_formula", tol.analytic, e.what()));
        }
    }
    if (chart.space() == Space::E3 && classifiable(chart))
        run({{"classification", tol.analytic}}, [&] { return one(check_classification(chart, grid, tol.analytic)); });
    run({{"oracle_agreement", tol.fd}}, [&] { return one(check_oracle_agreement(chart, grid, tol.fd)); });

    rep.pass = !rep.checks.empty()
            && std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& r) { return r.pass; });
    return rep;
}

const CheckResult* SuiteReport::worst_failure() const
{
    const CheckResult* worst = nullptr;
    double ratio = -1.0;
    for (const CheckResult& r : checks) {
        if (r.pass) continue;
        const double q = r.max_residual / r.tol;
        if (!worst || q > ratio) {
            worst = &r;
            ratio = q;
        }
    }
    return worst;
}

namespace {

nlohmann::ordered_json number_or_null(double x)
{
    if (std::isfinite(x)) return x;
    return nullptr;
}

} // namespace

std::string SuiteReport::to_json(int indent) const
{
    using json = nlohmann::ordered_json;
    json grid_json = {{"u_min", grid.u_min}, {"u_max", grid.u_max}, {"v_min", grid.v_min}, {"v_max", grid.v_max},
                      {"nu", grid.nu},       {"nv", grid.nv},       {"exclusion", grid.exclusion}};
    json chart_json = {{"space", to_string(chart.space)},
                       {"kind", to_string(chart.kind)},
                       {"theta", chart.theta},
                       {"detail", chart.detail},
                       {"grid", grid_json}};
    json checks_json = json::array();
    for (const CheckResult& r : checks) {
        json c = {{"name", r.name},
                  {"max_residual", number_or_null(r.max_residual)},
                  {"tol", r.tol},
                  {"pass", r.pass},
                  {"n_samples", r.n_samples},
                  {"worst_point", json::array({number_or_null(r.worst_u), number_or_null(r.worst_v)})}};
        if (r.error) c["error"] = *r.error;
        checks_json.push_back(std::move(c));
    }
    json doc = {{"chart", chart_json}, {"checks", checks_json}, {"pass", pass}};
    return doc.dump(indent);
}

} // namespace cas
