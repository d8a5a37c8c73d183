#include "cas/generators.hpp"

#include "cas/error.hpp"
#include "cas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cas {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 scaled_gamma(double cos_theta, Vec2 integrals)
{
    // integrals = (int alpha sin, int alpha cos)
    return {-cos_theta * integrals.x, cos_theta * integrals.y};
}

std::optional<Vec2> closed_form_integrals(const AlphaProfile& alpha, double v)
{
    const double s = std::sin(v);
    const double c = std::cos(v);
    switch (alpha.kind()) {
    case AlphaProfile::Kind::Constant: {
        const double k = alpha.constant_value();
        return Vec2{k * (1.0 - c), k * s};
    }
    case AlphaProfile::Kind::Linear: return Vec2{s - v * c, c + v * s - 1.0};
    case AlphaProfile::Kind::Cosine: return Vec2{0.5 * s * s, 0.5 * (v + s * c)};
    case AlphaProfile::Kind::TwoSine: return Vec2{v - s * c, s * s};
    case AlphaProfile::Kind::Tabulated: return std::nullopt;
    }
    return std::nullopt;
}

Vec2 quadrature_integrals(const AlphaProfile& alpha, double a, double b, double tol)
{
    const double is = adaptive_simpson([&](double t) { return alpha.value(t) * std::sin(t); }, a, b, tol);
    const double ic = adaptive_simpson([&](double t) { return alpha.value(t) * std::cos(t); }, a, b, tol);
    return {is, ic};
}

void require_in_profile(const AlphaProfile& alpha, double v)
{
    if (!alpha.contains(v)) {
        std::ostringstream os;
        os << "alpha " << alpha.label() << " is not defined at v = " << v;
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
}

std::string theta_text(double theta)
{
    std::ostringstream os;
    os.precision(17);
    os << theta;
    return os.str();
}

} // namespace

void validate_theta(double theta)
{
    if (!std::isfinite(theta) || theta < 0.0 || theta >= kPi)
        throw Error(ErrorCode::InvalidArgument, "theta = " + theta_text(theta) + " must lie in [0, pi)");
}

bool is_horizontal(double theta) { return std::abs(theta) <= kThetaSnap; }
bool is_vertical(double theta) { return std::abs(theta - 0.5 * kPi) <= kThetaSnap; }

double gamma_base(const AlphaProfile& alpha)
{
    const auto dom = alpha.domain();
    if (dom && !alpha.contains(0.0)) return dom->first;
    return 0.0;
}

std::optional<Vec2> gamma_closed_form(const AlphaProfile& alpha, double theta, double v)
{
    const auto integrals = closed_form_integrals(alpha, v);
    if (!integrals) return std::nullopt;
    return scaled_gamma(std::cos(theta), *integrals);
}

Vec2 gamma_integral(const AlphaProfile& alpha, double theta, double v, GammaPath path)
{
    require_in_profile(alpha, v);
    if (path != GammaPath::Quadrature) {
        if (auto closed = gamma_closed_form(alpha, theta, v)) return *closed;
        if (path == GammaPath::ClosedForm)
            throw Error(ErrorCode::InvalidArgument, "alpha " + alpha.label() + " has no closed-form gamma");
    }
    return scaled_gamma(std::cos(theta), quadrature_integrals(alpha, gamma_base(alpha), v, kGammaQuadratureTol));
}

GammaTable::GammaTable(AlphaProfile alpha, double theta, std::pair<double, double> range, int segments)
    : alpha_(std::move(alpha)), cos_theta_(std::cos(theta))
{
    if (!(range.first < range.second) || segments < 1)
        throw Error(ErrorCode::InvalidArgument, "gamma table: empty range");
    const double base = gamma_base(alpha_);
    double lo = std::min(range.first, base);
    double hi = std::max(range.second, base);
    if (const auto dom = alpha_.domain()) {
        lo = std::max(lo, dom->first);
        hi = std::min(hi, dom->second);
    }
    span_ = hi - lo;
    for (int i = 0; i <= segments; ++i) nodes_.push_back(lo + span_ * i / segments);
    nodes_.back() = hi;
    if (!std::binary_search(nodes_.begin(), nodes_.end(), base))
        nodes_.insert(std::upper_bound(nodes_.begin(), nodes_.end(), base), base);

    cumulative_.assign(nodes_.size(), Vec2{});
    const auto b = static_cast<std::size_t>(
        std::distance(nodes_.begin(), std::lower_bound(nodes_.begin(), nodes_.end(), base)));
    for (std::size_t i = b; i + 1 < nodes_.size(); ++i) {
        const double share = kGammaQuadratureTol * (nodes_[i + 1] - nodes_[i]) / span_;
        cumulative_[i + 1] = cumulative_[i] + integrate(nodes_[i], nodes_[i + 1], share);
    }
    for (std::size_t i = b; i > 0; --i) {
        const double share = kGammaQuadratureTol * (nodes_[i] - nodes_[i - 1]) / span_;
        cumulative_[i - 1] = cumulative_[i] + integrate(nodes_[i], nodes_[i - 1], share);
    }
}

Vec2 GammaTable::integrate(double a, double b, double tol) const
{
    return quadrature_integrals(alpha_, a, b, std::max(tol, 1e-15));
}

Vec2 GammaTable::operator()(double v) const
{
    require_in_profile(alpha_, v);
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    std::size_t k = static_cast<std::size_t>(std::distance(nodes_.begin(), it));
    if (k == nodes_.size()) {
        k = nodes_.size() - 1;
    } else if (k > 0 && (v - nodes_[k - 1]) < (nodes_[k] - v)) {
        --k;
    }
    Vec2 sum = cumulative_[k];
    if (v != nodes_[k]) sum = sum + integrate(nodes_[k], v, kGammaQuadratureTol * std::abs(v - nodes_[k]) / span_);
    return scaled_gamma(cos_theta_, sum);
}

ClosedFormData closed_form_lambda_beta(double theta, const AlphaProfile& alpha, double u, double v,
                                       double sing_eps)
{
    require_in_profile(alpha, v);
    const double w = u + alpha.value(v);
    if (!(std::abs(w) >= sing_eps)) {
        std::ostringstream os;
        os << "u + alpha(v) = " << w << " at (u, v) = (" << u << ", " << v << ")";
        throw Error(ErrorCode::SingularPoint, os.str());
    }
    const double c = std::cos(theta);
    const double t = std::tan(theta);
    ClosedFormData d;
    d.phi = c;
    d.lambda = t / w;
    d.beta = c * w;
    d.lambda_u = -t / (w * w);
    d.beta_u = c;
    d.beta_v = c * alpha.derivative(v);
    return d;
}

// --- Case I ------------------------------------------------------------------

CaseIChart::CaseIChart(double theta, AlphaProfile alpha, CaseIOptions options)
    : Chart(options.sing_eps),
      theta_(theta),
      cos_(std::cos(theta)),
      sin_(std::sin(theta)),
      alpha_(std::move(alpha)),
      path_(options.gamma_path)
{
    validate_theta(theta);
    if (is_horizontal(theta) || is_vertical(theta))
        throw Error(ErrorCode::WrongCase,
                    "theta = " + theta_text(theta) + " is a special case; use the plane or cylinder generator");
    if (const auto dom = alpha_.domain())
        v_range_ = *dom;
    else
        v_range_ = {0.0, 2.0 * kPi};
    if (options.v_range) v_range_ = *options.v_range;

    const bool closed = alpha_.kind() != AlphaProfile::Kind::Tabulated;
    if (path_ == GammaPath::ClosedForm && !closed)
        throw Error(ErrorCode::InvalidArgument, "alpha " + alpha_.label() + " has no closed-form gamma");
    if (path_ == GammaPath::Quadrature || !closed) {
        path_ = GammaPath::Quadrature;
        table_.emplace(alpha_, theta_, v_range_);
    } else {
        path_ = GammaPath::ClosedForm;
    }
}

std::pair<double, double> CaseIChart::v_domain() const { return v_range_; }

bool CaseIChart::in_domain(double v) const { return alpha_.contains(v); }

Vec2 CaseIChart::gamma(double v) const
{
    if (table_) return (*table_)(v);
    return *gamma_closed_form(alpha_, theta_, v);
}

ClosedFormData CaseIChart::closed_form(double u, double v) const
{
    return closed_form_lambda_beta(theta_, alpha_, u, v, sing_eps());
}

double CaseIChart::singular_indicator(double u, double v) const { return u + alpha_.value(v); }

Vec4 CaseIChart::eval(double u, double v) const
{
    const Vec2 g = gamma(v);
    return {u * cos_ * std::cos(v) + g.x, u * cos_ * std::sin(v) + g.y, u * sin_, 0.0};
}

Jet2 CaseIChart::compute_jet(double u, double v) const
{
    const double cv = std::cos(v);
    const double sv = std::sin(v);
    const double w = u + alpha_.value(v);
    const double dw = alpha_.derivative(v);
    Jet2 j;
    j.dim = 3;
    j.r = eval(u, v);
    j.r_u = {cos_ * cv, cos_ * sv, sin_, 0.0};
    j.r_v = {-w * cos_ * sv, w * cos_ * cv, 0.0, 0.0};
    j.r_uu = {};
    j.r_uv = {-cos_ * sv, cos_ * cv, 0.0, 0.0};
    j.r_vv = {cos_ * (-dw * sv - w * cv), cos_ * (dw * cv - w * sv), 0.0, 0.0};
    return j;
}

// --- Plane -------------------------------------------------------------------

PlaneChart::PlaneChart(double theta, double sing_eps)
    : Chart(sing_eps), theta_(theta), cos_(std::cos(theta)), sin_(std::sin(theta))
{
    validate_theta(theta);
    if (is_horizontal(theta)) {
        theta_ = 0.0;
        cos_ = 1.0;
        sin_ = 0.0;
    }
}

Vec4 PlaneChart::eval(double u, double v) const { return {u * cos_, v, u * sin_, 0.0}; }

Jet2 PlaneChart::compute_jet(double u, double v) const
{
    Jet2 j;
    j.dim = 3;
    j.r = eval(u, v);
    j.r_u = {cos_, 0.0, sin_, 0.0};
    j.r_v = {0.0, 1.0, 0.0, 0.0};
    return j;
}

// --- Cylinder ----------------------------------------------------------------

CylinderChart::CylinderChart(PlaneCurve gamma, double sing_eps) : Chart(sing_eps), gamma_(std::move(gamma))
{
    if (!gamma_.value || !gamma_.d1 || !gamma_.d2)
        throw Error(ErrorCode::InvalidArgument, "cylinder: base curve is incomplete");
    gamma_.validate();
}

double CylinderChart::theta() const { return 0.5 * kPi; }

Vec4 CylinderChart::eval(double u, double v) const
{
    const Vec2 g = gamma_.value(v);
    return {g.x, g.y, u, 0.0};
}

Jet2 CylinderChart::compute_jet(double u, double v) const
{
    const Vec2 d1 = gamma_.d1(v);
    const Vec2 d2 = gamma_.d2(v);
    Jet2 j;
    j.dim = 3;
    j.r = eval(u, v);
    j.r_u = {0.0, 0.0, 1.0, 0.0};
    j.r_v = {d1.x, d1.y, 0.0, 0.0};
    j.r_vv = {d2.x, d2.y, 0.0, 0.0};
    return j;
}

// --- S^2 x R -----------------------------------------------------------------

SphereProductChart::SphereProductChart(double theta, SphereCurve f, double sing_eps)
    : Chart(sing_eps), theta_(theta), cos_(std::cos(theta)), sin_(std::sin(theta)), f_(std::move(f))
{
    validate_theta(theta);
    if (!f_.f || !f_.d1 || !f_.d2 || !f_.d3)
        throw Error(ErrorCode::InvalidArgument, "s2r: curve is incomplete");
    const auto [a, b] = v_domain();
    for (int i = 0; i <= 64; ++i) {
        const double v = a + (b - a) * i / 64.0;
        if (std::abs(norm(f_.f(v)) - 1.0) > kCurveTol)
            throw Error(ErrorCode::CurveNotOnSphere, "s2r: |f(" + std::to_string(v) + ")| != 1");
        if (std::abs(norm(f_.d1(v)) - 1.0) > kCurveTol)
            throw Error(ErrorCode::CurveNotUnitSpeed, "s2r: |f'(" + std::to_string(v) + ")| != 1");
    }
}

Vec4 SphereProductChart::eval(double u, double v) const
{
    const double a = u * cos_;
    const Vec3 f = f_.f(v);
    const Vec3 p = std::cos(a) * f + std::sin(a) * cross3(f, f_.d1(v));
    return lift(p, u * sin_);
}

double SphereProductChart::singular_indicator(double u, double v) const
{
    const double a = u * cos_;
    const Vec3 f = f_.f(v);
    const Vec3 d1 = f_.d1(v);
    const Vec3 rv = std::cos(a) * d1 + std::sin(a) * cross3(f, f_.d2(v));
    return dot3(rv, d1);
}

Jet2 SphereProductChart::compute_jet(double u, double v) const
{
    const double a = u * cos_;
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const Vec3 f = f_.f(v);
    const Vec3 f1 = f_.d1(v);
    const Vec3 f2 = f_.d2(v);
    const Vec3 f3 = f_.d3(v);
    const Vec3 n = cross3(f, f1);
    const Vec3 n1 = cross3(f, f2);
    const Vec3 n2 = cross3(f1, f2) + cross3(f, f3);
    Jet2 j;
    j.dim = 4;
    j.r = lift(ca * f + sa * n, u * sin_);
    j.r_u = lift(cos_ * (-sa * f + ca * n), sin_);
    j.r_v = lift(ca * f1 + sa * n1);
    j.r_uu = lift(-cos_ * cos_ * (ca * f + sa * n));
    j.r_uv = lift(cos_ * (-sa * f1 + ca * n1));
    j.r_vv = lift(ca * f2 + sa * n2);
    return j;
}

// --- H^2 x R -----------------------------------------------------------------

namespace {

Vec3 lx(LorentzVec3 a, LorentzVec3 b) { return from_lorentz(lorentz_cross(a, b)); }

} // namespace

HyperbolicProductChart::HyperbolicProductChart(double theta, HyperbolicCurve f, double sing_eps)
    : Chart(sing_eps), theta_(theta), cos_(std::cos(theta)), sin_(std::sin(theta)), f_(std::move(f))
{
    validate_theta(theta);
    if (!f_.f || !f_.d1 || !f_.d2 || !f_.d3)
        throw Error(ErrorCode::InvalidArgument, "h2r: curve is incomplete");
    const auto [a, b] = v_domain();
    for (int i = 0; i <= 64; ++i) {
        const double v = a + (b - a) * i / 64.0;
        const LorentzVec3 p = f_.f(v);
        const LorentzVec3 d = f_.d1(v);
        if (std::abs(lorentz_dot(p, p) + 1.0) > kCurveTol * std::max(1.0, p.x3 * p.x3) || !(p.x3 > 0.0))
            throw Error(ErrorCode::CurveNotOnHyperboloid, "h2r: f(" + std::to_string(v) + ") is off the hyperboloid");
        if (std::abs(lorentz_dot(d, d) - 1.0) > kCurveTol * std::max(1.0, d.x3 * d.x3))
            throw Error(ErrorCode::CurveNotUnitSpeed, "h2r: <f', f'>_L != 1 at v = " + std::to_string(v));
    }
}

std::pair<double, double> HyperbolicProductChart::v_domain() const { return {-kPi, kPi}; }

Vec4 HyperbolicProductChart::eval(double u, double v) const
{
    const double a = u * cos_;
    const LorentzVec3 f = f_.f(v);
    const Vec3 p = std::cosh(a) * from_lorentz(f) + std::sinh(a) * lx(f, f_.d1(v));
    return lift(p, u * sin_);
}

double HyperbolicProductChart::singular_indicator(double u, double v) const
{
    const double a = u * cos_;
    const LorentzVec3 f = f_.f(v);
    const LorentzVec3 d1 = f_.d1(v);
    const Vec3 rv = std::cosh(a) * from_lorentz(d1) + std::sinh(a) * lx(f, f_.d2(v));
    return lorentz_dot(to_lorentz(rv), d1);
}

Jet2 HyperbolicProductChart::compute_jet(double u, double v) const
{
    const double a = u * cos_;
    const double ca = std::cosh(a);
    const double sa = std::sinh(a);
    const LorentzVec3 fl = f_.f(v);
    const LorentzVec3 f1l = f_.d1(v);
    const LorentzVec3 f2l = f_.d2(v);
    const LorentzVec3 f3l = f_.d3(v);
    const Vec3 f = from_lorentz(fl);
    const Vec3 f1 = from_lorentz(f1l);
    const Vec3 f2 = from_lorentz(f2l);
    const Vec3 n = lx(fl, f1l);
    const Vec3 n1 = lx(fl, f2l);
    const Vec3 n2 = lx(f1l, f2l) + lx(fl, f3l);
    Jet2 j;
    j.dim = 4;
    j.r = lift(ca * f + sa * n, u * sin_);
    j.r_u = lift(cos_ * (sa * f + ca * n), sin_);
    j.r_v = lift(ca * f1 + sa * n1);
    j.r_uu = lift(cos_ * cos_ * (ca * f + sa * n));
    j.r_uv = lift(cos_ * (sa * f1 + ca * n1));
    j.r_vv = lift(ca * f2 + sa * n2);
    return j;
}

// --- perturbation ------------------------------------------------------------

PerturbedChart::PerturbedChart(ChartPtr base, double eps)
    : Chart(base ? base->sing_eps() : 1e-3), base_(std::move(base)), eps_(eps)
{
    if (!base_) throw Error(ErrorCode::InvalidArgument, "perturbed chart needs a base chart");
    if (!std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "perturbation must be finite");
}

std::string PerturbedChart::detail() const
{
    std::ostringstream os;
    os << base_->detail() << "+perturb:" << eps_;
    return os.str();
}

bool PerturbedChart::in_domain(double v) const { return base_->defined_at(v); }

namespace {

Vec4 along_k(Space space, double s)
{
    return space == Space::E3 ? Vec4{0.0, 0.0, s, 0.0} : Vec4{0.0, 0.0, 0.0, s};
}

} // namespace

Vec4 PerturbedChart::eval(double u, double v) const
{
    return base_->eval(u, v) + along_k(space(), eps_ * u * u);
}

Jet2 PerturbedChart::compute_jet(double u, double v) const
{
    Jet2 j = base_->jet(u, v);
    j.r = j.r + along_k(space(), eps_ * u * u);
    j.r_u = j.r_u + along_k(space(), 2.0 * eps_ * u);
    j.r_uu = j.r_uu + along_k(space(), 2.0 * eps_);
    return j;
}

// --- factories ---------------------------------------------------------------

std::shared_ptr<const CaseIChart> e3_case1_chart(double theta, AlphaProfile alpha, CaseIOptions options)
{
    return std::make_shared<const CaseIChart>(theta, std::move(alpha), options);
}

std::shared_ptr<const PlaneChart> e3_plane_chart(double theta) { return std::make_shared<const PlaneChart>(theta); }

std::shared_ptr<const CylinderChart> e3_cylinder_chart(PlaneCurve gamma)
{
    return std::make_shared<const CylinderChart>(std::move(gamma));
}

std::shared_ptr<const SphereProductChart> s2r_chart(double theta, SphereCurve f)
{
    return std::make_shared<const SphereProductChart>(theta, std::move(f));
}

std::shared_ptr<const HyperbolicProductChart> h2r_chart(double theta, HyperbolicCurve f)
{
    return std::make_shared<const HyperbolicProductChart>(theta, std::move(f));
}

std::shared_ptr<const CaseIChart> paper_example(int n)
{
    CaseIOptions opts;
    opts.gamma_path = GammaPath::ClosedForm;
    switch (n) {
    case 1: return e3_case1_chart(kPi / 4, AlphaProfile::constant(1.0), opts);
    case 2: return e3_case1_chart(kPi / 4, AlphaProfile::linear(), opts);
    case 3: return e3_case1_chart(kPi / 4, AlphaProfile::cosine(), opts);
    case 4: return e3_case1_chart(kPi / 4, AlphaProfile::two_sine(), opts);
    default: throw Error(ErrorCode::UnknownExample, "unknown example " + std::to_string(n) + " (expected 1..4)");
    }
}

ChartPtr e3_chart(double theta, const std::optional<AlphaProfile>& alpha, const PlaneCurve& curve,
                  CaseIOptions options)
{
    validate_theta(theta);
    if (is_horizontal(theta)) return e3_plane_chart(0.0);
    if (is_vertical(theta)) return e3_cylinder_chart(curve);
    if (!alpha) return e3_plane_chart(theta);
    return e3_case1_chart(theta, *alpha, options);
}

} // namespace cas
