#pragma once

#include "cas/alpha_profile.hpp"
#include "cas/chart.hpp"
#include "cas/grid.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cas {

/// One named residual evaluated over a grid. pass <=> max_residual <= tol.
struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    long n_samples = 0;
    double worst_u = 0.0;
    double worst_v = 0.0;
    /// Set when the check could not run; the check then fails.
    std::optional<std::string> error;
};

struct ChartDescriptor {
    Space space = Space::E3;
    ChartKind kind = ChartKind::CaseI;
    double theta = 0.0;
    std::string detail;
};

struct SuiteReport {
    ChartDescriptor chart;
    GridSpec grid;
    std::vector<CheckResult> checks;
    bool pass = false;

    /// The failing check with the largest max_residual / tol, or nullptr.
    const CheckResult* worst_failure() const;
    /// Serialized as
    /// {"chart": {...}, "checks": [{"name", "max_residual", "tol", "pass", "n_samples", "worst_point"}], "pass"}.
    std::string to_json(int indent = 2) const;
};

struct SuiteTolerances {
    double analytic = 1e-9;
    double ode = 1e-12;
    double fd = 1e-5;
    double brioschi = 1e-4;
};

/// Step of the central differences taken on the analytic normal.
inline constexpr double kNormalFdStep = 1e-5;
/// Minimal spread of H that counts as "not constant mean curvature".
inline constexpr double kNonCmcSpread = 1e-8;

ChartDescriptor describe(const Chart& chart);

/// max |<N, k> - cos(theta)|.
CheckResult check_constant_angle(const Chart& chart, const GridSpec& grid, double tol);

/// r_uu = 0; r_uv = (beta_u / beta) r_v;
/// r_vv = (beta_v / beta) r_v - beta^2 lambda cot(theta) r_u + beta^2 lambda N.
/// Case I charts only (UnsupportedChart otherwise).
std::array<CheckResult, 3> check_structural_pdes(const Chart& chart, const GridSpec& grid, double tol);

/// The r_vv decomposition with the opposite signs on the r_u and N terms.
/// Kept as a diagnostic: on Case I charts it equals 2 |beta| exactly.
double r_vv_flipped_sign_residual(const Chart& chart, double u, double v);

enum class LambdaBranch {
    Closed, // lambda = tan(theta) / (u + alpha), beta = cos(theta) (u + alpha)
    Zero,   // lambda = 0, beta = beta(v)
};

struct OdeOptions {
    LambdaBranch branch = LambdaBranch::Closed;
    /// Added to lambda before the residuals are formed (negative control).
    double lambda_shift = 0.0;
};

/// beta_u - beta lambda cot(theta) = 0 and lambda_u + lambda^2 cot(theta) = 0.
/// Residuals are divided by max(1, magnitude of the largest term) so that
/// cancellation near the singular edge is measured relative to the terms.
/// Throws WrongCase for theta in {0, pi/2}.
std::array<CheckResult, 2> check_ode_residuals(double theta, const AlphaProfile& alpha, const GridSpec& grid,
                                               double tol, OdeOptions options = {});

/// max |N_u|, max |N_v + lambda r_v| (central differences of the analytic
/// normal) and max |lambda_hat - lambda| with lambda_hat = -<N_v, r_v> / <r_v, r_v>.
/// Case I charts, and planes with lambda = 0.
std::array<CheckResult, 3> check_weingarten(const Chart& chart, const GridSpec& grid, double tol);

/// Intrinsic K against 0, cos^2(theta) or -cos^2(theta) by space (tol_K);
/// for E^3 also the extrinsic K (tol_analytic) and, on Case I charts,
/// |H - g / (2 beta^2)| (tol_analytic).
std::vector<CheckResult> check_curvatures(const Chart& chart, const GridSpec& grid, double tol_K,
                                          double tol_analytic);

/// Plane: max |H|. Circular cylinder: spread of H, provided |H| stays away
/// from 0. Case I: passes when H is not constant. UnsupportedChart otherwise.
CheckResult check_classification(const Chart& chart, const GridSpec& grid, double tol);

/// Componentwise max |analytic jet - fd_jet|.
CheckResult check_oracle_agreement(const Chart& chart, const GridSpec& grid, double tol);

/// Every check that applies to the chart. A check that throws is recorded
/// as failed with its error message; the suite never aborts.
SuiteReport run_suite(const Chart& chart, const GridSpec& grid, const SuiteTolerances& tol = {});

/// Names of the checks run_suite applies to a chart, in report order.
std::vector<std::string> applicable_checks(const Chart& chart);

} // namespace cas
