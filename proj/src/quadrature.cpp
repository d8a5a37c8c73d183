#include "cas/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cas {

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth)
{
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    // The relative floor stops refinement once delta is pure roundoff.
    if (depth <= 0 || std::abs(delta) <= 15.0 * std::max(tol, 1e-15 * std::abs(left + right)))
        return left + right + delta / 15.0;
    return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1)
         + refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth)
{
    if (a == b) return 0.0;
    // Start from several panels: with a single one, an oscillating integrand
    // can make the first two estimates agree by accident.
    constexpr int kPanels = 8;
    const double w = (b - a) / kPanels;
    double sum = 0.0;
    double fa = f(a);
    for (int i = 0; i < kPanels; ++i) {
        const double pa = a + i * w;
        const double pb = i + 1 == kPanels ? b : a + (i + 1) * w;
        const double pm = 0.5 * (pa + pb);
        const double fm = f(pm);
        const double fb = f(pb);
        sum += refine(f, {pa, pm, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb)}, std::abs(abs_tol) / kPanels,
                      max_depth);
        fa = fb;
    }
    return sum;
}

} // namespace cas
