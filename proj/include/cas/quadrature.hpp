#pragma once

#include <functional>

namespace cas {

/// Adaptive Simpson quadrature of f over [a, b] (b < a is allowed and flips
/// the sign). Subintervals are refined until the Richardson estimate
/// |S2 - S1| / 15 falls below the tolerance share of the subinterval; the
/// recursion starts from 8 equal panels.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

} // namespace cas
