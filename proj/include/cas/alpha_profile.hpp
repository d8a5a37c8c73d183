#pragma once

#include "cas/spline.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cas {

/// The free function alpha(v) that selects a Case I surface.
class AlphaProfile {
public:
    enum class Kind { Constant, Linear, Cosine, TwoSine, Tabulated };

    static AlphaProfile constant(double c);
    static AlphaProfile linear();   // alpha(v) = v
    static AlphaProfile cosine();   // alpha(v) = cos v
    static AlphaProfile two_sine(); // alpha(v) = 2 sin v
    /// At least 4 strictly increasing samples; interpolated by a clamped cubic spline.
    static AlphaProfile tabulated(std::vector<std::pair<double, double>> samples);
    /// Reads a `v,alpha` CSV file (header required).
    static AlphaProfile from_csv(const std::filesystem::path& path);
    /// Parses the command-line form const:<c> | linear | cos | sin2 | csv:<path>.
    static AlphaProfile parse(const std::string& spec);

    Kind kind() const { return kind_; }
    double constant_value() const { return c_; }

    /// Domain on which alpha is defined; unbounded for the closed-form kinds.
    std::optional<std::pair<double, double>> domain() const;
    bool contains(double v) const;

    double value(double v) const;
    double derivative(double v) const;

    /// Round-trippable label, e.g. "const:1", "linear", "tabulated[12]".
    std::string label() const;

private:
    AlphaProfile(Kind kind, double c) : kind_(kind), c_(c) {}

    Kind kind_;
    double c_ = 0.0;
    std::optional<CubicSpline> spline_;
    std::size_t n_samples_ = 0;
};

} // namespace cas
