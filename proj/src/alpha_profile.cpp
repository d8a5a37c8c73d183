#include "cas/alpha_profile.hpp"

#include "cas/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cas {

namespace {

std::string format_number(double x)
{
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << x;
    std::string s = os.str();
    // Prefer the short form when it reads back exactly.
    std::ostringstream brief;
    brief << x;
    if (std::stod(brief.str()) == x) s = brief.str();
    return s;
}

double parse_double(std::string_view text, const std::string& what)
{
    std::string s(text);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, what + ": not a number: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size() || !std::isfinite(out))
        throw Error(ErrorCode::InvalidArgument, what + ": not a finite number: '" + s + "'");
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

AlphaProfile AlphaProfile::constant(double c)
{
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "alpha: constant must be finite");
    return {Kind::Constant, c};
}

AlphaProfile AlphaProfile::linear() { return {Kind::Linear, 0.0}; }
AlphaProfile AlphaProfile::cosine() { return {Kind::Cosine, 0.0}; }
AlphaProfile AlphaProfile::two_sine() { return {Kind::TwoSine, 0.0}; }

AlphaProfile AlphaProfile::tabulated(std::vector<std::pair<double, double>> samples)
{
    std::vector<double> v, a;
    v.reserve(samples.size());
    a.reserve(samples.size());
    for (const auto& [vi, ai] : samples) {
        v.push_back(vi);
        a.push_back(ai);
    }
    AlphaProfile p(Kind::Tabulated, 0.0);
    p.spline_.emplace(v, a);
    p.n_samples_ = samples.size();
    return p;
}

AlphaProfile AlphaProfile::from_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "alpha: cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || trim(line) != "v,alpha")
        throw Error(ErrorCode::InvalidArgument, "alpha: '" + path.string() + "' must start with header 'v,alpha'");
    std::vector<std::pair<double, double>> samples;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "alpha: line " + std::to_string(lineno) + ": expected two fields");
        const std::string where = "alpha: line " + std::to_string(lineno);
        samples.emplace_back(parse_double(trim(row.substr(0, comma)), where),
                             parse_double(trim(row.substr(comma + 1)), where));
    }
    return tabulated(std::move(samples));
}

AlphaProfile AlphaProfile::parse(const std::string& spec)
{
    if (spec == "linear") return linear();
    if (spec == "cos") return cosine();
    if (spec == "sin2") return two_sine();
    if (spec.rfind("const:", 0) == 0) return constant(parse_double(spec.substr(6), "alpha"));
    if (spec.rfind("csv:", 0) == 0) return from_csv(spec.substr(4));
    throw Error(ErrorCode::InvalidArgument,
                "alpha: unknown profile '" + spec + "' (expected const:<c>|linear|cos|sin2|csv:<path>)");
}

std::optional<std::pair<double, double>> AlphaProfile::domain() const
{
    if (spline_) return std::pair{spline_->lower(), spline_->upper()};
    return std::nullopt;
}

bool AlphaProfile::contains(double v) const { return !spline_ || spline_->contains(v); }

double AlphaProfile::value(double v) const
{
    switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::Linear: return v;
    case Kind::Cosine: return std::cos(v);
    case Kind::TwoSine: return 2.0 * std::sin(v);
    case Kind::Tabulated: return spline_->value(v);
    }
    return 0.0;
}

double AlphaProfile::derivative(double v) const
{
    switch (kind_) {
    case Kind::Constant: return 0.0;
    case Kind::Linear: return 1.0;
    case Kind::Cosine: return -std::sin(v);
    case Kind::TwoSine: return 2.0 * std::cos(v);
    case Kind::Tabulated: return spline_->derivative(v);
    }
    return 0.0;
}

std::string AlphaProfile::label() const
{
    switch (kind_) {
    case Kind::Constant: return "const:" + format_number(c_);
    case Kind::Linear: return "linear";
    case Kind::Cosine: return "cos";
    case Kind::TwoSine: return "sin2";
    case Kind::Tabulated: return "tabulated[" + std::to_string(n_samples_) + "]";
    }
    return {};
}

} // namespace cas
