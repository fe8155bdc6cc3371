#pragma once

// Staggered radial mesh r_j = (j + 1/2) h, j = 0..N-1, and complex fields sampled on it
// for a fixed azimuthal index. Inner products use the weight 2 pi r_j h.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/phase_unwrap.hpp"

namespace landau_paraxial {

using complex = std::complex<double>;

class RadialGrid
{
  public:
    static constexpr int min_points = 16;

    RadialGrid(double r_max, int n_points)
        : r_max_(r_max)
        , n_(n_points)
        , h_(r_max / n_points)
    {
        if (!(r_max > 0.0) || !std::isfinite(r_max)) {
            throw DomainError("radial grid: r_max must be positive and finite");
        }
        if (n_points < min_points) {
            throw DomainError("radial grid: need at least " + std::to_string(min_points) + " points, got " +
                              std::to_string(n_points));
        }
    }

    int size() const noexcept { return n_; }
    double r_max() const noexcept { return r_max_; }
    double h() const noexcept { return h_; }

    /// Node radius for 0-based index j.
    double r(int j) const noexcept { return (j + 0.5) * h_; }
    /// Cell face between nodes j and j+1; face(-1) = 0 is the axis, face(N-1) = r_max.
    double face(int j) const noexcept { return (j + 1) * h_; }
    /// Quadrature weight 2 pi r_j h.
    double weight(int j) const noexcept { return 2.0 * std::numbers::pi * r(j) * h_; }

    std::vector<double> nodes() const
    {
        std::vector<double> out(n_);
        for (int j = 0; j < n_; ++j) {
            out[j] = r(j);
        }
        return out;
    }

    friend bool operator==(const RadialGrid& a, const RadialGrid& b)
    {
        return a.n_ == b.n_ && a.r_max_ == b.r_max_;
    }

  private:
    double r_max_;
    int n_;
    double h_;
};

inline RadialGrid make_radial_grid(double r_max, int n_points) { return RadialGrid(r_max, n_points); }

/// Longitudinal phase convention: fw carries exp(ikz), paraxial is the envelope Psi.
enum class Carrier
{
    fw,
    paraxial
};

inline std::string_view to_string(Carrier c) { return c == Carrier::fw ? "fw" : "paraxial"; }

inline Carrier parse_carrier(std::string_view s)
{
    if (s == "fw") {
        return Carrier::fw;
    }
    if (s == "paraxial") {
        return Carrier::paraxial;
    }
    throw UsageError("unknown carrier '" + std::string(s) + "'");
}

class ComplexRadialField
{
  public:
    ComplexRadialField(RadialGrid grid, int ell, std::vector<complex> values, Carrier carrier = Carrier::paraxial)
        : grid_(grid)
        , ell_(ell)
        , values_(std::move(values))
        , carrier_(carrier)
    {
        if (static_cast<int>(values_.size()) != grid_.size()) {
            throw UsageError("field size does not match grid size");
        }
    }

    const RadialGrid& grid() const noexcept { return grid_; }
    int ell() const noexcept { return ell_; }
    Carrier carrier() const noexcept { return carrier_; }
    std::span<const complex> values() const noexcept { return values_; }
    complex operator[](int j) const noexcept { return values_[j]; }

    /// Same grid, ell and carrier with new samples.
    ComplexRadialField with_values(std::vector<complex> values) const
    {
        return ComplexRadialField(grid_, ell_, std::move(values), carrier_);
    }

    ComplexRadialField scaled(complex factor) const
    {
        std::vector<complex> v(values_);
        for (auto& x : v) {
            x *= factor;
        }
        return with_values(std::move(v));
    }

  private:
    RadialGrid grid_;
    int ell_;
    std::vector<complex> values_;
    Carrier carrier_;
};

/// Samples a radial profile (real or complex valued) at every node.
template <class Profile>
ComplexRadialField sample_mode(Profile&& profile, int ell, const RadialGrid& grid,
                               Carrier carrier = Carrier::paraxial)
{
    std::vector<complex> values(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        const complex v = complex(profile(grid.r(j)));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericError("sample_mode: non-finite sample at node " + std::to_string(j) +
                               " (r=" + format_sci(grid.r(j)) + ")");
        }
        values[j] = v;
    }
    return ComplexRadialField(grid, ell, std::move(values), carrier);
}

/// Weighted inner product sum conj(a_j) b_j 2 pi r_j h. Different ell gives exactly 0.
inline complex overlap(const ComplexRadialField& a, const ComplexRadialField& b)
{
    if (!(a.grid() == b.grid())) {
        throw UsageError("overlap: fields live on different grids");
    }
    if (a.ell() != b.ell()) {
        return complex(0.0, 0.0);
    }
    complex sum(0.0, 0.0);
    for (int j = 0; j < a.grid().size(); ++j) {
        sum += std::conj(a[j]) * b[j] * a.grid().weight(j);
    }
    return sum;
}

inline double norm(const ComplexRadialField& f)
{
    double sum = 0.0;
    for (int j = 0; j < f.grid().size(); ++j) {
        sum += std::norm(f[j]) * f.grid().weight(j);
    }
    return std::sqrt(sum);
}

inline ComplexRadialField normalized(const ComplexRadialField& f)
{
    const double nrm = norm(f);
    if (!(nrm > 0.0)) {
        throw DomainError("cannot normalize a zero field");
    }
    return f.scaled(1.0 / nrm);
}

/// <r^2> = sum |u_j|^2 r_j^2 2 pi r_j h (no division by the norm).
inline double second_moment(const ComplexRadialField& f)
{
    double sum = 0.0;
    for (int j = 0; j < f.grid().size(); ++j) {
        const double r = f.grid().r(j);
        sum += std::norm(f[j]) * r * r * f.grid().weight(j);
    }
    return sum;
}

inline double peak_amplitude(const ComplexRadialField& f)
{
    double peak = 0.0;
    for (const complex& v : f.values()) {
        peak = std::max(peak, std::abs(v));
    }
    return peak;
}

/// |u| at the outermost node relative to the peak; 0 for an all-zero field.
inline double boundary_amplitude_ratio(const ComplexRadialField& f)
{
    const double peak = peak_amplitude(f);
    return peak > 0.0 ? std::abs(f[f.grid().size() - 1]) / peak : 0.0;
}

/// Multiplies by exp(+ikz) (paraxial -> fw) or exp(-ikz) (fw -> paraxial).
inline ComplexRadialField with_carrier(const ComplexRadialField& f, Carrier target, double k, double z)
{
    if (f.carrier() == target) {
        return f;
    }
    const double sign = target == Carrier::fw ? 1.0 : -1.0;
    const ComplexRadialField out = f.scaled(std::polar(1.0, sign * k * z));
    return ComplexRadialField(out.grid(), out.ell(), std::vector<complex>(out.values().begin(), out.values().end()),
                              target);
}

// Curvature-fit constants.
inline constexpr double curvature_amplitude_cutoff = 1e-3;
inline constexpr int curvature_min_nodes = 8;
inline constexpr double curvature_flat_threshold = 1e-12;

/// Fits arg u_j ~ c0 + k r^2/(2R), weighted by |u_j|^2 over nodes above the amplitude cutoff.
/// The phase is unwrapped along r before fitting.
inline WavefrontCurvature radial_phase_curvature(const ComplexRadialField& f, double k)
{
    const double peak = peak_amplitude(f);
    std::vector<double> x;
    std::vector<double> phase;
    std::vector<double> w;
    for (int j = 0; j < f.grid().size(); ++j) {
        const double a = std::abs(f[j]);
        if (peak > 0.0 && a > curvature_amplitude_cutoff * peak) {
            const double r = f.grid().r(j);
            x.push_back(r * r);
            phase.push_back(std::arg(f[j]));
            w.push_back(a * a);
        }
    }
    if (static_cast<int>(x.size()) < curvature_min_nodes) {
        throw FitError("radial_phase_curvature: only " + std::to_string(x.size()) + " usable nodes (need " +
                       std::to_string(curvature_min_nodes) + ")");
    }
    phase = unwrap_phase(phase);

    double sw = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * phase[i];
    }
    const double xm = sx / sw;
    const double ym = sy / sw;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += w[i] * (x[i] - xm) * (x[i] - xm);
        sxy += w[i] * (x[i] - xm) * (phase[i] - ym);
    }
    if (!(sxx > 0.0)) {
        throw FitError("radial_phase_curvature: degenerate abscissa");
    }
    const double slope = sxy / sxx; // = k/(2R)
    const double inv_R = 2.0 * slope / k;
    if (std::abs(inv_R) < curvature_flat_threshold) {
        return WavefrontCurvature{true, 0.0};
    }
    return WavefrontCurvature{false, 1.0 / inv_R};
}

/// Field dump: header line, then N lines "r,re,im".
inline std::string format_field_dump(const ComplexRadialField& f, const double* z = nullptr)
{
    std::ostringstream out;
    out << generated_by_line() << '\n';
    out << "# radial-field ell=" << f.ell() << " carrier=" << to_string(f.carrier()) << " n=" << f.grid().size()
        << " rmax=" << format_sci(f.grid().r_max());
    if (z != nullptr) {
        out << " z=" << format_sci(*z);
    }
    out << '\n';
    for (int j = 0; j < f.grid().size(); ++j) {
        out << format_sci(f.grid().r(j)) << ',' << format_sci(f[j].real()) << ',' << format_sci(f[j].imag())
            << '\n';
    }
    return out.str();
}

struct FieldDump
{
    ComplexRadialField field;
    bool has_z = false;
    double z = 0.0;
};

inline FieldDump parse_field_dump(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int ell = 0;
    int n = 0;
    double rmax = 0.0;
    Carrier carrier = Carrier::paraxial;
    bool has_z = false;
    double z = 0.0;
    std::vector<complex> values;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind("# radial-field", 0) == 0) {
            std::istringstream hs(line.substr(14));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    throw UsageError("field dump: malformed header token '" + tok + "'");
                }
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "ell") {
                    ell = std::stoi(val);
                } else if (key == "carrier") {
                    carrier = parse_carrier(val);
                } else if (key == "n") {
                    n = std::stoi(val);
                } else if (key == "rmax") {
                    rmax = std::stod(val);
                } else if (key == "z") {
                    has_z = true;
                    z = std::stod(val);
                } else {
                    throw UsageError("field dump: unknown header key '" + key + "'");
                }
            }
            header_seen = true;
            continue;
        }
        if (line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            throw UsageError("field dump: data before header");
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw UsageError("field dump: malformed data line '" + line + "'");
        }
        values.emplace_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1)));
    }
    if (!header_seen) {
        throw UsageError("field dump: missing header");
    }
    if (static_cast<int>(values.size()) != n) {
        throw UsageError("field dump: expected " + std::to_string(n) + " rows, found " +
                         std::to_string(values.size()));
    }
    return FieldDump{ComplexRadialField(RadialGrid(rmax, n), ell, std::move(values), carrier), has_z, z};
}

} // namespace landau_paraxial
