#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/phase_unwrap.hpp"
#include "landau_paraxial/propagator.hpp"

namespace landau_paraxial {

struct LinearFit
{
    double slope;
    double rms;
};

/// Least squares through the origin: slope = sum(phi z) / sum(z^2).
inline LinearFit fit_linear(std::span<const double> z, std::span<const double> phi)
{
    if (z.size() != phi.size()) {
        throw FitError("fit_linear: z and phi differ in length");
    }
    if (z.size() < 2) {
        throw FitError("fit_linear: need at least 2 samples");
    }
    const bool all_equal = std::all_of(z.begin(), z.end(), [&](double v) { return v == z[0]; });
    double szz = 0.0;
    double szp = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        szz += z[i] * z[i];
        szp += z[i] * phi[i];
    }
    if (all_equal || !(szz > 0.0)) {
        throw FitError("fit_linear: degenerate abscissa");
    }
    const double slope = szp / szz;
    double ss = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double r = phi[i] - slope * z[i];
        ss += r * r;
    }
    return LinearFit{slope, std::sqrt(ss / static_cast<double>(z.size()))};
}

enum class GouyModel
{
    linear,
    arctan
};

struct GouyFit
{
    GouyModel model = GouyModel::linear;
    std::vector<double> z;
    std::vector<double> zeta_unwrapped; ///< numeric Gouy phase, zero at z = 0
    std::vector<double> zeta_analytic;
    double fitted_slope = 0.0;   ///< through-origin fit (linear) or zeta(z_1)/z_1 (arctan)
    double analytic_rate = 0.0;
    double rel_slope_error = 0.0;
    double rms_residual = 0.0;   ///< linear: rms about the fitted line; arctan: rms vs analytic curve
    double max_abs_deviation = 0.0; ///< max |zeta_num - zeta_analytic|
};

inline constexpr int gouy_min_samples = 10;
inline constexpr double gouy_min_modulus = 1e-6;

namespace detail {

inline std::vector<double> zeta_from_phasors(std::span<const complex> phasors, double reference_modulus,
                                             std::span<const double> z, const char* what)
{
    std::vector<double> raw(phasors.size());
    for (std::size_t i = 0; i < phasors.size(); ++i) {
        if (std::abs(phasors[i]) < gouy_min_modulus * reference_modulus) {
            throw ExtractionError(std::string("gouy extraction: ") + what + " vanished at z=" + format_sci(z[i]));
        }
        raw[i] = std::arg(phasors[i]);
    }
    std::vector<double> zeta = unwrap_phase(raw);
    const double origin = zeta.front();
    for (double& v : zeta) {
        v = -(v - origin);
    }
    return zeta;
}

inline void check_record(const PropagationRecord& rec)
{
    if (static_cast<int>(rec.size()) < gouy_min_samples) {
        throw DomainError("gouy extraction: record needs at least " + std::to_string(gouy_min_samples) +
                          " samples");
    }
}

inline void fill_deviation(GouyFit& fit)
{
    double ss = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < fit.z.size(); ++i) {
        const double d = fit.zeta_unwrapped[i] - fit.zeta_analytic[i];
        ss += d * d;
        worst = std::max(worst, std::abs(d));
    }
    fit.max_abs_deviation = worst;
    if (fit.model == GouyModel::arctan) {
        fit.rms_residual = std::sqrt(ss / static_cast<double>(fit.z.size()));
    }
}

inline double relative_error(double num, double ana)
{
    return ana != 0.0 ? std::abs(num - ana) / std::abs(ana) : std::abs(num - ana);
}

} // namespace detail

/// Gouy phase as minus the unwrapped phase of the overlap with the z = 0 field,
/// fitted to a line through the origin and compared with `law`.
inline GouyFit extract_gouy(const PropagationRecord& rec, const GouyLaw& law)
{
    detail::check_record(rec);
    GouyFit fit;
    fit.model = GouyModel::linear;
    fit.z = rec.z;
    fit.zeta_unwrapped = detail::zeta_from_phasors(rec.overlap, 1.0, rec.z, "overlap");
    fit.zeta_analytic.resize(fit.z.size());
    for (std::size_t i = 0; i < fit.z.size(); ++i) {
        fit.zeta_analytic[i] = law.phase_at(fit.z[i]);
    }
    const LinearFit lf = fit_linear(fit.z, fit.zeta_unwrapped);
    fit.fitted_slope = lf.slope;
    fit.rms_residual = lf.rms;
    fit.analytic_rate = law.rate;
    fit.rel_slope_error = detail::relative_error(lf.slope, law.rate);
    detail::fill_deviation(fit);
    return fit;
}

/// Free-space Gouy phase from the near-axis phase (the innermost node), compared with
/// (2n+|l|+1) arctan(z/z_R). The overlap with the z = 0 field is not used here: for an
/// expanding beam its phase follows a different arctan law.
inline GouyFit extract_gouy_free(const PropagationRecord& rec, const QuantumNumbers& qn, double w0, double k)
{
    detail::check_record(rec);
    if (rec.params.op.b != 0.0) {
        throw UsageError("extract_gouy_free: record was not produced in free space (b != 0)");
    }
    const GouyLaw law = gouy_law_free(qn, w0, k);
    GouyFit fit;
    fit.model = GouyModel::arctan;
    fit.z = rec.z;
    fit.zeta_unwrapped =
        detail::zeta_from_phasors(rec.axis_value, std::abs(rec.axis_value.front()), rec.z, "axis amplitude");
    fit.zeta_analytic.resize(fit.z.size());
    for (std::size_t i = 0; i < fit.z.size(); ++i) {
        fit.zeta_analytic[i] = law.phase_at(fit.z[i]);
    }
    fit.fitted_slope = fit.zeta_unwrapped[1] / fit.z[1];
    fit.analytic_rate = law.rate;
    fit.rel_slope_error = detail::relative_error(fit.fitted_slope, law.rate);
    detail::fill_deviation(fit);
    return fit;
}

inline std::string format_gouy_csv(const GouyFit& fit)
{
    std::ostringstream out;
    out << generated_by_line() << '\n';
    out << "z,zeta_num,zeta_analytic,residual\n";
    for (std::size_t i = 0; i < fit.z.size(); ++i) {
        out << format_sci(fit.z[i]) << ',' << format_sci(fit.zeta_unwrapped[i]) << ','
            << format_sci(fit.zeta_analytic[i]) << ',' << format_sci(fit.zeta_unwrapped[i] - fit.zeta_analytic[i])
            << '\n';
    }
    out << "# model=" << (fit.model == GouyModel::linear ? "linear" : "arctan")
        << " max_dev=" << format_sci(fit.max_abs_deviation) << '\n';
    out << "# slope=" << format_sci(fit.fitted_slope) << " analytic=" << format_sci(fit.analytic_rate)
        << " rel_err=" << format_sci(fit.rel_slope_error) << " rms=" << format_sci(fit.rms_residual) << '\n';
    return out.str();
}

} // namespace landau_paraxial
