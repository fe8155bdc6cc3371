#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/transverse_operator.hpp"

namespace landau_paraxial {

namespace detail {

/// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
inline int sturm_count(const TridiagonalSym& m, double x, double pivmin)
{
    int count = 0;
    double d = m.diag[0] - x;
    if (std::abs(d) < pivmin) {
        d = -pivmin;
    }
    if (d < 0.0) {
        ++count;
    }
    for (int i = 1; i < m.size(); ++i) {
        d = m.diag[i] - x - m.offdiag[i - 1] * m.offdiag[i - 1] / d;
        if (std::abs(d) < pivmin) {
            d = -pivmin;
        }
        if (d < 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace detail

/// The `count` smallest eigenvalues in ascending order, by Sturm bisection to
/// absolute width 1e-12 max(1, |lambda|).
inline std::vector<double> lowest_eigenvalues(const TridiagonalSym& m, int count)
{
    const int n = m.size();
    if (count < 1 || count > n) {
        throw DomainError("lowest_eigenvalues: count must be in [1, N]");
    }
    if (!m.all_finite()) {
        throw NumericError("lowest_eigenvalues: matrix has non-finite entries");
    }

    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    double max_off2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(m.offdiag[i - 1]);
        }
        if (i + 1 < n) {
            radius += std::abs(m.offdiag[i]);
            max_off2 = std::max(max_off2, m.offdiag[i] * m.offdiag[i]);
        }
        lo = std::min(lo, m.diag[i] - radius);
        hi = std::max(hi, m.diag[i] + radius);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2) / scale;
    lo -= 1e-12 * scale;
    hi += 1e-12 * scale;

    std::vector<double> out(count);
    double floor = lo;
    for (int idx = 0; idx < count; ++idx) {
        double a = floor;
        double c = hi;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (a + c);
            if (c - a <= 1e-12 * std::max(1.0, std::abs(mid))) {
                break;
            }
            if (detail::sturm_count(m, mid, pivmin) > idx) {
                c = mid;
            } else {
                a = mid;
            }
        }
        out[idx] = 0.5 * (a + c);
        floor = a;
    }
    return out;
}

struct SpectrumRow
{
    int n;
    double numeric_lambda;
    double analytic_lambda;
    double rel_err;  ///< |num - ana| / ana, or |num - ana| / b when ana = 0
    double E_rel;    ///< relativistic level energy at the requested p_z
    double spacing;  ///< E_{n+1} - E_n
    double nonrel_gap; ///< lambda/2, the nonrelativistic E - 1 for comparison
};

struct SpectrumReport
{
    Species species;
    SpinProjection s_z;
    int ell;
    double b;
    double p_z;
    int grid_points;
    double r_max;
    std::vector<SpectrumRow> rows;
    bool spacings_strictly_decreasing;

    double max_rel_err() const
    {
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, r.rel_err);
        }
        return worst;
    }
};

inline constexpr int spectrum_max_levels = 12;

inline SpectrumReport spectrum_report(const BeamContext& ctx, int ell, int n_levels, const RadialGrid& grid,
                                      double p_z = 0.0)
{
    if (n_levels < 1 || n_levels > spectrum_max_levels) {
        throw DomainError("spectrum_report: n_levels must be in [1, 12]");
    }
    const ParticleSpec& particle = ctx.particle();
    const auto params = TransverseOperatorParams::from_context(ctx, ell);
    const std::vector<double> numeric = lowest_eigenvalues(build_transverse_matrix(grid, params), n_levels);

    SpectrumReport rep{particle.species, particle.s_z, ell, ctx.b(), p_z, grid.size(), grid.r_max(), {}, true};
    for (int n = 0; n < n_levels; ++n) {
        const QuantumNumbers qn{n, ell};
        const double analytic = transverse_eigenvalue(qn, particle, ctx.b());
        const double denom = analytic != 0.0 ? std::abs(analytic) : ctx.b();
        const double e_n = landau_energy(qn, particle, p_z, ctx.b());
        const double e_next = landau_energy(QuantumNumbers{n + 1, ell}, particle, p_z, ctx.b());
        rep.rows.push_back(SpectrumRow{n, numeric[n], analytic, std::abs(numeric[n] - analytic) / denom, e_n,
                                       e_next - e_n, analytic / 2.0});
    }
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        if (!(rep.rows[i].spacing < rep.rows[i - 1].spacing)) {
            rep.spacings_strictly_decreasing = false;
        }
    }
    return rep;
}

inline std::string format_spectrum_csv(const SpectrumReport& rep)
{
    std::ostringstream out;
    out << generated_by_line() << '\n';
    out << "n,numeric_lambda,analytic_lambda,rel_err,E_rel,spacing\n";
    for (const auto& r : rep.rows) {
        out << r.n << ',' << format_sci(r.numeric_lambda) << ',' << format_sci(r.analytic_lambda) << ','
            << format_sci(r.rel_err) << ',' << format_sci(r.E_rel) << ',' << format_sci(r.spacing) << '\n';
    }
    out << "# species=" << to_string(rep.species) << " sz=" << (rep.s_z.twice() > 0 ? "+0.5" : "-0.5")
        << " ell=" << rep.ell << " b=" << format_sci(rep.b) << " pz=" << format_sci(rep.p_z)
        << " grid_n=" << rep.grid_points << " rmax=" << format_sci(rep.r_max) << '\n';
    out << "# spacings_strictly_decreasing=" << (rep.spacings_strictly_decreasing ? "true" : "false") << '\n';
    return out.str();
}

} // namespace landau_paraxial
