#pragma once

// Desk-scale verification suite. Each criterion reproduces one analytic law numerically
// at fixed parameters and thresholds, writes its data files (when an output directory
// is given) and reports pass/fail together with its wall-clock time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "landau_paraxial/gouy.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/propagator.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/spectrum.hpp"
#include "landau_paraxial/units.hpp"

namespace landau_paraxial {

struct ValidationSettings
{
    /// Steps for the z_max = 100 magnetic runs; the free-space run uses twice as many over z = 400.
    int n_steps = 2000;
    int jobs = 1;
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;
};

namespace validation {

inline constexpr double field_b = 0.01;
inline constexpr double wavenumber = 1.0;

struct Outcome
{
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!passed) {
                detail << "; ";
            }
            passed = false;
            detail << what;
        }
    }
};

inline void write_if(const std::filesystem::path& dir, const std::string& name, const std::string& content)
{
    if (!dir.empty()) {
        write_text_file(dir / name, content);
    }
}

inline std::string sz_tag(SpinProjection s) { return s.twice() > 0 ? "p" : "m"; }

inline std::string ell_tag(int ell) { return ell < 0 ? "m" + std::to_string(-ell) : std::to_string(ell); }

/// Lowest five transverse eigenvalues against q b on r_max = 8 w_m, N = 4096.
inline Outcome spectrum_reproduction(const ValidationSettings&, const std::filesystem::path& dir)
{
    Outcome out;
    double worst_rel = 0.0;
    double worst_ground = 0.0;
    for (int ell : {0, 1, 2}) {
        for (SpinProjection sz : {SpinProjection::down(), SpinProjection::up()}) {
            const BeamContext ctx = make_context(Species::electron, sz, field_b, wavenumber);
            const RadialGrid grid(8.0 * ctx.w_m(), 4096);
            const SpectrumReport rep = spectrum_report(ctx, ell, 5, grid);
            write_if(dir, "c1_spectrum_l" + std::to_string(ell) + "_sz" + sz_tag(sz) + ".csv",
                     format_spectrum_csv(rep));
            for (const SpectrumRow& row : rep.rows) {
                if (row.analytic_lambda == 0.0) {
                    const double abs_err = std::abs(row.numeric_lambda);
                    worst_ground = std::max(worst_ground, abs_err);
                    out.require(abs_err < 1e-7 * field_b, "ground level l=" + std::to_string(ell) + " abs error " +
                                                              format_sci(abs_err));
                } else {
                    worst_rel = std::max(worst_rel, row.rel_err);
                    out.require(row.rel_err < 1e-5, "l=" + std::to_string(ell) + " n=" + std::to_string(row.n) +
                                                        " rel error " + format_sci(row.rel_err));
                }
            }
        }
    }
    out.detail << (out.passed ? "" : " | ") << "max rel err " << format_sci(worst_rel) << ", q=0 abs err "
               << format_sci(worst_ground);
    return out;
}

/// Eigenvalue error ratio under one halving of h (ground level is exact and excluded).
inline Outcome convergence_order(const ValidationSettings&, const std::filesystem::path& dir)
{
    Outcome out;
    const BeamContext ctx = make_context(Species::electron, SpinProjection::down(), field_b, wavenumber);
    const auto params = TransverseOperatorParams::from_context(ctx, 0);
    const double r_max = 8.0 * ctx.w_m();
    const auto coarse = lowest_eigenvalues(build_transverse_matrix(RadialGrid(r_max, 2048), params), 5);
    const auto fine = lowest_eigenvalues(build_transverse_matrix(RadialGrid(r_max, 4096), params), 5);
    std::ostringstream csv;
    csv << generated_by_line() << '\n' << "n,err_h,err_h_half,ratio\n";
    double lo = 1e300;
    double hi = 0.0;
    for (int n = 1; n < 5; ++n) {
        const double analytic = transverse_eigenvalue(QuantumNumbers{n, 0}, ctx.particle(), field_b);
        const double e1 = std::abs(coarse[n] - analytic);
        const double e2 = std::abs(fine[n] - analytic);
        const double ratio = e1 / e2;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        csv << n << ',' << format_sci(e1) << ',' << format_sci(e2) << ',' << format_sci(ratio) << '\n';
        out.require(ratio >= 3.5 && ratio <= 4.5, "level " + std::to_string(n) + " ratio " + format_sci(ratio));
    }
    write_if(dir, "c2_convergence.csv", csv.str());
    out.detail << (out.passed ? "" : " | ") << "error ratios in [" << format_sci(lo) << ", " << format_sci(hi)
               << "]";
    return out;
}

/// Relativistic level spacings shrink with n at every field strength.
inline Outcome non_equidistance(const ValidationSettings&, const std::filesystem::path& dir)
{
    Outcome out;
    std::ostringstream csv;
    csv << generated_by_line() << '\n' << "b,ell,sz,n,spacing\n";
    for (double b : {0.01, 0.1, 1.0}) {
        for (int ell : {0, 1, 2}) {
            for (SpinProjection sz : {SpinProjection::down(), SpinProjection::up()}) {
                const ParticleSpec p{Species::electron, sz};
                double prev = 0.0;
                for (int n = 0; n <= 9; ++n) {
                    const double s = landau_energy(QuantumNumbers{n + 1, ell}, p, 0.0, b) -
                                     landau_energy(QuantumNumbers{n, ell}, p, 0.0, b);
                    csv << format_sci(b) << ',' << ell << ',' << (sz.twice() > 0 ? "+0.5" : "-0.5") << ',' << n
                        << ',' << format_sci(s) << '\n';
                    if (n > 0) {
                        out.require(s < prev, "spacing not decreasing at b=" + format_sci(b) + " n=" +
                                                  std::to_string(n));
                    }
                    prev = s;
                }
            }
        }
    }
    const ParticleSpec ground{Species::electron, SpinProjection::down()};
    const double e0 = landau_energy(QuantumNumbers{0, 0}, ground, 0.0, 0.01);
    const double e1 = landau_energy(QuantumNumbers{1, 0}, ground, 0.0, 0.01);
    const double e2 = landau_energy(QuantumNumbers{2, 0}, ground, 0.0, 0.01);
    out.require(std::abs((e1 - e0) - 0.0099505) < 1e-6, "first spacing " + format_sci(e1 - e0));
    out.require(std::abs((e2 - e1) - 0.0098533) < 1e-6, "second spacing " + format_sci(e2 - e1));
    write_if(dir, "c3_spacings.csv", csv.str());
    out.detail << (out.passed ? "" : " | ") << "spacings at b=0.01: " << format_sci(e1 - e0) << ", "
               << format_sci(e2 - e1);
    return out;
}

struct MagneticRun
{
    PropagationRecord record;
    GouyFit fit;
    double norm_drift;
    double min_overlap;
};

inline MagneticRun run_landau_mode(Species species, int n, int ell, SpinProjection sz, int n_steps)
{
    const BeamContext ctx = make_context(species, sz, field_b, wavenumber);
    const QuantumNumbers qn{n, ell};
    const RadialGrid grid(8.0 * ctx.w_m(), 2048);
    const ComplexRadialField initial = normalized(
        sample_mode([&](double r) { return eval_landau_radial(qn, ctx.w_m(), r); }, ell, grid));
    const auto params = PropagationParams::magnetic(ctx, ell, 100.0, n_steps, n_steps);
    MagneticRun run{propagate(initial, params), {}, 0.0, 1.0};
    run.fit = extract_gouy(run.record, gouy_law_magnetic(qn, ctx.particle(), ctx));
    for (std::size_t i = 0; i < run.record.size(); ++i) {
        run.norm_drift = std::max(run.norm_drift, std::abs(run.record.norm[i] - run.record.norm[0]));
        run.min_overlap = std::min(run.min_overlap, std::abs(run.record.overlap[i]));
    }
    return run;
}

inline std::string run_tag(Species species, int n, int ell, SpinProjection sz)
{
    return std::string(to_string(species)) + "_n" + std::to_string(n) + "_l" + ell_tag(ell) + "_sz" + sz_tag(sz);
}

/// Landau modes stay eigenmodes under propagation and pick up the linear Gouy phase.
inline Outcome stationarity_and_gouy(const ValidationSettings& s, const std::filesystem::path& dir)
{
    struct Case
    {
        Species species;
        int n;
        int ell;
        SpinProjection sz;
        double slope;
    };
    const Case cases[] = {{Species::electron, 0, 1, SpinProjection::down(), 0.01},
                          {Species::electron, 1, 0, SpinProjection::up(), 0.02},
                          {Species::positron, 0, -1, SpinProjection::up(), 0.01}};
    Outcome out;
    std::ostringstream summary;
    for (const Case& c : cases) {
        const MagneticRun run = run_landau_mode(c.species, c.n, c.ell, c.sz, s.n_steps);
        const std::string tag = run_tag(c.species, c.n, c.ell, c.sz);
        write_if(dir, "c4_record_" + tag + ".csv", format_record_csv(run.record));
        write_if(dir, "c4_gouy_" + tag + ".csv", format_gouy_csv(run.fit));
        const double slope_err = std::abs(run.fit.fitted_slope - c.slope) / c.slope;
        out.require(run.norm_drift < 1e-10, tag + " norm drift " + format_sci(run.norm_drift));
        out.require(run.min_overlap >= 1.0 - 1e-6, tag + " min |overlap| " + format_sci(run.min_overlap));
        out.require(slope_err < 1e-4, tag + " slope " + format_sci(run.fit.fitted_slope) + " rel err " +
                                          format_sci(slope_err));
        summary << tag << " slope " << format_sci(run.fit.fitted_slope) << "; ";
    }
    out.detail << (out.passed ? "" : " | ") << summary.str();
    return out;
}

/// q = 0 level: no Gouy phase accumulates.
inline Outcome spin_ground(const ValidationSettings& s, const std::filesystem::path& dir)
{
    Outcome out;
    const MagneticRun run = run_landau_mode(Species::electron, 0, 0, SpinProjection::down(), s.n_steps);
    write_if(dir, "c5_gouy_electron_n0_l0_szm.csv", format_gouy_csv(run.fit));
    out.require(std::abs(run.fit.fitted_slope) < 1e-8, "slope " + format_sci(run.fit.fitted_slope));
    out.require(run.min_overlap >= 1.0 - 1e-6, "min |overlap| " + format_sci(run.min_overlap));
    out.detail << (out.passed ? "" : " | ") << "slope " << format_sci(run.fit.fitted_slope);
    return out;
}

/// b = 0 Gaussian: arctan Gouy law, width growth and wavefront curvature.
inline Outcome free_space_limit(const ValidationSettings& s, const std::filesystem::path& dir)
{
    Outcome out;
    const double w0 = 20.0;
    const QuantumNumbers qn{0, 0};
    const RadialGrid grid(24.0 * w0, 4096);
    const ComplexRadialField initial =
        normalized(sample_mode([&](double r) { return eval_free_lg(qn, w0, wavenumber, r, 0.0); }, 0, grid));
    const double z_R = free_beam_geometry(w0, wavenumber, 0.0).z_R;
    const int steps = 2 * s.n_steps;
    const auto params = PropagationParams::free_space(wavenumber, 0, 2.0 * z_R, steps, steps);
    const PropagationRecord rec = propagate(initial, params);
    const GouyFit fit = extract_gouy_free(rec, qn, w0, wavenumber);
    write_if(dir, "c6_record_free_gaussian.csv", format_record_csv(rec));
    write_if(dir, "c6_gouy_free_gaussian.csv", format_gouy_csv(fit));

    double worst_r2 = 0.0;
    for (std::size_t i = 0; i < rec.size(); ++i) {
        const double expected = w0 * w0 / 2.0 * (1.0 + (rec.z[i] / z_R) * (rec.z[i] / z_R));
        worst_r2 = std::max(worst_r2, std::abs(rec.r2_moment[i] - expected) / expected);
    }
    const ComplexRadialField& last = rec.snapshots.back().field;
    const WavefrontCurvature R = radial_phase_curvature(last, wavenumber);
    const double z_end = rec.z.back();
    const double R_expected = z_end + z_R * z_R / z_end;
    const double R_err = R.infinite ? 1.0 : std::abs(R.radius - R_expected) / R_expected;

    out.require(fit.max_abs_deviation < 1e-2, "zeta max deviation " + format_sci(fit.max_abs_deviation));
    out.require(worst_r2 < 1e-3, "<r^2> rel deviation " + format_sci(worst_r2));
    out.require(R_err < 1e-2, "R rel error " + format_sci(R_err));
    out.detail << (out.passed ? "" : " | ") << "zeta dev " << format_sci(fit.max_abs_deviation) << ", <r^2> dev "
               << format_sci(worst_r2) << ", R=" << (R.infinite ? std::string("inf") : format_sci(R.radius));
    return out;
}

/// w0 = w_m: free mode at the waist equals the Landau mode; Gouy slopes share 2n+|l|+1.
inline Outcome correspondence(const ValidationSettings&, const std::filesystem::path& dir)
{
    Outcome out;
    std::ostringstream csv;
    csv << generated_by_line() << '\n'
        << "species,n,ell,sz,magnetic_q,free_prefactor,shared_rate,free_slope_origin,residual_rate\n";
    double worst_point = 0.0;
    double worst_slope = 0.0;
    const QuantumNumbers modes[] = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, -2}, {0, -1}};
    for (Species species : {Species::electron, Species::positron}) {
        for (SpinProjection sz : {SpinProjection::down(), SpinProjection::up()}) {
            const BeamContext ctx = make_context(species, sz, field_b, wavenumber);
            const RadialGrid grid(8.0 * ctx.w_m(), 512);
            for (const QuantumNumbers& qn : modes) {
                for (int j = 0; j < grid.size(); ++j) {
                    const double r = grid.r(j);
                    const double landau = eval_landau_radial(qn, ctx.w_m(), r);
                    const std::complex<double> free = eval_free_lg(qn, ctx.w_m(), ctx.k(), r, 0.0);
                    const double scale = std::abs(landau);
                    if (scale > 0.0) {
                        worst_point = std::max(worst_point, std::abs(free - landau) / scale);
                    }
                }
                const CorrespondenceReport rep = correspondence_report(qn, ctx);
                const GouyLaw free_law = gouy_law_free(qn, ctx.w_m(), ctx.k());
                const double z = 1e-6 * free_law.rayleigh_length;
                const double slope = free_law.phase_at(z) / z;
                const double slope_err = std::abs(slope - rep.shared_rate) / rep.shared_rate;
                worst_slope = std::max(worst_slope, slope_err);
                csv << to_string(species) << ',' << qn.n << ',' << qn.ell << ',' << (sz.twice() > 0 ? "+0.5" : "-0.5")
                    << ',' << rep.magnetic_q << ',' << rep.free_prefactor << ',' << format_sci(rep.shared_rate) << ','
                    << format_sci(rep.free_slope_origin) << ',' << format_sci(rep.residual_rate) << '\n';
            }
        }
    }
    out.require(worst_point <= 1e-14, "pointwise rel deviation " + format_sci(worst_point));
    out.require(worst_slope <= 1e-10, "slope rel deviation " + format_sci(worst_slope));
    write_if(dir, "c7_correspondence.csv", csv.str());
    out.detail << (out.passed ? "" : " | ") << "pointwise " << format_sci(worst_point) << ", slope "
               << format_sci(worst_slope) << " (residual rates in c7_correspondence.csv)";
    return out;
}

/// Relative gap between sqrt(k^2 - lambda) and k - lambda/(2k) stays inside (lambda/k^2)^2 / 2.
inline Outcome paraxiality_bound(const ValidationSettings&, const std::filesystem::path& dir)
{
    Outcome out;
    constexpr double eps = 1e-12;
    std::ostringstream csv;
    csv << generated_by_line() << '\n' << "k,ratio,rel_gap,bound\n";
    double worst = 0.0;
    for (double k : {1.0, 3.0}) {
        for (int i = 1; i <= 100; ++i) {
            const double x = 0.001 * i;
            const ParaxialMomentum pm = paraxial_pz(k, x * k * k);
            const double bound = x * x / 2.0 * (1.0 + eps);
            worst = std::max(worst, pm.rel_gap / bound);
            csv << format_sci(k) << ',' << format_sci(x) << ',' << format_sci(pm.rel_gap) << ',' << format_sci(bound)
                << '\n';
            out.require(pm.rel_gap <= bound, "k=" + format_sci(k) + " x=" + format_sci(x));
        }
    }
    write_if(dir, "c8_paraxiality.csv", csv.str());
    out.detail << (out.passed ? "" : " | ") << "max rel_gap/bound " << format_sci(worst);
    return out;
}

struct CriterionSpec
{
    int id;
    const char* name;
    double time_limit;
    std::function<Outcome(const ValidationSettings&, const std::filesystem::path&)> run;
};

inline const std::vector<CriterionSpec>& criteria()
{
    static const std::vector<CriterionSpec> list = {
        {1, "spectrum reproduction", 10.0, spectrum_reproduction},
        {2, "convergence order", 30.0, convergence_order},
        {3, "non-equidistant levels", 1.0, non_equidistance},
        {4, "eigenmode stationarity + Gouy law", 60.0, stationarity_and_gouy},
        {5, "spin-ground stationarity", 30.0, spin_ground},
        {6, "free-space limit", 120.0, free_space_limit},
        {7, "magnetic/free correspondence", 5.0, correspondence},
        {8, "paraxiality bound", 1.0, paraxiality_bound},
    };
    return list;
}

} // namespace validation

/// Runs one criterion, timing it; exceptions count as failure.
inline CriterionResult run_criterion(const validation::CriterionSpec& spec, const ValidationSettings& settings,
                                     const std::filesystem::path& dir)
{
    CriterionResult res;
    res.id = spec.id;
    res.name = spec.name;
    res.time_limit = spec.time_limit;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        validation::Outcome o = spec.run(settings, dir);
        res.passed = o.passed;
        res.detail = o.detail.str();
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("error: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.seconds >= res.time_limit) {
        res.passed = false;
        res.detail += " | runtime " + std::to_string(res.seconds) + " s exceeds " + std::to_string(res.time_limit) + " s";
    }
    return res;
}

/// All criteria; results come back in criterion order regardless of `jobs`.
inline std::vector<CriterionResult> run_validation(const ValidationSettings& settings,
                                                   const std::filesystem::path& dir)
{
    const auto& list = validation::criteria();
    std::vector<CriterionResult> results(list.size());
    if (settings.jobs <= 1) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            results[i] = run_criterion(list[i], settings, dir);
        }
        return results;
    }
    std::size_t next = 0;
    while (next < list.size()) {
        std::vector<std::future<CriterionResult>> batch;
        const std::size_t start = next;
        for (int j = 0; j < settings.jobs && next < list.size(); ++j, ++next) {
            batch.push_back(std::async(std::launch::async, [&, i = next] { return run_criterion(list[i], settings, dir); }));
        }
        for (std::size_t j = 0; j < batch.size(); ++j) {
            results[start + j] = batch[j].get();
        }
    }
    return results;
}

inline std::string format_validation_table(const std::vector<CriterionResult>& results)
{
    std::ostringstream out;
    for (const auto& r : results) {
        char head[96];
        std::snprintf(head, sizeof head, "[%s] %d %-34s %7.2fs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                      r.seconds);
        out << head << r.detail << '\n';
    }
    return out.str();
}

} // namespace landau_paraxial
