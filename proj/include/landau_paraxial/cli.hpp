#pragma once

// Subcommand implementations behind the landau-paraxial executable.
// Exit codes: 0 success, 2 numerical acceptance failure, 3 physics guard (wall contact),
// 64 usage or config error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>

#include "landau_paraxial/config.hpp"
#include "landau_paraxial/gouy.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/propagator.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/spectrum.hpp"
#include "landau_paraxial/validate.hpp"

namespace landau_paraxial::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_acceptance = 2;
inline constexpr int exit_guard = 3;
inline constexpr int exit_usage = 64;

/// Spectrum check passes when every level is within this relative error.
inline constexpr double spectrum_tolerance = 1e-5;
/// Gouy check thresholds.
inline constexpr double gouy_slope_tolerance = 1e-3;
inline constexpr double gouy_free_tolerance = 1e-2;
/// Boundary/peak amplitude above which the mode command warns about the box size.
inline constexpr double boundary_warning_threshold = 1e-8;

struct Streams
{
    std::ostream& out;
    std::ostream& err;
};

inline std::filesystem::path output_dir(const RunConfig& cfg) { return cfg.output_dir; }

inline QuantumNumbers quantum_numbers(const RunConfig& cfg) { return QuantumNumbers::make(cfg.n, cfg.ell); }

/// Analytic mode at z = 0 on the configured grid: Landau for b > 0, free LG waist for b = 0.
inline ComplexRadialField initial_mode(const RunConfig& cfg)
{
    const QuantumNumbers qn = quantum_numbers(cfg);
    const RadialGrid grid = cfg.grid();
    if (cfg.b > 0.0) {
        const double w_m = 2.0 / std::sqrt(cfg.b);
        return sample_mode([&](double r) { return eval_landau_radial(qn, w_m, r); }, qn.ell, grid);
    }
    const double w0 = *cfg.free_w0;
    return sample_mode([&](double r) { return eval_free_lg(qn, w0, cfg.k, r, 0.0); }, qn.ell, grid);
}

inline PropagationParams propagation_params(const RunConfig& cfg)
{
    if (cfg.b > 0.0) {
        const BeamContext ctx = make_context(cfg.particle, cfg.sz, cfg.b, cfg.k);
        return PropagationParams::magnetic(ctx, cfg.ell, cfg.prop_z_max, cfg.prop_n_steps, cfg.prop_snapshot_stride);
    }
    return PropagationParams::free_space(cfg.k, cfg.ell, cfg.prop_z_max, cfg.prop_n_steps, cfg.prop_snapshot_stride);
}

inline std::string snapshot_name(std::size_t index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%05zu.field", index);
    return buf;
}

inline void warn_physicality(const RunConfig& cfg, const Streams& io)
{
    if (physicality_check(quantum_numbers(cfg), cfg.particle_spec()) == Physicality::unphysical_rotation) {
        io.err << "warning: unphysical rotation direction (l=" << cfg.ell << " for a " << to_string(cfg.particle)
               << ")\n";
    }
}

inline int cmd_spectrum(const RunConfig& cfg, const Streams& io)
{
    if (!(cfg.b > 0.0)) {
        io.err << "error: key 'b': spectrum requires b > 0\n";
        return exit_usage;
    }
    const BeamContext ctx = make_context(cfg.particle, cfg.sz, cfg.b, cfg.k);
    const SpectrumReport rep = spectrum_report(ctx, cfg.ell, cfg.spectrum_n_levels, cfg.grid(), cfg.pz);
    const auto path = output_dir(cfg) / "spectrum.csv";
    write_text_file(path, format_spectrum_csv(rep));
    io.out << "wrote " << path.string() << "\n";
    io.out << "max relative eigenvalue error " << format_sci(rep.max_rel_err()) << "\n";
    io.out << "spacings strictly decreasing: " << (rep.spacings_strictly_decreasing ? "true" : "false") << "\n";
    return rep.max_rel_err() < spectrum_tolerance ? exit_ok : exit_acceptance;
}

inline int cmd_mode(const RunConfig& cfg, const Streams& io)
{
    const ComplexRadialField mode = with_carrier(initial_mode(cfg), cfg.mode, cfg.k, 0.0);
    const auto path = output_dir(cfg) / "mode.field";
    write_text_file(path, format_field_dump(mode));
    const bool physical = physicality_check(quantum_numbers(cfg), cfg.particle_spec()) == Physicality::physical;
    io.out << "wrote " << path.string() << "\n";
    io.out << "norm " << format_sci(norm(mode)) << "\n";
    io.out << "physicality " << (physical ? "physical" : "unphysical_rotation") << "\n";
    warn_physicality(cfg, io);
    const double edge = boundary_amplitude_ratio(mode);
    if (edge > boundary_warning_threshold) {
        io.err << "warning: boundary amplitude " << format_sci(edge) << " of peak; increase grid.r_max_wm\n";
    }
    return exit_ok;
}

/// Propagates the configured mode and writes record.csv and snapshots.
inline PropagationRecord run_propagation(const RunConfig& cfg, const Streams& io)
{
    warn_physicality(cfg, io);
    const ComplexRadialField initial = normalized(initial_mode(cfg));
    const PropagationRecord rec = propagate(initial, propagation_params(cfg));
    const auto dir = output_dir(cfg);
    write_text_file(dir / "record.csv", format_record_csv(rec));
    for (std::size_t i = 0; i < rec.snapshots.size(); ++i) {
        const Snapshot& s = rec.snapshots[i];
        const ComplexRadialField exported = with_carrier(s.field, cfg.mode, cfg.k, s.z);
        write_text_file(dir / snapshot_name(i), format_field_dump(exported, &s.z));
    }
    io.out << "wrote " << (dir / "record.csv").string() << " and " << rec.snapshots.size() << " snapshots\n";
    return rec;
}

inline int cmd_propagate(const RunConfig& cfg, const Streams& io)
{
    try {
        const PropagationRecord rec = run_propagation(cfg, io);
        double drift = 0.0;
        for (double v : rec.norm) {
            drift = std::max(drift, std::abs(v - rec.norm.front()));
        }
        io.out << "final |overlap| " << format_sci(std::abs(rec.overlap.back())) << "\n";
        io.out << "max norm drift " << format_sci(drift) << "\n";
        return exit_ok;
    } catch (const WallContactError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_guard;
    }
}

inline int cmd_gouy(const RunConfig& cfg, const Streams& io)
{
    try {
        const PropagationRecord rec = run_propagation(cfg, io);
        const QuantumNumbers qn = quantum_numbers(cfg);
        GouyFit fit;
        bool ok = false;
        if (cfg.b > 0.0) {
            const BeamContext ctx = make_context(cfg.particle, cfg.sz, cfg.b, cfg.k);
            fit = extract_gouy(rec, gouy_law_magnetic(qn, ctx.particle(), ctx));
            ok = fit.rel_slope_error < gouy_slope_tolerance;
        } else {
            fit = extract_gouy_free(rec, qn, *cfg.free_w0, cfg.k);
            ok = fit.max_abs_deviation < gouy_free_tolerance;
        }
        const auto path = output_dir(cfg) / "gouy.csv";
        write_text_file(path, format_gouy_csv(fit));
        io.out << "wrote " << path.string() << "\n";
        io.out << "slope " << format_sci(fit.fitted_slope) << " analytic " << format_sci(fit.analytic_rate)
               << " rel_err " << format_sci(fit.rel_slope_error) << " max_dev " << format_sci(fit.max_abs_deviation)
               << "\n";
        return ok ? exit_ok : exit_acceptance;
    } catch (const WallContactError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_guard;
    }
}

inline int cmd_validate(const RunConfig& cfg, int jobs, const Streams& io)
{
    ValidationSettings settings;
    settings.n_steps = cfg.prop_n_steps;
    settings.jobs = jobs;
    const auto results = run_validation(settings, output_dir(cfg));
    io.out << format_validation_table(results);
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    io.out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all ? exit_ok : exit_acceptance;
}

/// Dispatches a subcommand, mapping library errors onto exit codes.
inline int run_command(const std::string& command, const RunConfig& cfg, int jobs, const Streams& io)
{
    try {
        if (command == "spectrum") {
            return cmd_spectrum(cfg, io);
        }
        if (command == "mode") {
            return cmd_mode(cfg, io);
        }
        if (command == "propagate") {
            return cmd_propagate(cfg, io);
        }
        if (command == "gouy") {
            return cmd_gouy(cfg, io);
        }
        if (command == "validate") {
            return cmd_validate(cfg, jobs, io);
        }
        io.err << "error: unknown command '" << command << "'\n";
        return exit_usage;
    } catch (const ConfigError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_acceptance;
    }
}

} // namespace landau_paraxial::cli
