#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/keyvalue.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/units.hpp"

namespace landau_paraxial {

/// Settings for every CLI subcommand. Omitted keys take the defaults below.
struct RunConfig
{
    Species particle = Species::electron;
    SpinProjection sz = SpinProjection::down();
    double b = 0.01;
    double k = 1.0;
    int n = 0;
    int ell = 0;
    double pz = 0.0;
    double grid_r_max_wm = 8.0;
    int grid_n_points = 2048;
    double prop_z_max = 100.0;
    int prop_n_steps = 2000;
    int prop_snapshot_stride = 500;
    Carrier mode = Carrier::paraxial;
    std::optional<double> free_w0;
    std::string output_dir = ".";
    int spectrum_n_levels = 5;

    ParticleSpec particle_spec() const { return ParticleSpec{particle, sz}; }

    /// Length scale that r_max_wm multiplies: w_m for b > 0, the free waist otherwise.
    double width_scale() const { return b > 0.0 ? 2.0 / std::sqrt(b) : free_w0.value_or(0.0); }

    RadialGrid grid() const { return RadialGrid(grid_r_max_wm * width_scale(), grid_n_points); }
};

inline constexpr std::array<std::string_view, 16> run_config_keys = {
    "particle",     "sz",         "b",         "k",           "n",         "ell",      "pz",         "grid.r_max_wm",
    "grid.n_points", "prop.z_max", "prop.n_steps", "prop.snapshot_stride", "mode", "free.w0", "output.dir",
    "spectrum.n_levels"};

namespace detail {

inline double config_double(const KeyValueLine& l)
{
    const auto v = parse_double(l.value);
    if (!v) {
        throw ConfigError(l.line_no, l.key, "expected a finite number, got '" + l.value + "'");
    }
    return *v;
}

inline int config_int(const KeyValueLine& l)
{
    const auto v = parse_long(l.value);
    if (!v || *v < -1000000000L || *v > 1000000000L) {
        throw ConfigError(l.line_no, l.key, "expected an integer, got '" + l.value + "'");
    }
    return static_cast<int>(*v);
}

} // namespace detail

/// Parses and validates a config; the first offending key/line is reported.
inline RunConfig parse_run_config(const std::string& text)
{
    const KeyValueDocument doc = KeyValueDocument::parse(text);
    RunConfig cfg;
    for (const KeyValueLine& l : doc.lines()) {
        if (l.kind != KeyValueLine::Kind::entry) {
            continue;
        }
        const std::string& key = l.key;
        if (key == "particle") {
            if (l.value == "electron") {
                cfg.particle = Species::electron;
            } else if (l.value == "positron") {
                cfg.particle = Species::positron;
            } else {
                throw ConfigError(l.line_no, key, "expected electron or positron");
            }
        } else if (key == "sz") {
            if (l.value == "+0.5" || l.value == "0.5") {
                cfg.sz = SpinProjection::up();
            } else if (l.value == "-0.5") {
                cfg.sz = SpinProjection::down();
            } else {
                throw ConfigError(l.line_no, key, "expected +0.5 or -0.5");
            }
        } else if (key == "b") {
            cfg.b = detail::config_double(l);
            if (cfg.b < 0.0) {
                throw ConfigError(l.line_no, key, "field strength must be non-negative");
            }
        } else if (key == "k") {
            cfg.k = detail::config_double(l);
            if (!(cfg.k > 0.0)) {
                throw ConfigError(l.line_no, key, "wavenumber must be positive");
            }
        } else if (key == "n") {
            cfg.n = detail::config_int(l);
            if (cfg.n < 0) {
                throw ConfigError(l.line_no, key, "radial index must be non-negative");
            }
        } else if (key == "ell") {
            cfg.ell = detail::config_int(l);
        } else if (key == "pz") {
            cfg.pz = detail::config_double(l);
        } else if (key == "grid.r_max_wm") {
            cfg.grid_r_max_wm = detail::config_double(l);
            if (!(cfg.grid_r_max_wm > 0.0)) {
                throw ConfigError(l.line_no, key, "must be positive");
            }
        } else if (key == "grid.n_points") {
            cfg.grid_n_points = detail::config_int(l);
            if (cfg.grid_n_points < RadialGrid::min_points) {
                throw ConfigError(l.line_no, key, "must be at least 16");
            }
        } else if (key == "prop.z_max") {
            cfg.prop_z_max = detail::config_double(l);
            if (!(cfg.prop_z_max > 0.0)) {
                throw ConfigError(l.line_no, key, "must be positive");
            }
        } else if (key == "prop.n_steps") {
            cfg.prop_n_steps = detail::config_int(l);
            if (cfg.prop_n_steps < 1) {
                throw ConfigError(l.line_no, key, "must be at least 1");
            }
        } else if (key == "prop.snapshot_stride") {
            cfg.prop_snapshot_stride = detail::config_int(l);
            if (cfg.prop_snapshot_stride < 1) {
                throw ConfigError(l.line_no, key, "must be at least 1");
            }
        } else if (key == "mode") {
            if (l.value != "fw" && l.value != "paraxial") {
                throw ConfigError(l.line_no, key, "expected fw or paraxial");
            }
            cfg.mode = parse_carrier(l.value);
        } else if (key == "free.w0") {
            cfg.free_w0 = detail::config_double(l);
            if (!(*cfg.free_w0 > 0.0)) {
                throw ConfigError(l.line_no, key, "waist must be positive");
            }
        } else if (key == "output.dir") {
            cfg.output_dir = l.value;
        } else if (key == "spectrum.n_levels") {
            cfg.spectrum_n_levels = detail::config_int(l);
            if (cfg.spectrum_n_levels < 1 || cfg.spectrum_n_levels > 12) {
                throw ConfigError(l.line_no, key, "must be in [1, 12]");
            }
        } else {
            throw ConfigError(l.line_no, key, "unknown key");
        }
    }
    if (cfg.b == 0.0 && !cfg.free_w0) {
        const KeyValueLine* bl = doc.find("b");
        throw ConfigError(bl ? bl->line_no : 0, "free.w0", "missing key: required when b = 0");
    }
    return cfg;
}

} // namespace landau_paraxial
