#pragma once

// Closed-form mode physics: relativistic Landau energies, transverse eigenvalues,
// Landau and free-space Laguerre-Gauss radial profiles, and both Gouy-phase laws.
//
// Every mode is an OAM eigenstate u(r) exp(i l phi); the azimuthal factor and the
// longitudinal carrier are never sampled, only the radial profile is.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/special_functions.hpp"
#include "landau_paraxial/units.hpp"

namespace landau_paraxial {

struct QuantumNumbers
{
    int n = 0;   ///< radial index
    int ell = 0; ///< OAM projection

    static QuantumNumbers make(int n, int ell)
    {
        if (n < 0) {
            throw DomainError("radial quantum number must be non-negative");
        }
        return QuantumNumbers{n, ell};
    }

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Integer multiplying b/(2k) in the magnetic Gouy rate and b in the transverse eigenvalue.
/// Electron: 2n+1+|l|+l+2s_z. Positron: 2n+1+|l|-l-2s_z.
inline int q_factor(const QuantumNumbers& qn, const ParticleSpec& particle)
{
    const int cs = particle.charge_sign();
    return 2 * qn.n + 1 + std::abs(qn.ell) - cs * qn.ell - cs * particle.s_z.twice();
}

/// Free-space Gouy prefactor 2n+|l|+1.
inline int free_gouy_prefactor(const QuantumNumbers& qn) { return 2 * qn.n + std::abs(qn.ell) + 1; }

/// Relativistic Landau level sqrt(1 + p_z^2 + q b) in units of m.
inline double landau_energy(const QuantumNumbers& qn, const ParticleSpec& particle, double p_z, double b)
{
    if (!(b >= 0.0)) {
        throw DomainError("landau_energy: b must be non-negative");
    }
    const double radicand = 1.0 + p_z * p_z + q_factor(qn, particle) * b;
    if (!(radicand > 0.0)) {
        throw std::logic_error("landau_energy: negative radicand");
    }
    return std::sqrt(radicand);
}

/// Eigenvalue of the (negated) transverse operator: q b.
inline double transverse_eigenvalue(const QuantumNumbers& qn, const ParticleSpec& particle, double b)
{
    if (!(b > 0.0)) {
        throw DomainError("transverse_eigenvalue: b must be positive");
    }
    return q_factor(qn, particle) * b;
}

struct ParaxialMomentum
{
    double exact;   ///< sqrt(k^2 - lambda)
    double approx;  ///< k - lambda/(2k)
    double rel_gap; ///< |exact - approx| / exact
};

inline ParaxialMomentum paraxial_pz(double k, double lambda)
{
    if (!(lambda < k * k)) {
        throw ParaxialityError("paraxial_pz: lambda must be below k^2 (lambda=" + std::to_string(lambda) +
                               ", k=" + std::to_string(k) + ")");
    }
    const double exact = std::sqrt(k * k - lambda);
    const double approx = k - lambda / (2.0 * k);
    return {exact, approx, std::abs(exact - approx) / exact};
}

/// Real Landau amplitude (C/w)(sqrt2 r/w)^|l| L_n^|l|(2r^2/w^2) exp(-r^2/w^2).
inline double eval_landau_radial(const QuantumNumbers& qn, double w_m, double r)
{
    if (!(r >= 0.0) || !(w_m > 0.0)) {
        throw DomainError("eval_landau_radial: requires r >= 0 and w_m > 0");
    }
    const int abs_ell = std::abs(qn.ell);
    const double s = r / w_m;
    return mode_norm_constant(qn.n, qn.ell) / w_m * std::pow(std::sqrt(2.0) * s, abs_ell) *
           laguerre(qn.n, abs_ell, 2.0 * s * s) * std::exp(-s * s);
}

/// Radius of wavefront curvature; a flat wavefront is flagged rather than stored as inf.
struct WavefrontCurvature
{
    bool infinite = true;
    double radius = 0.0; ///< meaningful only when !infinite
};

struct FreeBeamGeometry
{
    double w0;
    double z_R;
    double w_z;
    WavefrontCurvature R_z;
    double zeta; ///< arctan(z/z_R); multiply by free_gouy_prefactor for a given mode
};

inline FreeBeamGeometry free_beam_geometry(double w0, double k, double z)
{
    if (!(w0 > 0.0) || !(k > 0.0)) {
        throw DomainError("free_beam_geometry: requires w0 > 0 and k > 0");
    }
    FreeBeamGeometry g{};
    g.w0 = w0;
    g.z_R = k * w0 * w0 / 2.0;
    g.w_z = w0 * std::sqrt(1.0 + (z / g.z_R) * (z / g.z_R));
    if (z != 0.0) {
        g.R_z = WavefrontCurvature{false, z + g.z_R * g.z_R / z};
    }
    g.zeta = std::atan(z / g.z_R);
    return g;
}

/// Free Laguerre-Gauss envelope at (r, z) without the exp(i l phi) factor.
inline std::complex<double> eval_free_lg(const QuantumNumbers& qn, double w0, double k, double r, double z)
{
    if (!(r >= 0.0)) {
        throw DomainError("eval_free_lg: r must be non-negative");
    }
    const FreeBeamGeometry g = free_beam_geometry(w0, k, z);
    const double amplitude = eval_landau_radial(qn, g.w_z, r);
    // 1/R = z/(z^2 + z_R^2) vanishes at the waist without a special case.
    const double inv_R = z / (z * z + g.z_R * g.z_R);
    const double phase = k * r * r * inv_R / 2.0 - free_gouy_prefactor(qn) * g.zeta;
    // amplitude may be negative (Laguerre sign), which std::polar does not allow.
    return {amplitude * std::cos(phase), amplitude * std::sin(phase)};
}

enum class GouyLawKind
{
    linear_magnetic,
    arctan_free
};

struct GouyLaw
{
    GouyLawKind law = GouyLawKind::linear_magnetic;
    int q_factor = 0;
    double rate = 0.0;            ///< d(zeta)/dz at z = 0
    double rayleigh_length = 0.0; ///< arctan law only

    double phase_at(double z) const
    {
        if (law == GouyLawKind::linear_magnetic) {
            return rate * z;
        }
        return q_factor * std::atan(z / rayleigh_length);
    }
};

/// zeta = q b z/(2k), cross-checked against q 2z/(k w_m^2).
inline GouyLaw gouy_law_magnetic(const QuantumNumbers& qn, const ParticleSpec& particle, const BeamContext& ctx)
{
    const int q = q_factor(qn, particle);
    const double rate = q * ctx.b() / (2.0 * ctx.k());
    const double rate_from_width = q * 2.0 / (ctx.k() * ctx.w_m() * ctx.w_m());
    if (std::abs(rate - rate_from_width) > 1e-14 * std::max(1.0, std::abs(rate))) {
        throw std::logic_error("gouy_law_magnetic: w_m^2 b != 4");
    }
    return GouyLaw{GouyLawKind::linear_magnetic, q, rate, 0.0};
}

inline GouyLaw gouy_law_free(const QuantumNumbers& qn, double w0, double k)
{
    const double z_R = free_beam_geometry(w0, k, 0.0).z_R;
    const int q = free_gouy_prefactor(qn);
    return GouyLaw{GouyLawKind::arctan_free, q, q / z_R, z_R};
}

enum class Physicality
{
    physical,
    unphysical_rotation
};

/// Lorentz-force rotation sense: l >= 0 for electrons, l <= 0 for positrons.
inline Physicality physicality_check(const QuantumNumbers& qn, const ParticleSpec& particle)
{
    const bool wrong = particle.species == Species::electron ? qn.ell < 0 : qn.ell > 0;
    return wrong ? Physicality::unphysical_rotation : Physicality::physical;
}

/// Side-by-side comparison of the magnetic and free Gouy laws for w0 = w_m.
struct CorrespondenceReport
{
    int magnetic_q;           ///< 2n+1+|l| -/+ l -/+ 2s_z
    int free_prefactor;       ///< 2n+|l|+1
    double shared_rate;       ///< free_prefactor * b/(2k)
    double free_slope_origin; ///< free_prefactor / z_R with w0 = w_m
    double residual_rate;     ///< (magnetic_q - free_prefactor) * b/(2k), reported only
};

inline CorrespondenceReport correspondence_report(const QuantumNumbers& qn, const BeamContext& ctx)
{
    const ParticleSpec& particle = ctx.particle();
    CorrespondenceReport rep{};
    rep.magnetic_q = q_factor(qn, particle);
    rep.free_prefactor = free_gouy_prefactor(qn);
    rep.shared_rate = rep.free_prefactor * ctx.b() / (2.0 * ctx.k());
    rep.free_slope_origin = gouy_law_free(qn, ctx.w_m(), ctx.k()).rate;
    rep.residual_rate = (rep.magnetic_q - rep.free_prefactor) * ctx.b() / (2.0 * ctx.k());
    return rep;
}

} // namespace landau_paraxial
