#pragma once

// Unit convention: hbar = c = m = 1. Lengths are in reduced Compton wavelengths,
// momenta in units of m c, and the field enters only through b = |e|B/m^2.

#include <cmath>
#include <string>
#include <string_view>

#include "landau_paraxial/errors.hpp"

namespace landau_paraxial {

enum class Species
{
    electron,
    positron
};

inline std::string_view to_string(Species s)
{
    return s == Species::electron ? "electron" : "positron";
}

/// Spin projection s_z, stored exactly as the integer 2*s_z in {-1, +1}.
class SpinProjection
{
  public:
    static SpinProjection up() { return SpinProjection(+1); }
    static SpinProjection down() { return SpinProjection(-1); }

    /// Accepts exactly +0.5 or -0.5.
    static SpinProjection from_double(double sz)
    {
        if (sz == 0.5) {
            return up();
        }
        if (sz == -0.5) {
            return down();
        }
        throw DomainError("spin projection must be +1/2 or -1/2, got " + std::to_string(sz));
    }

    static SpinProjection from_twice(int twice_sz)
    {
        if (twice_sz != 1 && twice_sz != -1) {
            throw DomainError("2*s_z must be +1 or -1, got " + std::to_string(twice_sz));
        }
        return SpinProjection(twice_sz);
    }

    int twice() const noexcept { return twice_; }
    double value() const noexcept { return 0.5 * twice_; }
    SpinProjection flipped() const noexcept { return SpinProjection(-twice_); }

    friend bool operator==(SpinProjection, SpinProjection) = default;

  private:
    explicit SpinProjection(int twice)
        : twice_(twice)
    {
    }
    int twice_;
};

struct ParticleSpec
{
    Species species = Species::electron;
    SpinProjection s_z = SpinProjection::down();

    /// -1 for electrons (e = -|e|), +1 for positrons.
    int charge_sign() const noexcept { return species == Species::electron ? -1 : +1; }

    friend bool operator==(const ParticleSpec&, const ParticleSpec&) = default;
};

/// Immutable particle/field configuration with derived scales.
class BeamContext
{
  public:
    const ParticleSpec& particle() const noexcept { return particle_; }
    double b() const noexcept { return b_; }
    double k() const noexcept { return k_; }
    /// Magnetic width 2/sqrt(b).
    double w_m() const noexcept { return w_m_; }

    /// Exact longitudinal momentum sqrt(k^2 - lambda) for a transverse eigenvalue lambda.
    double p_z_exact(double lambda) const
    {
        if (lambda >= k_ * k_) {
            throw ParaxialityError("transverse eigenvalue exceeds k^2");
        }
        return std::sqrt(k_ * k_ - lambda);
    }

    /// lambda/k^2; small values mean the paraxial expansion holds.
    double paraxiality(double lambda) const noexcept { return lambda / (k_ * k_); }

    friend BeamContext make_context(Species, SpinProjection, double, double);

  private:
    BeamContext(ParticleSpec particle, double b, double k)
        : particle_(particle)
        , b_(b)
        , k_(k)
        , w_m_(2.0 / std::sqrt(b))
    {
    }

    ParticleSpec particle_;
    double b_;
    double k_;
    double w_m_;
};

inline BeamContext make_context(Species species, SpinProjection s_z, double b, double k)
{
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw DomainError("field strength b must be positive and finite");
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("wavenumber k must be positive and finite");
    }
    return BeamContext(ParticleSpec{species, s_z}, b, k);
}

inline BeamContext make_context(Species species, double s_z, double b, double k)
{
    return make_context(species, SpinProjection::from_double(s_z), b, k);
}

namespace codata2018 {
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double speed_of_light = 299792458.0;
inline constexpr double elementary_charge = 1.602176634e-19;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double electron_mass_eV = 0.51099895000e6;
} // namespace codata2018

/// Critical (Schwinger) field m^2 c^2 / (e hbar) in tesla.
inline double critical_field_tesla()
{
    using namespace codata2018;
    return electron_mass_kg * electron_mass_kg * speed_of_light * speed_of_light /
           (elementary_charge * hbar);
}

inline double si_to_natural(double B_tesla)
{
    if (!(B_tesla >= 0.0) || !std::isfinite(B_tesla)) {
        throw DomainError("magnetic field in tesla must be finite and non-negative");
    }
    return B_tesla / critical_field_tesla();
}

} // namespace landau_paraxial
