#pragma once

// Crank-Nicolson integration of the paraxial equation i dPsi/dz = T Psi / (2k) at fixed l.
//
// The step (I + i dz T/(4k)) v' = (I - i dz T/(4k)) v is taken on v = sqrt(r) u, where T is
// a real symmetric tridiagonal matrix, so the step is unitary in the plain Euclidean norm
// of v (which equals the weighted norm of u up to the constant 2 pi h).

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/transverse_operator.hpp"

namespace landau_paraxial {

/// Boundary/peak amplitude above which a run is stopped as wall contact.
inline constexpr double wall_contact_threshold = 1e-8;
/// Allowed |norm - 1| of the initial field.
inline constexpr double initial_norm_tolerance = 1e-8;

struct PropagationParams
{
    TransverseOperatorParams op;
    double k = 1.0;
    double z_max = 0.0;
    int n_steps = 1;
    int snapshot_stride = 1;

    static PropagationParams magnetic(const BeamContext& ctx, int ell, double z_max, int n_steps, int stride)
    {
        return PropagationParams{TransverseOperatorParams::from_context(ctx, ell), ctx.k(), z_max, n_steps, stride};
    }

    static PropagationParams free_space(double k, int ell, double z_max, int n_steps, int stride)
    {
        return PropagationParams{TransverseOperatorParams::free_space(ell), k, z_max, n_steps, stride};
    }

    double dz() const { return z_max / n_steps; }

    void validate() const
    {
        op.validate();
        if (!(k > 0.0) || !std::isfinite(k)) {
            throw DomainError("propagation: k must be positive");
        }
        if (!(z_max > 0.0) || !std::isfinite(z_max)) {
            throw DomainError("propagation: z_max must be positive");
        }
        if (n_steps < 1) {
            throw DomainError("propagation: n_steps must be >= 1");
        }
        if (snapshot_stride < 1) {
            throw DomainError("propagation: snapshot_stride must be >= 1");
        }
    }
};

/// Pre-factored Crank-Nicolson step for one grid, operator and dz.
class CrankNicolsonStepper
{
  public:
    CrankNicolsonStepper(const RadialGrid& grid, const TransverseOperatorParams& op, double k, double dz)
        : matrix_(build_transverse_matrix(grid, op))
        , a_(0.0, dz / (4.0 * k))
    {
        if (!(dz > 0.0)) {
            throw DomainError("cn step: dz must be positive");
        }
        const int n = matrix_.size();
        inv_pivot_.resize(n);
        upper_.resize(n > 0 ? n - 1 : 0);
        complex pivot = 1.0 + a_ * matrix_.diag[0];
        for (int j = 0; j < n; ++j) {
            if (j > 0) {
                const complex lower = a_ * matrix_.offdiag[j - 1];
                pivot = 1.0 + a_ * matrix_.diag[j] - lower * upper_[j - 1];
            }
            if (std::abs(pivot) < 1e-300) {
                throw NumericError("cn step: singular tridiagonal system at row " + std::to_string(j));
            }
            inv_pivot_[j] = 1.0 / pivot;
            if (j + 1 < n) {
                upper_[j] = a_ * matrix_.offdiag[j] * inv_pivot_[j];
            }
        }
    }

    /// Advances v = sqrt(r) u in place.
    void step(std::vector<complex>& v) const
    {
        const int n = matrix_.size();
        rhs_.resize(n);
        for (int j = 0; j < n; ++j) {
            complex tv = matrix_.diag[j] * v[j];
            if (j > 0) {
                tv += matrix_.offdiag[j - 1] * v[j - 1];
            }
            if (j + 1 < n) {
                tv += matrix_.offdiag[j] * v[j + 1];
            }
            rhs_[j] = v[j] - a_ * tv;
        }
        // Thomas forward sweep and back substitution.
        rhs_[0] *= inv_pivot_[0];
        for (int j = 1; j < n; ++j) {
            rhs_[j] = (rhs_[j] - a_ * matrix_.offdiag[j - 1] * rhs_[j - 1]) * inv_pivot_[j];
        }
        v[n - 1] = rhs_[n - 1];
        for (int j = n - 2; j >= 0; --j) {
            v[j] = rhs_[j] - upper_[j] * v[j + 1];
        }
    }

    const TridiagonalSym& matrix() const noexcept { return matrix_; }

  private:
    TridiagonalSym matrix_;
    complex a_;
    std::vector<complex> inv_pivot_;
    std::vector<complex> upper_;
    mutable std::vector<complex> rhs_;
};

namespace detail {

inline std::vector<complex> to_sqrt_r(const ComplexRadialField& f)
{
    std::vector<complex> v(f.grid().size());
    for (int j = 0; j < f.grid().size(); ++j) {
        v[j] = std::sqrt(f.grid().r(j)) * f[j];
    }
    return v;
}

inline std::vector<complex> from_sqrt_r(const RadialGrid& grid, std::vector<complex> v)
{
    for (int j = 0; j < grid.size(); ++j) {
        v[j] /= std::sqrt(grid.r(j));
    }
    return v;
}

} // namespace detail

/// One Crank-Nicolson step of length dz.
inline ComplexRadialField cn_step(const ComplexRadialField& field, const PropagationParams& params, double dz)
{
    params.op.validate();
    if (field.carrier() != Carrier::paraxial) {
        throw UsageError("cn_step: field must carry the paraxial (envelope) convention");
    }
    if (field.ell() != params.op.ell) {
        throw UsageError("cn_step: field ell does not match operator ell");
    }
    const CrankNicolsonStepper stepper(field.grid(), params.op, params.k, dz);
    std::vector<complex> v = detail::to_sqrt_r(field);
    stepper.step(v);
    return field.with_values(detail::from_sqrt_r(field.grid(), std::move(v)));
}

struct Snapshot
{
    double z;
    ComplexRadialField field;
};

struct PropagationRecord
{
    PropagationParams params;
    std::vector<double> z;
    std::vector<double> norm;
    std::vector<complex> overlap;  ///< <u(0), u(z)>
    std::vector<double> r2_moment;
    std::vector<complex> axis_value; ///< u at the innermost node
    std::vector<Snapshot> snapshots;

    std::size_t size() const noexcept { return z.size(); }
};

namespace detail {

struct Diagnostics
{
    double norm;
    complex overlap;
    double r2;
    double wall_ratio;
};

inline Diagnostics diagnose(const RadialGrid& grid, const std::vector<complex>& v0, const std::vector<complex>& v)
{
    const double w = 2.0 * std::numbers::pi * grid.h();
    double n2 = 0.0;
    double r2 = 0.0;
    double peak = 0.0;
    complex ov(0.0, 0.0);
    for (int j = 0; j < grid.size(); ++j) {
        const double a2 = std::norm(v[j]);
        const double r = grid.r(j);
        n2 += a2 * w;
        r2 += a2 * r * r * w;
        ov += std::conj(v0[j]) * v[j] * w;
        peak = std::max(peak, std::sqrt(a2 / r));
    }
    const int last = grid.size() - 1;
    const double edge = std::abs(v[last]) / std::sqrt(grid.r(last));
    return Diagnostics{std::sqrt(n2), ov, r2, peak > 0.0 ? edge / peak : 0.0};
}

} // namespace detail

/// Runs n_steps Crank-Nicolson steps of size z_max/n_steps, recording diagnostics after each.
inline PropagationRecord propagate(const ComplexRadialField& initial, const PropagationParams& params)
{
    params.validate();
    if (initial.carrier() != Carrier::paraxial) {
        throw UsageError("propagate: initial field must carry the paraxial (envelope) convention");
    }
    if (initial.ell() != params.op.ell) {
        throw UsageError("propagate: field ell does not match operator ell");
    }
    const double n0 = norm(initial);
    if (!(std::abs(n0 - 1.0) <= initial_norm_tolerance)) {
        throw DomainError("propagate: initial field must be normalized (norm=" + format_sci(n0) + ")");
    }
    const double start_ratio = boundary_amplitude_ratio(initial);
    if (start_ratio > wall_contact_threshold) {
        throw WallContactError(0.0, start_ratio);
    }

    const RadialGrid& grid = initial.grid();
    const double dz = params.dz();
    const CrankNicolsonStepper stepper(grid, params.op, params.k, dz);
    const std::vector<complex> v0 = detail::to_sqrt_r(initial);
    std::vector<complex> v = v0;

    PropagationRecord rec;
    rec.params = params;
    const std::size_t samples = static_cast<std::size_t>(params.n_steps) + 1;
    rec.z.reserve(samples);
    rec.norm.reserve(samples);
    rec.overlap.reserve(samples);
    rec.r2_moment.reserve(samples);
    rec.axis_value.reserve(samples);

    auto record = [&](int step) {
        const double z = step * dz;
        const detail::Diagnostics d = detail::diagnose(grid, v0, v);
        if (d.wall_ratio > wall_contact_threshold) {
            throw WallContactError(z, d.wall_ratio);
        }
        rec.z.push_back(z);
        rec.norm.push_back(d.norm);
        rec.overlap.push_back(d.overlap);
        rec.r2_moment.push_back(d.r2);
        rec.axis_value.push_back(v[0] / std::sqrt(grid.r(0)));
        if (step % params.snapshot_stride == 0) {
            rec.snapshots.push_back(Snapshot{z, initial.with_values(detail::from_sqrt_r(grid, v))});
        }
    };

    record(0);
    for (int s = 1; s <= params.n_steps; ++s) {
        stepper.step(v);
        record(s);
    }
    return rec;
}

inline std::string format_record_csv(const PropagationRecord& rec)
{
    std::ostringstream out;
    out << generated_by_line() << '\n';
    out << "z,norm,re_overlap,im_overlap,r2_moment\n";
    for (std::size_t i = 0; i < rec.size(); ++i) {
        out << format_sci(rec.z[i]) << ',' << format_sci(rec.norm[i]) << ',' << format_sci(rec.overlap[i].real())
            << ',' << format_sci(rec.overlap[i].imag()) << ',' << format_sci(rec.r2_moment[i]) << '\n';
    }
    return out.str();
}

} // namespace landau_paraxial
