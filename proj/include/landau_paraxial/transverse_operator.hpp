#pragma once

// Discrete transverse operator
//
//   T u = -(u'' + u'/r - l^2 u/r^2) - s b l u + (b^2 r^2/4) u - 2 s s_z b u,   s = charge sign,
//
// whose eigenvalues are q b. It is discretized in factorized form: with
// rho(r) = r^|l| exp(-b r^2/4), the lowest state of the oscillator part, one has
//
//   -lap_l + b^2 r^2/4 = A^+ A + b(|l| + 1),    A u = rho (u/rho)'.
//
// A is differenced across cell faces of the staggered grid, so the discrete rho is an
// exact null vector of A^+ A (up to the Dirichlet wall) and the scheme is second order.
// Acting on v = sqrt(r) u the matrix is symmetric tridiagonal.

#include <cmath>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/units.hpp"

namespace landau_paraxial {

struct TransverseOperatorParams
{
    int ell = 0;
    double b = 0.0;
    SpinProjection s_z = SpinProjection::down();
    int charge_sign = -1;

    static TransverseOperatorParams from_context(const BeamContext& ctx, int ell)
    {
        return TransverseOperatorParams{ell, ctx.b(), ctx.particle().s_z, ctx.particle().charge_sign()};
    }

    /// b = 0; spin and charge then drop out of the operator.
    static TransverseOperatorParams free_space(int ell) { return TransverseOperatorParams{ell, 0.0}; }

    void validate() const
    {
        if (!(b >= 0.0) || !std::isfinite(b)) {
            throw DomainError("transverse operator: b must be finite and non-negative");
        }
        if (charge_sign != 1 && charge_sign != -1) {
            throw DomainError("transverse operator: charge_sign must be +1 or -1");
        }
    }

    /// Constant part: b(|l|+1) - s b l - 2 s s_z b.
    double constant_shift() const
    {
        return b * (std::abs(ell) + 1) - charge_sign * b * ell - charge_sign * s_z.twice() * b;
    }
};

struct TridiagonalSym
{
    std::vector<double> diag;
    std::vector<double> offdiag; ///< size N-1; offdiag[j] couples j and j+1

    int size() const noexcept { return static_cast<int>(diag.size()); }

    std::vector<double> apply(std::span<const double> x) const
    {
        const int n = size();
        std::vector<double> y(n);
        for (int j = 0; j < n; ++j) {
            double s = diag[j] * x[j];
            if (j > 0) {
                s += offdiag[j - 1] * x[j - 1];
            }
            if (j + 1 < n) {
                s += offdiag[j] * x[j + 1];
            }
            y[j] = s;
        }
        return y;
    }

    template <class T>
    std::vector<T> apply_complex(std::span<const T> x) const
    {
        const int n = size();
        std::vector<T> y(n);
        for (int j = 0; j < n; ++j) {
            T s = diag[j] * x[j];
            if (j > 0) {
                s += offdiag[j - 1] * x[j - 1];
            }
            if (j + 1 < n) {
                s += offdiag[j] * x[j + 1];
            }
            y[j] = s;
        }
        return y;
    }

    bool all_finite() const
    {
        for (double d : diag) {
            if (!std::isfinite(d)) {
                return false;
            }
        }
        for (double e : offdiag) {
            if (!std::isfinite(e)) {
                return false;
            }
        }
        return true;
    }
};

/// Matrix of T in the variable v = sqrt(r) u, Dirichlet at r_max.
inline TridiagonalSym build_transverse_matrix(const RadialGrid& grid, const TransverseOperatorParams& params)
{
    params.validate();
    const int n = grid.size();
    const int L = std::abs(params.ell);
    const double b = params.b;
    const double h = grid.h();
    const double h2 = h * h;
    const double shift = params.constant_shift();

    // rho(face)^2 / rho(node)^2
    auto face_weight = [&](double face, double node) {
        return std::pow(face / node, 2 * L) * std::exp(-b * (face * face - node * node) / 2.0);
    };

    TridiagonalSym m;
    m.diag.resize(n);
    m.offdiag.resize(n - 1);
    for (int j = 0; j < n; ++j) {
        const double r = grid.r(j);
        const double outer = grid.face(j);
        double flux = outer * face_weight(outer, r);
        if (j > 0) {
            const double inner = grid.face(j - 1);
            flux += inner * face_weight(inner, r);
        }
        m.diag[j] = flux / (h2 * r) + shift;
    }
    const double gauss_factor = std::exp(b * h2 / 8.0);
    for (int j = 0; j + 1 < n; ++j) {
        const double f = grid.face(j);
        const double ra = grid.r(j);
        const double rb = grid.r(j + 1);
        m.offdiag[j] = -f * std::pow(f * f / (ra * rb), L) * gauss_factor / (h2 * std::sqrt(ra * rb));
    }
    return m;
}

inline ComplexRadialField apply_transverse_operator(const ComplexRadialField& field,
                                                    const TransverseOperatorParams& params)
{
    if (field.ell() != params.ell) {
        throw UsageError("apply_transverse_operator: field ell=" + std::to_string(field.ell()) +
                         " but operator ell=" + std::to_string(params.ell));
    }
    const RadialGrid& grid = field.grid();
    const TridiagonalSym m = build_transverse_matrix(grid, params);
    std::vector<complex> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        v[j] = std::sqrt(grid.r(j)) * field[j];
    }
    std::vector<complex> tv = m.apply_complex<complex>(v);
    for (int j = 0; j < grid.size(); ++j) {
        tv[j] /= std::sqrt(grid.r(j));
    }
    return field.with_values(std::move(tv));
}

} // namespace landau_paraxial
