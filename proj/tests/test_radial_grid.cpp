#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/radial_grid.hpp"

namespace lp = landau_paraxial;
using lp::complex;

namespace {

lp::ComplexRadialField landau(int n, int ell, double w, const lp::RadialGrid& grid)
{
    return lp::sample_mode([&](double r) { return lp::eval_landau_radial({n, ell}, w, r); }, ell, grid);
}

} // namespace

TEST(RadialGrid, Spacing)
{
    const auto g = lp::make_radial_grid(160.0, 2048);
    EXPECT_EQ(g.h(), 0.078125);
    EXPECT_EQ(g.r(0), 0.0390625);
    EXPECT_EQ(g.face(g.size() - 1), 160.0);
    EXPECT_EQ(lp::make_radial_grid(1.0, 16).h(), 0.0625);
    EXPECT_EQ(g.nodes().size(), 2048u);
}

TEST(RadialGrid, InvalidArguments)
{
    EXPECT_THROW(lp::make_radial_grid(-1.0, 16), lp::DomainError);
    EXPECT_THROW(lp::make_radial_grid(0.0, 16), lp::DomainError);
    EXPECT_THROW(lp::make_radial_grid(1.0, 15), lp::DomainError);
    EXPECT_THROW(lp::make_radial_grid(std::numeric_limits<double>::infinity(), 16), lp::DomainError);
}

TEST(SampleMode, GaussianIsRealPositive)
{
    const auto f = landau(0, 0, 20.0, lp::RadialGrid(160.0, 512));
    for (const complex& v : f.values()) {
        EXPECT_GT(v.real(), 0.0);
        EXPECT_EQ(v.imag(), 0.0);
    }
}

TEST(SampleMode, VortexNonzeroNearAxis)
{
    const lp::RadialGrid grid(160.0, 512);
    const auto f = landau(0, 1, 20.0, grid);
    EXPECT_GT(f[0].real(), 0.0);
    EXPECT_NEAR(f[0].real() / f[1].real(), grid.r(0) / grid.r(1), 1e-3);
}

TEST(SampleMode, NonFiniteSampleNamesNode)
{
    const lp::RadialGrid grid(1.0, 16);
    try {
        lp::sample_mode([](double r) { return r > 0.5 ? std::nan("") : 1.0; }, 0, grid);
        FAIL() << "expected NumericError";
    } catch (const lp::NumericError& e) {
        EXPECT_NE(std::string(e.what()).find("node 8"), std::string::npos) << e.what();
    }
}

TEST(Norm, ConvergesAtSecondOrder)
{
    const double w = 20.0;
    double prev_err = 0.0;
    for (int n_points : {128, 256, 512, 1024}) {
        const double err = std::abs(lp::norm(landau(0, 0, w, lp::RadialGrid(8.0 * w, n_points))) - 1.0);
        if (prev_err > 0.0) {
            EXPECT_NEAR(prev_err / err, 4.0, 0.05) << n_points;
        }
        prev_err = err;
    }
}

TEST(Overlap, Examples)
{
    const lp::RadialGrid grid(160.0, 2048);
    const auto f = lp::normalized(landau(0, 1, 20.0, grid));
    const complex self = lp::overlap(f, f);
    EXPECT_NEAR(self.real(), 1.0, 1e-14);
    EXPECT_EQ(self.imag(), 0.0);
    // Midpoint quadrature leaves an O(h^2) overlap, so orthogonality to 1e-9 needs h ~ 1e-3.
    const lp::RadialGrid fine(160.0, 131072);
    EXPECT_NEAR(std::abs(lp::overlap(landau(0, 0, 20.0, fine), landau(1, 0, 20.0, fine))), 0.0, 1e-9);
    EXPECT_LT(std::abs(lp::overlap(landau(0, 0, 20.0, grid), landau(1, 0, 20.0, grid))), 1e-5);
    const auto other = landau(0, 2, 20.0, grid);
    EXPECT_EQ(lp::overlap(f, other), complex(0.0, 0.0));
    EXPECT_THROW(lp::overlap(f, landau(0, 1, 20.0, lp::RadialGrid(160.0, 1024))), lp::UsageError);
}

TEST(Overlap, ConjugateLinearInFirstArgument)
{
    const lp::RadialGrid grid(160.0, 256);
    const auto a = landau(0, 0, 20.0, grid).scaled(complex(0.3, -0.7));
    const auto b = landau(1, 0, 18.0, grid).scaled(complex(1.1, 0.4));
    const complex ab = lp::overlap(a, b);
    const complex ba = lp::overlap(b, a);
    EXPECT_NEAR(ab.real(), ba.real(), 1e-15);
    EXPECT_NEAR(ab.imag(), -ba.imag(), 1e-15);
}

TEST(Normalized, ZeroFieldRejected)
{
    const lp::RadialGrid grid(1.0, 16);
    const lp::ComplexRadialField zero(grid, 0, std::vector<complex>(16));
    EXPECT_THROW(lp::normalized(zero), lp::DomainError);
    EXPECT_EQ(lp::boundary_amplitude_ratio(zero), 0.0);
}

TEST(ComplexRadialField, SizeMustMatchGrid)
{
    EXPECT_THROW(lp::ComplexRadialField(lp::RadialGrid(1.0, 16), 0, std::vector<complex>(15)), lp::UsageError);
}

TEST(SecondMoment, GaussianAndVortex)
{
    const double w = 20.0;
    const lp::RadialGrid grid(10.0 * w, 4096);
    // Tolerance is the O(h^2) midpoint error of the normalization, h^2/(6 w^2) ~ 1e-6.
    EXPECT_NEAR(lp::second_moment(lp::normalized(landau(0, 0, w, grid))), w * w / 2.0, 1e-5 * w * w);
    EXPECT_NEAR(lp::second_moment(lp::normalized(landau(0, 1, w, grid))), w * w, 1e-5 * w * w);
    EXPECT_NEAR(lp::second_moment(lp::normalized(landau(2, 1, w, grid))), 3.0 * w * w, 1e-5 * w * w);
}

TEST(SecondMoment, ScalesQuadratically)
{
    const lp::RadialGrid grid(400.0, 4096);
    const double m1 = lp::second_moment(lp::normalized(landau(0, 0, 10.0, grid)));
    const double m2 = lp::second_moment(lp::normalized(landau(0, 0, 20.0, grid)));
    EXPECT_NEAR(m2 / m1, 4.0, 1e-4);
}

TEST(Carrier, RoundTrip)
{
    const lp::RadialGrid grid(160.0, 64);
    const auto f = landau(0, 0, 20.0, grid);
    const auto fw = lp::with_carrier(f, lp::Carrier::fw, 1.0, 0.5);
    EXPECT_EQ(fw.carrier(), lp::Carrier::fw);
    EXPECT_NEAR(std::arg(fw[3]), 0.5, 1e-15);
    const auto back = lp::with_carrier(fw, lp::Carrier::paraxial, 1.0, 0.5);
    for (int j = 0; j < grid.size(); ++j) {
        EXPECT_NEAR(std::abs(back[j] - f[j]), 0.0, 1e-16);
    }
    EXPECT_EQ(lp::parse_carrier("fw"), lp::Carrier::fw);
    EXPECT_THROW(lp::parse_carrier("lab"), lp::UsageError);
}

TEST(Curvature, FlatPhase)
{
    const auto f = landau(0, 0, 20.0, lp::RadialGrid(160.0, 512));
    EXPECT_TRUE(lp::radial_phase_curvature(f, 1.0).infinite);
}

TEST(Curvature, RecoversSyntheticRadius)
{
    const double k = 1.0;
    const double R = 500.0;
    const lp::RadialGrid grid(160.0, 2048);
    const auto f = lp::sample_mode(
        [&](double r) {
            return std::polar(lp::eval_landau_radial({0, 0}, 20.0, r), k * r * r / (2.0 * R));
        },
        0, grid);
    const auto c = lp::radial_phase_curvature(f, k);
    ASSERT_FALSE(c.infinite);
    EXPECT_NEAR(c.radius, R, 1e-8 * R);
}

TEST(Curvature, TooFewNodes)
{
    const lp::RadialGrid grid(160.0, 16);
    const auto f = lp::sample_mode([](double r) { return std::exp(-r * r); }, 0, grid);
    EXPECT_THROW(lp::radial_phase_curvature(f, 1.0), lp::FitError);
}

TEST(FieldDump, RoundTrip)
{
    const lp::RadialGrid grid(160.0, 32);
    const auto f = lp::with_carrier(landau(1, -2, 20.0, grid), lp::Carrier::fw, 1.0, 3.0);
    const double z = 3.0;
    const std::string text = lp::format_field_dump(f, &z);
    EXPECT_EQ(text.rfind("# generated-by landau-paraxial v0.1.0\n", 0), 0u);
    const lp::FieldDump d = lp::parse_field_dump(text);
    EXPECT_TRUE(d.has_z);
    EXPECT_EQ(d.z, 3.0);
    EXPECT_EQ(d.field.ell(), -2);
    EXPECT_EQ(d.field.carrier(), lp::Carrier::fw);
    EXPECT_TRUE(d.field.grid() == grid);
    for (int j = 0; j < grid.size(); ++j) {
        EXPECT_EQ(d.field[j], f[j]);
    }
    EXPECT_EQ(lp::format_field_dump(d.field, &d.z), text);
}

TEST(FieldDump, Malformed)
{
    EXPECT_THROW(lp::parse_field_dump("1,2,3\n"), lp::UsageError);
    EXPECT_THROW(lp::parse_field_dump("# radial-field ell=0 carrier=fw n=2 rmax=1.0\n0.25,1,0\n"), lp::UsageError);
}
