#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "landau_paraxial/modes.hpp"
#include "test_support.hpp"

namespace lp = landau_paraxial;
using lp_test::fixture;

namespace {

const lp::ParticleSpec electron_down{lp::Species::electron, lp::SpinProjection::down()};
const lp::ParticleSpec electron_up{lp::Species::electron, lp::SpinProjection::up()};
const lp::ParticleSpec positron_up{lp::Species::positron, lp::SpinProjection::up()};
const lp::ParticleSpec positron_down{lp::Species::positron, lp::SpinProjection::down()};

} // namespace

TEST(QFactor, Examples)
{
    EXPECT_EQ(lp::q_factor({0, 1}, electron_down), lp_test::fixtures().get("q_electron_0_1_minus").as_long());
    EXPECT_EQ(lp::q_factor({1, 0}, electron_up), lp_test::fixtures().get("q_electron_1_0_plus").as_long());
    EXPECT_EQ(lp::q_factor({0, -1}, positron_up), lp_test::fixtures().get("q_positron_0_m1_plus").as_long());
    EXPECT_EQ(lp::q_factor({0, 0}, electron_down), 0);
    EXPECT_EQ(lp::q_factor({0, -3}, electron_down), 0);
    EXPECT_EQ(lp::q_factor({0, 2}, electron_up), 6);
    EXPECT_EQ(lp::q_factor({0, -3}, positron_down), 8);
}

TEST(QFactor, NonNegativeAndChargeConjugationSymmetric)
{
    for (int n = 0; n < 6; ++n) {
        for (int ell = -5; ell <= 5; ++ell) {
            for (auto sz : {lp::SpinProjection::down(), lp::SpinProjection::up()}) {
                const lp::ParticleSpec e{lp::Species::electron, sz};
                const lp::ParticleSpec p{lp::Species::positron, sz.flipped()};
                EXPECT_GE(lp::q_factor({n, ell}, e), 0);
                EXPECT_EQ(lp::q_factor({n, ell}, e), lp::q_factor({n, -ell}, p));
            }
        }
    }
}

TEST(QuantumNumbers, NegativeRadialIndexRejected)
{
    EXPECT_THROW(lp::QuantumNumbers::make(-1, 0), lp::DomainError);
    EXPECT_EQ(lp::QuantumNumbers::make(2, -3), (lp::QuantumNumbers{2, -3}));
}

TEST(LandauEnergy, Examples)
{
    EXPECT_DOUBLE_EQ(lp::landau_energy({0, 0}, electron_down, 0.0, 0.01), 1.0);
    EXPECT_NEAR(lp::landau_energy({0, 0}, electron_up, 0.0, 0.01), fixture("energy_n0_l0_up_b0.01"), 1e-15);
    EXPECT_NEAR(lp::landau_energy({2, 1}, electron_down, 0.1, 0.01), fixture("energy_n2_l1_down_pz0.1_b0.01"),
                1e-15);
    EXPECT_DOUBLE_EQ(lp::landau_energy({3, 2}, electron_up, 0.3, 0.0), std::sqrt(1.09));
    EXPECT_THROW(lp::landau_energy({0, 0}, electron_down, 0.0, -0.1), lp::DomainError);
}

TEST(LandauEnergy, SpacingsShrink)
{
    const double e0 = lp::landau_energy({0, 0}, electron_down, 0.0, 0.01);
    const double e1 = lp::landau_energy({1, 0}, electron_down, 0.0, 0.01);
    const double e2 = lp::landau_energy({2, 0}, electron_down, 0.0, 0.01);
    EXPECT_NEAR(e1 - e0, fixture("spacing_1_b0.01"), 1e-15);
    EXPECT_NEAR(e2 - e1, fixture("spacing_2_b0.01"), 1e-15);
    for (double b : {0.01, 0.1, 1.0}) {
        double prev = INFINITY;
        for (int n = 0; n < 10; ++n) {
            const double s = lp::landau_energy({n + 1, 1}, electron_up, 0.0, b) -
                             lp::landau_energy({n, 1}, electron_up, 0.0, b);
            EXPECT_LT(s, prev);
            prev = s;
        }
    }
}

TEST(TransverseEigenvalue, Examples)
{
    EXPECT_DOUBLE_EQ(lp::transverse_eigenvalue({0, 1}, electron_down, 0.01), 0.02);
    EXPECT_DOUBLE_EQ(lp::transverse_eigenvalue({0, 0}, electron_down, 0.01), 0.0);
    EXPECT_THROW(lp::transverse_eigenvalue({0, 0}, electron_down, 0.0), lp::DomainError);
}

TEST(ParaxialPz, Examples)
{
    const auto pm = lp::paraxial_pz(1.0, 0.02);
    EXPECT_NEAR(pm.exact, fixture("pz_exact_k1_lambda0.02"), 1e-15);
    EXPECT_DOUBLE_EQ(pm.approx, 0.99);
    EXPECT_LT(lp_test::rel_diff(pm.rel_gap, fixture("pz_rel_gap_k1_lambda0.02")), 1e-9);
    EXPECT_EQ(lp::paraxial_pz(2.0, 0.0).rel_gap, 0.0);
    EXPECT_THROW(lp::paraxial_pz(1.0, 1.0), lp::ParaxialityError);
    EXPECT_THROW(lp::paraxial_pz(1.0, 2.0), lp::ParaxialityError);
}

TEST(LandauRadial, AxisValue)
{
    EXPECT_NEAR(lp::eval_landau_radial({0, 0}, 20.0, 0.0), fixture("landau_axis_n0_l0_wm20"), 1e-16);
    EXPECT_EQ(lp::eval_landau_radial({0, 2}, 20.0, 0.0), 0.0);
    EXPECT_THROW(lp::eval_landau_radial({0, 0}, 20.0, -1.0), lp::DomainError);
    EXPECT_THROW(lp::eval_landau_radial({0, 0}, 0.0, 1.0), lp::DomainError);
}

TEST(LandauRadial, NormalizedAndOrthogonal)
{
    using boost::math::quadrature::gauss_kronrod;
    const double w = 20.0;
    for (int ell : {0, 1, -2, 3}) {
        for (int n = 0; n <= 3; ++n) {
            for (int m = 0; m <= 3; ++m) {
                auto f = [&](double r) {
                    return 2.0 * std::numbers::pi * r * lp::eval_landau_radial({n, ell}, w, r) *
                           lp::eval_landau_radial({m, ell}, w, r);
                };
                const double integral = gauss_kronrod<double, 61>::integrate(f, 0.0, 12.0 * w, 12, 1e-14);
                EXPECT_NEAR(integral, n == m ? 1.0 : 0.0, 1e-12) << n << ' ' << m << ' ' << ell;
            }
        }
    }
}

TEST(FreeBeamGeometry, Examples)
{
    const auto g = lp::free_beam_geometry(20.0, 1.0, 400.0);
    EXPECT_DOUBLE_EQ(g.z_R, 200.0);
    EXPECT_NEAR(g.w_z, fixture("free_w_z400_w0_20"), 1e-12);
    ASSERT_FALSE(g.R_z.infinite);
    EXPECT_NEAR(g.R_z.radius, fixture("free_R_z400_w0_20"), 1e-12);
    EXPECT_NEAR(g.zeta, fixture("free_zeta_z400_w0_20"), 1e-15);

    const auto waist = lp::free_beam_geometry(20.0, 1.0, 0.0);
    EXPECT_TRUE(waist.R_z.infinite);
    EXPECT_EQ(waist.zeta, 0.0);
    EXPECT_EQ(waist.w_z, 20.0);
    EXPECT_THROW(lp::free_beam_geometry(0.0, 1.0, 1.0), lp::DomainError);
}

TEST(FreeLG, EqualsLandauModeAtWaist)
{
    const double w = 20.0;
    for (int n = 0; n <= 3; ++n) {
        for (int ell = -3; ell <= 3; ++ell) {
            for (double r : {0.0, 1.0, 7.5, 20.0, 45.0}) {
                const auto v = lp::eval_free_lg({n, ell}, w, 1.0, r, 0.0);
                EXPECT_EQ(v.real(), lp::eval_landau_radial({n, ell}, w, r));
                EXPECT_EQ(v.imag(), 0.0);
            }
        }
    }
}

TEST(FreeLG, AxisPhaseIsGouyPhase)
{
    const auto v = lp::eval_free_lg({1, 0}, 20.0, 1.0, 0.0, 200.0);
    // Laguerre L_1(0) = 1 > 0, so the phase is -(2n+|l|+1) arctan(1).
    EXPECT_NEAR(std::arg(v), -3.0 * std::numbers::pi / 4.0, 1e-14);
    EXPECT_THROW(lp::eval_free_lg({0, 0}, 20.0, 1.0, -1.0, 0.0), lp::DomainError);
}

TEST(GouyLaw, MagneticRates)
{
    const auto ctx = lp::make_context(lp::Species::electron, -0.5, 0.01, 1.0);
    EXPECT_NEAR(lp::gouy_law_magnetic({0, 1}, electron_down, ctx).rate, 0.01, 1e-17);
    EXPECT_NEAR(lp::gouy_law_magnetic({1, 0}, electron_up, ctx).rate, 0.02, 1e-17);
    const auto pctx = lp::make_context(lp::Species::positron, 0.5, 0.01, 1.0);
    EXPECT_NEAR(lp::gouy_law_magnetic({0, -1}, positron_up, pctx).rate, 0.01, 1e-17);
    const auto law = lp::gouy_law_magnetic({0, 0}, electron_down, ctx);
    EXPECT_EQ(law.rate, 0.0);
    EXPECT_EQ(law.phase_at(100.0), 0.0);
}

TEST(GouyLaw, FreeArctan)
{
    const auto law = lp::gouy_law_free({0, 0}, 20.0, 1.0);
    EXPECT_EQ(law.law, lp::GouyLawKind::arctan_free);
    EXPECT_NEAR(law.phase_at(400.0), fixture("free_zeta_z400_w0_20"), 1e-15);
    EXPECT_DOUBLE_EQ(law.rate, 1.0 / 200.0);
    EXPECT_EQ(lp::gouy_law_free({2, -3}, 20.0, 1.0).q_factor, 8);
}

TEST(Physicality, RotationSense)
{
    EXPECT_EQ(lp::physicality_check({0, -1}, electron_down), lp::Physicality::unphysical_rotation);
    EXPECT_EQ(lp::physicality_check({0, 1}, electron_down), lp::Physicality::physical);
    EXPECT_EQ(lp::physicality_check({0, 0}, electron_down), lp::Physicality::physical);
    EXPECT_EQ(lp::physicality_check({0, 1}, positron_down), lp::Physicality::unphysical_rotation);
    EXPECT_EQ(lp::physicality_check({0, -1}, positron_down), lp::Physicality::physical);
}

TEST(Correspondence, SharedRateAndResidual)
{
    const auto ctx = lp::make_context(lp::Species::electron, -0.5, 0.01, 1.0);
    const auto rep = lp::correspondence_report({0, 1}, ctx);
    EXPECT_EQ(rep.magnetic_q, 2);
    EXPECT_EQ(rep.free_prefactor, 2);
    EXPECT_NEAR(rep.shared_rate, 0.01, 1e-17);
    EXPECT_LT(lp_test::rel_diff(rep.free_slope_origin, rep.shared_rate), 1e-14);
    EXPECT_EQ(rep.residual_rate, 0.0);

    const auto rep2 = lp::correspondence_report({1, 0}, ctx);
    EXPECT_EQ(rep2.magnetic_q, 2);
    EXPECT_EQ(rep2.free_prefactor, 3);
    EXPECT_NEAR(rep2.residual_rate, -0.005, 1e-17);
}
