#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "morphwheel/quasistatics.hpp"
#include "morphwheel/wheelgeom.hpp"
#include "support/fixture.hpp"
#include "support/oracles.hpp"

using namespace morphwheel;
using namespace morphwheel::quasistatics;
using morphwheel::testing::reference_design;

namespace {

const std::vector<ForceSample> kMeasured = {{1.0, 3.4}, {2.0, 3.2}, {3.0, 2.5}, {4.0, 2.1},
                                            {5.0, 1.5}, {6.0, 1.0}, {7.0, 0.6}, {8.0, 0.1}};

}

TEST(ForceTable, DefaultHoldsMeasuredSamples) {
    const auto table = default_force_table();
    ASSERT_EQ(table.size(), 8u);
    EXPECT_TRUE(std::equal(table.samples().begin(), table.samples().end(), kMeasured.begin()));
}

TEST(ForceTable, RejectsMalformedTables) {
    EXPECT_THROW(SiliconeForceTable({}), DomainError);
    EXPECT_THROW(SiliconeForceTable({{1.0, 2.0}, {1.0, 1.0}}), DomainError);
    EXPECT_THROW(SiliconeForceTable({{1.0, 2.0}, {2.0, 2.5}}), DomainError);
    EXPECT_THROW(SiliconeForceTable({{1.0, -0.5}}), DomainError);
    EXPECT_NO_THROW(SiliconeForceTable({{0.0, 0.0}}));
}

TEST(ForceTable, OverrideFromParams) {
    auto p = reference_design();
    EXPECT_EQ(force_table_for(p).size(), 8u);
    p.force_table = {{0.5, 5.0}, {1.5, 4.0}};
    const auto table = force_table_for(p);
    ASSERT_EQ(table.size(), 2u);
    EXPECT_EQ(silicone_force(table, 1.0), 4.5);
}

TEST(SiliconeForce, ReproducesSamples) {
    const auto table = default_force_table();
    for (const auto& s : kMeasured) EXPECT_EQ(silicone_force(table, s.length_change_cm), s.force_n);
}

TEST(SiliconeForce, InterpolatesAndClamps) {
    const auto table = default_force_table();
    EXPECT_NEAR(silicone_force(table, 1.5), 3.3, 1e-12);
    EXPECT_EQ(silicone_force(table, 0.0), 3.4);
    EXPECT_EQ(silicone_force(table, 2.0), 3.2);
    EXPECT_EQ(silicone_force(table, 50.0), 0.1);
    EXPECT_NEAR(silicone_force(table, 7.5), 0.35, 1e-12);
    EXPECT_THROW(silicone_force(table, -0.1), DomainError);
}

TEST(SiliconeForce, ContinuousAndNonincreasing) {
    const auto table = default_force_table();
    double previous = silicone_force(table, 0.0);
    for (int i = 1; i <= 10000; ++i) {
        const double f = silicone_force(table, i * 0.001);
        EXPECT_LE(f, previous);
        EXPECT_LT(previous - f, 0.001);  // steepest segment is 0.7 N/cm
        previous = f;
    }
}

TEST(ScrewTorque, ZeroForce) { EXPECT_EQ(screw_torque(0.0, 2.0, 8.0, 0.2), 0.0); }

TEST(ScrewTorque, FrictionlessEnergyBalance) {
    EXPECT_NEAR(screw_torque(10.0, 2.0, 8.0, 0.0), 3.183098861837907, 1e-12);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> force(0.0, 1000.0);
    std::uniform_real_distribution<double> lead(0.1, 10.0);
    std::uniform_real_distribution<double> diameter(1.0, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const double f = force(rng), l = lead(rng);
        EXPECT_NEAR(screw_torque(f, l, diameter(rng), 0.0), oracle::frictionless_torque(f, l), 1e-12);
    }
}

TEST(ScrewTorque, ReferenceLoad) {
    const double t = screw_torque(1.133, 2.0, 8.0, 0.2);
    EXPECT_NEAR(t, 1.287536887044869, 1e-12);
    EXPECT_GT(t, oracle::frictionless_torque(1.133, 2.0));
}

TEST(ScrewTorque, StrictlyIncreasingInForceFrictionAndDiameter) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> force(0.1, 100.0);
    std::uniform_real_distribution<double> friction(0.0, 0.9);
    std::uniform_real_distribution<double> diameter(2.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        const double f = force(rng), mu = friction(rng), d = diameter(rng);
        const double base = screw_torque(f, 2.0, d, mu);
        EXPECT_GT(screw_torque(f * 1.01, 2.0, d, mu), base);
        EXPECT_GT(screw_torque(f, 2.0, d, mu + 0.05), base);
        EXPECT_GT(screw_torque(f, 2.0, d * 1.01, mu), base);
    }
}

TEST(ScrewTorque, Errors) {
    EXPECT_THROW(screw_torque(-1.0, 2.0, 8.0, 0.2), DomainError);
    EXPECT_THROW(screw_torque(1.0, 0.0, 8.0, 0.2), DomainError);
    EXPECT_THROW(screw_torque(1.0, 2.0, 8.0, 1.0), DomainError);
    EXPECT_THROW(screw_torque(1.0, 30.0, 0.1, 0.9), DomainError);
}

TEST(TorqueProfile, ReferencePeakAtFirstCompressedStep) {
    const auto p = reference_design();
    const auto profile = torque_profile(p, default_force_table(), 101);
    ASSERT_EQ(profile.entries.size(), 101u);
    EXPECT_EQ(profile.peak_index, 1u);
    EXPECT_NEAR(profile.peak_torque, 1.2879156857759795, 1e-12);
    EXPECT_EQ(profile.entries[0].axial_force, 0.0);
    EXPECT_EQ(profile.entries[0].per_motor_torque, 0.0);
    EXPECT_EQ(profile.entries[1].axial_force, 3.4);
    EXPECT_EQ(profile.entries.back().axial_force, silicone_force(default_force_table(), 12.0));
}

TEST(TorqueProfile, AlignsWithTransformProfile) {
    const auto p = reference_design();
    const auto states = wheelgeom::transform_profile(p, 37);
    const auto profile = torque_profile(p, default_force_table(), 37);
    ASSERT_EQ(profile.entries.size(), states.size());
    for (std::size_t k = 0; k < states.size(); ++k)
        EXPECT_EQ(profile.entries[k].module_length, states[k].module_length);
}

TEST(TorqueProfile, ZeroForceTable) {
    const auto profile = torque_profile(reference_design(), SiliconeForceTable({{0.0, 0.0}, {1.0, 0.0}}), 20);
    for (const auto& e : profile.entries) EXPECT_EQ(e.per_motor_torque, 0.0);
    EXPECT_EQ(profile.peak_torque, 0.0);
}

TEST(TorqueProfile, LinearInForce) {
    const auto p = reference_design();
    const auto base = torque_profile(p, default_force_table(), 50);
    const auto doubled = torque_profile(p, default_force_table().scaled(2.0), 50);
    for (std::size_t k = 0; k < base.entries.size(); ++k)
        EXPECT_NEAR(doubled.entries[k].per_motor_torque, 2.0 * base.entries[k].per_motor_torque, 1e-12);
}

TEST(TorqueProfile, PeakAtMaximumForceOnRandomDesigns) {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> steps(2, 200);
    for (int i = 0; i < 200; ++i) {
        const auto p = morphwheel::testing::random_design(rng);
        const auto profile = torque_profile(p, default_force_table(), steps(rng));
        const auto max_force = std::max_element(
            profile.entries.begin(), profile.entries.end(),
            [](const TorqueEntry& a, const TorqueEntry& b) { return a.axial_force < b.axial_force; });
        EXPECT_EQ(profile.peak_index, static_cast<std::size_t>(max_force - profile.entries.begin()));
        EXPECT_LE(max_force->axial_force, 3.4);
        for (const auto& e : profile.entries) {
            EXPECT_GE(e.per_motor_torque, 0.0);
            EXPECT_LE(e.per_motor_torque, profile.peak_torque);
        }
    }
}

TEST(MotorCheck, ReferenceMotorPasses) {
    const auto profile = torque_profile(reference_design(), default_force_table(), 101);
    const auto check = motor_check(profile, 1470.0, 1.0);
    EXPECT_TRUE(check.passes);
    EXPECT_NEAR(check.ratio, 1.2879156857759795 / 1470.0, 1e-15);
    EXPECT_EQ(check.reference_threshold, 500.0);
    EXPECT_TRUE(check.stall_exceeds_reference);
    EXPECT_NE(check.note.find("500"), std::string::npos);
    EXPECT_NEAR(15.0 * kKgCmToNmm, 1470.9975, 1e-9);
}

TEST(MotorCheck, Boundaries) {
    TorqueProfile profile;
    profile.peak_torque = 100.0;
    EXPECT_TRUE(motor_check(profile, 100.0, 1.0).passes);
    const auto over = motor_check(profile, 99.0, 1.0);
    EXPECT_FALSE(over.passes);
    EXPECT_GT(over.ratio, 1.0);
    EXPECT_FALSE(motor_check(profile, 150.0, 0.5).passes);
    EXPECT_THROW(motor_check(profile, 150.0, 0.0), DomainError);
    EXPECT_THROW(motor_check(profile, 150.0, 1.1), DomainError);
}
