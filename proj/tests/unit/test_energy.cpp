#include <gtest/gtest.h>

#include <cmath>

#include "qlsa/energy.hpp"
#include "qlsa/errors.hpp"

using namespace qlsa;

TEST(CryoPower, Full)
{
    CryoParameters c;
    c.q_comp = 1;
    c.phi = 0;
    c.fom = 4;
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_full(c), 1.25);

    c = CryoParameters{};
    c.q_comp = 1;
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_full(c), 1 + 1e5);

    c.beta = 1;
    c.n_p = 1000;  // n_p^{-1/3} = 0.1
    EXPECT_NEAR(quantum_power_per_qubit_full(c), 1 + 1.1e5, 1e-6);
}

TEST(CryoPower, Simplified)
{
    // the default q_tilde is calibrated to 6.25 W at COP = 1e-5
    const double q = CryoParameters{}.q_tilde;
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_simplified(q, 1, 1e-5), 6.25);
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_simplified(q, 1, 1e-3), 0.0625);
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_simplified(6.25 * 1e-5, 1, 1e-5) * 1e-5, q);
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_simplified(6.25e5, 1, 1e-2), 6.25e7);
    EXPECT_DOUBLE_EQ(quantum_power_per_qubit_simplified(1, 0.5, 1e-2), 2 * quantum_power_per_qubit_simplified(1, 1, 1e-2));
}

TEST(CryoPower, FullApproachesSimplified)
{
    // phi = 1, beta = 0: full = q (1 + 1/(eta COP)), so the ratio to the
    // simplified form is 1 + eta COP.
    CryoParameters c;
    c.q_comp = 3e-3;
    c.cop = 1e-5;
    const double full = quantum_power_per_qubit_full(c);
    const double simple = quantum_power_per_qubit_simplified(c.q_comp, c.eta_c, c.cop);
    EXPECT_NEAR(full / simple, 1 + 1e-5, 1e-12);
}

TEST(QuantumEnergy, Examples)
{
    const auto e = quantum_energy(4158, 6.25, 1);
    EXPECT_DOUBLE_EQ(e.joules, 25987.5);
    EXPECT_DOUBLE_EQ(e.watts, 25987.5);
    EXPECT_DOUBLE_EQ(quantum_energy(1e5, 6.25, 1e6).joules, 6.25e11);
    EXPECT_EQ(quantum_energy(0, 6.25, 1e6).joules, 0.0);
}

TEST(ClassicalEnergy, Examples)
{
    const ClassicalHardwareProfile desktop;
    const auto e = classical_energy(2e16, desktop);
    EXPECT_DOUBLE_EQ(e.joules, 1e9);
    EXPECT_DOUBLE_EQ(e.seconds, 2e7);
    EXPECT_DOUBLE_EQ(e.watts, 50);
    EXPECT_DOUBLE_EQ(classical_energy(1e9, desktop).joules, 50);
    auto hungry = desktop;
    hungry.watts_per_ghz = 100;
    EXPECT_DOUBLE_EQ(classical_energy(1e9, hungry).joules, 100);
    EXPECT_THROW(classical_energy(1e9, *classical_preset("aurora")), UnsupportedError);
}

TEST(Energy, JoulesAreWattsTimesSeconds)
{
    for (double flops : {1.0, 3.3e7, 8e19}) {
        for (double fpc : {1.0, 4.0, 16.0}) {
            ClassicalHardwareProfile m;
            m.freq_hz = 2.5e9;
            m.flops_per_cycle = fpc;
            const auto e = classical_energy(flops, m);
            EXPECT_NEAR(e.joules, e.watts * e.seconds, 1e-12 * e.joules);
        }
    }
    for (double q : {1.0, 4158.0, 1e6}) {
        const auto e = quantum_energy(q, 0.0625, 123.4);
        EXPECT_NEAR(e.joules, e.watts * e.seconds, 1e-12 * e.joules);
    }
}
