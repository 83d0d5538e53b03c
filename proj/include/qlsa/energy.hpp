#pragma once

#include "qlsa/model.hpp"

namespace qlsa {

struct EnergyEstimate {
    double joules = 0;
    double watts = 0;
    double seconds = 0;
};

/// q [1 + phi (1 + beta n_p^{-1/3}) / (eta_c COP) + (1 - phi) / FOM]
double quantum_power_per_qubit_full(const CryoParameters& c);

/// q_tilde / (eta_c COP)
double quantum_power_per_qubit_simplified(double q_tilde, double eta_c, double cop);

EnergyEstimate quantum_energy(double n_qubits, double watts_per_qubit, double runtime_s);

/// Frequency-based machines only: E = (flops / flops_per_cycle) * W_per_GHz * 1e-9.
/// Throws UnsupportedError for a profile defined by peak FLOP/s alone.
EnergyEstimate classical_energy(double flops, const ClassicalHardwareProfile& m);

}  // namespace qlsa
