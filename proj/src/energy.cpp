#include "qlsa/energy.hpp"

#include <cmath>
#include <fmt/format.h>

#include "qlsa/errors.hpp"

namespace qlsa {

double quantum_power_per_qubit_full(const CryoParameters& c)
{
    if (!(c.eta_c > 0) || !(c.cop > 0)) throw PreconditionError("eta_c and COP must be > 0");
    if (!(c.fom > 0)) throw PreconditionError("FOM must be > 0");
    if (c.n_p < 1) throw PreconditionError("n_p must be >= 1");
    const double cooling = c.phi * (1.0 + c.beta * std::cbrt(1.0 / static_cast<double>(c.n_p))) / (c.eta_c * c.cop);
    return c.q_comp * (1.0 + cooling + (1.0 - c.phi) / c.fom);
}

double quantum_power_per_qubit_simplified(double q_tilde, double eta_c, double cop)
{
    if (!(q_tilde > 0 && eta_c > 0 && cop > 0)) throw PreconditionError("q_tilde, eta_c and COP must be > 0");
    return q_tilde / (eta_c * cop);
}

EnergyEstimate quantum_energy(double n_qubits, double watts_per_qubit, double runtime_s)
{
    if (n_qubits < 0 || watts_per_qubit < 0 || runtime_s < 0) throw PreconditionError("energy inputs must be >= 0");
    const double watts = n_qubits * watts_per_qubit;
    return EnergyEstimate{watts * runtime_s, watts, runtime_s};
}

EnergyEstimate classical_energy(double flops, const ClassicalHardwareProfile& m)
{
    validate(m);
    if (flops < 0) throw PreconditionError("flops must be >= 0");
    if (m.peak_flops) {
        throw UnsupportedError(fmt::format("no power figure for '{}': energy needs a frequency-based profile", m.name));
    }
    const double ops = flops / m.flops_per_cycle;
    const double seconds = ops / m.freq_hz;
    const double watts = m.watts_per_ghz * m.freq_hz * 1e-9;
    return EnergyEstimate{watts * seconds, watts, seconds};
}

}  // namespace qlsa
