#pragma once

// Domain types shared by every estimator stage. All of them are plain values:
// construct, validate once, then pass around by const reference.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlsa {

enum class OracleModel {
    Structured,     // the oracle hands out exactly s one-sparse pieces
    GraphColoring,  // 6 s^2 one-sparse pieces found by coloring inside each HS1
};

enum class CountingMode {
    Analytic,    // closed-form bounds kept as reals
    Engineered,  // integer Trotter steps, power-of-two clock
};

enum class ClassicalMethod { CG, Cholesky };

enum class LogBase { Natural, Two, Ten };

/// Input parameters of one linear system instance. Matrix size is N = 2^n.
/// The eigenvalues of A are assumed to lie in [1/kappa, 1].
struct ProblemInstance {
    std::uint32_t n = 40;
    double kappa = 40.0;
    std::uint64_t s = 40;
    double epsilon = 0.01;
    std::uint32_t r_bits = 12;  // matrix-entry precision bits
    OracleModel oracle_model = OracleModel::Structured;

    double matrix_size() const { return std::ldexp(1.0, static_cast<int>(n)); }

    bool operator==(const ProblemInstance&) const = default;
};

/// Default precision bits: ceil(log2(kappa/epsilon)), at least 4.
std::uint32_t default_r_bits(double kappa, double epsilon);

struct QuantumHardwareProfile {
    double p_phys = 1e-5;
    double t_cycle_s = 1e-8;  // one logical cycle
    double watts_per_qubit = 6.25;
    std::optional<std::uint64_t> qubit_budget;
    double error_budget = 0.01;
    double distill_share = 0.5;  // fraction of error_budget given to magic states

    bool operator==(const QuantumHardwareProfile&) const = default;
};

/// Parameters of the per-qubit cryogenic power model.
struct CryoParameters {
    double q_comp = 1e-3;
    double phi = 1.0;
    double beta = 0.0;
    std::uint64_t n_p = 1000;
    double eta_c = 1.0;
    double cop = 1e-5;
    double fom = 1.0;
    double q_tilde = 6.25e-5;  // 6.25 W per qubit at COP = 1e-5

    bool operator==(const CryoParameters&) const = default;
};

enum class CryoModel { None, Full, Simplified };

struct ClassicalHardwareProfile {
    std::string name = "desktop-1GHz";
    double freq_hz = 1e9;
    double watts_per_ghz = 50.0;
    double flops_per_cycle = 1.0;
    std::optional<double> peak_flops;  // overrides freq_hz * flops_per_cycle

    bool operator==(const ClassicalHardwareProfile&) const = default;
};

/// Built-in machines. Returns nullopt for an unknown name.
std::optional<ClassicalHardwareProfile> classical_preset(std::string_view name);
std::vector<std::string_view> classical_preset_names();

/// Knobs that select between modelling alternatives.
struct EstimatorOptions {
    CountingMode mode = CountingMode::Analytic;
    std::uint32_t t_per_rotation = 15;       // T gates per synthesized rotation
    std::uint32_t extra_logical_qubits = 2;  // parity qubit + rotation ancilla
    ClassicalMethod method = ClassicalMethod::CG;
    LogBase iteration_log = LogBase::Natural;

    bool operator==(const EstimatorOptions&) const = default;
};

// --- sweep description -----------------------------------------------------

enum class AxisKind {
    Fixed,    // value comes from [problem]
    Values,   // explicit list
    Coupled,  // value = scale * n
};

struct AxisSpec {
    AxisKind kind = AxisKind::Fixed;
    std::vector<double> values;
    double scale = 1.0;

    bool operator==(const AxisSpec&) const = default;
};

struct SweepSpec {
    AxisSpec n;
    AxisSpec kappa;
    AxisSpec s;
    AxisSpec epsilon;

    bool operator==(const SweepSpec&) const = default;
};

/// The sweep used when a configuration has no [sweep] section:
/// n = 2..64, kappa = s = n (= log2 N), epsilon from [problem].
SweepSpec default_sweep();

// --- validation --------------------------------------------------------------

void validate(const ProblemInstance& p);
void validate(const QuantumHardwareProfile& hw);
void validate(const CryoParameters& c);
void validate(const ClassicalHardwareProfile& m);
void validate(const SweepSpec& sweep, const ProblemInstance& base);

std::string_view to_string(OracleModel m);
std::string_view to_string(CountingMode m);
std::string_view to_string(ClassicalMethod m);
std::string_view to_string(LogBase b);
std::string_view to_string(CryoModel m);

}  // namespace qlsa
