#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "qlsa/model.hpp"

namespace qlsa {

/// Everything a configuration file can express, with defaults filled in.
struct Config {
    ProblemInstance problem;
    bool r_bits_explicit = false;  // false: r_bits follows kappa/epsilon per grid cell
    QuantumHardwareProfile quantum_hw;
    ClassicalHardwareProfile classical_hw;
    CryoModel cryo_model = CryoModel::None;
    CryoParameters cryo;
    SweepSpec sweep = default_sweep();
    EstimatorOptions options;

    bool operator==(const Config&) const = default;
};

/// Parse configuration text, apply `section.key=value` overrides, validate.
/// Throws ParseError (with line) or ValidationError (with field).
Config parse_config(std::string_view text, std::span<const std::string> overrides = {});

Config load_config(const std::filesystem::path& path, std::span<const std::string> overrides = {});

/// Emit a document that parses back to an equal Config.
std::string serialize_config(const Config& cfg);

/// Quantum hardware with watts_per_qubit replaced by the cryogenic model
/// result when one is selected.
QuantumHardwareProfile effective_quantum_hw(const Config& cfg);

/// Problem instance at a grid cell. r_bits is re-derived unless explicit.
ProblemInstance cell_problem(const Config& cfg, std::uint32_t n, double kappa, std::uint64_t s, double epsilon);

}  // namespace qlsa
