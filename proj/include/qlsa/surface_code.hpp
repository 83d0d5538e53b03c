#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qlsa/model.hpp"

namespace qlsa {

enum class DistillationKind { P15_1, P116_12, P225_1 };
enum class DataBlockKind { Compact, Intermediate, Fast };

struct DistillationProtocol {
    DistillationKind kind;
    std::uint32_t tiles;
    double production_cycles;  // logical cycles per output state per block
    double coefficient;        // output error = coefficient * p^power
    int power;

    double output_error(double p) const;
};

struct DataBlockProtocol {
    DataBlockKind kind;
    std::uint32_t consumption_cycles;

    std::uint64_t tiles(std::uint64_t n_logical) const;
};

/// Ordered by tile count.
const std::vector<DistillationProtocol>& distillation_protocols();
/// Ordered Compact, Intermediate, Fast.
const std::vector<DataBlockProtocol>& data_block_protocols();

const DistillationProtocol& distillation_protocol(DistillationKind k);
const DataBlockProtocol& data_block_protocol(DataBlockKind k);

std::string_view to_string(DistillationKind k);
std::string_view to_string(DataBlockKind k);

struct SurfaceCodeScheme {
    DistillationKind distillation = DistillationKind::P15_1;
    std::uint32_t n_distill_blocks = 1;
    DataBlockKind data_block = DataBlockKind::Fast;
    std::uint32_t code_distance = 3;

    bool operator==(const SurfaceCodeScheme&) const = default;
};

struct PhysicalResources {
    std::uint64_t n_physical_qubits = 0;
    double runtime_s = 0;
    double spacetime_volume = 0;  // qubit-seconds
    double cycles_per_t = 0;
    std::uint64_t n_tiles_total = 0;
};

constexpr std::uint32_t kMaxCodeDistance = 99;

/// 0.1 (100 p)^((d+1)/2). Throws InfeasibleError when 100p >= 1.
double logical_error_rate(double p, std::uint32_t d);

/// Cheapest protocol whose output error is below share / t_count.
const DistillationProtocol& select_distillation(double p, double t_count, double share);

/// Smallest odd d >= 3 with tiles * logical_cycles * d * p_L(p, d) < share.
std::uint32_t required_code_distance(double p, double n_tiles, double logical_cycles, double share);

PhysicalResources scheme_metrics(const SurfaceCodeScheme& s, std::uint64_t n_logical, double t_count,
                                 const QuantumHardwareProfile& hw);

struct OptimizedScheme {
    SurfaceCodeScheme scheme;
    PhysicalResources resources;
};

/// Error budget is split: distill_share of it bounds magic-state error, the
/// rest bounds logical errors. Without a qubit budget the Fast data block is
/// used with just enough factories to keep up; with one, every data block and
/// factory count is searched and the smallest space-time volume that fits wins.
OptimizedScheme optimize_scheme(std::uint64_t n_logical, double t_count, const QuantumHardwareProfile& hw);

}  // namespace qlsa
