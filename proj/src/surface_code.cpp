#include "qlsa/surface_code.hpp"

#include <cmath>
#include <fmt/format.h>
#include <optional>

#include "qlsa/errors.hpp"

namespace qlsa {

double DistillationProtocol::output_error(double p) const { return coefficient * std::pow(p, power); }

std::uint64_t DataBlockProtocol::tiles(std::uint64_t n) const
{
    switch (kind) {
    case DataBlockKind::Compact: return (3 * n + 1) / 2 + 3;  // ceil(1.5 n) + 3
    case DataBlockKind::Intermediate: return 2 * n + 4;
    case DataBlockKind::Fast: {
        auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(8.0 * static_cast<double>(n))));
        while (root > 0 && (root - 1) * (root - 1) >= 8 * n) --root;  // exact ceil for perfect squares
        while (root * root < 8 * n) ++root;
        return 2 * n + root + 1;
    }
    }
    return 0;
}

const std::vector<DistillationProtocol>& distillation_protocols()
{
    static const std::vector<DistillationProtocol> table{
        {DistillationKind::P15_1, 11, 11.0, 35.0, 3},
        {DistillationKind::P116_12, 44, 9.27, 4.125, 4},
        {DistillationKind::P225_1, 176, 5.5, 1.5, 7},
    };
    return table;
}

const std::vector<DataBlockProtocol>& data_block_protocols()
{
    static const std::vector<DataBlockProtocol> table{
        {DataBlockKind::Compact, 9},
        {DataBlockKind::Intermediate, 5},
        {DataBlockKind::Fast, 1},
    };
    return table;
}

const DistillationProtocol& distillation_protocol(DistillationKind k)
{
    return distillation_protocols()[static_cast<std::size_t>(k)];
}

const DataBlockProtocol& data_block_protocol(DataBlockKind k) { return data_block_protocols()[static_cast<std::size_t>(k)]; }

std::string_view to_string(DistillationKind k)
{
    switch (k) {
    case DistillationKind::P15_1: return "15-to-1";
    case DistillationKind::P116_12: return "116-to-12";
    case DistillationKind::P225_1: return "225-to-1";
    }
    return "";
}

std::string_view to_string(DataBlockKind k)
{
    switch (k) {
    case DataBlockKind::Compact: return "compact";
    case DataBlockKind::Intermediate: return "intermediate";
    case DataBlockKind::Fast: return "fast";
    }
    return "";
}

double logical_error_rate(double p, std::uint32_t d)
{
    if (!(p > 0)) throw PreconditionError("physical error rate must be > 0");
    if (100.0 * p >= 1.0) throw InfeasibleError("threshold", fmt::format("p = {} is at or above threshold (100p >= 1)", p));
    if (d < 3 || d % 2 == 0) throw PreconditionError(fmt::format("code distance must be odd and >= 3 (got {})", d));
    return 0.1 * std::pow(100.0 * p, (d + 1) / 2);
}

const DistillationProtocol& select_distillation(double p, double t_count, double share)
{
    if (!(t_count >= 1)) throw PreconditionError("t_count must be >= 1");
    if (!(share > 0)) throw PreconditionError("error share must be > 0");
    const double target = share / t_count;
    for (const auto& proto : distillation_protocols()) {
        if (proto.output_error(p) < target) return proto;
    }
    throw InfeasibleError("distillation", fmt::format("no protocol reaches per-state error {:.3g} at p = {}", target, p));
}

std::uint32_t required_code_distance(double p, double n_tiles, double logical_cycles, double share)
{
    for (std::uint32_t d = 3; d <= kMaxCodeDistance; d += 2) {
        if (n_tiles * logical_cycles * d * logical_error_rate(p, d) < share) return d;
    }
    throw InfeasibleError("code_distance", fmt::format("no odd d <= {} meets the logical error share {}", kMaxCodeDistance, share));
}

PhysicalResources scheme_metrics(const SurfaceCodeScheme& s, std::uint64_t n_logical, double t_count,
                                 const QuantumHardwareProfile& hw)
{
    if (s.n_distill_blocks < 1) throw PreconditionError("at least one distillation block is required");
    if (s.code_distance < 3 || s.code_distance % 2 == 0) throw PreconditionError("code distance must be odd and >= 3");
    const auto& dist = distillation_protocol(s.distillation);
    const auto& data = data_block_protocol(s.data_block);
    PhysicalResources r;
    r.cycles_per_t = std::max<double>(data.consumption_cycles, dist.production_cycles / s.n_distill_blocks);
    r.runtime_s = t_count * r.cycles_per_t * hw.t_cycle_s;
    r.n_tiles_total = data.tiles(n_logical) + std::uint64_t{s.n_distill_blocks} * dist.tiles;
    r.n_physical_qubits = r.n_tiles_total * s.code_distance * s.code_distance;
    r.spacetime_volume = static_cast<double>(r.n_physical_qubits) * r.runtime_s;
    return r;
}

namespace {

std::uint32_t blocks_to_match(const DistillationProtocol& dist, const DataBlockProtocol& data)
{
    return static_cast<std::uint32_t>(std::ceil(dist.production_cycles / data.consumption_cycles - 1e-12));
}

// Fills in d for a scheme and returns its metrics; nullopt if no d works.
std::optional<OptimizedScheme> complete(SurfaceCodeScheme s, std::uint64_t n_logical, double t_count,
                                        const QuantumHardwareProfile& hw, double logical_share)
{
    s.code_distance = 3;
    const PhysicalResources probe = scheme_metrics(s, n_logical, t_count, hw);
    try {
        s.code_distance = required_code_distance(hw.p_phys, static_cast<double>(probe.n_tiles_total),
                                                 t_count * probe.cycles_per_t, logical_share);
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
    return OptimizedScheme{s, scheme_metrics(s, n_logical, t_count, hw)};
}

bool better(const OptimizedScheme& a, const OptimizedScheme& b)
{
    const auto& x = a.resources;
    const auto& y = b.resources;
    if (x.spacetime_volume != y.spacetime_volume) return x.spacetime_volume < y.spacetime_volume;
    if (x.runtime_s != y.runtime_s) return x.runtime_s < y.runtime_s;
    return x.n_physical_qubits < y.n_physical_qubits;
}

}  // namespace

OptimizedScheme optimize_scheme(std::uint64_t n_logical, double t_count, const QuantumHardwareProfile& hw)
{
    if (!(t_count >= 1)) throw PreconditionError("t_count must be >= 1");
    if (n_logical < 1) throw PreconditionError("n_logical must be >= 1");
    const double distill_share = hw.error_budget * hw.distill_share;
    const double logical_share = hw.error_budget - distill_share;
    const auto& dist = select_distillation(hw.p_phys, t_count, distill_share);

    if (!hw.qubit_budget) {
        const auto& fast = data_block_protocol(DataBlockKind::Fast);
        SurfaceCodeScheme s{dist.kind, blocks_to_match(dist, fast), DataBlockKind::Fast, 3};
        auto best = complete(s, n_logical, t_count, hw, logical_share);
        if (!best) {
            throw InfeasibleError("code_distance",
                                  fmt::format("no odd d <= {} meets the logical error share {}", kMaxCodeDistance, logical_share));
        }
        return *best;
    }

    std::optional<OptimizedScheme> best;
    std::uint64_t smallest = 0;
    bool any_distance = false;
    for (const auto& data : data_block_protocols()) {
        for (std::uint32_t b = 1; b <= blocks_to_match(dist, data); ++b) {
            auto cand = complete(SurfaceCodeScheme{dist.kind, b, data.kind, 3}, n_logical, t_count, hw, logical_share);
            if (!cand) continue;
            any_distance = true;
            const auto q = cand->resources.n_physical_qubits;
            if (smallest == 0 || q < smallest) smallest = q;
            if (q > *hw.qubit_budget) continue;
            if (!best || better(*cand, *best)) best = cand;
        }
    }
    if (!any_distance) {
        throw InfeasibleError("code_distance", fmt::format("no odd d <= {} meets the logical error share {}", kMaxCodeDistance, logical_share));
    }
    if (!best) {
        throw InfeasibleError("qubit_budget", fmt::format("smallest scheme needs {} physical qubits, budget is {}", smallest,
                                                          *hw.qubit_budget));
    }
    return *best;
}

}  // namespace qlsa
