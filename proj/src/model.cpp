#include "qlsa/model.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>

#include "qlsa/errors.hpp"

namespace qlsa {

std::uint32_t default_r_bits(double kappa, double epsilon)
{
    const double bits = std::ceil(std::log2(kappa / epsilon));
    return static_cast<std::uint32_t>(std::max(4.0, bits));
}

namespace {

struct Preset {
    std::string_view key;
    std::string_view label;
    double peak_flops;
};

// FLOP/s figures from the TOP500 listing.
constexpr std::array<Preset, 6> kPresets{{
    {"aurora", "Aurora", 1.012e18},
    {"el_capitan_fp64", "El Capitan FP64", 2.726e18},
    {"el_capitan_fp32", "El Capitan FP32", 5.453e18},
    {"el_capitan_fp16", "El Capitan FP16", 4.361e19},
    {"el_capitan_fp8", "El Capitan FP8", 8.721e19},
    {"frontier_fp64", "Frontier FP64/32", 1.810e18},
}};

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::optional<ClassicalHardwareProfile> classical_preset(std::string_view name)
{
    if (name == "desktop" || name == "desktop-1GHz") {
        return ClassicalHardwareProfile{};
    }
    for (const auto& p : kPresets) {
        if (p.key == name) {
            ClassicalHardwareProfile m;
            m.name = std::string(p.label);
            m.peak_flops = p.peak_flops;
            return m;
        }
    }
    return std::nullopt;
}

std::vector<std::string_view> classical_preset_names()
{
    std::vector<std::string_view> out{"desktop"};
    for (const auto& p : kPresets) out.push_back(p.key);
    return out;
}

SweepSpec default_sweep()
{
    SweepSpec sw;
    sw.n.kind = AxisKind::Values;
    for (int n = 2; n <= 64; ++n) sw.n.values.push_back(n);
    sw.kappa.kind = AxisKind::Coupled;
    sw.s.kind = AxisKind::Coupled;
    return sw;
}

void validate(const ProblemInstance& p)
{
    if (p.n < 1) throw ValidationError("problem.n", "must be >= 1");
    if (!(std::isfinite(p.kappa) && p.kappa >= 1.0)) {
        throw ValidationError("problem.kappa", fmt::format("must be >= 1 (got {})", p.kappa));
    }
    if (p.s < 1) throw ValidationError("problem.s", "must be >= 1");
    if (p.n < 64 && p.s > (std::uint64_t{1} << p.n)) {
        throw ValidationError("problem.s", fmt::format("sparsity {} exceeds matrix size 2^{}", p.s, p.n));
    }
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) {
        throw ValidationError("problem.epsilon", fmt::format("must lie in (0, 1) (got {})", p.epsilon));
    }
    if (p.r_bits < 1) throw ValidationError("problem.r_bits", "must be >= 1");
}

void validate(const QuantumHardwareProfile& hw)
{
    if (!(hw.p_phys > 0.0 && hw.p_phys < 0.01)) {
        throw ValidationError("quantum_hw.p_phys",
                              fmt::format("must lie in (0, 0.01) so that 100p < 1 (got {})", hw.p_phys));
    }
    if (!finite_positive(hw.t_cycle_s)) throw ValidationError("quantum_hw.t_cycle_s", "must be > 0");
    if (!finite_positive(hw.watts_per_qubit)) throw ValidationError("quantum_hw.watts_per_qubit", "must be > 0");
    if (hw.qubit_budget && *hw.qubit_budget == 0) {
        throw ValidationError("quantum_hw.qubit_budget", "must be a positive integer");
    }
    if (!(hw.error_budget > 0.0 && hw.error_budget < 1.0)) {
        throw ValidationError("quantum_hw.error_budget", "must lie in (0, 1)");
    }
    if (!(hw.distill_share > 0.0 && hw.distill_share < 1.0)) {
        throw ValidationError("quantum_hw.distill_share", "must lie in (0, 1)");
    }
}

void validate(const CryoParameters& c)
{
    if (!finite_positive(c.q_comp)) throw ValidationError("cryo.q_comp", "must be > 0");
    if (!(c.phi >= 0.0 && c.phi <= 1.0)) throw ValidationError("cryo.phi", "must lie in [0, 1]");
    if (!(c.beta >= 0.0 && std::isfinite(c.beta))) throw ValidationError("cryo.beta", "must be >= 0");
    if (c.n_p < 1) throw ValidationError("cryo.n_p", "must be >= 1");
    if (!(c.eta_c > 0.0 && c.eta_c <= 1.0)) throw ValidationError("cryo.eta_c", "must lie in (0, 1]");
    if (!finite_positive(c.cop)) throw ValidationError("cryo.cop", "must be > 0");
    if (!finite_positive(c.fom)) throw ValidationError("cryo.fom", "must be > 0");
    if (!finite_positive(c.q_tilde)) throw ValidationError("cryo.q_tilde", "must be > 0");
}

void validate(const ClassicalHardwareProfile& m)
{
    if (!finite_positive(m.freq_hz)) throw ValidationError("classical_hw.freq_hz", "must be > 0");
    if (!finite_positive(m.watts_per_ghz)) throw ValidationError("classical_hw.watts_per_ghz", "must be > 0");
    if (!finite_positive(m.flops_per_cycle)) throw ValidationError("classical_hw.flops_per_cycle", "must be > 0");
    if (m.peak_flops && !finite_positive(*m.peak_flops)) {
        throw ValidationError("classical_hw.peak_flops", "must be > 0");
    }
}

namespace {

void validate_axis(const AxisSpec& axis, const char* field)
{
    if (axis.kind == AxisKind::Values && axis.values.empty()) {
        throw ValidationError(field, "axis has no points");
    }
    if (axis.kind == AxisKind::Coupled && !finite_positive(axis.scale)) {
        throw ValidationError(field, "coupling scale must be > 0");
    }
    for (double v : axis.values) {
        if (!std::isfinite(v)) throw ValidationError(field, "non-finite axis value");
    }
}

}  // namespace

void validate(const SweepSpec& sweep, const ProblemInstance& base)
{
    if (sweep.n.kind == AxisKind::Coupled) {
        throw ValidationError("sweep.n", "the n axis cannot be coupled to itself");
    }
    validate_axis(sweep.n, "sweep.n");
    validate_axis(sweep.kappa, "sweep.kappa");
    validate_axis(sweep.s, "sweep.s");
    validate_axis(sweep.epsilon, "sweep.epsilon");
    for (double v : sweep.n.values) {
        if (v < 1 || v != std::floor(v)) throw ValidationError("sweep.n", fmt::format("{} is not a positive integer", v));
    }
    for (double v : sweep.s.values) {
        if (v < 1 || v != std::floor(v)) throw ValidationError("sweep.s", fmt::format("{} is not a positive integer", v));
    }
    // Coupled axes must stay consistent for every n on the grid.
    const auto ns = sweep.n.kind == AxisKind::Values ? sweep.n.values : std::vector<double>{double(base.n)};
    for (double n : ns) {
        if (sweep.s.kind == AxisKind::Coupled) {
            const double s = sweep.s.scale * n;
            if (s < 1 || s != std::floor(s)) {
                throw ValidationError("sweep.s", fmt::format("coupled sparsity {} at n={} is not a positive integer", s, n));
            }
            if (n < 64 && s > std::ldexp(1.0, static_cast<int>(n))) {
                throw ValidationError("sweep.s", fmt::format("coupled sparsity {} exceeds 2^{}", s, n));
            }
        }
        if (sweep.kappa.kind == AxisKind::Coupled && sweep.kappa.scale * n < 1.0) {
            throw ValidationError("sweep.kappa", fmt::format("coupled kappa < 1 at n={}", n));
        }
        if (sweep.epsilon.kind == AxisKind::Coupled) {
            const double e = sweep.epsilon.scale * n;
            if (!(e > 0 && e < 1)) throw ValidationError("sweep.epsilon", fmt::format("coupled epsilon {} outside (0,1)", e));
        }
    }
}

std::string_view to_string(OracleModel m)
{
    return m == OracleModel::Structured ? "structured" : "graph_coloring";
}

std::string_view to_string(CountingMode m)
{
    return m == CountingMode::Analytic ? "analytic" : "engineered";
}

std::string_view to_string(ClassicalMethod m)
{
    return m == ClassicalMethod::CG ? "cg" : "cholesky";
}

std::string_view to_string(LogBase b)
{
    switch (b) {
    case LogBase::Natural: return "e";
    case LogBase::Two: return "2";
    case LogBase::Ten: return "10";
    }
    return "e";
}

std::string_view to_string(CryoModel m)
{
    switch (m) {
    case CryoModel::None: return "none";
    case CryoModel::Full: return "full";
    case CryoModel::Simplified: return "simplified";
    }
    return "none";
}

}  // namespace qlsa
