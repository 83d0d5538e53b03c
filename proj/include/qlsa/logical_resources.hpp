#pragma once

#include <cstdint>

#include "qlsa/model.hpp"

namespace qlsa {

/// Clifford+T content of one one-sparse Hamiltonian simulation (HS1).
struct Hs1GateCounts {
    std::uint64_t t_count = 0;
    std::uint64_t cnot_count = 0;
    std::uint64_t s_count = 0;
    std::uint64_t h_count = 0;

    bool operator==(const Hs1GateCounts&) const = default;
};

/// Closed forms for an n-qubit register and r precision bits. With the
/// default 15 T per rotation: T = 18n + 90r + 15, CNOT = 22n + 4r,
/// S = 6n + 6r + 3, H = 8n + 6r + 3.
Hs1GateCounts hs1_gate_counts(std::uint32_t n, std::uint32_t r, std::uint32_t t_per_rotation = 15);

struct TrotterPlan {
    double r_trot = 0;  // Trotter repetitions per controlled unitary
    double t_seg = 0;   // t0 / (T * r_trot)
    double t0 = 0;      // total evolution time, pi * T
};

struct ClockPlan {
    double t_unitaries = 0;     // T
    std::uint32_t n_clock = 0;  // ceil(log2 T)
};

struct LogicalResources {
    double n_hs1 = 0;
    double t_count = 0;
    double cnot_count = 0;
    double s_count = 0;
    double h_count = 0;
    double queries = 0;
    std::uint64_t n_logical = 0;
    CountingMode mode = CountingMode::Analytic;
    Hs1GateCounts per_hs1;  // per-HS1 counts used for the totals
    TrotterPlan trotter;
    ClockPlan clock;
};

ClockPlan clock_plan(const ProblemInstance& p, CountingMode mode);
TrotterPlan trotter_plan(const ProblemInstance& p, CountingMode mode);

/// Number of HS1 blocks. Graph coloring multiplies the structured count by 6s.
double hs1_invocations(const ProblemInstance& p, CountingMode mode);

/// Logical qubits: 2n + 3r + n_clock + extra (parity qubit and rotation ancilla by default).
std::uint64_t logical_qubits(const ProblemInstance& p, const ClockPlan& clock, std::uint32_t extra = 2);

LogicalResources total_logical_resources(const ProblemInstance& p, const EstimatorOptions& opts = {});

}  // namespace qlsa
