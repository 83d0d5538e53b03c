#pragma once

// Symbolic Clifford+T circuit for one one-sparse Hamiltonian simulation.
// Gates are only listed and counted; nothing is simulated.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qlsa/logical_resources.hpp"

namespace qlsa {

enum class GateKind { T, Tdg, S, Sdg, H, X, CNOT, QueryM, QueryMdg };

enum class Component { Oracle, W, Toffoli, PhaseRotation, ControlledRotation };

struct Gate {
    GateKind kind;
    Component component;
    std::uint32_t target = 0;
    std::uint32_t control = 0;  // CNOT only
};

struct Hs1Circuit {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint32_t n_qubits = 0;
    std::vector<Gate> gates;
};

/// M . W . T_f . (controlled e^{iZt} x e^{iFt}) . T_f^dag . W^dag . M^dag
Hs1Circuit build_hs1_circuit(std::uint32_t n, std::uint32_t r, std::uint32_t t_per_rotation = 15);

/// Tally of a gate list. X gates (open controls) are free; T^dag counts as T
/// and S^dag as S.
struct CircuitTally {
    Hs1GateCounts gates;
    std::uint64_t queries = 0;
    std::uint64_t x_count = 0;
};

CircuitTally count_gates(const Hs1Circuit& c);

struct CircuitCheck {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    Hs1GateCounts expected;
    CircuitTally counted;
    bool ok = false;
};

using CircuitBuilder = std::function<Hs1Circuit(std::uint32_t, std::uint32_t, std::uint32_t)>;

struct IndexRange {
    std::uint32_t lo = 1;
    std::uint32_t hi = 1;
};

/// Compares circuit tallies with hs1_gate_counts for every (n, r) in the
/// ranges (both at most 64). The builder can be swapped out in tests.
std::vector<CircuitCheck> verify_circuits(IndexRange n, IndexRange r, std::uint32_t t_per_rotation = 15,
                                          const CircuitBuilder& builder = build_hs1_circuit);

/// "n=3 r=2: T 123 != 124, ..." for a failed check, empty when it passed.
std::string describe_mismatch(const CircuitCheck& c);

}  // namespace qlsa
