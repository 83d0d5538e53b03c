#include "qlsa/hs1_circuit.hpp"

#include <fmt/format.h>

#include "qlsa/errors.hpp"

namespace qlsa {
namespace {

// Register layout: input [0, n), index [n, 2n), value [2n, 2n + 3r),
// parity 2n + 3r, rotation ancilla 2n + 3r + 1.
struct Layout {
    std::uint32_t n, r;
    std::uint32_t input(std::uint32_t i) const { return i; }
    std::uint32_t index(std::uint32_t i) const { return n + i; }
    std::uint32_t value(std::uint32_t i) const { return 2 * n + i; }
    std::uint32_t parity() const { return 2 * n + 3 * r; }
    std::uint32_t ancilla() const { return 2 * n + 3 * r + 1; }
    std::uint32_t size() const { return 2 * n + 3 * r + 2; }
};

class Emitter {
public:
    explicit Emitter(std::vector<Gate>& out) : out_(out) {}

    void one(GateKind k, Component c, std::uint32_t q) { out_.push_back(Gate{k, c, q, 0}); }
    void cx(Component c, std::uint32_t ctrl, std::uint32_t tgt) { out_.push_back(Gate{GateKind::CNOT, c, tgt, ctrl}); }

    // Two-qubit W gate acting on (a, b): 2 T, 5 CNOT, 2 S, 2 H.
    void w_gate(std::uint32_t a, std::uint32_t b, bool dagger)
    {
        const auto c = Component::W;
        const GateKind t = dagger ? GateKind::Tdg : GateKind::T;
        const GateKind s = dagger ? GateKind::Sdg : GateKind::S;
        cx(c, a, b);
        one(s, c, a);
        cx(c, b, a);
        one(GateKind::H, c, b);
        one(t, c, b);
        cx(c, a, b);
        one(t, c, b);
        one(GateKind::H, c, b);
        cx(c, b, a);
        one(s, c, b);
        cx(c, a, b);
    }

    // Toffoli with a trailing S on the target; open controls are flipped with
    // X before and after. 7 T, 6 CNOT, 1 S, 2 H.
    void toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t tgt, bool open1, bool open2)
    {
        const auto c = Component::Toffoli;
        if (open1) one(GateKind::X, c, c1);
        if (open2) one(GateKind::X, c, c2);
        one(GateKind::H, c, tgt);
        cx(c, c2, tgt);
        one(GateKind::Tdg, c, tgt);
        cx(c, c1, tgt);
        one(GateKind::T, c, tgt);
        cx(c, c2, tgt);
        one(GateKind::Tdg, c, tgt);
        cx(c, c1, tgt);
        one(GateKind::T, c, c2);
        one(GateKind::T, c, tgt);
        one(GateKind::H, c, tgt);
        cx(c, c1, c2);
        one(GateKind::T, c, c1);
        one(GateKind::Tdg, c, c2);
        cx(c, c1, c2);
        one(GateKind::S, c, tgt);
        if (open2) one(GateKind::X, c, c2);
        if (open1) one(GateKind::X, c, c1);
    }

    // Single-qubit rotation synthesized into t_count T gates plus the given
    // number of S and H layers.
    void rotation(Component c, std::uint32_t q, std::uint32_t t_count, std::uint32_t layers)
    {
        for (std::uint32_t l = 0; l < layers; ++l) {
            one(GateKind::H, c, q);
            one(GateKind::S, c, q);
        }
        for (std::uint32_t k = 0; k < t_count; ++k) one(k % 2 ? GateKind::Tdg : GateKind::T, c, q);
    }

private:
    std::vector<Gate>& out_;
};

}  // namespace

Hs1Circuit build_hs1_circuit(std::uint32_t n, std::uint32_t r, std::uint32_t t_per_rotation)
{
    if (n < 1 || r < 1) throw PreconditionError(fmt::format("build_hs1_circuit needs n >= 1 and r >= 1 (got n={}, r={})", n, r));
    if (t_per_rotation < 1) throw PreconditionError("t_per_rotation must be >= 1");

    const Layout L{n, r};
    Hs1Circuit circ;
    circ.n = n;
    circ.r = r;
    circ.n_qubits = L.size();
    Emitter e(circ.gates);

    e.one(GateKind::QueryM, Component::Oracle, L.input(0));

    // W on each (input, index) pair, then the comparison Toffolis into parity.
    for (std::uint32_t i = 0; i < n; ++i) e.w_gate(L.input(i), L.index(i), false);
    for (std::uint32_t i = 0; i < n; ++i) e.toffoli(L.input(i), L.index(i), L.parity(), false, i % 2 == 1);

    // Phase on the parity qubit, then the value-weighted rotations. Each
    // controlled rotation is 2 CNOT around three synthesized rotations.
    e.rotation(Component::PhaseRotation, L.parity(), t_per_rotation, 3);
    for (std::uint32_t k = 0; k < 2 * r; ++k) {
        const std::uint32_t ctrl = L.value(k % (3 * r));
        e.rotation(Component::ControlledRotation, L.ancilla(), t_per_rotation, 1);
        e.cx(Component::ControlledRotation, ctrl, L.ancilla());
        e.rotation(Component::ControlledRotation, L.ancilla(), t_per_rotation, 1);
        e.cx(Component::ControlledRotation, ctrl, L.ancilla());
        e.rotation(Component::ControlledRotation, L.ancilla(), t_per_rotation, 1);
    }

    for (std::uint32_t i = n; i-- > 0;) e.toffoli(L.input(i), L.index(i), L.parity(), false, i % 2 == 1);
    for (std::uint32_t i = n; i-- > 0;) e.w_gate(L.input(i), L.index(i), true);

    e.one(GateKind::QueryMdg, Component::Oracle, L.input(0));
    return circ;
}

CircuitTally count_gates(const Hs1Circuit& c)
{
    CircuitTally t;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::T:
        case GateKind::Tdg: ++t.gates.t_count; break;
        case GateKind::S:
        case GateKind::Sdg: ++t.gates.s_count; break;
        case GateKind::H: ++t.gates.h_count; break;
        case GateKind::CNOT: ++t.gates.cnot_count; break;
        case GateKind::X: ++t.x_count; break;
        case GateKind::QueryM:
        case GateKind::QueryMdg: ++t.queries; break;
        }
    }
    return t;
}

std::vector<CircuitCheck> verify_circuits(IndexRange nr, IndexRange rr, std::uint32_t t_per_rotation,
                                          const CircuitBuilder& builder)
{
    if (nr.lo < 1 || nr.lo > nr.hi || rr.lo < 1 || rr.lo > rr.hi) throw PreconditionError("n and r ranges must be nonempty and start at >= 1");
    if (nr.hi > 64 || rr.hi > 64) throw PreconditionError("n and r are limited to 64");
    std::vector<CircuitCheck> out;
    for (std::uint32_t n = nr.lo; n <= nr.hi; ++n) {
        for (std::uint32_t r = rr.lo; r <= rr.hi; ++r) {
            CircuitCheck chk;
            chk.n = n;
            chk.r = r;
            chk.expected = hs1_gate_counts(n, r, t_per_rotation);
            chk.counted = count_gates(builder(n, r, t_per_rotation));
            chk.ok = chk.counted.gates == chk.expected && chk.counted.queries == 2;
            out.push_back(chk);
        }
    }
    return out;
}

std::string describe_mismatch(const CircuitCheck& c)
{
    if (c.ok) return {};
    std::string out = fmt::format("n={} r={}:", c.n, c.r);
    auto field = [&](const char* name, std::uint64_t got, std::uint64_t want) {
        if (got != want) out += fmt::format(" {} counted {} expected {};", name, got, want);
    };
    field("T", c.counted.gates.t_count, c.expected.t_count);
    field("CNOT", c.counted.gates.cnot_count, c.expected.cnot_count);
    field("S", c.counted.gates.s_count, c.expected.s_count);
    field("H", c.counted.gates.h_count, c.expected.h_count);
    field("queries", c.counted.queries, 2);
    return out;
}

}  // namespace qlsa
