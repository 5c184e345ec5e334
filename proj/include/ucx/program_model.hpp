#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ucx/bitstring.hpp"
#include "ucx/core_linalg.hpp"

namespace ucx {

struct Gate {
    std::string name;
    int arity = 1;
    ComplexMatrix matrix;
};

// Ordered gate list; list position fixes the gate id.
class GateSet {
public:
    explicit GateSet(std::vector<Gate> gates);

    // H, T, CNOT (control first).
    static GateSet default_set();

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    const Gate& gate(std::size_t id) const;

    // Bits per gate id field: ceil(log2 of gate count), 0 for a single gate.
    int id_bits() const { return id_bits_; }

private:
    std::vector<Gate> gates_;
    int id_bits_ = 0;
};

struct Machine {
    int n = 1;
    GateSet gate_set;

    Machine(int n_qubits, GateSet gates);

    // Bits per target qubit field: ceil(log2 n), 0 when n = 1.
    int target_bits() const;
};

struct Instruction {
    int gate_id = 0;
    std::vector<int> targets;  // ordered, control first for CNOT

    bool operator==(const Instruction&) const = default;
};

struct BasisIndexProgram {
    std::uint64_t label = 0;  // 2n bits, Pauli string label
    bool operator==(const BasisIndexProgram&) const = default;
};

struct CircuitProgram {
    std::vector<Instruction> instructions;  // at least one
    bool operator==(const CircuitProgram&) const = default;
};

struct StateBasisIndexProgram {
    std::uint64_t label = 0;  // n bits, computational basis label
    bool operator==(const StateBasisIndexProgram&) const = default;
};

using ProgramBody =
    std::variant<BasisIndexProgram, CircuitProgram, StateBasisIndexProgram>;

enum class ProgramMode { BasisIndex = 0, Circuit = 1, StateBasisIndex = 2 };

ProgramMode program_mode(const ProgramBody& body);
std::string program_mode_name(ProgramMode mode);

// A program is its canonical bits plus the decoded form; re-encoding the
// decoded form reproduces the bits exactly.
struct Program {
    BitString bits;
    ProgramBody decoded;

    int length() const { return static_cast<int>(bits.size()); }
};

// Throws ValidationError for out-of-range labels, bad gate ids, gate arity
// above the machine size, or bad target lists (out of range, duplicate,
// wrong count). Empty circuits are rejected: the instruction count uses
// Elias gamma, which starts at 1.
void validate_program_body(const ProgramBody& body, const Machine& machine);

// Bit layout: 2-bit mode (00 BasisIndex, 01 Circuit, 10 StateBasisIndex,
// 11 reserved), then mode payload. BasisIndex: 2n-bit label. StateBasisIndex:
// n-bit label. Circuit: Elias gamma instruction count, then per instruction
// a gate id field and one target field per gate input.
Program encode_program(const ProgramBody& body, const Machine& machine);
int program_bit_length(const ProgramBody& body, const Machine& machine);

// Reads exactly one program starting at the reader position. The consumed
// span is the program's bits. Throws DecodeError on truncation, reserved
// mode, or invalid payload.
Program decode_program(BitReader& reader, const Machine& machine);

// Decodes a string that must hold exactly one program, no trailing bits.
Program decode_program_exact(const BitString& bits, const Machine& machine);

// Gate embedding: targets[j] binds gate input j, with gate input 0 the most
// significant bit of the gate's own index space. Qubit q is state index bit
// n-1-q (qubit 0 is the most significant bit).
ComplexMatrix embed_gate(const Gate& gate, const std::vector<int>& targets, int n);

// Product of embedded instruction matrices; instruction k multiplies on the
// left of instructions 1..k-1.
ComplexMatrix circuit_unitary(const std::vector<Instruction>& instructions,
                              const Machine& machine);

// BasisIndex -> Pauli string; Circuit -> circuit unitary. StateBasisIndex is
// not a unitary program (ValidationError).
ComplexMatrix evaluate_unitary(const ProgramBody& body, const Machine& machine);

// StateBasisIndex -> |label>; Circuit -> circuit unitary applied to |0...0>.
// BasisIndex is not a state program (ValidationError).
PureState evaluate_state(const ProgramBody& body, const Machine& machine);

struct EnumerationOptions {
    int max_bits = 0;
    bool include_basis_index = true;
    bool include_circuits = true;
    bool include_state_basis_index = false;
    std::optional<int> max_instructions;
};

// Every valid program with l(p) <= max_bits in the selected modes, ordered
// by nondecreasing length, ties by bits as an unsigned big-endian integer.
std::vector<Program> enumerate_programs(const Machine& machine,
                                        const EnumerationOptions& options);

// The enumeration order as a comparator.
bool program_stream_less(const Program& a, const Program& b);

// BasisIndex program for argmax_i |<e_i, U>|^2 over the Pauli basis, ties to
// the smallest label. Its fidelity is at least 1/4^n.
Program baseline_basis_program(const UnitaryOperator& u, const Machine& machine);

}  // namespace ucx
