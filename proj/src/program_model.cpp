#include "ucx/program_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <utility>

#include "ucx/errors.hpp"
#include "ucx/operator_basis.hpp"

namespace ucx {

namespace {

constexpr std::uint64_t kMaxDecodedInstructions = 1u << 20;

int bits_for_count(std::uint64_t count) {
    if (count <= 1) return 0;
    return static_cast<int>(std::bit_width(count - 1));
}

}  // namespace

GateSet::GateSet(std::vector<Gate> gates) : gates_(std::move(gates)) {
    if (gates_.empty()) throw ValidationError("gate set is empty");
    std::set<std::string> names;
    for (const Gate& g : gates_) {
        if (g.name.empty()) throw ValidationError("gate name is empty");
        if (!names.insert(g.name).second)
            throw ValidationError("duplicate gate name: " + g.name);
        if (g.arity < 1 || g.arity > 16)
            throw ValidationError("gate arity out of range: " + g.name);
        const std::size_t dim = std::size_t{1} << g.arity;
        if (g.matrix.rows() != dim || g.matrix.cols() != dim)
            throw ValidationError("gate matrix shape does not match arity: " + g.name);
        if (!check_unitary(g.matrix, kUnitarityTol))
            throw ValidationError("gate matrix is not unitary: " + g.name);
    }
    id_bits_ = bits_for_count(gates_.size());
}

const Gate& GateSet::gate(std::size_t id) const {
    if (id >= gates_.size()) throw ValidationError("gate id out of range");
    return gates_[id];
}

GateSet GateSet::default_set() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2);
    h.at(0, 0) = s;
    h.at(0, 1) = s;
    h.at(1, 0) = s;
    h.at(1, 1) = -s;

    ComplexMatrix t(2, 2);
    t.at(0, 0) = 1.0;
    t.at(1, 1) = std::polar(1.0, std::acos(-1.0) / 4.0);

    ComplexMatrix cnot(4, 4);
    cnot.at(0, 0) = 1.0;
    cnot.at(1, 1) = 1.0;
    cnot.at(2, 3) = 1.0;
    cnot.at(3, 2) = 1.0;

    std::vector<Gate> gates;
    gates.push_back(Gate{"H", 1, std::move(h)});
    gates.push_back(Gate{"T", 1, std::move(t)});
    gates.push_back(Gate{"CNOT", 2, std::move(cnot)});
    return GateSet(std::move(gates));
}

Machine::Machine(int n_qubits, GateSet gates) : n(n_qubits), gate_set(std::move(gates)) {
    qubit_dim(n);
}

int Machine::target_bits() const {
    return bits_for_count(static_cast<std::uint64_t>(n));
}

ProgramMode program_mode(const ProgramBody& body) {
    return static_cast<ProgramMode>(body.index());
}

std::string program_mode_name(ProgramMode mode) {
    switch (mode) {
        case ProgramMode::BasisIndex: return "basis-index";
        case ProgramMode::Circuit: return "circuit";
        case ProgramMode::StateBasisIndex: return "state-basis-index";
    }
    throw InternalError("unknown program mode");
}

namespace {

void validate_instruction(const Instruction& instr, const Machine& machine) {
    if (instr.gate_id < 0 ||
        static_cast<std::size_t>(instr.gate_id) >= machine.gate_set.size())
        throw ValidationError("gate id out of range");
    const Gate& g = machine.gate_set.gate(static_cast<std::size_t>(instr.gate_id));
    if (g.arity > machine.n)
        throw ValidationError("gate arity exceeds qubit count: " + g.name);
    if (instr.targets.size() != static_cast<std::size_t>(g.arity))
        throw ValidationError("target count does not match gate arity: " + g.name);
    std::uint32_t seen = 0;
    for (int t : instr.targets) {
        if (t < 0 || t >= machine.n) throw ValidationError("target qubit out of range");
        if (seen & (1u << t)) throw ValidationError("duplicate target qubit");
        seen |= 1u << t;
    }
}

}  // namespace

void validate_program_body(const ProgramBody& body, const Machine& machine) {
    const int n = machine.n;
    if (const auto* b = std::get_if<BasisIndexProgram>(&body)) {
        if (b->label >> (2 * n)) throw ValidationError("basis label out of range");
    } else if (const auto* c = std::get_if<CircuitProgram>(&body)) {
        if (c->instructions.empty())
            throw ValidationError("empty circuit has no encoding");
        for (const Instruction& instr : c->instructions)
            validate_instruction(instr, machine);
    } else {
        const auto& s = std::get<StateBasisIndexProgram>(body);
        if (s.label >> n) throw ValidationError("state label out of range");
    }
}

int program_bit_length(const ProgramBody& body, const Machine& machine) {
    validate_program_body(body, machine);
    if (std::holds_alternative<BasisIndexProgram>(body)) return 2 * machine.n + 2;
    if (std::holds_alternative<StateBasisIndexProgram>(body)) return machine.n + 2;
    const auto& c = std::get<CircuitProgram>(body);
    int len = 2 + elias_gamma_length(c.instructions.size());
    for (const Instruction& instr : c.instructions) {
        const Gate& g = machine.gate_set.gate(static_cast<std::size_t>(instr.gate_id));
        len += machine.gate_set.id_bits() + g.arity * machine.target_bits();
    }
    return len;
}

Program encode_program(const ProgramBody& body, const Machine& machine) {
    validate_program_body(body, machine);
    BitString bits;
    if (const auto* b = std::get_if<BasisIndexProgram>(&body)) {
        bits.append_bits(0, 2);
        bits.append_bits(b->label, 2 * machine.n);
    } else if (const auto* c = std::get_if<CircuitProgram>(&body)) {
        bits.append_bits(1, 2);
        append_elias_gamma(bits, c->instructions.size());
        for (const Instruction& instr : c->instructions) {
            bits.append_bits(static_cast<std::uint64_t>(instr.gate_id),
                             machine.gate_set.id_bits());
            for (int t : instr.targets)
                bits.append_bits(static_cast<std::uint64_t>(t), machine.target_bits());
        }
    } else {
        const auto& s = std::get<StateBasisIndexProgram>(body);
        bits.append_bits(2, 2);
        bits.append_bits(s.label, machine.n);
    }
    return Program{std::move(bits), body};
}

Program decode_program(BitReader& reader, const Machine& machine) {
    const std::size_t start = reader.position();
    const std::uint64_t mode = reader.read_bits(2);
    ProgramBody body;
    switch (mode) {
        case 0: {
            body = BasisIndexProgram{reader.read_bits(2 * machine.n)};
            break;
        }
        case 1: {
            const std::uint64_t count = read_elias_gamma(reader);
            if (count > kMaxDecodedInstructions)
                throw DecodeError("instruction count too large");
            CircuitProgram circuit;
            circuit.instructions.reserve(count);
            for (std::uint64_t k = 0; k < count; ++k) {
                Instruction instr;
                instr.gate_id = static_cast<int>(
                    reader.read_bits(machine.gate_set.id_bits()));
                if (static_cast<std::size_t>(instr.gate_id) >= machine.gate_set.size())
                    throw DecodeError("gate id out of range");
                const Gate& g =
                    machine.gate_set.gate(static_cast<std::size_t>(instr.gate_id));
                if (g.arity > machine.n)
                    throw DecodeError("gate arity exceeds qubit count");
                std::uint32_t seen = 0;
                for (int j = 0; j < g.arity; ++j) {
                    const int t =
                        static_cast<int>(reader.read_bits(machine.target_bits()));
                    if (t >= machine.n) throw DecodeError("target qubit out of range");
                    if (seen & (1u << t)) throw DecodeError("duplicate target qubit");
                    seen |= 1u << t;
                    instr.targets.push_back(t);
                }
                circuit.instructions.push_back(std::move(instr));
            }
            body = std::move(circuit);
            break;
        }
        case 2: {
            body = StateBasisIndexProgram{reader.read_bits(machine.n)};
            break;
        }
        default:
            throw DecodeError("reserved program mode");
    }
    Program program = encode_program(body, machine);
    if (program.bits.size() != reader.position() - start)
        throw InternalError("decode consumed a non-canonical bit count");
    return program;
}

Program decode_program_exact(const BitString& bits, const Machine& machine) {
    BitReader reader(bits);
    Program program = decode_program(reader, machine);
    if (reader.position() != bits.size())
        throw DecodeError("trailing bits after program");
    return program;
}

ComplexMatrix embed_gate(const Gate& gate, const std::vector<int>& targets, int n) {
    const int dim = static_cast<int>(qubit_dim(n));
    const int arity = gate.arity;
    const int gdim = 1 << arity;
    ComplexMatrix out(dim, dim);
    for (int r = 0; r < dim; ++r) {
        int gate_row = 0;
        int cleared = r;
        for (int j = 0; j < arity; ++j) {
            const int pos = n - 1 - targets[static_cast<std::size_t>(j)];
            gate_row = (gate_row << 1) | ((r >> pos) & 1);
            cleared &= ~(1 << pos);
        }
        for (int gc = 0; gc < gdim; ++gc) {
            int c = cleared;
            for (int j = 0; j < arity; ++j) {
                const int pos = n - 1 - targets[static_cast<std::size_t>(j)];
                c |= ((gc >> (arity - 1 - j)) & 1) << pos;
            }
            out.at(r, c) = gate.matrix.at(gate_row, gc);
        }
    }
    return out;
}

ComplexMatrix circuit_unitary(const std::vector<Instruction>& instructions,
                              const Machine& machine) {
    ComplexMatrix u = ComplexMatrix::identity(qubit_dim(machine.n));
    for (const Instruction& instr : instructions) {
        const Gate& g = machine.gate_set.gate(static_cast<std::size_t>(instr.gate_id));
        u = embed_gate(g, instr.targets, machine.n) * u;
    }
    return u;
}

ComplexMatrix evaluate_unitary(const ProgramBody& body, const Machine& machine) {
    validate_program_body(body, machine);
    if (const auto* b = std::get_if<BasisIndexProgram>(&body))
        return pauli_string_for_label(machine.n, static_cast<unsigned>(b->label));
    if (const auto* c = std::get_if<CircuitProgram>(&body))
        return circuit_unitary(c->instructions, machine);
    throw ValidationError("state-basis-index program is not a unitary program");
}

PureState evaluate_state(const ProgramBody& body, const Machine& machine) {
    validate_program_body(body, machine);
    if (const auto* s = std::get_if<StateBasisIndexProgram>(&body))
        return PureState::computational_basis(machine.n, s->label);
    if (const auto* c = std::get_if<CircuitProgram>(&body)) {
        UnitaryOperator u(machine.n, circuit_unitary(c->instructions, machine));
        return apply(u, PureState::zero_state(machine.n));
    }
    throw ValidationError("basis-index program is not a state program");
}

bool program_stream_less(const Program& a, const Program& b) {
    if (a.bits.size() != b.bits.size()) return a.bits.size() < b.bits.size();
    return a.bits < b.bits;
}

namespace {

// Depth-first fill of instruction slots under a remaining-bits budget.
void fill_circuits(const Machine& machine, int slots_left, int bits_left,
                   const std::vector<std::vector<Instruction>>& per_gate_choices,
                   const std::vector<int>& per_gate_bits,
                   std::vector<Instruction>& current,
                   std::vector<Program>& out) {
    if (slots_left == 0) {
        out.push_back(encode_program(CircuitProgram{current}, machine));
        return;
    }
    for (std::size_t gid = 0; gid < per_gate_choices.size(); ++gid) {
        if (per_gate_bits[gid] > bits_left) continue;
        for (const Instruction& instr : per_gate_choices[gid]) {
            current.push_back(instr);
            fill_circuits(machine, slots_left - 1, bits_left - per_gate_bits[gid],
                          per_gate_choices, per_gate_bits, current, out);
            current.pop_back();
        }
    }
}

void enumerate_targets(int n, int arity, std::vector<int>& current, std::uint32_t used,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == arity) {
        out.push_back(current);
        return;
    }
    for (int t = 0; t < n; ++t) {
        if (used & (1u << t)) continue;
        current.push_back(t);
        enumerate_targets(n, arity, current, used | (1u << t), out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Program> enumerate_programs(const Machine& machine,
                                        const EnumerationOptions& options) {
    if (options.max_bits < 2)
        throw ConfigError("enumeration requires max_bits >= 2");
    std::vector<Program> out;

    if (options.include_basis_index && 2 * machine.n + 2 <= options.max_bits) {
        const std::uint64_t count = 1ull << (2 * machine.n);
        for (std::uint64_t label = 0; label < count; ++label)
            out.push_back(encode_program(BasisIndexProgram{label}, machine));
    }

    if (options.include_state_basis_index && machine.n + 2 <= options.max_bits) {
        const std::uint64_t count = 1ull << machine.n;
        for (std::uint64_t label = 0; label < count; ++label)
            out.push_back(encode_program(StateBasisIndexProgram{label}, machine));
    }

    if (options.include_circuits) {
        // Usable gates and their instruction variants at this machine size.
        std::vector<std::vector<Instruction>> per_gate_choices;
        std::vector<int> per_gate_bits;
        for (std::size_t gid = 0; gid < machine.gate_set.size(); ++gid) {
            const Gate& g = machine.gate_set.gate(gid);
            if (g.arity > machine.n) continue;
            std::vector<std::vector<int>> target_lists;
            std::vector<int> scratch;
            enumerate_targets(machine.n, g.arity, scratch, 0, target_lists);
            std::vector<Instruction> choices;
            choices.reserve(target_lists.size());
            for (auto& targets : target_lists)
                choices.push_back(Instruction{static_cast<int>(gid), std::move(targets)});
            per_gate_choices.push_back(std::move(choices));
            per_gate_bits.push_back(machine.gate_set.id_bits() +
                                    g.arity * machine.target_bits());
        }
        if (!per_gate_choices.empty()) {
            const int min_instr_bits =
                *std::min_element(per_gate_bits.begin(), per_gate_bits.end());
            for (std::uint64_t k = 1;; ++k) {
                if (options.max_instructions &&
                    k > static_cast<std::uint64_t>(*options.max_instructions))
                    break;
                const int header = 2 + elias_gamma_length(k);
                if (header > options.max_bits) break;
                const long long needed =
                    static_cast<long long>(header) +
                    static_cast<long long>(k) * min_instr_bits;
                if (needed > options.max_bits) {
                    // With zero-bit instructions only the gamma header grows
                    // with k, so later k may still fit.
                    if (min_instr_bits > 0) break;
                    continue;
                }
                std::vector<Instruction> current;
                current.reserve(k);
                fill_circuits(machine, static_cast<int>(k),
                              options.max_bits - header, per_gate_choices,
                              per_gate_bits, current, out);
            }
        }
    }

    std::sort(out.begin(), out.end(), program_stream_less);
    return out;
}

Program baseline_basis_program(const UnitaryOperator& u, const Machine& machine) {
    if (u.n() != machine.n)
        throw DimensionError("unitary and machine qubit counts differ");
    const std::uint64_t count = 1ull << (2 * machine.n);
    std::uint64_t best_label = 0;
    double best_fidelity = -1.0;
    for (std::uint64_t label = 0; label < count; ++label) {
        const ComplexMatrix p =
            pauli_string_for_label(machine.n, static_cast<unsigned>(label));
        const double f = fidelity_matrices(p, u.matrix(), machine.n);
        if (f > best_fidelity) {
            best_fidelity = f;
            best_label = label;
        }
    }
    return encode_program(BasisIndexProgram{best_label}, machine);
}

}  // namespace ucx
