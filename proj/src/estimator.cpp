#include "ucx/estimator.hpp"

#include <chrono>
#include <cmath>

#include "ucx/coding.hpp"
#include "ucx/errors.hpp"
#include "ucx/operator_basis.hpp"

namespace ucx {

std::optional<int> penalty_from_fidelity(double fidelity) {
    if (!std::isfinite(fidelity) || fidelity < 0.0 || fidelity > 1.0 + 1e-9)
        throw InternalError("fidelity out of range");
    if (fidelity > 1.0) fidelity = 1.0;
    if (fidelity >= 1.0 - kExactFidelityTol) return 0;
    if (fidelity < kMinCodableProbability) return std::nullopt;
    int pen = ceil_neg_log2_snapped(fidelity);
    if (pen < 0) pen = 0;
    if (pen > kMaxCodeLength) pen = kMaxCodeLength;
    return pen;
}

std::optional<int> penalty(const UnitaryOperator& approx, const UnitaryOperator& target) {
    return penalty_from_fidelity(fidelity(approx, target));
}

namespace {

class Deadline {
public:
    explicit Deadline(const std::optional<double>& seconds) {
        if (seconds) {
            if (*seconds <= 0.0) throw ConfigError("time limit must be positive");
            end_ = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*seconds));
        }
    }

    void check() const {
        if (end_ && std::chrono::steady_clock::now() > *end_)
            throw ConfigError("time limit exceeded during enumeration");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

struct Best {
    bool have = false;
    int total = 0;
    Program program;
    int pen = 0;
    double fidelity = 0.0;

    // The stream arrives in (length, bits) order, so a strict total
    // improvement implements the (total, length, bits) tie-break.
    void offer(const Program& p, int penalty_bits, double fid) {
        const int t = p.length() + penalty_bits;
        if (!have || t < total) {
            have = true;
            total = t;
            program = p;
            pen = penalty_bits;
            fidelity = fid;
        }
    }
};

ComplexityReport finish_report(std::string kind, const Machine& machine,
                               const Budget& budget, const Best& best,
                               bool direct, bool circuit_direct,
                               std::optional<DirectWitness> direct_witness,
                               int bound_bits, std::string basis_used,
                               std::size_t considered, std::size_t skipped) {
    if (!best.have) throw InternalError("no reachable program found");
    ComplexityReport report;
    report.kind = std::move(kind);
    report.n = machine.n;
    report.k_hat = best.total;
    report.program_length = best.program.length();
    report.penalty = best.pen;
    report.codec_penalty = best.pen < 1 ? 1 : best.pen;
    report.fidelity = best.fidelity;
    report.witness = best.program;
    report.directly_computable = direct;
    report.circuit_directly_computable = circuit_direct;
    report.direct_witness = std::move(direct_witness);
    report.budget = budget;
    report.bound_bits = bound_bits;
    report.bound_holds = report.k_hat <= bound_bits;
    report.basis_used = std::move(basis_used);
    report.programs_considered = considered;
    report.programs_skipped_unreachable = skipped;
    return report;
}

}  // namespace

ComplexityReport estimate_unitary_complexity(const UnitaryOperator& u,
                                             const Machine& machine,
                                             const Budget& budget) {
    if (u.n() != machine.n)
        throw DimensionError("unitary and machine qubit counts differ");
    const int baseline_len = 2 * machine.n + 2;
    if (budget.max_program_bits < baseline_len)
        throw ConfigError("budget below the baseline program length 2n+2");
    Deadline deadline(budget.time_limit_seconds);

    EnumerationOptions options;
    options.max_bits = budget.max_program_bits;
    options.include_basis_index = true;
    options.include_circuits = true;
    options.include_state_basis_index = false;
    options.max_instructions = budget.max_circuit_instructions;

    Best best;
    bool direct = false;
    bool circuit_direct = false;
    std::optional<DirectWitness> direct_witness;
    std::size_t considered = 0;
    std::size_t skipped = 0;

    for (const Program& p : enumerate_programs(machine, options)) {
        deadline.check();
        ++considered;
        const ComplexMatrix approx = evaluate_unitary(p.decoded, machine);
        const double fid = fidelity_matrices(approx, u.matrix(), machine.n);
        if (approx.max_abs_diff(u.matrix()) <= kDirectEqualityTol) {
            direct = true;
            if (program_mode(p.decoded) == ProgramMode::Circuit) circuit_direct = true;
            if (!direct_witness)
                direct_witness = DirectWitness{p, p.length(), fid};
        }
        const std::optional<int> pen = penalty_from_fidelity(fid);
        if (!pen) {
            ++skipped;
            continue;
        }
        best.offer(p, *pen, fid);
    }

    ComplexityReport report = finish_report(
        "unitary", machine, budget, best, direct, circuit_direct,
        std::move(direct_witness), 4 * machine.n + 2, "pauli-string",
        considered, skipped);
    report.subject = "unitary";
    return report;
}

bool is_directly_computable(const UnitaryOperator& u, const Machine& machine,
                            const Budget& budget) {
    return estimate_unitary_complexity(u, machine, budget).directly_computable;
}

Theorem1Result theorem1_check(const UnitaryOperator& u, const Machine& machine) {
    const Program baseline = baseline_basis_program(u, machine);
    const auto& body = std::get<BasisIndexProgram>(baseline.decoded);
    const ComplexMatrix approx = evaluate_unitary(baseline.decoded, machine);
    const double fid = fidelity_matrices(approx, u.matrix(), machine.n);
    const std::optional<int> pen = penalty_from_fidelity(fid);
    if (!pen)
        throw InternalError("baseline fidelity below reachable range");

    Theorem1Result result;
    result.n = machine.n;
    result.baseline_label = body.label;
    result.baseline_label_name =
        pauli_label_name(machine.n, static_cast<unsigned>(body.label));
    result.baseline_fidelity = fid;
    result.baseline_penalty = *pen;
    result.baseline_cost = baseline.length() + *pen;
    result.penalty_bound = 2 * machine.n;
    result.cost_bound = 4 * machine.n + 2;
    result.pass = result.baseline_penalty <= result.penalty_bound &&
                  result.baseline_cost <= result.cost_bound;
    return result;
}

ComplexityReport estimate_state_complexity(const PureState& x, const Machine& machine,
                                           const Budget& budget) {
    if (x.n() != machine.n)
        throw DimensionError("state and machine qubit counts differ");
    const int baseline_len = machine.n + 2;
    if (budget.max_program_bits < baseline_len)
        throw ConfigError("budget below the baseline program length n+2");
    Deadline deadline(budget.time_limit_seconds);

    EnumerationOptions options;
    options.max_bits = budget.max_program_bits;
    options.include_basis_index = false;
    options.include_circuits = true;
    options.include_state_basis_index = true;
    options.max_instructions = budget.max_circuit_instructions;

    Best best;
    bool direct = false;
    bool circuit_direct = false;
    std::optional<DirectWitness> direct_witness;
    std::size_t considered = 0;
    std::size_t skipped = 0;

    for (const Program& p : enumerate_programs(machine, options)) {
        deadline.check();
        ++considered;
        const PureState approx = evaluate_state(p.decoded, machine);
        const double fid = state_fidelity(approx, x);
        bool exact = true;
        for (std::size_t i = 0; i < approx.amplitudes().size(); ++i) {
            if (std::abs(approx.amplitudes()[i] - x.amplitudes()[i]) >
                kDirectEqualityTol) {
                exact = false;
                break;
            }
        }
        if (exact) {
            direct = true;
            if (program_mode(p.decoded) == ProgramMode::Circuit) circuit_direct = true;
            if (!direct_witness)
                direct_witness = DirectWitness{p, p.length(), fid};
        }
        const std::optional<int> pen = penalty_from_fidelity(fid);
        if (!pen) {
            ++skipped;
            continue;
        }
        best.offer(p, *pen, fid);
    }

    ComplexityReport report = finish_report(
        "state", machine, budget, best, direct, circuit_direct,
        std::move(direct_witness), 2 * machine.n + 2, "computational-basis",
        considered, skipped);
    report.subject = "state";
    return report;
}

StateUnitaryRelation state_unitary_relation(const UnitaryOperator& u,
                                            const Machine& machine,
                                            const Budget& budget) {
    StateUnitaryRelation relation;
    relation.unitary_report = estimate_unitary_complexity(u, machine, budget);
    const PureState y = apply(u, PureState::zero_state(machine.n));
    relation.state_report = estimate_state_complexity(y, machine, budget);
    relation.gap = relation.state_report.k_hat - relation.unitary_report.k_hat;
    relation.circuit_direct = relation.unitary_report.circuit_directly_computable;
    relation.bound_checked = relation.circuit_direct;
    relation.gap_nonpositive = relation.gap <= 0;
    return relation;
}

}  // namespace ucx
