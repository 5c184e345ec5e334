#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ucx/core_linalg.hpp"
#include "ucx/program_model.hpp"

namespace ucx {

struct Budget {
    int max_program_bits = 0;
    std::optional<int> max_circuit_instructions;
    std::optional<double> time_limit_seconds;
};

// Fidelity at or above 1 - this counts as exact (penalty 0).
inline constexpr double kExactFidelityTol = 1e-12;

// Max-entry distance for the phase-exact equality Q(p) = U.
inline constexpr double kDirectEqualityTol = 1e-9;

// ceil(-log2 fidelity) with dyadic snapping; fidelity >= 1 - kExactFidelityTol
// gives 0; fidelity below 2^-128 gives nullopt (program unreachable, skipped).
std::optional<int> penalty_from_fidelity(double fidelity);
std::optional<int> penalty(const UnitaryOperator& approx, const UnitaryOperator& target);

// Best exact program (phase-exact match) under the (length, bits) order.
struct DirectWitness {
    Program program;
    int program_length = 0;
    double fidelity = 1.0;
};

struct ComplexityReport {
    std::string subject;   // caller-supplied identifier
    std::string kind;      // "unitary" or "state"
    int n = 0;
    int k_hat = 0;
    int program_length = 0;
    int penalty = 0;        // raw ceiling; 0 allowed
    int codec_penalty = 0;  // the concrete codec floors lengths at 1 bit
    double fidelity = 0.0;
    Program witness;
    bool directly_computable = false;
    bool circuit_directly_computable = false;
    std::optional<DirectWitness> direct_witness;
    Budget budget;
    int bound_bits = 0;  // 4n + 2 for unitaries, 2n + 2 for states
    bool bound_holds = false;
    std::string basis_used;
    std::size_t programs_considered = 0;
    std::size_t programs_skipped_unreachable = 0;
};

// Minimizes l(p) + penalty over BasisIndex and Circuit programs with
// l(p) <= budget.max_program_bits. The witness is the minimizer under
// (total, length, bits-as-integer). ConfigError if the budget cannot reach
// the 2n+2 baseline.
ComplexityReport estimate_unitary_complexity(const UnitaryOperator& u,
                                             const Machine& machine,
                                             const Budget& budget);

// True iff some enumerated program evaluates to U with max-entry distance
// <= kDirectEqualityTol (no global-phase quotient).
bool is_directly_computable(const UnitaryOperator& u, const Machine& machine,
                            const Budget& budget);

struct Theorem1Result {
    int n = 0;
    std::uint64_t baseline_label = 0;
    std::string baseline_label_name;
    double baseline_fidelity = 0.0;
    int baseline_penalty = 0;
    int baseline_cost = 0;
    int penalty_bound = 0;  // 2n
    int cost_bound = 0;     // 4n + 2
    bool pass = false;
};

// Baseline basis-index program cost check: penalty <= 2n, total <= 4n + 2.
Theorem1Result theorem1_check(const UnitaryOperator& u, const Machine& machine);

// Minimizes over StateBasisIndex and Circuit-in-state-mode programs; the
// best basis state always qualifies, so k_hat <= 2n + 2.
ComplexityReport estimate_state_complexity(const PureState& x, const Machine& machine,
                                           const Budget& budget);

struct StateUnitaryRelation {
    ComplexityReport unitary_report;
    ComplexityReport state_report;  // for U applied to |0...0>
    int gap = 0;                    // state k_hat minus unitary k_hat
    bool circuit_direct = false;    // U has an exact circuit program in budget
    bool bound_checked = false;     // the gap <= 0 assertion applies
    bool gap_nonpositive = false;
};

// Measures K_state(U|0...0>) - K(U); when U is exactly a circuit program
// within budget the same program serves in state mode, so the gap must be
// <= 0 and bound_checked is set.
StateUnitaryRelation state_unitary_relation(const UnitaryOperator& u,
                                            const Machine& machine,
                                            const Budget& budget);

}  // namespace ucx
