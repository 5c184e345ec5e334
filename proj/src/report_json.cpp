#include "ucx/report_json.hpp"

#include "ucx/errors.hpp"

namespace ucx {

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Complex& v = m.at(r, c);
            row.push_back(Json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        if (r == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            throw ParseError("matrix rows have unequal lengths");
        }
        for (const Json& cell : row) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw ParseError("matrix entry must be [re, im]");
            entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

Json state_to_json(const PureState& s) {
    Json amps = Json::array();
    for (const Complex& a : s.amplitudes())
        amps.push_back(Json::array({a.real(), a.imag()}));
    return Json{{"n", s.n()}, {"amplitudes", std::move(amps)}};
}

Json program_to_json(const Program& program, const Machine& machine) {
    Json j;
    const ProgramMode mode = program_mode(program.decoded);
    j["mode"] = program_mode_name(mode);
    j["bit_length"] = program.length();
    j["bits_hex"] = program.bits.to_hex();
    j["bits"] = program.bits.to_string01();
    if (const auto* b = std::get_if<BasisIndexProgram>(&program.decoded)) {
        j["label"] = b->label;
        j["pauli"] = pauli_label_name(machine.n, static_cast<unsigned>(b->label));
    } else if (const auto* c = std::get_if<CircuitProgram>(&program.decoded)) {
        j["instruction_count"] = c->instructions.size();
        Json instrs = Json::array();
        for (const Instruction& instr : c->instructions) {
            const Gate& g =
                machine.gate_set.gate(static_cast<std::size_t>(instr.gate_id));
            instrs.push_back(Json{{"gate_id", instr.gate_id},
                                  {"gate", g.name},
                                  {"targets", instr.targets}});
        }
        j["instructions"] = std::move(instrs);
    } else {
        const auto& s = std::get<StateBasisIndexProgram>(program.decoded);
        j["label"] = s.label;
    }
    return j;
}

Json budget_to_json(const Budget& budget) {
    Json j;
    j["max_program_bits"] = budget.max_program_bits;
    j["max_circuit_instructions"] =
        budget.max_circuit_instructions ? Json(*budget.max_circuit_instructions)
                                        : Json(nullptr);
    j["time_limit_seconds"] = budget.time_limit_seconds
                                  ? Json(*budget.time_limit_seconds)
                                  : Json(nullptr);
    return j;
}

Json complexity_report_to_json(const ComplexityReport& report, const Machine& machine) {
    Json j;
    j["subject"] = report.subject;
    j["kind"] = report.kind;
    j["n"] = report.n;
    j["k_hat"] = report.k_hat;
    j["k_hat_semantics"] = "upper estimate";
    j["program_length"] = report.program_length;
    j["penalty"] = report.penalty;
    j["codec_penalty"] = report.codec_penalty;
    j["fidelity"] = report.fidelity;
    j["witness"] = program_to_json(report.witness, machine);
    j["directly_computable"] = report.directly_computable;
    j["circuit_directly_computable"] = report.circuit_directly_computable;
    if (report.direct_witness) {
        j["direct_witness"] =
            Json{{"program", program_to_json(report.direct_witness->program, machine)},
                 {"program_length", report.direct_witness->program_length},
                 {"fidelity", report.direct_witness->fidelity},
                 {"penalty", 0}};
    } else {
        j["direct_witness"] = nullptr;
    }
    j["budget"] = budget_to_json(report.budget);
    if (report.kind == "unitary") {
        j["bound_4n_plus_c"] = report.bound_bits;
    } else {
        j["bound_2n_plus_c"] = report.bound_bits;
    }
    j["bound_holds"] = report.bound_holds;
    j["basis_used"] = report.basis_used;
    j["programs_considered"] = report.programs_considered;
    j["programs_skipped_unreachable"] = report.programs_skipped_unreachable;
    return j;
}

Json theorem1_to_json(const Theorem1Result& result) {
    Json j;
    j["n"] = result.n;
    j["baseline_label"] = result.baseline_label;
    j["baseline_pauli"] = result.baseline_label_name;
    j["baseline_fidelity"] = result.baseline_fidelity;
    j["baseline_penalty"] = result.baseline_penalty;
    j["baseline_program_length"] = 2 * result.n + 2;
    j["baseline_cost"] = result.baseline_cost;
    j["penalty_bound_2n"] = result.penalty_bound;
    j["cost_bound_4n_plus_2"] = result.cost_bound;
    j["pass"] = result.pass;
    return j;
}

Json relation_to_json(const StateUnitaryRelation& relation, const Machine& machine) {
    Json j;
    j["unitary"] = complexity_report_to_json(relation.unitary_report, machine);
    j["state"] = complexity_report_to_json(relation.state_report, machine);
    j["gap"] = relation.gap;
    j["circuit_direct"] = relation.circuit_direct;
    j["bound_checked"] = relation.bound_checked;
    j["gap_nonpositive"] = relation.gap_nonpositive;
    return j;
}

Json kraft_to_json(const KraftSum& kraft) {
    Json j;
    j["kraft_sum"] = kraft.numerator + "/" + kraft.denominator;
    j["less_equal_one"] = kraft.less_equal_one;
    j["equal_one"] = kraft.equal_one;
    return j;
}

Json prefix_code_to_json(const PrefixCode& code, const ProbabilityEnsemble& ensemble) {
    Json j;
    j["probabilities"] = ensemble.probabilities;
    if (!ensemble.labels.empty()) j["labels"] = ensemble.labels;
    Json lengths = Json::array();
    Json codewords = Json::array();
    for (std::size_t i = 0; i < code.lengths.size(); ++i) {
        if (code.lengths[i] == kSkipLength) {
            lengths.push_back(nullptr);
            codewords.push_back(nullptr);
        } else {
            lengths.push_back(code.lengths[i]);
            codewords.push_back(code.codewords[i].to_string01());
        }
    }
    j["lengths"] = std::move(lengths);
    j["codewords"] = std::move(codewords);
    j["kraft"] = kraft_to_json(code.kraft);
    return j;
}

std::string render_report(const Json& body) {
    return body.dump(2) + "\n";
}

}  // namespace ucx
