#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucx/coding.hpp"
#include "ucx/core_linalg.hpp"
#include "ucx/errors.hpp"
#include "ucx/estimator.hpp"
#include "ucx/operator_basis.hpp"
#include "ucx/program_model.hpp"
#include "ucx/random_unitary.hpp"
#include "ucx/report_json.hpp"
#include "ucx/version.hpp"

namespace {

using ucx::Json;

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ucx::ParseError("cannot open file: " + path);
    try {
        Json j;
        f >> j;
        return j;
    } catch (const std::exception& e) {
        throw ucx::ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

int require_int_field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw ucx::ParseError(std::string("missing integer field \"") + key +
                              "\" in " + path);
    return j[key].get<int>();
}

ucx::UnitaryOperator parse_unitary_file(const std::string& path, double tol) {
    const Json j = load_json_file(path);
    const int n = require_int_field(j, "n", path);
    if (!j.contains("matrix"))
        throw ucx::ParseError("missing field \"matrix\" in " + path);
    return ucx::UnitaryOperator(n, ucx::matrix_from_json(j["matrix"]), tol);
}

ucx::PureState parse_state_file(const std::string& path) {
    const Json j = load_json_file(path);
    const int n = require_int_field(j, "n", path);
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw ucx::ParseError("missing array field \"amplitudes\" in " + path);
    std::vector<ucx::Complex> amps;
    amps.reserve(j["amplitudes"].size());
    for (const Json& cell : j["amplitudes"]) {
        if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
            !cell[1].is_number())
            throw ucx::ParseError("amplitude entries must be [re, im] in " + path);
        amps.emplace_back(cell[0].get<double>(), cell[1].get<double>());
    }
    return ucx::PureState(n, std::move(amps));
}

ucx::GateSet load_gate_set(const std::string& path) {
    if (path.empty()) return ucx::GateSet::default_set();
    const Json j = load_json_file(path);
    if (!j.is_array() || j.empty())
        throw ucx::ParseError("gate set must be a non-empty array: " + path);
    std::vector<ucx::Gate> gates;
    gates.reserve(j.size());
    for (const Json& g : j) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string() ||
            !g.contains("matrix"))
            throw ucx::ParseError("each gate needs name, arity, matrix: " + path);
        ucx::Gate gate;
        gate.name = g["name"].get<std::string>();
        gate.arity = require_int_field(g, "arity", path);
        gate.matrix = ucx::matrix_from_json(g["matrix"]);
        gates.push_back(std::move(gate));
    }
    return ucx::GateSet(std::move(gates));
}

Json gate_set_to_json(const ucx::GateSet& gs, const std::string& source) {
    Json list = Json::array();
    for (const ucx::Gate& g : gs.gates())
        list.push_back(Json{{"name", g.name}, {"arity", g.arity}});
    return Json{{"source", source.empty() ? "built-in" : source}, {"gates", list}};
}

struct Options {
    std::string in_path;
    std::string out_path;
    std::string gate_set_path;
    int budget_bits = 14;
    std::optional<int> max_instructions;
    std::optional<double> time_limit;
    double tol_unitary = ucx::kUnitarityTol;
    double tol_basis = ucx::kBasisOrthoTol;
    std::uint64_t seed = 1;
    int n = 1;
    int trials = 50;
    std::string mode = "all";
    std::string basis_choice = "pauli";
};

ucx::Budget make_budget(const Options& opt) {
    ucx::Budget budget;
    budget.max_program_bits = opt.budget_bits;
    budget.max_circuit_instructions = opt.max_instructions;
    budget.time_limit_seconds = opt.time_limit;
    return budget;
}

Json make_root(const std::string& command) {
    Json root;
    root["schema"] = ucx::kReportSchema;
    root["tool"] = Json{{"name", ucx::kToolName}, {"version", ucx::kToolVersion}};
    root["command"] = command;
    return root;
}

void emit(const Json& root, const std::string& out_path) {
    const std::string text = ucx::render_report(root);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ucx::ConfigError("cannot open output file: " + out_path);
    f << text;
}

int run_complexity(const Options& opt) {
    const ucx::UnitaryOperator u = parse_unitary_file(opt.in_path, opt.tol_unitary);
    const ucx::Machine machine(u.n(), load_gate_set(opt.gate_set_path));
    const ucx::Budget budget = make_budget(opt);

    ucx::ComplexityReport report = ucx::estimate_unitary_complexity(u, machine, budget);
    report.subject = opt.in_path;
    const ucx::Theorem1Result t1 = ucx::theorem1_check(u, machine);

    Json root = make_root("complexity");
    root["inputs"] = Json{{"in", opt.in_path},
                          {"n", u.n()},
                          {"tolerance_unitary", opt.tol_unitary},
                          {"budget", ucx::budget_to_json(budget)},
                          {"gate_set", gate_set_to_json(machine.gate_set,
                                                        opt.gate_set_path)}};
    root["result"] = Json{{"complexity", ucx::complexity_report_to_json(report, machine)},
                          {"theorem1", ucx::theorem1_to_json(t1)}};
    emit(root, opt.out_path);
    return (t1.pass && report.bound_holds) ? 0 : 1;
}

int run_state_complexity(const Options& opt) {
    const ucx::PureState x = parse_state_file(opt.in_path);
    const ucx::Machine machine(x.n(), load_gate_set(opt.gate_set_path));
    const ucx::Budget budget = make_budget(opt);

    ucx::ComplexityReport report = ucx::estimate_state_complexity(x, machine, budget);
    report.subject = opt.in_path;

    Json root = make_root("state-complexity");
    root["inputs"] = Json{{"in", opt.in_path},
                          {"n", x.n()},
                          {"budget", ucx::budget_to_json(budget)},
                          {"gate_set", gate_set_to_json(machine.gate_set,
                                                        opt.gate_set_path)}};
    root["result"] =
        Json{{"complexity", ucx::complexity_report_to_json(report, machine)}};
    emit(root, opt.out_path);
    return report.bound_holds ? 0 : 1;
}

int run_relation(const Options& opt) {
    const ucx::UnitaryOperator u = parse_unitary_file(opt.in_path, opt.tol_unitary);
    const ucx::Machine machine(u.n(), load_gate_set(opt.gate_set_path));
    const ucx::Budget budget = make_budget(opt);

    ucx::StateUnitaryRelation relation = ucx::state_unitary_relation(u, machine, budget);
    relation.unitary_report.subject = opt.in_path;
    relation.state_report.subject = opt.in_path + " applied to |0...0>";

    Json root = make_root("relation");
    root["inputs"] = Json{{"in", opt.in_path},
                          {"n", u.n()},
                          {"tolerance_unitary", opt.tol_unitary},
                          {"budget", ucx::budget_to_json(budget)},
                          {"gate_set", gate_set_to_json(machine.gate_set,
                                                        opt.gate_set_path)}};
    root["result"] = ucx::relation_to_json(relation, machine);
    emit(root, opt.out_path);
    const bool violated = relation.bound_checked && !relation.gap_nonpositive;
    return violated ? 1 : 0;
}

int run_decompose(const Options& opt) {
    const ucx::UnitaryOperator u = parse_unitary_file(opt.in_path, opt.tol_unitary);
    const ucx::OperatorBasis basis =
        opt.basis_choice == "pauli"
            ? ucx::pauli_basis(u.n())
            : ucx::gram_schmidt_with_seed(u.matrix(), u.n());

    const std::vector<ucx::Complex> coeffs = ucx::decompose(u.matrix(), basis);
    const ucx::ProbabilityEnsemble ensemble = ucx::ensemble_from_projection(u, basis);
    const ucx::PrefixCode code = ucx::build_prefix_code(ensemble);

    const double parseval_sum = std::accumulate(ensemble.probabilities.begin(),
                                                ensemble.probabilities.end(), 0.0);
    const bool parseval_ok = std::abs(parseval_sum - 1.0) <= opt.tol_basis;

    Json coeff_json = Json::array();
    for (const ucx::Complex& c : coeffs)
        coeff_json.push_back(Json::array({c.real(), c.imag()}));

    Json root = make_root("decompose");
    root["inputs"] = Json{{"in", opt.in_path},
                          {"n", u.n()},
                          {"basis", opt.basis_choice},
                          {"tolerance_unitary", opt.tol_unitary},
                          {"tolerance_basis", opt.tol_basis}};
    root["result"] = Json{{"n", u.n()},
                          {"basis", opt.basis_choice},
                          {"coefficients", std::move(coeff_json)},
                          {"code", ucx::prefix_code_to_json(code, ensemble)},
                          {"parseval_sum", parseval_sum},
                          {"parseval_ok", parseval_ok}};
    emit(root, opt.out_path);
    return (parseval_ok && code.kraft.less_equal_one) ? 0 : 1;
}

bool codewords_prefix_free(const ucx::PrefixCode& code) {
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        if (code.lengths[i] == ucx::kSkipLength) continue;
        for (std::size_t j = 0; j < code.codewords.size(); ++j) {
            if (i == j || code.lengths[j] == ucx::kSkipLength) continue;
            if (code.codewords[i].is_prefix_of(code.codewords[j])) return false;
        }
    }
    return true;
}

bool codewords_roundtrip(const ucx::PrefixCode& code) {
    for (std::size_t i = 0; i < code.lengths.size(); ++i) {
        if (code.lengths[i] == ucx::kSkipLength) continue;
        const ucx::BitString bits = ucx::encode_index(code, i);
        ucx::BitReader reader(bits);
        if (ucx::decode_index(code, reader) != i) return false;
        if (reader.position() != bits.size()) return false;
    }
    return true;
}

int run_verify(const Options& opt) {
    const ucx::OperatorBasis pauli = ucx::pauli_basis(opt.n);
    double max_parseval_pauli = 0.0;
    double max_parseval_gs = 0.0;
    double max_gs_ortho = 0.0;
    double max_code_gap = 0.0;
    bool all_kraft_le_one = true;
    bool all_prefix_free = true;
    bool all_roundtrip = true;

    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(t);
        const ucx::UnitaryOperator u = ucx::haar_random_unitary(opt.n, trial_seed);

        const ucx::ProbabilityEnsemble ens = ucx::ensemble_from_projection(u, pauli);
        const double sum_pauli = std::accumulate(ens.probabilities.begin(),
                                                 ens.probabilities.end(), 0.0);
        max_parseval_pauli = std::max(max_parseval_pauli, std::abs(sum_pauli - 1.0));

        const ucx::OperatorBasis gs = ucx::gram_schmidt_with_seed(u.matrix(), opt.n);
        const ucx::ProbabilityEnsemble ens_gs = ucx::ensemble_from_projection(u, gs);
        const double sum_gs = std::accumulate(ens_gs.probabilities.begin(),
                                              ens_gs.probabilities.end(), 0.0);
        max_parseval_gs = std::max(max_parseval_gs, std::abs(sum_gs - 1.0));
        max_gs_ortho = std::max(max_gs_ortho, ucx::basis_orthonormality_error(gs));

        const ucx::PrefixCode code = ucx::build_prefix_code(ens);
        all_kraft_le_one = all_kraft_le_one && code.kraft.less_equal_one;
        all_prefix_free = all_prefix_free && codewords_prefix_free(code);
        all_roundtrip = all_roundtrip && codewords_roundtrip(code);

        double entropy = 0.0;
        double expected_len = 0.0;
        for (std::size_t i = 0; i < ens.probabilities.size(); ++i) {
            const double p = ens.probabilities[i];
            if (p <= 0.0 || code.lengths[i] == ucx::kSkipLength) continue;
            entropy -= p * std::log2(p);
            expected_len += p * code.lengths[i];
        }
        max_code_gap = std::max(max_code_gap, expected_len - entropy);
    }

    const bool pass = max_parseval_pauli <= opt.tol_basis &&
                      max_parseval_gs <= opt.tol_basis &&
                      max_gs_ortho <= opt.tol_basis && all_kraft_le_one &&
                      all_prefix_free && all_roundtrip && max_code_gap < 2.0;

    Json root = make_root("verify");
    root["inputs"] = Json{{"n", opt.n},
                          {"trials", opt.trials},
                          {"seed", opt.seed},
                          {"tolerance_basis", opt.tol_basis}};
    root["result"] = Json{{"max_parseval_deviation_pauli", max_parseval_pauli},
                          {"max_parseval_deviation_gram_schmidt", max_parseval_gs},
                          {"max_gram_schmidt_orthonormality_error", max_gs_ortho},
                          {"all_kraft_le_one", all_kraft_le_one},
                          {"all_prefix_free", all_prefix_free},
                          {"all_roundtrip", all_roundtrip},
                          {"max_expected_length_minus_entropy", max_code_gap},
                          {"pass", pass}};
    emit(root, opt.out_path);
    return pass ? 0 : 1;
}

int run_enumerate(const Options& opt) {
    const ucx::Machine machine(opt.n, load_gate_set(opt.gate_set_path));
    ucx::EnumerationOptions eo;
    eo.max_bits = opt.budget_bits;
    eo.max_instructions = opt.max_instructions;
    if (opt.mode == "all") {
        eo.include_basis_index = true;
        eo.include_circuits = true;
        eo.include_state_basis_index = true;
    } else if (opt.mode == "unitary") {
        eo.include_basis_index = true;
        eo.include_circuits = true;
        eo.include_state_basis_index = false;
    } else if (opt.mode == "state") {
        eo.include_basis_index = false;
        eo.include_circuits = true;
        eo.include_state_basis_index = true;
    } else if (opt.mode == "basis-index") {
        eo.include_basis_index = true;
        eo.include_circuits = false;
        eo.include_state_basis_index = false;
    } else if (opt.mode == "circuit") {
        eo.include_basis_index = false;
        eo.include_circuits = true;
        eo.include_state_basis_index = false;
    } else if (opt.mode == "state-basis-index") {
        eo.include_basis_index = false;
        eo.include_circuits = false;
        eo.include_state_basis_index = true;
    } else {
        throw ucx::ConfigError("unknown mode: " + opt.mode);
    }

    const std::vector<ucx::Program> programs = ucx::enumerate_programs(machine, eo);
    Json list = Json::array();
    for (const ucx::Program& p : programs)
        list.push_back(ucx::program_to_json(p, machine));

    Json root = make_root("enumerate");
    root["inputs"] = Json{{"n", opt.n},
                          {"budget_bits", opt.budget_bits},
                          {"mode", opt.mode},
                          {"gate_set", gate_set_to_json(machine.gate_set,
                                                        opt.gate_set_path)}};
    root["result"] = Json{{"count", programs.size()}, {"programs", std::move(list)}};
    emit(root, opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-enumeration complexity estimates for n-qubit unitaries"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path,
                        "write the JSON report here instead of stdout");
    };
    auto add_gate_set = [&](CLI::App* sub) {
        sub->add_option("--gate-set", opt.gate_set_path,
                        "gate set JSON file (default: built-in H, T, CNOT)");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-bits", opt.budget_bits,
                        "max program length in bits")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-instructions", opt.max_instructions,
                        "max circuit instruction count");
        sub->add_option("--time-limit", opt.time_limit,
                        "wall-clock limit in seconds for enumeration");
    };
    auto add_tolerances = [&](CLI::App* sub) {
        sub->add_option("--tolerance-unitary", opt.tol_unitary,
                        "unitarity tolerance (max entry deviation)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tolerance-basis", opt.tol_basis,
                        "basis orthonormality and Parseval tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* cmd_complexity =
        app.add_subcommand("complexity", "estimate K(U) for a unitary from JSON");
    cmd_complexity->add_option("--in", opt.in_path, "unitary JSON file")->required();
    add_budget(cmd_complexity);
    add_tolerances(cmd_complexity);
    add_gate_set(cmd_complexity);
    add_output(cmd_complexity);

    CLI::App* cmd_state =
        app.add_subcommand("state-complexity", "estimate K(|x>) for a state from JSON");
    cmd_state->add_option("--in", opt.in_path, "state JSON file")->required();
    add_budget(cmd_state);
    add_gate_set(cmd_state);
    add_output(cmd_state);

    CLI::App* cmd_relation = app.add_subcommand(
        "relation", "measure K_state(U|0...0>) - K(U) for a unitary");
    cmd_relation->add_option("--in", opt.in_path, "unitary JSON file")->required();
    add_budget(cmd_relation);
    add_tolerances(cmd_relation);
    add_gate_set(cmd_relation);
    add_output(cmd_relation);

    CLI::App* cmd_decompose = app.add_subcommand(
        "decompose", "basis projection ensemble, code lengths, Kraft sum, codewords");
    cmd_decompose->add_option("--in", opt.in_path, "unitary JSON file")->required();
    cmd_decompose
        ->add_option("--basis", opt.basis_choice, "operator basis (default pauli)")
        ->check(CLI::IsMember({"pauli", "gram-schmidt"}));
    add_tolerances(cmd_decompose);
    add_output(cmd_decompose);

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Parseval, Kraft, and codec checks over seeded random unitaries");
    cmd_verify->add_option("--n", opt.n, "qubit count")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--trials", opt.trials, "number of random unitaries")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", opt.seed, "base seed for the random suite");
    add_tolerances(cmd_verify);
    add_output(cmd_verify);

    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "dump the program stream up to a bit budget");
    cmd_enumerate->add_option("--n", opt.n, "qubit count")->check(CLI::PositiveNumber);
    cmd_enumerate
        ->add_option("--mode", opt.mode, "program modes to include (default all)")
        ->check(CLI::IsMember({"all", "unitary", "state", "basis-index", "circuit",
                               "state-basis-index"}));
    add_budget(cmd_enumerate);
    add_gate_set(cmd_enumerate);
    add_output(cmd_enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_complexity)) return run_complexity(opt);
        if (app.got_subcommand(cmd_state)) return run_state_complexity(opt);
        if (app.got_subcommand(cmd_relation)) return run_relation(opt);
        if (app.got_subcommand(cmd_decompose)) return run_decompose(opt);
        if (app.got_subcommand(cmd_verify)) return run_verify(opt);
        if (app.got_subcommand(cmd_enumerate)) return run_enumerate(opt);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const ucx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ucx::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ucx::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ucx::DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ucx::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ucx::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
