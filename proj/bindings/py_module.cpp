#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "ucx/coding.hpp"
#include "ucx/core_linalg.hpp"
#include "ucx/errors.hpp"
#include "ucx/estimator.hpp"
#include "ucx/operator_basis.hpp"
#include "ucx/program_model.hpp"
#include "ucx/random_unitary.hpp"
#include "ucx/report_json.hpp"
#include "ucx/version.hpp"

namespace py = pybind11;

namespace {

using ComplexArray =
    py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

int infer_n(std::size_t dim) {
    for (int n = 1; n <= 16; ++n)
        if (ucx::qubit_dim(n) == dim) return n;
    throw ucx::DimensionError("dimension is not a power of two in [2, 2^16]");
}

ucx::ComplexMatrix matrix_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw ucx::DimensionError("matrix must be 2-D");
    const std::size_t rows = static_cast<std::size_t>(arr.shape(0));
    const std::size_t cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<ucx::Complex> entries(rows * cols);
    auto view = arr.unchecked<2>();
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            entries[r * cols + c] = view(static_cast<py::ssize_t>(r),
                                         static_cast<py::ssize_t>(c));
    return ucx::ComplexMatrix(rows, cols, std::move(entries));
}

ucx::UnitaryOperator unitary_from_array(const ComplexArray& arr, double tol) {
    ucx::ComplexMatrix m = matrix_from_array(arr);
    const int n = infer_n(m.rows());
    return ucx::UnitaryOperator(n, std::move(m), tol);
}

ucx::PureState state_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 1) throw ucx::DimensionError("state must be 1-D");
    const std::size_t dim = static_cast<std::size_t>(arr.shape(0));
    std::vector<ucx::Complex> amps(dim);
    auto view = arr.unchecked<1>();
    for (std::size_t i = 0; i < dim; ++i)
        amps[i] = view(static_cast<py::ssize_t>(i));
    return ucx::PureState(infer_n(dim), std::move(amps));
}

py::array matrix_to_array(const ucx::ComplexMatrix& m) {
    py::array_t<std::complex<double>> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m.at(r, c);
    return out;
}

py::array state_to_array(const ucx::PureState& s) {
    py::array_t<std::complex<double>> out(s.dim());
    auto view = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < s.dim(); ++i)
        view(static_cast<py::ssize_t>(i)) = s.amplitudes()[i];
    return out;
}

py::object json_to_py(const ucx::Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(py::str(j.dump()));
}

ucx::Budget make_budget(int budget_bits, std::optional<int> max_instructions,
                        std::optional<double> time_limit) {
    ucx::Budget b;
    b.max_program_bits = budget_bits;
    b.max_circuit_instructions = max_instructions;
    b.time_limit_seconds = time_limit;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounded-enumeration complexity estimates for n-qubit unitaries";
    m.attr("__version__") = ucx::kToolVersion;
    m.attr("REPORT_SCHEMA") = ucx::kReportSchema;

    py::register_exception<ucx::Error>(m, "UcxError");

    m.def(
        "pauli_labels",
        [](int n) {
            const ucx::OperatorBasis basis = ucx::pauli_basis(n);
            return basis.labels;
        },
        py::arg("n"));

    m.def(
        "pauli_matrix",
        [](int n, unsigned label) {
            return matrix_to_array(ucx::pauli_string_for_label(n, label));
        },
        py::arg("n"), py::arg("label"));

    m.def(
        "decompose",
        [](const ComplexArray& matrix) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            return ucx::decompose(u.matrix(), ucx::pauli_basis(u.n()));
        },
        py::arg("matrix"), "Pauli-basis coefficients <e_i, U> in label order");

    m.def(
        "ensemble",
        [](const ComplexArray& matrix) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            return ucx::ensemble_from_projection(u, ucx::pauli_basis(u.n()))
                .probabilities;
        },
        py::arg("matrix"), "Projection probabilities |<e_i, U>|^2 in label order");

    m.def(
        "shannon_fano_lengths",
        [](const std::vector<double>& probs) {
            ucx::ProbabilityEnsemble ens;
            ens.probabilities = probs;
            py::list out;
            for (int l : ucx::shannon_fano_lengths(ens)) {
                if (l == ucx::kSkipLength)
                    out.append(py::none());
                else
                    out.append(l);
            }
            return out;
        },
        py::arg("probabilities"));

    m.def(
        "kraft_sum",
        [](const std::vector<int>& lengths_in) {
            std::vector<int> lengths;
            for (int l : lengths_in) lengths.push_back(l);
            const ucx::KraftSum k = ucx::verify_kraft(lengths);
            py::dict out;
            out["numerator"] = k.numerator;
            out["denominator"] = k.denominator;
            out["less_equal_one"] = k.less_equal_one;
            out["equal_one"] = k.equal_one;
            return out;
        },
        py::arg("lengths"), "Exact Kraft sum; use -1 for skipped symbols");

    m.def(
        "codewords",
        [](const std::vector<int>& lengths) {
            py::list out;
            for (const ucx::BitString& w : ucx::assign_codewords(lengths)) {
                if (w.empty())
                    out.append(py::none());
                else
                    out.append(w.to_string01());
            }
            return out;
        },
        py::arg("lengths"), "Canonical prefix codewords as 0/1 strings");

    m.def(
        "estimate_complexity",
        [](const ComplexArray& matrix, int budget_bits,
           std::optional<int> max_instructions, std::optional<double> time_limit) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            const ucx::Machine machine(u.n(), ucx::GateSet::default_set());
            const ucx::ComplexityReport report = ucx::estimate_unitary_complexity(
                u, machine, make_budget(budget_bits, max_instructions, time_limit));
            return json_to_py(ucx::complexity_report_to_json(report, machine));
        },
        py::arg("matrix"), py::arg("budget_bits") = 14,
        py::arg("max_instructions") = py::none(), py::arg("time_limit") = py::none());

    m.def(
        "estimate_state_complexity",
        [](const ComplexArray& amplitudes, int budget_bits,
           std::optional<int> max_instructions, std::optional<double> time_limit) {
            const ucx::PureState x = state_from_array(amplitudes);
            const ucx::Machine machine(x.n(), ucx::GateSet::default_set());
            const ucx::ComplexityReport report = ucx::estimate_state_complexity(
                x, machine, make_budget(budget_bits, max_instructions, time_limit));
            return json_to_py(ucx::complexity_report_to_json(report, machine));
        },
        py::arg("amplitudes"), py::arg("budget_bits") = 14,
        py::arg("max_instructions") = py::none(), py::arg("time_limit") = py::none());

    m.def(
        "theorem1_check",
        [](const ComplexArray& matrix) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            const ucx::Machine machine(u.n(), ucx::GateSet::default_set());
            return json_to_py(ucx::theorem1_to_json(ucx::theorem1_check(u, machine)));
        },
        py::arg("matrix"));

    m.def(
        "relation",
        [](const ComplexArray& matrix, int budget_bits) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            const ucx::Machine machine(u.n(), ucx::GateSet::default_set());
            const ucx::StateUnitaryRelation rel = ucx::state_unitary_relation(
                u, machine, make_budget(budget_bits, std::nullopt, std::nullopt));
            return json_to_py(ucx::relation_to_json(rel, machine));
        },
        py::arg("matrix"), py::arg("budget_bits") = 14);

    m.def(
        "is_directly_computable",
        [](const ComplexArray& matrix, int budget_bits) {
            const ucx::UnitaryOperator u = unitary_from_array(matrix, ucx::kUnitarityTol);
            const ucx::Machine machine(u.n(), ucx::GateSet::default_set());
            return ucx::is_directly_computable(
                u, machine, make_budget(budget_bits, std::nullopt, std::nullopt));
        },
        py::arg("matrix"), py::arg("budget_bits") = 14);

    m.def(
        "enumerate_programs",
        [](int n, int max_bits, const std::string& mode) {
            const ucx::Machine machine(n, ucx::GateSet::default_set());
            ucx::EnumerationOptions eo;
            eo.max_bits = max_bits;
            if (mode == "all") {
                eo.include_state_basis_index = true;
            } else if (mode == "unitary") {
                eo.include_state_basis_index = false;
            } else if (mode == "state") {
                eo.include_basis_index = false;
                eo.include_state_basis_index = true;
            } else {
                throw ucx::ConfigError("mode must be all, unitary, or state");
            }
            py::list out;
            for (const ucx::Program& p : ucx::enumerate_programs(machine, eo))
                out.append(json_to_py(ucx::program_to_json(p, machine)));
            return out;
        },
        py::arg("n"), py::arg("max_bits"), py::arg("mode") = "all");

    m.def(
        "fidelity",
        [](const ComplexArray& a, const ComplexArray& b) {
            ucx::ComplexMatrix ma = matrix_from_array(a);
            ucx::ComplexMatrix mb = matrix_from_array(b);
            const int n = infer_n(ma.rows());
            return ucx::fidelity_matrices(ma, mb, n);
        },
        py::arg("a"), py::arg("b"), "|<A,B>|^2 under the normalized HS inner product");

    m.def(
        "penalty_from_fidelity",
        [](double fidelity) -> py::object {
            const std::optional<int> p = ucx::penalty_from_fidelity(fidelity);
            if (!p) return py::none();
            return py::int_(*p);
        },
        py::arg("fidelity"));

    m.def(
        "haar_unitary",
        [](int n, std::uint64_t seed) {
            return matrix_to_array(ucx::haar_random_unitary(n, seed).matrix());
        },
        py::arg("n"), py::arg("seed"));

    m.def(
        "haar_state",
        [](int n, std::uint64_t seed) {
            return state_to_array(ucx::haar_random_state(n, seed));
        },
        py::arg("n"), py::arg("seed"));
}
