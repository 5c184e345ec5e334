#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ucx/coding.hpp"
#include "ucx/core_linalg.hpp"
#include "ucx/errors.hpp"
#include "ucx/estimator.hpp"
#include "ucx/operator_basis.hpp"
#include "ucx/program_model.hpp"
#include "ucx/random_unitary.hpp"
#include "ucx/report_json.hpp"

using ucx::ComplexityReport;
using ucx::ComplexMatrix;
using ucx::Json;
using ucx::Machine;
using ucx::OperatorBasis;
using ucx::PrefixCode;
using ucx::ProbabilityEnsemble;
using ucx::Program;
using ucx::PureState;
using ucx::UnitaryOperator;

// Self-contained reimplementations used to cross-check the library. They share
// only the pinned constants with the library code paths.
namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

Mat make2(C a, C b, C c, C d) { return {{a, b}, {c, d}}; }

Mat identity(std::size_t dim) {
    Mat m(dim, std::vector<C>(dim, C(0)));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = C(1);
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    Mat out(ra * rb, std::vector<C>(ca * cb, C(0)));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

Mat matmul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat out(n, std::vector<C>(n, C(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Tr(A^dagger B) / 2^n as an elementwise sum.
C inner(const Mat& a, const Mat& b, int n) {
    C sum(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            sum += std::conj(a[i][j]) * b[i][j];
    return sum / C(std::exp2(n));
}

double fid(const Mat& a, const Mat& b, int n) { return std::norm(inner(a, b, n)); }

const Mat kI = make2(1, 0, 0, 1);
const Mat kX = make2(0, 1, 1, 0);
const Mat kY = make2(0, C(0, -1), C(0, 1), 0);
const Mat kZ = make2(1, 0, 0, -1);
const Mat kH = make2(1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
                     -1 / std::sqrt(2.0));
const Mat kT = make2(1, 0, 0, std::polar(1.0, std::acos(-1.0) / 4));

Mat pauli(int which) {
    switch (which) {
        case 0: return kI;
        case 1: return kX;
        case 2: return kY;
        default: return kZ;
    }
}

std::optional<int> penalty(double f) {
    if (f > 1.0) f = 1.0;
    if (f >= 1.0 - 1e-12) return 0;
    if (f < 2.938735877055719e-39) return std::nullopt;
    const double raw = -std::log2(f);
    const double k = std::round(raw);
    int pen;
    if (k >= 0.0 && k <= 128.0 && std::abs(f - std::exp2(-k)) <= 1e-12)
        pen = static_cast<int>(k);
    else
        pen = static_cast<int>(std::ceil(raw));
    if (pen < 0) pen = 0;
    if (pen > 128) pen = 128;
    return pen;
}

// Decodes a 0/1 string as a single-qubit unitary program over the built-in
// gate set (gate ids: 0 H, 1 T, 2 CNOT which cannot fit at n = 1). Returns
// the evaluated matrix only when the whole string is one valid program.
std::optional<Mat> decode_unitary_n1(const std::string& s) {
    if (s.size() < 2) return std::nullopt;
    std::size_t pos = 2;
    if (s[0] == '0' && s[1] == '0') {
        if (s.size() != 4) return std::nullopt;
        const int label = (s[2] - '0') * 2 + (s[3] - '0');
        return pauli(label);
    }
    if (s[0] == '0' && s[1] == '1') {
        std::size_t zeros = 0;
        while (pos < s.size() && s[pos] == '0') {
            ++zeros;
            ++pos;
        }
        if (pos >= s.size()) return std::nullopt;
        ++pos;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < zeros; ++i) {
            if (pos >= s.size()) return std::nullopt;
            count = count * 2 + static_cast<std::uint64_t>(s[pos] - '0');
            ++pos;
        }
        Mat u = kI;
        for (std::uint64_t k = 0; k < count; ++k) {
            if (pos + 2 > s.size()) return std::nullopt;
            const int id = (s[pos] - '0') * 2 + (s[pos + 1] - '0');
            pos += 2;
            if (id == 0)
                u = matmul(kH, u);
            else if (id == 1)
                u = matmul(kT, u);
            else
                return std::nullopt;
        }
        if (pos != s.size()) return std::nullopt;
        return u;
    }
    return std::nullopt;
}

// Minimum of length + penalty over every bit string of length 1..max_bits
// that decodes as a unitary program.
int brute_force_k_hat(const Mat& target, int max_bits) {
    int best = 1 << 30;
    for (int len = 1; len <= max_bits; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            std::string s(static_cast<std::size_t>(len), '0');
            for (int i = 0; i < len; ++i)
                if ((v >> (len - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
            const std::optional<Mat> u = decode_unitary_n1(s);
            if (!u) continue;
            const std::optional<int> pen = penalty(fid(*u, target, 1));
            if (!pen) continue;
            best = std::min(best, len + *pen);
        }
    }
    return best;
}

Mat from_library(const ComplexMatrix& m) {
    Mat out(m.rows(), std::vector<C>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
    return out;
}

}  // namespace oracle

namespace {

struct TrialSet {
    int n;
    std::vector<UnitaryOperator> unitaries;
    std::vector<ProbabilityEnsemble> pauli_ensembles;
    std::vector<ProbabilityEnsemble> gs_ensembles;
};

struct Suite {
    std::vector<std::string> lines;
    std::ostringstream digest;
    int failures = 0;
    std::vector<TrialSet> trials;

    void record(int index, const char* name, bool pass, const std::string& note) {
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
        if (!note.empty()) line << " (" << note << ")";
        lines.push_back(line.str());
        if (!pass) ++failures;
    }
};

Machine machine(int n) { return Machine(n, ucx::GateSet::default_set()); }

ucx::Budget budget(int bits) {
    ucx::Budget b;
    b.max_program_bits = bits;
    return b;
}

UnitaryOperator hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return UnitaryOperator(1, ComplexMatrix(2, 2, {s, s, s, -s}));
}

UnitaryOperator t_gate() {
    return UnitaryOperator(
        1, ComplexMatrix(2, 2, {1.0, 0.0, 0.0, std::polar(1.0, std::acos(-1.0) / 4)}));
}

UnitaryOperator cnot() {
    return UnitaryOperator(
        2, ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
}

constexpr int kTrialsPerN = 100;

std::uint64_t trial_seed(int n, int t) {
    return static_cast<std::uint64_t>(1000 * n + t);
}

double sum_probs(const ProbabilityEnsemble& e) {
    double s = 0.0;
    for (double p : e.probabilities) s += p;
    return s;
}

bool all_nonzero_dyadic(const ProbabilityEnsemble& e) {
    for (double p : e.probabilities) {
        if (p <= 0.0) continue;
        const double k = std::round(-std::log2(p));
        if (!(k >= 1.0 && k <= 128.0 && std::abs(p - std::exp2(-k)) <= 1e-12))
            return false;
    }
    return true;
}

void criterion1_parseval(Suite& suite) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        TrialSet set;
        set.n = n;
        const OperatorBasis pauli = ucx::pauli_basis(n);
        for (int t = 0; t < kTrialsPerN; ++t) {
            const UnitaryOperator u = ucx::haar_random_unitary(n, trial_seed(n, t));
            const OperatorBasis gs = ucx::gram_schmidt_with_seed(u.matrix(), n);
            const ProbabilityEnsemble ep = ucx::ensemble_from_projection(u, pauli);
            const ProbabilityEnsemble eg = ucx::ensemble_from_projection(u, gs);
            const double dev =
                std::max(std::abs(sum_probs(ep) - 1.0), std::abs(sum_probs(eg) - 1.0));
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-9;
            set.unitaries.push_back(u);
            set.pauli_ensembles.push_back(ep);
            set.gs_ensembles.push_back(eg);
        }
        suite.trials.push_back(std::move(set));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && elapsed < 30.0;
    suite.digest << "criterion1 worst_parseval_deviation=" << worst << "\n";
    std::ostringstream note;
    note << "max deviation " << worst << ", " << elapsed << " s";
    suite.record(1, "Parseval projection probabilities sum to 1", pass, note.str());
}

void criterion2_kraft(Suite& suite) {
    bool pass = true;
    auto check_one = [&](const ProbabilityEnsemble& e, const char* tag) {
        const std::vector<int> lengths = ucx::shannon_fano_lengths(e);
        const ucx::KraftSum k = ucx::verify_kraft(lengths);
        const bool expect_equal = all_nonzero_dyadic(e);
        const bool ok = k.less_equal_one && k.equal_one == expect_equal;
        pass = pass && ok;
        if (!ok)
            suite.digest << "criterion2 mismatch " << tag << " sum=" << k.numerator
                         << "/" << k.denominator << "\n";
    };
    for (const TrialSet& set : suite.trials) {
        for (std::size_t i = 0; i < set.pauli_ensembles.size(); ++i) {
            check_one(set.pauli_ensembles[i], "pauli");
            check_one(set.gs_ensembles[i], "gram-schmidt");
        }
    }

    const ProbabilityEnsemble eh =
        ucx::ensemble_from_projection(hadamard(), ucx::pauli_basis(1));
    const ucx::KraftSum kh = ucx::verify_kraft(ucx::shannon_fano_lengths(eh));
    pass = pass && kh.equal_one;
    const ProbabilityEnsemble ec =
        ucx::ensemble_from_projection(cnot(), ucx::pauli_basis(2));
    const ucx::KraftSum kc = ucx::verify_kraft(ucx::shannon_fano_lengths(ec));
    pass = pass && kc.equal_one;
    suite.digest << "criterion2 kraft_h=" << kh.numerator << "/" << kh.denominator
                 << " kraft_cnot=" << kc.numerator << "/" << kc.denominator << "\n";
    suite.record(2, "exact Kraft sums at most 1, equal iff dyadic", pass,
                 "H " + kh.numerator + "/" + kh.denominator + ", CNOT " +
                     kc.numerator + "/" + kc.denominator);
}

void criterion3_baseline_bounds(Suite& suite) {
    bool pass = true;
    int worst_k_hat_margin = 1 << 30;
    for (const TrialSet& set : suite.trials) {
        const int n = set.n;
        const Machine m = machine(n);
        for (const UnitaryOperator& u : set.unitaries) {
            const ucx::Theorem1Result t1 = ucx::theorem1_check(u, m);
            const ComplexityReport r =
                ucx::estimate_unitary_complexity(u, m, budget(2 * n + 2));
            const bool ok = t1.baseline_penalty <= 2 * n && t1.pass &&
                            r.k_hat <= 4 * n + 2 && r.bound_holds &&
                            t1.baseline_fidelity + 1e-9 >= std::exp2(-2.0 * n);
            pass = pass && ok;
            worst_k_hat_margin = std::min(worst_k_hat_margin, 4 * n + 2 - r.k_hat);
            if (!ok)
                suite.digest << "criterion3 violation n=" << n
                             << " k_hat=" << r.k_hat
                             << " penalty=" << t1.baseline_penalty << "\n";
        }
    }
    suite.digest << "criterion3 worst_margin=" << worst_k_hat_margin << "\n";
    suite.record(3, "baseline penalty <= 2n and k_hat <= 4n+2", pass,
                 "tightest slack " + std::to_string(worst_k_hat_margin) + " bits");
}

void criterion4_fixtures(Suite& suite) {
    bool pass = true;

    const ComplexMatrix h = hadamard().matrix();
    const std::vector<ucx::Complex> ch = ucx::decompose(h, ucx::pauli_basis(1));
    const oracle::Mat oh = oracle::from_library(h);
    const double expected_probs[4] = {0.0, 0.5, 0.0, 0.5};
    for (int i = 0; i < 4; ++i) {
        const oracle::C reference = oracle::inner(oracle::pauli(i), oh, 1);
        pass = pass && std::abs(ch[static_cast<std::size_t>(i)] - reference) <= 1e-12;
        pass = pass && std::abs(std::norm(reference) - expected_probs[i]) <= 1e-12;
    }

    const ComplexMatrix cx = cnot().matrix();
    const std::vector<ucx::Complex> cc = ucx::decompose(cx, ucx::pauli_basis(2));
    const oracle::Mat ocx = oracle::from_library(cx);
    for (unsigned label = 0; label < 16; ++label) {
        const oracle::Mat p = oracle::kron(oracle::pauli(static_cast<int>(label >> 2)),
                                           oracle::pauli(static_cast<int>(label & 3)));
        const oracle::C reference = oracle::inner(p, ocx, 2);
        const double expected = (label == 0 || label == 1 || label == 12)  ? 0.5
                                : (label == 13)                            ? -0.5
                                                                           : 0.0;
        pass = pass && std::abs(cc[label] - reference) <= 1e-12;
        pass = pass && std::abs(reference - oracle::C(expected)) <= 1e-12;
    }

    const UnitaryOperator x(1, ucx::pauli_x());
    const std::optional<int> px = ucx::penalty(x, hadamard());
    pass = pass && px == 1;
    pass = pass && oracle::penalty(oracle::fid(oracle::kX, oh, 1)) == 1;

    const UnitaryOperator zx(2, ucx::tensor(ucx::pauli_z(), ucx::pauli_x()));
    const std::optional<int> pzx = ucx::penalty(zx, cnot());
    pass = pass && pzx == 2;
    pass = pass &&
           oracle::penalty(oracle::fid(oracle::kron(oracle::kZ, oracle::kX), ocx, 2)) ==
               2;

    suite.digest << "criterion4 penalty_x_h=" << (px ? *px : -1)
                 << " penalty_zx_cnot=" << (pzx ? *pzx : -1) << "\n";
    suite.record(4, "fixture decompositions and penalties match the trace oracle",
                 pass, "");
}

void criterion5_direct(Suite& suite) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    const Machine m = machine(1);
    ucx::EnumerationOptions eo;
    eo.max_bits = 14;
    eo.include_state_basis_index = true;
    std::size_t checked = 0;
    for (const Program& p : ucx::enumerate_programs(m, eo)) {
        ComplexityReport r;
        if (ucx::program_mode(p.decoded) == ucx::ProgramMode::StateBasisIndex) {
            const PureState s = ucx::evaluate_state(p.decoded, m);
            r = ucx::estimate_state_complexity(s, m, budget(14));
        } else {
            const UnitaryOperator u(1, ucx::evaluate_unitary(p.decoded, m));
            r = ucx::estimate_unitary_complexity(u, m, budget(14));
        }
        const Json j = ucx::complexity_report_to_json(r, m);
        const bool ok = r.k_hat <= p.length() && r.directly_computable &&
                        r.direct_witness.has_value() &&
                        j["direct_witness"]["penalty"] == 0;
        pass = pass && ok;
        ++checked;
        if (!ok)
            suite.digest << "criterion5 violation bits=" << p.bits.to_string01()
                         << " k_hat=" << r.k_hat << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && elapsed < 60.0 && checked == 20;
    suite.digest << "criterion5 programs_checked=" << checked << "\n";
    std::ostringstream note;
    note << checked << " programs, " << elapsed << " s";
    suite.record(5, "every in-budget program is directly computable with k_hat <= l(p)",
                 pass, note.str());
}

void criterion6_oracle(Suite& suite) {
    bool pass = true;
    const Machine m = machine(1);

    std::vector<UnitaryOperator> targets;
    targets.push_back(UnitaryOperator(1, ComplexMatrix::identity(2)));
    targets.push_back(UnitaryOperator(1, ucx::pauli_x()));
    targets.push_back(UnitaryOperator(1, ucx::pauli_y()));
    targets.push_back(UnitaryOperator(1, ucx::pauli_z()));
    targets.push_back(hadamard());
    targets.push_back(t_gate());
    targets.push_back(UnitaryOperator(1, t_gate().matrix() * hadamard().matrix()));
    targets.push_back(UnitaryOperator(1, hadamard().matrix() * t_gate().matrix()));
    targets.push_back(UnitaryOperator(1, t_gate().matrix() * t_gate().matrix()));
    for (int s = 101; targets.size() < 20; ++s)
        targets.push_back(ucx::haar_random_unitary(1, static_cast<std::uint64_t>(s)));

    for (std::size_t i = 0; i < targets.size(); ++i) {
        const ComplexityReport r =
            ucx::estimate_unitary_complexity(targets[i], m, budget(12));
        const int expected =
            oracle::brute_force_k_hat(oracle::from_library(targets[i].matrix()), 12);
        const bool ok = r.k_hat == expected;
        pass = pass && ok;
        suite.digest << "criterion6 target=" << i << " k_hat=" << r.k_hat
                     << " oracle=" << expected << "\n";
    }
    suite.record(6, "estimator equals the brute-force bit string scan", pass,
                 "20 targets at 12 bits");
}

void criterion7_codec(Suite& suite) {
    bool pass = true;
    std::size_t tables = 0;

    auto check_code = [&](const ProbabilityEnsemble& e) {
        const PrefixCode code = ucx::build_prefix_code(e);
        ++tables;
        for (std::size_t i = 0; i < code.codewords.size(); ++i) {
            if (code.lengths[i] == ucx::kSkipLength) continue;
            for (std::size_t j = 0; j < code.codewords.size(); ++j) {
                if (i == j || code.lengths[j] == ucx::kSkipLength) continue;
                if (code.codewords[i].is_prefix_of(code.codewords[j])) pass = false;
            }
            const ucx::BitString bits = ucx::encode_index(code, i);
            ucx::BitReader reader(bits);
            if (ucx::decode_index(code, reader) != i) pass = false;
            if (reader.remaining() != 0) pass = false;
        }
    };

    for (const TrialSet& set : suite.trials) {
        for (std::size_t i = 0; i < set.pauli_ensembles.size(); ++i) {
            check_code(set.pauli_ensembles[i]);
            check_code(set.gs_ensembles[i]);
        }
    }
    check_code(ucx::ensemble_from_projection(hadamard(), ucx::pauli_basis(1)));
    check_code(ucx::ensemble_from_projection(cnot(), ucx::pauli_basis(2)));

    std::size_t programs = 0;
    for (int n = 1; n <= 2; ++n) {
        const Machine m = machine(n);
        ucx::EnumerationOptions eo;
        eo.max_bits = 16;
        eo.include_state_basis_index = true;
        const std::vector<Program> all = ucx::enumerate_programs(m, eo);
        programs += all.size();
        for (std::size_t i = 0; i < all.size(); ++i) {
            const Program back = ucx::decode_program_exact(all[i].bits, m);
            if (!(back.decoded == all[i].decoded) || !(back.bits == all[i].bits))
                pass = false;
            if (!(ucx::encode_program(all[i].decoded, m).bits == all[i].bits))
                pass = false;
            for (std::size_t j = 0; j < all.size(); ++j)
                if (i != j && all[i].bits.is_prefix_of(all[j].bits)) pass = false;
        }
    }

    suite.digest << "criterion7 tables=" << tables << " programs=" << programs << "\n";
    suite.record(7, "codeword tables and program encodings are prefix free and invert",
                 pass,
                 std::to_string(tables) + " tables, " + std::to_string(programs) +
                     " programs");
}

void criterion8_state_bound(Suite& suite) {
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        const Machine m = machine(n);
        for (int t = 0; t < kTrialsPerN; ++t) {
            const PureState x = ucx::haar_random_state(n, trial_seed(n, t) + 77);
            const ComplexityReport r =
                ucx::estimate_state_complexity(x, m, budget(2 * n + 2));
            const bool ok = r.k_hat <= 2 * n + 2 && r.bound_holds;
            pass = pass && ok;
            if (!ok)
                suite.digest << "criterion8 violation n=" << n << " k_hat=" << r.k_hat
                             << "\n";
        }
    }
    suite.digest << "criterion8 trials=" << 3 * kTrialsPerN << "\n";
    suite.record(8, "state complexity stays within 2n+2", pass,
                 std::to_string(3 * kTrialsPerN) + " random states");
}

void criterion9_relation(Suite& suite) {
    bool pass = true;
    std::size_t circuit_cases = 0;
    for (int n = 1; n <= 2; ++n) {
        const Machine m = machine(n);
        ucx::EnumerationOptions eo;
        eo.max_bits = 14;
        eo.include_basis_index = false;
        for (const Program& p : ucx::enumerate_programs(m, eo)) {
            const UnitaryOperator u(n, ucx::evaluate_unitary(p.decoded, m));
            const ucx::StateUnitaryRelation rel =
                ucx::state_unitary_relation(u, m, budget(14));
            const bool ok = rel.circuit_direct && rel.bound_checked &&
                            rel.gap <= 0 && rel.gap_nonpositive;
            pass = pass && ok;
            ++circuit_cases;
            if (!ok)
                suite.digest << "criterion9 violation bits=" << p.bits.to_string01()
                             << " gap=" << rel.gap << "\n";
        }
    }

    const Machine m2 = machine(2);
    const char* const required[] = {"unitary", "state",         "gap",
                                    "circuit_direct", "bound_checked", "gap_nonpositive"};
    for (int s = 0; s < 50; ++s) {
        const UnitaryOperator u = ucx::haar_random_unitary(2, 5000 + s);
        const ucx::StateUnitaryRelation rel =
            ucx::state_unitary_relation(u, m2, budget(10));
        const Json j = ucx::relation_to_json(rel, m2);
        for (const char* key : required)
            if (!j.contains(key)) pass = false;
        if (!j["unitary"].contains("k_hat") || !j["state"].contains("k_hat"))
            pass = false;
        suite.digest << "criterion9 haar_gap seed=" << 5000 + s << " gap=" << rel.gap
                     << "\n";
    }
    suite.record(9, "circuit-computable unitaries have nonpositive state gap", pass,
                 std::to_string(circuit_cases) + " circuit cases, 50 sampled gaps");
}

Suite run_suite() {
    Suite suite;
    criterion1_parseval(suite);
    criterion2_kraft(suite);
    criterion3_baseline_bounds(suite);
    criterion4_fixtures(suite);
    criterion5_direct(suite);
    criterion6_oracle(suite);
    criterion7_codec(suite);
    criterion8_state_bound(suite);
    criterion9_relation(suite);
    return suite;
}

}  // namespace

int main() {
    Suite first = run_suite();
    for (const std::string& line : first.lines) std::cout << line << "\n";

    Suite second = run_suite();
    const bool deterministic = first.digest.str() == second.digest.str();
    std::cout << (deterministic ? "PASS" : "FAIL")
              << "  criterion 10: repeated runs are byte identical ("
              << first.digest.str().size() << " digest bytes)\n";

    const int failures = first.failures + (deterministic ? 0 : 1);
    if (failures > 0) std::cout << failures << " criteria failed\n";
    return failures > 0 ? 1 : 0;
}
