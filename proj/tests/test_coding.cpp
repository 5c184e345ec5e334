#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ucx/coding.hpp"
#include "ucx/core_linalg.hpp"
#include "ucx/errors.hpp"
#include "ucx/operator_basis.hpp"
#include "ucx/random_unitary.hpp"

using ucx::BitString;
using ucx::ComplexMatrix;
using ucx::kSkipLength;
using ucx::KraftSum;
using ucx::ProbabilityEnsemble;
using ucx::UnitaryOperator;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

UnitaryOperator hadamard() {
    return UnitaryOperator(
        1, ComplexMatrix(2, 2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}));
}

UnitaryOperator cnot() {
    return UnitaryOperator(
        2, ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
}

ProbabilityEnsemble ensemble_of(std::vector<double> probs) {
    ProbabilityEnsemble e;
    e.probabilities = std::move(probs);
    return e;
}

std::vector<std::string> words01(const std::vector<BitString>& words) {
    std::vector<std::string> out;
    for (const BitString& w : words) out.push_back(w.to_string01());
    return out;
}

}  // namespace

TEST_CASE("ensemble validation") {
    CHECK_NOTHROW(ucx::validate_ensemble(ensemble_of({0.5, 0.5})));
    CHECK_THROWS_AS(ucx::validate_ensemble(ensemble_of({})), ucx::ValidationError);
    CHECK_THROWS_AS(ucx::validate_ensemble(ensemble_of({-0.1, 1.1})),
                    ucx::ValidationError);
    CHECK_THROWS_AS(ucx::validate_ensemble(ensemble_of({0.4, 0.4})),
                    ucx::ValidationError);
    ProbabilityEnsemble bad = ensemble_of({0.5, 0.5});
    bad.labels = {"only-one"};
    CHECK_THROWS_AS(ucx::validate_ensemble(bad), ucx::ValidationError);
}

TEST_CASE("projection ensembles") {
    const ProbabilityEnsemble h = ucx::ensemble_from_projection(hadamard(),
                                                                ucx::pauli_basis(1));
    REQUIRE(h.probabilities.size() == 4);
    CHECK(h.labels == std::vector<std::string>{"I", "X", "Y", "Z"});
    CHECK(h.probabilities[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h.probabilities[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.probabilities[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h.probabilities[3] == doctest::Approx(0.5).epsilon(1e-12));

    const UnitaryOperator x(1, ucx::pauli_x());
    const ProbabilityEnsemble ex = ucx::ensemble_from_projection(x, ucx::pauli_basis(1));
    CHECK(ex.probabilities[1] == doctest::Approx(1.0).epsilon(1e-15));

    const ProbabilityEnsemble ec = ucx::ensemble_from_projection(cnot(),
                                                                 ucx::pauli_basis(2));
    for (std::size_t i = 0; i < 16; ++i) {
        const double expected =
            (i == 0 || i == 1 || i == 12 || i == 13) ? 0.25 : 0.0;
        CHECK(ec.probabilities[i] == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ucx::ensemble_from_projection(x, ucx::pauli_basis(2)),
                    ucx::DimensionError);
}

TEST_CASE("ceiling log with dyadic snap") {
    CHECK(ucx::ceil_neg_log2_snapped(1.0) == 0);
    CHECK(ucx::ceil_neg_log2_snapped(0.5) == 1);
    CHECK(ucx::ceil_neg_log2_snapped(0.25) == 2);
    CHECK(ucx::ceil_neg_log2_snapped(0.125) == 3);
    CHECK(ucx::ceil_neg_log2_snapped(0.3) == 2);
    CHECK(ucx::ceil_neg_log2_snapped(0.0009765625) == 10);
    CHECK(ucx::ceil_neg_log2_snapped(0.4999999999999999) == 1);
    CHECK(ucx::ceil_neg_log2_snapped(0.5000000000000001) == 1);
    CHECK(ucx::ceil_neg_log2_snapped(0.49) == 2);
    CHECK_THROWS_AS(ucx::ceil_neg_log2_snapped(0.0), ucx::InternalError);
}

TEST_CASE("shannon fano lengths floor at 1 and skip nulls") {
    CHECK(ucx::shannon_fano_length(1.0) == 1);
    CHECK(ucx::shannon_fano_length(0.6) == 1);
    CHECK(ucx::shannon_fano_lengths(ensemble_of({0.0, 0.5, 0.0, 0.5})) ==
          std::vector<int>{kSkipLength, 1, kSkipLength, 1});
    CHECK(ucx::shannon_fano_lengths(ensemble_of({1.0, 0.0, 0.0, 0.0})) ==
          std::vector<int>{1, kSkipLength, kSkipLength, kSkipLength});
    CHECK(ucx::shannon_fano_lengths(ensemble_of({0.25, 0.25, 0.25, 0.25})) ==
          std::vector<int>{2, 2, 2, 2});
    const std::vector<int> tiny =
        ucx::shannon_fano_lengths(ensemble_of({1.0 - 1e-40, 1e-40}));
    CHECK(tiny == std::vector<int>{1, kSkipLength});
}

TEST_CASE("kraft sums are exact reduced fractions") {
    KraftSum k = ucx::verify_kraft({1, 1});
    CHECK(k.numerator == "1");
    CHECK(k.denominator == "1");
    CHECK(k.equal_one);
    CHECK(k.less_equal_one);

    k = ucx::verify_kraft({2, 2, 2, 2});
    CHECK(k.equal_one);

    k = ucx::verify_kraft({1, 2, 3, 3});
    CHECK(k.equal_one);

    k = ucx::verify_kraft({1, 1, 2});
    CHECK(k.numerator == "5");
    CHECK(k.denominator == "4");
    CHECK_FALSE(k.less_equal_one);
    CHECK_FALSE(k.equal_one);

    k = ucx::verify_kraft({1, kSkipLength});
    CHECK(k.numerator == "1");
    CHECK(k.denominator == "2");
    CHECK(k.less_equal_one);
    CHECK_FALSE(k.equal_one);

    k = ucx::verify_kraft({kSkipLength, kSkipLength});
    CHECK(k.numerator == "0");
    CHECK(k.denominator == "1");
    CHECK(k.less_equal_one);

    k = ucx::verify_kraft({128, 128});
    CHECK(k.denominator == "170141183460469231731687303715884105728");

    CHECK_THROWS_AS(ucx::verify_kraft({0}), ucx::ValidationError);
    CHECK_THROWS_AS(ucx::verify_kraft({129}), ucx::ValidationError);
}

TEST_CASE("canonical codeword assignment") {
    CHECK(words01(ucx::assign_codewords({1, 2, 3, 3})) ==
          std::vector<std::string>{"0", "10", "110", "111"});
    CHECK(words01(ucx::assign_codewords({1, 1})) ==
          std::vector<std::string>{"0", "1"});
    CHECK(words01(ucx::assign_codewords({2, 2, 2, 2})) ==
          std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(words01(ucx::assign_codewords({kSkipLength, 1, kSkipLength, 1})) ==
          std::vector<std::string>{"", "0", "", "1"});
    CHECK(words01(ucx::assign_codewords({3, 1, 2})) ==
          std::vector<std::string>{"110", "0", "10"});
    CHECK_THROWS_AS(ucx::assign_codewords({1, 1, 2}), ucx::ValidationError);
}

TEST_CASE("prefix code round trip") {
    const ProbabilityEnsemble e = ensemble_of({0.0, 0.5, 0.0, 0.5});
    const ucx::PrefixCode code = ucx::build_prefix_code(e);
    CHECK(code.kraft.equal_one);
    CHECK(ucx::encode_index(code, 1).to_string01() == "0");
    CHECK(ucx::encode_index(code, 3).to_string01() == "1");
    CHECK_THROWS_AS(ucx::encode_index(code, 0), ucx::ValidationError);

    BitString stream;
    stream.append(ucx::encode_index(code, 1));
    stream.append(ucx::encode_index(code, 3));
    stream.append(ucx::encode_index(code, 1));
    ucx::BitReader reader(stream);
    CHECK(ucx::decode_index(code, reader) == 1);
    CHECK(ucx::decode_index(code, reader) == 3);
    CHECK(ucx::decode_index(code, reader) == 1);
    CHECK(reader.remaining() == 0);
}

TEST_CASE("decode rejects streams outside the code") {
    const ucx::PrefixCode code = ucx::build_prefix_code(ensemble_of({0.3, 0.3, 0.4}));
    CHECK_FALSE(code.kraft.equal_one);
    const BitString bad = BitString::from_string01("11");
    ucx::BitReader r(bad);
    CHECK_THROWS_AS(ucx::decode_index(code, r), ucx::DecodeError);
}

TEST_CASE("codes stay within two bits of entropy") {
    auto check_gap = [](const ProbabilityEnsemble& e) {
        const std::vector<int> lengths = ucx::shannon_fano_lengths(e);
        double expected = 0.0;
        double entropy = 0.0;
        for (std::size_t i = 0; i < e.probabilities.size(); ++i) {
            const double p = e.probabilities[i];
            if (p <= 0.0 || lengths[i] == kSkipLength) continue;
            expected += p * lengths[i];
            entropy -= p * std::log2(p);
        }
        CHECK(expected < entropy + 2.0);
    };
    check_gap(ucx::ensemble_from_projection(hadamard(), ucx::pauli_basis(1)));
    check_gap(ucx::ensemble_from_projection(cnot(), ucx::pauli_basis(2)));
    for (int seed = 1; seed <= 5; ++seed) {
        const UnitaryOperator u = ucx::haar_random_unitary(2, seed);
        check_gap(ucx::ensemble_from_projection(u, ucx::pauli_basis(2)));
    }
}
