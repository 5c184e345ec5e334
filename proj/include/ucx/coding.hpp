#pragma once

#include <string>
#include <vector>

#include "ucx/bitstring.hpp"

namespace ucx {

class UnitaryOperator;
struct OperatorBasis;

// Length assigned to symbols skipped by the coder (zero or sub-threshold
// probability).
inline constexpr int kSkipLength = -1;

// Longest codeword the coder will assign.
inline constexpr int kMaxCodeLength = 128;

// Probabilities below this are treated as zero.
// 2^-128.
inline constexpr double kMinCodableProbability = 2.938735877055719e-39;

// Window for snapping a probability to an exact dyadic 2^-k.
inline constexpr double kDyadicSnapTol = 1e-12;

struct ProbabilityEnsemble {
    std::vector<double> probabilities;
    std::vector<std::string> labels;  // optional; empty or same size
};

// Validates that probabilities are finite, nonnegative, and sum to 1 within
// `tol`. Throws ValidationError otherwise.
void validate_ensemble(const ProbabilityEnsemble& ensemble, double tol = 1e-9);

// probs_i = |<e_i, A>|^2 under the normalized inner product; unit vectors
// give a valid ensemble (Parseval).
ProbabilityEnsemble ensemble_from_projection(const UnitaryOperator& a,
                                             const OperatorBasis& basis);

// ceil(-log2 p) for p in (0, 1], snapping to k exactly when p is within
// kDyadicSnapTol of 2^-k. No clamping.
int ceil_neg_log2_snapped(double p);

// ceil(-log2 p) with dyadic snapping, clamped to [1, kMaxCodeLength].
int shannon_fano_length(double p);

// Per-symbol lengths; kSkipLength for p == 0 or p < kMinCodableProbability.
std::vector<int> shannon_fano_lengths(const ProbabilityEnsemble& ensemble);

// Exact Kraft sum of the non-skipped lengths, as a reduced fraction in
// decimal strings.
struct KraftSum {
    std::string numerator;
    std::string denominator;
    bool less_equal_one = false;
    bool equal_one = false;
};

KraftSum verify_kraft(const std::vector<int>& lengths);

// Canonical prefix code for the given lengths. Symbols with kSkipLength get
// empty codewords. Assignment order: length ascending, then original index.
std::vector<BitString> assign_codewords(const std::vector<int>& lengths);

struct PrefixCode {
    std::vector<int> lengths;
    std::vector<BitString> codewords;
    KraftSum kraft;
};

PrefixCode build_prefix_code(const ProbabilityEnsemble& ensemble);

// Codeword for symbol `index`; ValidationError if the symbol was skipped.
BitString encode_index(const PrefixCode& code, std::size_t index);

// Decodes one codeword starting at the reader position. DecodeError if no
// codeword matches.
std::size_t decode_index(const PrefixCode& code, BitReader& reader);

}  // namespace ucx
