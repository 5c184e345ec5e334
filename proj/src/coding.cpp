#include "ucx/coding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucx/core_linalg.hpp"
#include "ucx/errors.hpp"
#include "ucx/operator_basis.hpp"

namespace ucx {

using boost::multiprecision::cpp_int;

void validate_ensemble(const ProbabilityEnsemble& ensemble, double tol) {
    if (ensemble.probabilities.empty())
        throw ValidationError("probability ensemble is empty");
    if (!ensemble.labels.empty() &&
        ensemble.labels.size() != ensemble.probabilities.size())
        throw ValidationError("label count does not match probability count");
    double sum = 0.0;
    for (double p : ensemble.probabilities) {
        if (!std::isfinite(p)) throw ValidationError("probability is not finite");
        if (p < 0.0) throw ValidationError("probability is negative");
        if (p > 1.0 + 1e-12) throw ValidationError("probability exceeds 1");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
        throw ValidationError("probabilities do not sum to 1");
}

ProbabilityEnsemble ensemble_from_projection(const UnitaryOperator& a,
                                             const OperatorBasis& basis) {
    if (a.n() != basis.n)
        throw DimensionError("unitary and basis qubit counts differ");
    ProbabilityEnsemble ensemble;
    ensemble.probabilities.reserve(basis.size());
    ensemble.labels = basis.labels;
    for (const ComplexMatrix& e : basis.elements) {
        double p = std::norm(hs_inner_normalized(e, a.matrix(), basis.n));
        if (p > 1.0 && p <= 1.0 + 1e-9) p = 1.0;
        ensemble.probabilities.push_back(p);
    }
    validate_ensemble(ensemble);
    return ensemble;
}

int ceil_neg_log2_snapped(double p) {
    if (!(p > 0.0)) throw InternalError("ceil_neg_log2_snapped requires p > 0");
    const double raw = -std::log2(p);
    // Snap to an exact dyadic if p is within tolerance of 2^-k.
    const double k = std::round(raw);
    if (k >= 0.0 && k <= kMaxCodeLength && std::abs(p - std::exp2(-k)) <= kDyadicSnapTol)
        return static_cast<int>(k);
    return static_cast<int>(std::ceil(raw));
}

int shannon_fano_length(double p) {
    int len = ceil_neg_log2_snapped(p);
    if (len < 1) len = 1;
    if (len > kMaxCodeLength) len = kMaxCodeLength;
    return len;
}

std::vector<int> shannon_fano_lengths(const ProbabilityEnsemble& ensemble) {
    validate_ensemble(ensemble);
    std::vector<int> lengths;
    lengths.reserve(ensemble.probabilities.size());
    for (double p : ensemble.probabilities) {
        if (p <= 0.0 || p < kMinCodableProbability) {
            lengths.push_back(kSkipLength);
        } else {
            lengths.push_back(shannon_fano_length(p));
        }
    }
    return lengths;
}

KraftSum verify_kraft(const std::vector<int>& lengths) {
    int max_len = 0;
    for (int l : lengths) {
        if (l == kSkipLength) continue;
        if (l < 1 || l > kMaxCodeLength)
            throw ValidationError("codeword length out of range");
        max_len = std::max(max_len, l);
    }
    // Sum of 2^-l as numerator over 2^max_len.
    cpp_int num = 0;
    cpp_int den = cpp_int(1) << max_len;
    for (int l : lengths) {
        if (l == kSkipLength) continue;
        num += cpp_int(1) << (max_len - l);
    }
    if (max_len == 0) {
        num = 0;
        den = 1;
    }
    cpp_int g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    KraftSum out;
    out.numerator = num.str();
    out.denominator = den.str();
    out.less_equal_one = num <= den;
    out.equal_one = num == den;
    return out;
}

std::vector<BitString> assign_codewords(const std::vector<int>& lengths) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] != kSkipLength) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
        return a < b;
    });

    KraftSum kraft = verify_kraft(lengths);
    if (!kraft.less_equal_one)
        throw ValidationError("Kraft sum exceeds 1; lengths are not codable");

    std::vector<BitString> codewords(lengths.size());
    // Canonical assignment: counter advances by 1 per codeword, shifted left
    // whenever the length grows.
    cpp_int counter = 0;
    int prev_len = 0;
    bool first = true;
    for (std::size_t idx : order) {
        const int l = lengths[idx];
        if (first) {
            counter = 0;
            first = false;
        } else {
            counter += 1;
            counter <<= (l - prev_len);
        }
        BitString w;
        for (int b = l - 1; b >= 0; --b)
            w.push_back(boost::multiprecision::bit_test(counter, static_cast<unsigned>(b)));
        codewords[idx] = std::move(w);
        prev_len = l;
    }
    return codewords;
}

PrefixCode build_prefix_code(const ProbabilityEnsemble& ensemble) {
    PrefixCode code;
    code.lengths = shannon_fano_lengths(ensemble);
    code.kraft = verify_kraft(code.lengths);
    code.codewords = assign_codewords(code.lengths);
    return code;
}

BitString encode_index(const PrefixCode& code, std::size_t index) {
    if (index >= code.lengths.size())
        throw ValidationError("symbol index out of range");
    if (code.lengths[index] == kSkipLength)
        throw ValidationError("symbol has no codeword (probability too small)");
    return code.codewords[index];
}

std::size_t decode_index(const PrefixCode& code, BitReader& reader) {
    BitString seen;
    const std::size_t limit = static_cast<std::size_t>(kMaxCodeLength);
    while (seen.size() <= limit) {
        seen.push_back(reader.read_bit());
        for (std::size_t i = 0; i < code.codewords.size(); ++i) {
            if (code.lengths[i] == kSkipLength) continue;
            if (code.codewords[i] == seen) return i;
        }
    }
    throw DecodeError("no codeword matches the input bits");
}

}  // namespace ucx
