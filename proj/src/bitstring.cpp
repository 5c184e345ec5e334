#include "ucx/bitstring.hpp"

#include <bit>
#include <stdexcept>

#include "ucx/errors.hpp"

namespace ucx {

BitString BitString::from_string01(const std::string& s) {
    BitString out;
    for (char c : s) {
        if (c == '0') out.push_back(false);
        else if (c == '1') out.push_back(true);
        else throw ParseError("bit string may contain only '0' and '1'");
    }
    return out;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes_.size() * 2);
    for (uint8_t b : bytes_) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

BitString BitString::from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() % 2 != 0)
        throw ParseError("hex bit string must have an even number of digits");
    std::vector<uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw ParseError("invalid hex digit in bit string");
    };
    for (std::size_t i = 0; i < hex.size(); i += 2)
        bytes.push_back(static_cast<uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
    if (nbits > bytes.size() * 8)
        throw ParseError("bit length exceeds hex payload");
    BitString out;
    out.bytes_ = std::move(bytes);
    out.nbits_ = nbits;
    // Clear padding bits so equality and hashing stay canonical.
    if (nbits & 7) {
        uint8_t mask = static_cast<uint8_t>(0xff << (8 - (nbits & 7)));
        out.bytes_[nbits >> 3] &= mask;
    }
    for (std::size_t i = (nbits + 7) / 8; i < out.bytes_.size(); ++i) out.bytes_[i] = 0;
    out.bytes_.resize((nbits + 7) / 8);
    return out;
}

bool BitReader::read_bit() {
    if (pos_ >= bits_->size()) throw DecodeError("bit stream truncated");
    return bits_->bit(pos_++);
}

std::uint64_t BitReader::read_bits(int width) {
    if (width < 0 || width > 64) throw InternalError("read_bits width out of range");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
    return v;
}

void append_elias_gamma(BitString& out, std::uint64_t value) {
    if (value == 0) throw InternalError("Elias gamma is defined for values >= 1");
    const int floor_log = 63 - std::countl_zero(value);
    for (int i = 0; i < floor_log; ++i) out.push_back(false);
    out.append_bits(value, floor_log + 1);
}

std::uint64_t read_elias_gamma(BitReader& reader) {
    int zeros = 0;
    while (!reader.read_bit()) {
        if (++zeros > 63) throw DecodeError("Elias gamma prefix too long");
    }
    std::uint64_t v = 1;
    for (int i = 0; i < zeros; ++i) v = (v << 1) | (reader.read_bit() ? 1u : 0u);
    return v;
}

int elias_gamma_length(std::uint64_t value) {
    if (value == 0) throw InternalError("Elias gamma is defined for values >= 1");
    const int floor_log = 63 - std::countl_zero(value);
    return 2 * floor_log + 1;
}

}  // namespace ucx
