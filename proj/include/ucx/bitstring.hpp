#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ucx {

// Growable bit string, MSB-first within each byte. Bit 0 is the leftmost
// (most significant) bit of the stream.
class BitString {
public:
    BitString() = default;

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool bit(std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
    }

    void push_back(bool b) {
        if ((nbits_ & 7) == 0) bytes_.push_back(0);
        if (b) bytes_[nbits_ >> 3] |= static_cast<uint8_t>(1u << (7 - (nbits_ & 7)));
        ++nbits_;
    }

    // Appends the low `width` bits of value, most significant first.
    void append_bits(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) push_back((value >> i) & 1u);
    }

    void append(const BitString& other) {
        for (std::size_t i = 0; i < other.size(); ++i) push_back(other.bit(i));
    }

    bool operator==(const BitString& other) const {
        if (nbits_ != other.nbits_) return false;
        for (std::size_t i = 0; i < nbits_; ++i)
            if (bit(i) != other.bit(i)) return false;
        return true;
    }

    // Lexicographic comparison; for equal lengths this is the bits-as-integer
    // (big-endian) order.
    bool operator<(const BitString& other) const {
        const std::size_t common = nbits_ < other.nbits_ ? nbits_ : other.nbits_;
        for (std::size_t i = 0; i < common; ++i) {
            if (bit(i) != other.bit(i)) return other.bit(i);
        }
        return nbits_ < other.nbits_;
    }

    bool is_prefix_of(const BitString& other) const {
        if (nbits_ > other.nbits_) return false;
        for (std::size_t i = 0; i < nbits_; ++i)
            if (bit(i) != other.bit(i)) return false;
        return true;
    }

    std::string to_string01() const {
        std::string s;
        s.reserve(nbits_);
        for (std::size_t i = 0; i < nbits_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    static BitString from_string01(const std::string& s);

    // Hex of the byte-padded stream (MSB-first packing, zero padding at the
    // end). "0001" -> "10".
    std::string to_hex() const;
    static BitString from_hex(const std::string& hex, std::size_t nbits);

private:
    std::vector<uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

// Sequential reader over a BitString. Throws DecodeError past the end.
class BitReader {
public:
    explicit BitReader(const BitString& bits, std::size_t offset = 0)
        : bits_(&bits), pos_(offset) {}

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bits_->size() - pos_; }

    bool read_bit();
    std::uint64_t read_bits(int width);

private:
    const BitString* bits_;
    std::size_t pos_;
};

// Elias gamma code for integers >= 1: gamma(1) = "1", gamma(2) = "010", ...
void append_elias_gamma(BitString& out, std::uint64_t value);
std::uint64_t read_elias_gamma(BitReader& reader);
int elias_gamma_length(std::uint64_t value);

}  // namespace ucx
