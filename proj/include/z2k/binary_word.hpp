#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace z2k {

/// Fixed-length word over F_2. Position 1 (index 0) is the leftmost bit and is
/// written first when serialized; XOR is the group operation.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::size_t length) : bits_(length, 0) {}
    explicit BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto& b : bits_) b = b ? 1 : 0;
    }

    static BinaryWord from_string(std::string_view s) {
        BinaryWord w(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') w.bits_[i] = 1;
            else if (s[i] != '0') throw Error("not a bit string: '" + std::string(s) + "'");
        }
        return w;
    }

    /// Word of length n whose bits read as the binary expansion of `value`,
    /// most significant bit at position 1.
    static BinaryWord from_integer(std::uint64_t value, std::size_t length) {
        BinaryWord w(length);
        for (std::size_t i = 0; i < length; ++i) w.bits_[length - 1 - i] = (value >> i) & 1U;
        return w;
    }

    static BinaryWord ones(std::size_t length) { return BinaryWord(std::vector<std::uint8_t>(length, 1)); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool bit) { bits_.at(i) = bit ? 1 : 0; }
    void flip(std::size_t i) { bits_.at(i) ^= 1; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::size_t weight() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    bool is_zero() const noexcept { return weight() == 0; }

    std::uint64_t to_integer() const {
        if (bits_.size() > 64) throw OutOfRange("word longer than 64 bits");
        std::uint64_t v = 0;
        for (auto b : bits_) v = (v << 1) | b;
        return v;
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    BinaryWord& operator^=(const BinaryWord& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
        return *this;
    }

    friend BinaryWord operator^(BinaryWord a, const BinaryWord& b) { return a ^= b; }
    friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a ^= b; }

    /// Concatenation (x | y).
    friend BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
        BinaryWord out(a);
        out.bits_.insert(out.bits_.end(), b.bits_.begin(), b.bits_.end());
        return out;
    }

    BinaryWord slice(std::size_t offset, std::size_t length) const {
        if (offset + length > bits_.size()) throw OutOfRange("slice past end of word");
        return BinaryWord(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                                                    bits_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) {
        if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    void require_same_length(const BinaryWord& other) const {
        if (other.size() != size())
            throw LengthMismatch("word lengths " + std::to_string(size()) + " and " + std::to_string(other.size()));
    }

private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t hamming_distance(const BinaryWord& a, const BinaryWord& b) {
    a.require_same_length(b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

struct BinaryWordHash {
    std::size_t operator()(const BinaryWord& w) const noexcept {
        std::size_t h = w.size();
        for (auto b : w.bits()) h = h * 1099511628211ULL + b + 1;
        return h;
    }
};

}  // namespace z2k
