#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace z2k {

/// Throws InvalidModulus unless `modulus` is even and at least 2.
inline void require_even_modulus(int modulus) {
    if (modulus < 2 || modulus % 2 != 0)
        throw InvalidModulus("modulus must be even and >= 2, got " + std::to_string(modulus));
}

/// Element of Z_{2k}, stored canonically in [0, modulus).
class Residue {
public:
    Residue(long long value, int modulus) : modulus_(modulus) {
        require_even_modulus(modulus);
        long long r = value % modulus;
        if (r < 0) r += modulus;
        value_ = static_cast<int>(r);
    }

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return modulus_; }
    int half() const noexcept { return modulus_ / 2; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    int value_ = 0;
    int modulus_ = 2;
};

namespace detail {
inline void same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("residues over Z_" + std::to_string(a.modulus()) + " and Z_" +
                              std::to_string(b.modulus()));
}
}  // namespace detail

inline Residue residue_add(const Residue& a, const Residue& b) {
    detail::same_modulus(a, b);
    return Residue(a.value() + b.value(), a.modulus());
}

inline Residue residue_negate(const Residue& a) { return Residue(-a.value(), a.modulus()); }

inline Residue residue_sub(const Residue& a, const Residue& b) {
    detail::same_modulus(a, b);
    return Residue(a.value() - b.value(), a.modulus());
}

inline Residue operator+(const Residue& a, const Residue& b) { return residue_add(a, b); }
inline Residue operator-(const Residue& a, const Residue& b) { return residue_sub(a, b); }
inline Residue operator-(const Residue& a) { return residue_negate(a); }

/// Lee weight of a canonical value modulo `modulus`: min(v, modulus - v).
constexpr int lee_weight(int value, int modulus) noexcept {
    return std::min(value, modulus - value);
}

inline int lee_weight(const Residue& a) noexcept { return lee_weight(a.value(), a.modulus()); }

inline int lee_distance(const Residue& a, const Residue& b) { return lee_weight(residue_sub(a, b)); }

/// Element of Z_{2k}^n. Coordinates are canonical values in [0, modulus).
class ZkVector {
public:
    ZkVector(int modulus, std::vector<int> coords) : modulus_(modulus), coords_(std::move(coords)) {
        require_even_modulus(modulus_);
        if (coords_.empty()) throw LengthMismatch("ZkVector must have length >= 1");
        for (int& c : coords_) {
            if (c < 0 || c >= modulus_)
                throw OutOfRange("coordinate " + std::to_string(c) + " outside [0, " +
                                 std::to_string(modulus_) + ")");
        }
    }

    static ZkVector zero(int modulus, std::size_t length) {
        return ZkVector(modulus, std::vector<int>(length, 0));
    }

    int modulus() const noexcept { return modulus_; }
    int half() const noexcept { return modulus_ / 2; }
    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    std::span<const int> coords() const noexcept { return coords_; }
    Residue at(std::size_t i) const { return Residue(coords_.at(i), modulus_); }

    bool is_zero() const noexcept {
        return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
    }

    friend bool operator==(const ZkVector&, const ZkVector&) = default;
    friend auto operator<=>(const ZkVector& a, const ZkVector& b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.coords_ <=> b.coords_;
    }

private:
    int modulus_;
    std::vector<int> coords_;
};

namespace detail {
inline void same_shape(const ZkVector& u, const ZkVector& v) {
    if (u.modulus() != v.modulus())
        throw ModulusMismatch("vectors over Z_" + std::to_string(u.modulus()) + " and Z_" +
                              std::to_string(v.modulus()));
    if (u.size() != v.size())
        throw LengthMismatch("vector lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
}
}  // namespace detail

inline ZkVector vector_add(const ZkVector& u, const ZkVector& v) {
    detail::same_shape(u, v);
    std::vector<int> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = (u[i] + v[i]) % u.modulus();
    return ZkVector(u.modulus(), std::move(out));
}

inline ZkVector vector_negate(const ZkVector& u) {
    std::vector<int> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = (u.modulus() - u[i]) % u.modulus();
    return ZkVector(u.modulus(), std::move(out));
}

inline ZkVector vector_sub(const ZkVector& u, const ZkVector& v) { return vector_add(u, vector_negate(v)); }

inline ZkVector operator+(const ZkVector& u, const ZkVector& v) { return vector_add(u, v); }
inline ZkVector operator-(const ZkVector& u) { return vector_negate(u); }
inline ZkVector operator-(const ZkVector& u, const ZkVector& v) { return vector_sub(u, v); }

inline int vector_lee_weight(const ZkVector& u) noexcept {
    int w = 0;
    for (int c : u.coords()) w += lee_weight(c, u.modulus());
    return w;
}

inline int vector_lee_distance(const ZkVector& u, const ZkVector& v) { return vector_lee_weight(u - v); }

/// Symbol (Hamming) weight over Z_{2k}: number of nonzero coordinates.
inline int vector_symbol_weight(const ZkVector& u) noexcept {
    return static_cast<int>(std::count_if(u.coords().begin(), u.coords().end(), [](int c) { return c != 0; }));
}

}  // namespace z2k
