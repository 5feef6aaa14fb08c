#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "binary_word.hpp"
#include "core_algebra.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace z2k {

/// The Gray map Z_{2k} -> F_2^k:
///   phi(i)     = (0^(k-i) | 1^i)    for 0 <= i < k
///   phi(i + k) = phi(i) + 1^k       for 0 <= i < k
/// Consecutive residues (cyclically) map to words at Hamming distance 1, and
/// wt(phi(i)) equals the Lee weight of i.
inline BinaryWord phi(int j, int k) {
    if (k < 1) throw InvalidModulus("k must be >= 1");
    if (j < 0 || j >= 2 * k) throw OutOfRange("residue " + std::to_string(j) + " outside Z_" + std::to_string(2 * k));
    BinaryWord w(static_cast<std::size_t>(k));
    const int i = j % k;
    for (int p = k - i; p < k; ++p) w.set(static_cast<std::size_t>(p), true);
    if (j >= k) w ^= BinaryWord::ones(static_cast<std::size_t>(k));
    return w;
}

inline BinaryWord phi(const Residue& r) { return phi(r.value(), r.half()); }

/// sigma_j on k positions: j cyclic left shifts, (x_1,...,x_k) -> (x_{1+j},...,x_k,x_1,...,x_j).
/// Equals the j-th power of the cycle (1, k, k-1, ..., 2) in destination
/// convention; sigma_{j+k} = sigma_j.
inline CoordinatePermutation sigma(int j, int k) {
    if (k < 1) throw OutOfRange("k must be >= 1");
    const auto n = static_cast<std::size_t>(k);
    const auto shift = static_cast<std::size_t>(((j % k) + k) % k);
    std::vector<std::size_t> images(n);
    for (std::size_t q = 0; q < n; ++q) images[q] = (q + n - shift) % n;
    return CoordinatePermutation(std::move(images));
}

/// Precomputed phi for one k: entries[j] = phi(j).
class GrayTable {
public:
    explicit GrayTable(int k) : k_(k) {
        if (k < 1) throw OutOfRange("k must be >= 1");
        entries_.reserve(static_cast<std::size_t>(2 * k));
        for (int j = 0; j < 2 * k; ++j) {
            entries_.push_back(phi(j, k));
            index_.emplace(entries_.back(), j);
        }
    }

    int k() const noexcept { return k_; }
    int modulus() const noexcept { return 2 * k_; }
    const std::vector<BinaryWord>& entries() const noexcept { return entries_; }
    const BinaryWord& operator[](int j) const { return entries_.at(static_cast<std::size_t>(j)); }

    /// Residue j with phi(j) == w, or -1.
    int find(const BinaryWord& w) const {
        auto it = index_.find(w);
        return it == index_.end() ? -1 : it->second;
    }

private:
    int k_;
    std::vector<BinaryWord> entries_;
    std::unordered_map<BinaryWord, int, BinaryWordHash> index_;
};

/// Shared, lazily built table for k. Thread-safe; the reference stays valid
/// for the lifetime of the program.
inline const GrayTable& gray_table(int k) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const GrayTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot) slot = std::make_unique<const GrayTable>(k);
    return *slot;
}

inline Residue phi_inverse(const BinaryWord& w) {
    if (w.empty()) throw NotInImage("empty word");
    const int k = static_cast<int>(w.size());
    const int j = gray_table(k).find(w);
    if (j < 0) throw NotInImage(w.to_string() + " is not in the image of phi for k=" + std::to_string(k));
    return Residue(j, 2 * k);
}

/// Product on phi(Z_{2k}): phi(i) . phi(j) = phi(i) + sigma_i(phi(j)).
inline BinaryWord gray_product(const BinaryWord& a, const BinaryWord& b) {
    a.require_same_length(b);
    const auto i = phi_inverse(a);
    return a ^ sigma(i.value(), i.half())(b);
}

/// Phi(j_1, ..., j_n) = (phi(j_1) | ... | phi(j_n)).
inline BinaryWord big_phi(const ZkVector& v) {
    const int k = v.half();
    const auto& table = gray_table(k);
    std::vector<std::uint8_t> bits;
    bits.reserve(v.size() * static_cast<std::size_t>(k));
    for (int c : v.coords()) {
        const auto& e = table[c].bits();
        bits.insert(bits.end(), e.begin(), e.end());
    }
    return BinaryWord(std::move(bits));
}

inline ZkVector big_phi_inverse(const BinaryWord& w, int k) {
    if (k < 1) throw OutOfRange("k must be >= 1");
    const auto kk = static_cast<std::size_t>(k);
    if (w.empty() || w.size() % kk != 0)
        throw LengthMismatch("word length " + std::to_string(w.size()) + " is not a positive multiple of k=" +
                             std::to_string(k));
    const auto& table = gray_table(k);
    std::vector<int> coords(w.size() / kk);
    for (std::size_t r = 0; r < coords.size(); ++r) {
        auto block = w.slice(r * kk, kk);
        const int j = table.find(block);
        if (j < 0)
            throw NotInImage("block " + std::to_string(r + 1) + " (" + block.to_string() + ") is not in the image of phi");
        coords[r] = j;
    }
    return ZkVector(2 * k, std::move(coords));
}

/// pi_x for x = Phi(v): sigma_{v_r} inside block r, blocks never mix.
inline CoordinatePermutation pi_x(const ZkVector& v) {
    const int k = v.half();
    std::vector<std::size_t> images;
    images.reserve(v.size() * static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < v.size(); ++r) {
        const auto s = sigma(v[r], k);
        for (auto p : s.images()) images.push_back(p + r * static_cast<std::size_t>(k));
    }
    return CoordinatePermutation(std::move(images));
}

/// Blockwise Phi on a product Z_{2i_1}^{k_1} x ... x Z_{2i_r}^{k_r}, blocks in
/// the given order.
inline BinaryWord mixed_phi(std::span<const ZkVector> blocks) {
    if (blocks.empty()) throw LengthMismatch("no blocks");
    BinaryWord out;
    for (const auto& b : blocks) out = concat(out, big_phi(b));
    return out;
}

inline CoordinatePermutation mixed_pi(std::span<const ZkVector> blocks) {
    if (blocks.empty()) throw LengthMismatch("no blocks");
    CoordinatePermutation out = CoordinatePermutation::identity(0);
    for (const auto& b : blocks) out = direct_sum(out, pi_x(b));
    return out;
}

}  // namespace z2k
