#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "binary_word.hpp"
#include "errors.hpp"

namespace z2k {

/// Bijection on coordinate positions {0, ..., n-1} (position p is the 1-based
/// position p+1). `images()[p]` is the destination of position p, so a permutation acts
/// on words by out[images[p]] = w[p]. Composition `a * b` is a∘b: apply b first.
class CoordinatePermutation {
public:
    CoordinatePermutation() = default;

    explicit CoordinatePermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (auto p : images_) {
            if (p >= images_.size() || seen[p]) throw Error("not a bijection on coordinate positions");
            seen[p] = true;
        }
    }

    static CoordinatePermutation identity(std::size_t n) {
        std::vector<std::size_t> id(n);
        std::iota(id.begin(), id.end(), std::size_t{0});
        return CoordinatePermutation(unchecked{}, std::move(id));
    }

    /// Single cycle written with 1-based positions: (c1, c2, ..., cm) sends
    /// c1 -> c2 -> ... -> cm -> c1, fixing every other position.
    static CoordinatePermutation from_cycle(std::size_t n, const std::vector<std::size_t>& cycle) {
        auto out = identity(n);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            auto from = cycle[i];
            auto to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > n || to < 1 || to > n) throw OutOfRange("cycle entry outside 1..n");
            out.images_[from - 1] = to - 1;
        }
        return CoordinatePermutation(out.images_);
    }

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator[](std::size_t p) const { return images_[p]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    bool is_identity() const noexcept {
        for (std::size_t p = 0; p < images_.size(); ++p)
            if (images_[p] != p) return false;
        return true;
    }

    BinaryWord apply(const BinaryWord& w) const {
        if (w.size() != images_.size())
            throw LengthMismatch("permutation on " + std::to_string(images_.size()) + " positions applied to word of length " +
                                 std::to_string(w.size()));
        BinaryWord out(w.size());
        for (std::size_t p = 0; p < images_.size(); ++p) out.set(images_[p], w[p]);
        return out;
    }

    BinaryWord operator()(const BinaryWord& w) const { return apply(w); }

    CoordinatePermutation inverse() const {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t p = 0; p < images_.size(); ++p) inv[images_[p]] = p;
        return CoordinatePermutation(unchecked{}, std::move(inv));
    }

    /// a∘b: position p goes to a[b[p]].
    friend CoordinatePermutation operator*(const CoordinatePermutation& a, const CoordinatePermutation& b) {
        if (a.size() != b.size()) throw LengthMismatch("composing permutations of different degree");
        std::vector<std::size_t> out(a.size());
        for (std::size_t p = 0; p < out.size(); ++p) out[p] = a.images_[b.images_[p]];
        return CoordinatePermutation(unchecked{}, std::move(out));
    }

    CoordinatePermutation pow(long long e) const {
        auto base = e < 0 ? inverse() : *this;
        auto result = identity(size());
        for (long long i = 0; i < (e < 0 ? -e : e); ++i) result = base * result;
        return result;
    }

    /// Direct sum (a | b): a acts on the first a.size() positions, b on the rest.
    friend CoordinatePermutation direct_sum(const CoordinatePermutation& a, const CoordinatePermutation& b) {
        std::vector<std::size_t> out(a.images_);
        out.reserve(a.size() + b.size());
        for (auto p : b.images_) out.push_back(p + a.size());
        return CoordinatePermutation(unchecked{}, std::move(out));
    }

    friend bool operator==(const CoordinatePermutation&, const CoordinatePermutation&) = default;
    friend auto operator<=>(const CoordinatePermutation&, const CoordinatePermutation&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t p = 0; p < images_.size(); ++p) {
            if (p) s += ',';
            s += std::to_string(images_[p] + 1);
        }
        return s + "]";
    }

private:
    struct unchecked {};
    CoordinatePermutation(unchecked, std::vector<std::size_t> images) : images_(std::move(images)) {}

    std::vector<std::size_t> images_;
};

}  // namespace z2k
