#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "binary_word.hpp"
#include "core_algebra.hpp"
#include "errors.hpp"
#include "gray_map.hpp"
#include "propelinear.hpp"

namespace z2k {

/// One factor Z_modulus^length of a mixed product.
struct Block {
    int modulus = 2;
    int length = 1;

    int half() const noexcept { return modulus / 2; }
    friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered product Z_{2i_1}^{k_1} x ... x Z_{2i_r}^{k_r}. Block order is
/// significant and never re-sorted.
class MixedGroupType {
public:
    MixedGroupType() = default;
    explicit MixedGroupType(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw LengthMismatch("a mixed group type needs at least one block");
        for (const auto& b : blocks_) {
            require_even_modulus(b.modulus);
            if (b.length < 1) throw LengthMismatch("block length must be >= 1");
        }
    }

    static MixedGroupType single(int modulus, int length) { return MixedGroupType({Block{modulus, length}}); }

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const Block& block(std::size_t j) const { return blocks_.at(j); }

    std::size_t coordinate_count() const noexcept {
        std::size_t n = 0;
        for (const auto& b : blocks_) n += static_cast<std::size_t>(b.length);
        return n;
    }

    /// sum_j i_j * k_j.
    std::size_t binary_length() const noexcept {
        std::size_t n = 0;
        for (const auto& b : blocks_) n += static_cast<std::size_t>(b.half() * b.length);
        return n;
    }

    /// First coordinate of block j in the flat coordinate list.
    std::size_t coordinate_offset(std::size_t j) const {
        std::size_t off = 0;
        for (std::size_t i = 0; i < j; ++i) off += static_cast<std::size_t>(blocks_.at(i).length);
        return off;
    }

    std::size_t binary_offset(std::size_t j) const {
        std::size_t off = 0;
        for (std::size_t i = 0; i < j; ++i) off += static_cast<std::size_t>(blocks_.at(i).half() * blocks_.at(i).length);
        return off;
    }

    /// Modulus of flat coordinate c.
    int modulus_at(std::size_t c) const {
        for (const auto& b : blocks_) {
            if (c < static_cast<std::size_t>(b.length)) return b.modulus;
            c -= static_cast<std::size_t>(b.length);
        }
        throw OutOfRange("coordinate index past end of type");
    }

    /// log2 of |Z_{2i_1}^{k_1} x ... x Z_{2i_r}^{k_r}|.
    double log2_order() const noexcept {
        double s = 0;
        for (const auto& b : blocks_) s += b.length * std::log2(static_cast<double>(b.modulus));
        return s;
    }

    bool single_modulus() const noexcept { return blocks_.size() == 1; }

    /// e.g. "Z6^1 x Z2^4".
    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (j) s += " x ";
            s += "Z" + std::to_string(blocks_[j].modulus) + "^" + std::to_string(blocks_[j].length);
        }
        return s;
    }

    friend bool operator==(const MixedGroupType&, const MixedGroupType&) = default;

private:
    std::vector<Block> blocks_;
};

/// Element of a mixed product: the flat concatenation of its block coordinates.
using MixedVector = std::vector<int>;

inline void validate_mixed(const MixedGroupType& type, const MixedVector& v) {
    if (v.size() != type.coordinate_count())
        throw LengthMismatch("vector has " + std::to_string(v.size()) + " coordinates, type " + type.to_string() + " needs " +
                             std::to_string(type.coordinate_count()));
    std::size_t c = 0;
    for (const auto& b : type.blocks())
        for (int i = 0; i < b.length; ++i, ++c)
            if (v[c] < 0 || v[c] >= b.modulus)
                throw OutOfRange("coordinate " + std::to_string(c + 1) + " = " + std::to_string(v[c]) + " outside Z_" +
                                 std::to_string(b.modulus));
}

inline std::vector<ZkVector> split_blocks(const MixedGroupType& type, const MixedVector& v) {
    validate_mixed(type, v);
    std::vector<ZkVector> out;
    out.reserve(type.block_count());
    auto it = v.begin();
    for (const auto& b : type.blocks()) {
        out.emplace_back(b.modulus, std::vector<int>(it, it + b.length));
        it += b.length;
    }
    return out;
}

inline MixedVector mixed_add(const MixedGroupType& type, const MixedVector& a, const MixedVector& b) {
    MixedVector out(a.size());
    std::size_t c = 0;
    for (const auto& blk : type.blocks())
        for (int i = 0; i < blk.length; ++i, ++c) out[c] = (a[c] + b[c]) % blk.modulus;
    return out;
}

inline MixedVector mixed_negate(const MixedGroupType& type, const MixedVector& a) {
    MixedVector out(a.size());
    std::size_t c = 0;
    for (const auto& blk : type.blocks())
        for (int i = 0; i < blk.length; ++i, ++c) out[c] = (blk.modulus - a[c]) % blk.modulus;
    return out;
}

inline int mixed_lee_weight(const MixedGroupType& type, const MixedVector& v) {
    int w = 0;
    std::size_t c = 0;
    for (const auto& blk : type.blocks())
        for (int i = 0; i < blk.length; ++i, ++c) w += lee_weight(v[c], blk.modulus);
    return w;
}

inline BinaryWord mixed_phi(const MixedGroupType& type, const MixedVector& v) {
    const auto blocks = split_blocks(type, v);
    return mixed_phi(std::span<const ZkVector>(blocks));
}

inline CoordinatePermutation mixed_pi(const MixedGroupType& type, const MixedVector& v) {
    const auto blocks = split_blocks(type, v);
    return mixed_pi(std::span<const ZkVector>(blocks));
}

inline MixedVector mixed_phi_inverse(const MixedGroupType& type, const BinaryWord& w) {
    if (w.size() != type.binary_length()) throw LengthMismatch("word length does not match type");
    MixedVector out;
    std::size_t off = 0;
    for (const auto& b : type.blocks()) {
        const auto bits = static_cast<std::size_t>(b.half() * b.length);
        const auto part = big_phi_inverse(w.slice(off, bits), b.half());
        out.insert(out.end(), part.coords().begin(), part.coords().end());
        off += bits;
    }
    return out;
}

/// Block structure plus generators, each the flat concatenation of its block
/// coordinates.
struct GeneratorSpec {
    MixedGroupType type;
    std::vector<MixedVector> generators;

    void validate() const {
        for (const auto& g : generators) validate_mixed(type, g);
    }
};

constexpr std::size_t default_size_limit = 1'000'000;

/// Additive subgroup of a mixed product, fully enumerated. Codewords are kept
/// in lexicographic order.
class SpannedCode {
public:
    SpannedCode(GeneratorSpec spec, std::vector<MixedVector> codewords)
        : spec_(std::move(spec)), codewords_(std::move(codewords)) {
        std::sort(codewords_.begin(), codewords_.end());
        compute_projections();
    }

    const GeneratorSpec& spec() const noexcept { return spec_; }
    const MixedGroupType& type() const noexcept { return spec_.type; }
    const std::vector<MixedVector>& codewords() const noexcept { return codewords_; }
    std::size_t size() const noexcept { return codewords_.size(); }

    /// Sizes of the projections of the code onto each block.
    const std::vector<std::size_t>& projection_sizes() const noexcept { return projection_sizes_; }

    /// True when the code equals C_1 x ... x C_r with C_j its projection on block j.
    bool decomposable() const noexcept {
        long double prod = 1;
        for (auto s : projection_sizes_) prod *= static_cast<long double>(s);
        return prod == static_cast<long double>(codewords_.size());
    }

    bool contains(const MixedVector& v) const { return std::binary_search(codewords_.begin(), codewords_.end(), v); }

private:
    void compute_projections() {
        projection_sizes_.clear();
        for (std::size_t j = 0; j < type().block_count(); ++j) {
            const auto off = static_cast<std::ptrdiff_t>(type().coordinate_offset(j));
            const auto len = type().block(j).length;
            std::set<MixedVector> parts;
            for (const auto& c : codewords_) parts.emplace(c.begin() + off, c.begin() + off + len);
            projection_sizes_.push_back(parts.size());
        }
    }

    GeneratorSpec spec_;
    std::vector<MixedVector> codewords_;
    std::vector<std::size_t> projection_sizes_;
};

namespace detail {
struct MixedVectorHash {
    std::size_t operator()(const MixedVector& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};
}  // namespace detail

/// Smallest additive subgroup containing the generators, by breadth-first
/// closure from the zero vector. Throws SizeLimitExceeded past `size_limit`.
inline SpannedCode span(GeneratorSpec spec, std::size_t size_limit = default_size_limit) {
    spec.validate();
    const auto& type = spec.type;
    std::unordered_set<MixedVector, detail::MixedVectorHash> seen;
    std::deque<MixedVector> queue;
    MixedVector zero(type.coordinate_count(), 0);
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : spec.generators) {
            auto next = mixed_add(type, cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > size_limit)
                    throw SizeLimitExceeded("span exceeds size limit of " + std::to_string(size_limit) + " codewords");
                queue.push_back(std::move(next));
            }
        }
    }
    return SpannedCode(std::move(spec), std::vector<MixedVector>(seen.begin(), seen.end()));
}

/// The whole product group as a code (generated by the unit vectors).
inline SpannedCode full_code(const MixedGroupType& type, std::size_t size_limit = default_size_limit) {
    GeneratorSpec spec{type, {}};
    for (std::size_t c = 0; c < type.coordinate_count(); ++c) {
        MixedVector e(type.coordinate_count(), 0);
        e[c] = 1;
        spec.generators.push_back(std::move(e));
    }
    return span(std::move(spec), size_limit);
}

/// Binary image Phi(C) with pi_x attached to every codeword.
inline PropelinearCode binary_image(const SpannedCode& code) {
    std::vector<PropelinearCode::Entry> entries;
    entries.reserve(code.size());
    for (const auto& c : code.codewords()) entries.emplace_back(mixed_phi(code.type(), c), mixed_pi(code.type(), c));
    return PropelinearCode(code.type().binary_length(), std::move(entries));
}

inline std::vector<BinaryWord> binary_words(const SpannedCode& code) {
    std::vector<BinaryWord> out;
    out.reserve(code.size());
    for (const auto& c : code.codewords()) out.push_back(mixed_phi(code.type(), c));
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimum Lee weight over nonzero codewords (the minimum Lee distance, as C is a group).
inline int min_lee_distance(const SpannedCode& code) {
    if (code.size() < 2) throw DegenerateCode("minimum distance needs at least two codewords");
    int best = -1;
    for (const auto& c : code.codewords()) {
        const int w = mixed_lee_weight(code.type(), c);
        if (w > 0 && (best < 0 || w < best)) best = w;
    }
    return best;
}

/// Minimum Hamming weight over the nonzero binary image words.
inline std::size_t min_hamming_distance_binary(const SpannedCode& code) {
    if (code.size() < 2) throw DegenerateCode("minimum distance needs at least two codewords");
    std::size_t best = 0;
    bool found = false;
    for (const auto& c : code.codewords()) {
        const auto w = mixed_phi(code.type(), c).weight();
        if (w > 0 && (!found || w < best)) {
            best = w;
            found = true;
        }
    }
    return best;
}

struct InfoRates {
    double rate = 0;        // R  = log_{2k} N / n
    double binary_rate = 0; // R' = log_2 N / (k n)
    int k = 0;
    std::size_t n = 0;
    std::size_t codewords = 0;
};

inline InfoRates info_rates(const SpannedCode& code) {
    if (!code.type().single_modulus()) throw Error("information rates are defined for single-modulus codes");
    if (code.size() < 1) throw DegenerateCode("empty code");
    const auto& b = code.type().block(0);
    InfoRates r;
    r.k = b.half();
    r.n = static_cast<std::size_t>(b.length);
    r.codewords = code.size();
    const double log2n = std::log2(static_cast<double>(code.size()));
    r.rate = log2n / (static_cast<double>(r.n) * std::log2(static_cast<double>(b.modulus)));
    r.binary_rate = log2n / (static_cast<double>(r.k) * static_cast<double>(r.n));
    return r;
}

struct BlockReduction {
    int declared_modulus = 0;
    int reduced_modulus = 0;
    /// Codeword coordinates of the block are all multiples of `scale`; dividing
    /// by it embeds the block in Z_{reduced_modulus}.
    int scale = 1;
    /// The gcd reduction gave an odd modulus and a factor 2 was put back.
    bool evenness_restored = false;
};

struct TypeMinimization {
    MixedGroupType type;
    std::vector<BlockReduction> blocks;

    bool any_evenness_restored() const {
        return std::any_of(blocks.begin(), blocks.end(), [](const BlockReduction& b) { return b.evenness_restored; });
    }
};

/// Per block: t = gcd(all codeword coordinates in the block, modulus); the
/// block embeds in Z_{modulus/t}. When modulus/t is odd, t is halved so the
/// reduced modulus 2*(modulus/t) stays even.
inline TypeMinimization minimize_type(const SpannedCode& code) {
    TypeMinimization out;
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < code.type().block_count(); ++j) {
        const auto& b = code.type().block(j);
        const auto off = code.type().coordinate_offset(j);
        int t = b.modulus;
        for (const auto& c : code.codewords())
            for (int i = 0; i < b.length; ++i) t = std::gcd(t, c[off + static_cast<std::size_t>(i)]);
        BlockReduction r{b.modulus, b.modulus / t, t, false};
        if (r.reduced_modulus % 2 != 0) {
            // modulus even and modulus/t odd force t even.
            r.scale = t / 2;
            r.reduced_modulus *= 2;
            r.evenness_restored = true;
        }
        blocks.push_back(Block{r.reduced_modulus, b.length});
        out.blocks.push_back(r);
    }
    out.type = MixedGroupType(std::move(blocks));
    return out;
}

/// The same abstract group re-expressed over the minimized type.
inline SpannedCode rescale_to_minimal(const SpannedCode& code, const TypeMinimization& m) {
    GeneratorSpec spec{m.type, {}};
    auto rescale = [&](const MixedVector& v) {
        MixedVector out(v.size());
        std::size_t c = 0;
        for (const auto& r : m.blocks) {
            const auto len = m.type.block(&r - m.blocks.data()).length;
            for (int i = 0; i < len; ++i, ++c) out[c] = v[c] / r.scale;
        }
        return out;
    };
    for (const auto& g : code.spec().generators) spec.generators.push_back(rescale(g));
    std::vector<MixedVector> words;
    words.reserve(code.size());
    for (const auto& c : code.codewords()) words.push_back(rescale(c));
    return SpannedCode(std::move(spec), std::move(words));
}

inline SpannedCode rescale_to_minimal(const SpannedCode& code) { return rescale_to_minimal(code, minimize_type(code)); }

}  // namespace z2k
