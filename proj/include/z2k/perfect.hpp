#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binary_word.hpp"
#include "code_lattice.hpp"
#include "errors.hpp"
#include "gray_map.hpp"

namespace z2k {

struct PerfectOptions {
    /// Also mark every radius-1 ball in F^n and require each word to be hit
    /// exactly once. Only runs for n <= max_covering_length.
    bool covering_scan = false;
    std::size_t max_covering_length = 24;
};

struct PerfectnessReport {
    std::size_t length = 0;
    std::size_t codewords = 0;
    bool sphere_packing_holds = false;  // N (n + 1) == 2^n
    /// Minimum pairwise distance; empty for a one-word code.
    std::optional<std::size_t> min_distance;
    bool covering_radius_checked = false;
    /// Result of the direct covering scan when it ran.
    std::optional<bool> covering_verdict;
    bool verdict = false;
    std::vector<BinaryWord> witness;
    std::string witness_note;

    bool covering_agrees() const { return !covering_verdict || *covering_verdict == verdict; }
};

/// 1-perfect test: minimum distance >= 3 and N (n + 1) = 2^n, optionally
/// cross-checked by a direct covering scan.
inline PerfectnessReport is_one_perfect(std::span<const BinaryWord> words, const PerfectOptions& opt = {}) {
    if (words.empty()) throw EmptyCode("1-perfectness of an empty code");
    PerfectnessReport r;
    r.length = words.front().size();
    r.codewords = words.size();
    const auto n = r.length;
    for (const auto& w : words) w.require_same_length(words.front());

    if (n < 63) {
        const std::uint64_t ambient = std::uint64_t{1} << n;
        r.sphere_packing_holds = ambient % (n + 1) == 0 && ambient / (n + 1) == words.size();
    }

    const bool packed = n <= 64;
    std::vector<std::uint64_t> ints;
    if (packed) {
        ints.reserve(words.size());
        for (const auto& w : words) ints.push_back(w.to_integer());
    }
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::size_t d = packed ? static_cast<std::size_t>(std::popcount(ints[i] ^ ints[j]))
                                         : hamming_distance(words[i], words[j]);
            if (!r.min_distance || d < *r.min_distance) {
                r.min_distance = d;
                best_i = i;
                best_j = j;
            }
        }
    }
    const bool distance_ok = !r.min_distance || *r.min_distance >= 3;
    r.verdict = distance_ok && r.sphere_packing_holds;

    if (!distance_ok) {
        r.witness = {words[best_i], words[best_j]};
        r.witness_note = "codewords at distance " + std::to_string(*r.min_distance) + " < 3";
    }

    if (opt.covering_scan && n <= opt.max_covering_length) {
        r.covering_radius_checked = true;
        std::vector<std::uint8_t> hits(std::size_t{1} << n, 0);
        for (auto c : ints) {
            hits[c] = static_cast<std::uint8_t>(std::min(hits[c] + 1, 255));
            for (std::size_t b = 0; b < n; ++b) {
                auto& h = hits[c ^ (std::uint64_t{1} << b)];
                h = static_cast<std::uint8_t>(std::min(h + 1, 255));
            }
        }
        auto bad = std::find_if(hits.begin(), hits.end(), [](std::uint8_t h) { return h != 1; });
        r.covering_verdict = bad == hits.end();
        if (bad != hits.end() && r.witness.empty()) {
            const auto word = static_cast<std::uint64_t>(bad - hits.begin());
            r.witness = {BinaryWord::from_integer(word, n)};
            r.witness_note = *bad == 0 ? "word at distance >= 2 from every codeword"
                                       : "word within distance 1 of " + std::to_string(*bad) + " codewords";
        }
    }
    if (r.witness.empty() && !r.sphere_packing_holds)
        r.witness_note = std::to_string(words.size()) + " * " + std::to_string(n + 1) + " != 2^" + std::to_string(n);
    return r;
}

/// Binary Hamming code of length 2^r - 1: the kernel of the parity-check
/// matrix whose column i is i written in binary. Sorted.
inline std::vector<BinaryWord> hamming_code(int r) {
    if (r < 2 || r > 4) throw OutOfRange("hamming_code supports 2 <= r <= 4, got " + std::to_string(r));
    const std::size_t n = (std::size_t{1} << r) - 1;
    // Basis: one word per data position d (not a power of two), with parity
    // bits at positions 2^b for every bit b set in d.
    std::vector<std::uint64_t> basis;
    for (std::size_t d = 1; d <= n; ++d) {
        if (std::has_single_bit(d)) continue;
        std::uint64_t w = std::uint64_t{1} << (n - d);
        for (int b = 0; b < r; ++b)
            if (d >> b & 1U) w |= std::uint64_t{1} << (n - (std::size_t{1} << b));
        basis.push_back(w);
    }
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1U) w ^= basis[i];
        out.push_back(BinaryWord::from_integer(w, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The Hamming code as a subgroup of Z_2^n, generated by its basis.
inline GeneratorSpec hamming_spec(int r) {
    const auto words = hamming_code(r);
    const auto n = static_cast<int>(words.front().size());
    GeneratorSpec spec{MixedGroupType::single(2, n), {}};
    // Weight-3 words include a basis (one per data position).
    for (std::size_t d = 1; d <= static_cast<std::size_t>(n); ++d) {
        if (std::has_single_bit(d)) continue;
        MixedVector g(static_cast<std::size_t>(n), 0);
        g[d - 1] = 1;
        for (int b = 0; b < r; ++b)
            if (d >> b & 1U) g[(std::size_t{1} << b) - 1] = 1;
        spec.generators.push_back(std::move(g));
    }
    return spec;
}

/// Codewords within Hamming distance 1 of a probe word.
struct NeighborScan {
    BinaryWord word;
    std::vector<BinaryWord> within_one;

    bool unique() const noexcept { return within_one.size() == 1; }
};

inline NeighborScan scan_neighbors(const std::vector<BinaryWord>& code, const BinaryWord& w) {
    NeighborScan s{w, {}};
    for (const auto& c : code)
        if (hamming_distance(c, w) <= 1) s.within_one.push_back(c);
    return s;
}

/// Computational form of the argument excluding blocks Z_{2i} with i >= 3
/// from 1-perfect mixed group codes. Positions are those of the binary
/// image under the minimized type, in the declared block order.
struct ObstructionReport {
    MixedGroupType minimized_type;
    std::size_t block_index = 0;      // block holding the large modulus
    std::size_t coordinate = 0;       // flat coordinate used (first of the block)
    int modulus = 0;                  // reduced modulus of that block, >= 6
    bool coordinate_is_full = false;  // projection of that coordinate is all of Z_modulus
    std::size_t min_weight = 0;       // minimum nonzero weight of the binary image
    std::optional<BinaryWord> min_weight_word;

    NeighborScan x;                   // (1 0...0 1 | 0...0) on the coordinate's bits
    std::optional<NeighborScan> u;    // x plus the first bit after the coordinate
    std::optional<NeighborScan> v;    // x plus the second bit after the coordinate
    /// Neighbors of u and v whose coordinate bits read phi(3) = 111 (modulus 6 only).
    std::optional<BinaryWord> u_block_neighbor;
    std::optional<BinaryWord> v_block_neighbor;
    std::optional<std::size_t> block_neighbor_distance;

    bool found = false;
    std::vector<std::string> reasons;
};

/// Requires a decomposable code whose minimized type has a block with
/// modulus >= 6; throws NotApplicable otherwise (including the case where
/// the block collapses to {0, k} ~ Z_2).
inline ObstructionReport large_modulus_obstruction(const SpannedCode& code) {
    if (!code.decomposable()) throw NotApplicable("code is not the direct product of its block projections");
    const auto mini = minimize_type(code);
    const auto reduced = rescale_to_minimal(code, mini);
    const auto& type = mini.type;

    std::optional<std::size_t> chosen;
    for (std::size_t j = 0; j < type.block_count(); ++j)
        if (type.block(j).modulus >= 6) {
            chosen = j;
            break;
        }
    if (!chosen) throw NotApplicable("no block of modulus >= 6 after minimization (type " + type.to_string() + ")");

    ObstructionReport r;
    r.minimized_type = type;
    r.block_index = *chosen;
    r.modulus = type.block(*chosen).modulus;
    r.coordinate = type.coordinate_offset(*chosen);
    const int i = r.modulus / 2;
    const auto n = type.binary_length();
    const auto first_bit = type.binary_offset(*chosen);

    {
        std::set<int> values;
        for (const auto& c : reduced.codewords()) values.insert(c[r.coordinate]);
        r.coordinate_is_full = values.size() == static_cast<std::size_t>(r.modulus);
    }

    const auto image = binary_words(reduced);
    for (const auto& w : image) {
        const auto wt = w.weight();
        if (wt > 0 && (!r.min_weight_word || wt < r.min_weight)) {
            r.min_weight = wt;
            r.min_weight_word = w;
        }
    }

    BinaryWord x(n);
    x.set(first_bit, true);
    x.set(first_bit + static_cast<std::size_t>(i) - 1, true);
    r.x = scan_neighbors(image, x);

    if (r.min_weight_word && r.min_weight < 3) {
        r.found = true;
        r.reasons.push_back("minimum weight " + std::to_string(r.min_weight) + " < 3");
    }
    if (r.x.within_one.empty()) {
        r.found = true;
        r.reasons.push_back("x = " + x.to_string() + " is at distance >= 2 from every codeword");
    } else if (!r.x.unique()) {
        r.found = true;
        r.reasons.push_back("x = " + x.to_string() + " lies within distance 1 of " + std::to_string(r.x.within_one.size()) +
                            " codewords");
    }

    // u, v use the two positions following the coordinate's bits, cyclically
    // among the positions outside it.
    if (i == 3 && n >= static_cast<std::size_t>(i) + 2) {
        std::vector<std::size_t> outside;
        for (std::size_t k = 1; k <= n; ++k) {
            const auto p = (first_bit + static_cast<std::size_t>(i) - 1 + k) % n;
            if (p < first_bit || p >= first_bit + static_cast<std::size_t>(i)) outside.push_back(p);
        }
        BinaryWord u = x, v = x;
        u.set(outside[0], true);
        v.set(outside[1], true);
        r.u = scan_neighbors(image, u);
        r.v = scan_neighbors(image, v);

        auto block_neighbor = [&](const NeighborScan& s) -> std::optional<BinaryWord> {
            for (const auto& c : s.within_one)
                if (c.slice(first_bit, 3) == BinaryWord::ones(3)) return c;
            return std::nullopt;
        };
        r.u_block_neighbor = block_neighbor(*r.u);
        r.v_block_neighbor = block_neighbor(*r.v);
        if (r.u_block_neighbor && r.v_block_neighbor)
            r.block_neighbor_distance = hamming_distance(*r.u_block_neighbor, *r.v_block_neighbor);

        for (const auto* s : {&*r.u, &*r.v}) {
            if (s->within_one.empty()) {
                r.found = true;
                r.reasons.push_back(s->word.to_string() + " is at distance >= 2 from every codeword");
            } else if (!s->unique()) {
                r.found = true;
                r.reasons.push_back(s->word.to_string() + " lies within distance 1 of " +
                                    std::to_string(s->within_one.size()) + " codewords");
            }
        }
        if (r.u->unique() && r.v->unique()) {
            const auto d = hamming_distance(r.u->within_one.front(), r.v->within_one.front());
            if (d < 3) {
                r.found = true;
                r.reasons.push_back("the codewords nearest to u and v are at distance " + std::to_string(d) + " < 3");
            }
        }
    }
    return r;
}

struct Classification {
    PerfectnessReport perfect;
    TypeMinimization minimized;
    bool classified = false;       // code is 1-perfect and a (Z_2^k, Z_4^m) type was reported
    int binary_coordinates = 0;    // k: coordinates in Z_2 blocks
    int quaternary_coordinates = 0;// m: coordinates in Z_4 blocks
    /// 1-perfect but the minimized type uses a modulus outside {2, 4}.
    bool unexpected_modulus = false;
    std::string note;
};

inline Classification classify_if_perfect(const SpannedCode& code, const PerfectOptions& opt = {}) {
    Classification c;
    const auto words = binary_words(code);
    c.perfect = is_one_perfect(words, opt);
    c.minimized = minimize_type(code);
    if (!c.perfect.verdict) {
        c.note = "not 1-perfect";
        return c;
    }
    for (const auto& b : c.minimized.type.blocks()) {
        if (b.modulus == 2) c.binary_coordinates += b.length;
        else if (b.modulus == 4) c.quaternary_coordinates += b.length;
        else c.unexpected_modulus = true;
    }
    if (c.unexpected_modulus) {
        c.note = "1-perfect code with minimized type " + c.minimized.type.to_string() + " uses a modulus outside {2, 4}";
        c.binary_coordinates = c.quaternary_coordinates = 0;
    } else {
        c.classified = true;
        c.note = "minimized type " + c.minimized.type.to_string();
    }
    return c;
}

}  // namespace z2k
