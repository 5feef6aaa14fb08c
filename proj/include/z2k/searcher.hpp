#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "binary_word.hpp"
#include "core_algebra.hpp"
#include "errors.hpp"
#include "gray_map.hpp"

namespace z2k {

constexpr int max_search_m = 6;
constexpr int max_search_r = 12;

/// A map Z_r -> F_2^m given by its image list. Words are stored as integers
/// whose most significant of the m bits is position 1. Unlike the rest of the
/// library, r may be odd here.
struct CandidateGrayMap {
    int r = 0;
    int m = 0;
    std::vector<std::uint32_t> images;

    BinaryWord image(int i) const { return BinaryWord::from_integer(images.at(static_cast<std::size_t>(i)), static_cast<std::size_t>(m)); }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < r; ++i) {
            if (i) s += ',';
            s += image(i).to_string();
        }
        return s;
    }

    friend bool operator==(const CandidateGrayMap&, const CandidateGrayMap&) = default;
    friend auto operator<=>(const CandidateGrayMap&, const CandidateGrayMap&) = default;
};

/// Injective with cyclically adjacent images at Hamming distance 1.
inline bool is_gray_map(const CandidateGrayMap& c) {
    if (c.r < 2 || static_cast<int>(c.images.size()) != c.r) return false;
    std::set<std::uint32_t> distinct(c.images.begin(), c.images.end());
    if (static_cast<int>(distinct.size()) != c.r) return false;
    for (int i = 0; i < c.r; ++i)
        if (std::popcount(c.images[static_cast<std::size_t>(i)] ^ c.images[static_cast<std::size_t>((i + 1) % c.r)]) != 1)
            return false;
    return true;
}

namespace detail {
inline void check_search_caps(int r, int m) {
    if (r < 2 || r > max_search_r) throw OutOfRange("r must be in [2, " + std::to_string(max_search_r) + "]");
    if (m < 1 || m > max_search_m) throw OutOfRange("m must be in [1, " + std::to_string(max_search_m) + "]");
}
}  // namespace detail

/// Calls `visit` on every Gray map Z_r -> F_2^m in lexicographic order of the
/// image sequence; `visit` returns false to stop. Backtracking extends the
/// sequence by neighbors of the last word and prunes when the first word is
/// farther away than the remaining number of steps.
inline void for_each_gray_map(int r, int m, const std::function<bool(const CandidateGrayMap&)>& visit) {
    detail::check_search_caps(r, m);
    const std::uint32_t words = std::uint32_t{1} << m;
    if (static_cast<std::uint64_t>(r) > words) return;

    CandidateGrayMap cur{r, m, std::vector<std::uint32_t>(static_cast<std::size_t>(r))};
    std::uint64_t used = 0;
    bool stop = false;

    std::function<void(int)> extend = [&](int depth) {
        if (stop) return;
        const auto last = cur.images[static_cast<std::size_t>(depth - 1)];
        if (depth == r) {
            if (std::popcount(last ^ cur.images[0]) == 1 && !visit(cur)) stop = true;
            return;
        }
        // Neighbors of `last` in increasing order: flip bits from the least significant position upward.
        std::uint32_t nbrs[max_search_m];
        for (int b = 0; b < m; ++b) nbrs[b] = last ^ (std::uint32_t{1} << b);
        std::sort(nbrs, nbrs + m);
        for (int b = 0; b < m && !stop; ++b) {
            const auto w = nbrs[b];
            if (used >> w & 1U) continue;
            // After placing w at depth, r - depth steps remain to close the cycle.
            if (std::popcount(w ^ cur.images[0]) > r - depth) continue;
            cur.images[static_cast<std::size_t>(depth)] = w;
            used |= std::uint64_t{1} << w;
            extend(depth + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    };

    for (std::uint32_t s = 0; s < words && !stop; ++s) {
        cur.images[0] = s;
        used = std::uint64_t{1} << s;
        extend(1);
    }
}

inline std::vector<CandidateGrayMap> enumerate_gray_maps(int r, int m, std::size_t limit = 10'000'000) {
    std::vector<CandidateGrayMap> out;
    for_each_gray_map(r, m, [&](const CandidateGrayMap& c) {
        if (out.size() >= limit)
            throw LimitExceeded("more than " + std::to_string(limit) + " Gray maps Z_" + std::to_string(r) + " -> F_2^" +
                                std::to_string(m));
        out.push_back(c);
        return true;
    });
    return out;
}

inline std::uint64_t count_gray_maps(int r, int m) {
    std::uint64_t n = 0;
    for_each_gray_map(r, m, [&](const CandidateGrayMap&) {
        ++n;
        return true;
    });
    return n;
}

/// d(images[i], images[i + j]) = wt(images[j]) for all i, j in Z_r: Hamming
/// compatibility of the product phi(i).phi(j) = phi(i + j) on the image.
inline bool is_hamming_compatible_map(const CandidateGrayMap& c) {
    if (c.r % 2 != 0) throw ParityError("the induced product needs even r, got r=" + std::to_string(c.r));
    for (int j = 0; j < c.r; ++j) {
        const int wt = std::popcount(c.images[static_cast<std::size_t>(j)]);
        for (int i = 0; i < c.r; ++i)
            if (std::popcount(c.images[static_cast<std::size_t>(i)] ^ c.images[static_cast<std::size_t>((i + j) % c.r)]) != wt)
                return false;
    }
    return true;
}

/// wt(images[i]) = Lee weight of i, for even r.
inline bool is_weight_preserving(const CandidateGrayMap& c) {
    for (int i = 0; i < c.r; ++i)
        if (std::popcount(c.images[static_cast<std::size_t>(i)]) != lee_weight(i, c.r)) return false;
    return true;
}

/// d(images[i], images[j]) = Lee distance of i and j, for even r.
inline bool is_distance_preserving(const CandidateGrayMap& c) {
    for (int i = 0; i < c.r; ++i)
        for (int j = 0; j < c.r; ++j)
            if (std::popcount(c.images[static_cast<std::size_t>(i)] ^ c.images[static_cast<std::size_t>(j)]) !=
                lee_weight(((i - j) % c.r + c.r) % c.r, c.r))
                return false;
    return true;
}

/// psi(i) = wt(images[i]) mod 2 satisfies psi(i) = psi(0) + i mod 2.
inline bool parity_alternates(const CandidateGrayMap& c) {
    const int psi0 = std::popcount(c.images[0]) % 2;
    for (int i = 0; i < c.r; ++i)
        if (std::popcount(c.images[static_cast<std::size_t>(i)]) % 2 != (psi0 + i) % 2) return false;
    return true;
}

/// Applies the coordinate permutation `mu` (destination convention, 0-based
/// positions with position 0 the most significant of m bits) to every image.
inline CandidateGrayMap permute_coordinates(const CandidateGrayMap& c, const std::vector<int>& mu) {
    CandidateGrayMap out = c;
    for (auto& w : out.images) {
        std::uint32_t v = 0;
        for (int p = 0; p < c.m; ++p)
            if (w >> (c.m - 1 - p) & 1U) v |= std::uint32_t{1} << (c.m - 1 - mu[static_cast<std::size_t>(p)]);
        w = v;
    }
    return out;
}

/// Lexicographically least image sequence over all m! coordinate permutations.
inline CandidateGrayMap canonical_form(const CandidateGrayMap& c) {
    std::vector<int> mu(static_cast<std::size_t>(c.m));
    std::iota(mu.begin(), mu.end(), 0);
    CandidateGrayMap best = c;
    do {
        auto p = permute_coordinates(c, mu);
        if (p.images < best.images) best = std::move(p);
    } while (std::next_permutation(mu.begin(), mu.end()));
    return best;
}

/// phi : Z_{2k} -> F_2^k as a candidate map.
inline CandidateGrayMap reference_gray_map(int k) {
    CandidateGrayMap c{2 * k, k, {}};
    for (int j = 0; j < 2 * k; ++j) c.images.push_back(static_cast<std::uint32_t>(phi(j, k).to_integer()));
    return c;
}

struct UniquenessReport {
    int r = 0;
    int m = 0;
    std::uint64_t total = 0;
    std::uint64_t compatible = 0;
    std::uint64_t orbits = 0;
    std::vector<CandidateGrayMap> survivors;
    bool survivors_fix_zero = true;            // images[0] = 0
    bool survivors_distance_preserving = true;
    bool survivors_weight_preserving = true;
    /// m == k only: every survivor is mu o phi, and every mu o phi is a survivor.
    std::optional<bool> survivors_within_reference_orbit;
    std::optional<bool> reference_orbit_within_survivors;
};

inline UniquenessReport uniqueness_report(int r, int m) {
    if (r % 2 != 0) throw ParityError("uniqueness needs even r, got r=" + std::to_string(r));
    UniquenessReport rep;
    rep.r = r;
    rep.m = m;
    for_each_gray_map(r, m, [&](const CandidateGrayMap& c) {
        ++rep.total;
        // images[0] = 0 follows from the i = j = 0 instance; test it first.
        if (c.images[0] == 0 && is_hamming_compatible_map(c)) rep.survivors.push_back(c);
        return true;
    });
    rep.compatible = rep.survivors.size();

    std::set<std::vector<std::uint32_t>> forms;
    for (const auto& s : rep.survivors) {
        forms.insert(canonical_form(s).images);
        rep.survivors_fix_zero = rep.survivors_fix_zero && s.images[0] == 0;
        rep.survivors_distance_preserving = rep.survivors_distance_preserving && is_distance_preserving(s);
        rep.survivors_weight_preserving = rep.survivors_weight_preserving && is_weight_preserving(s);
    }
    rep.orbits = forms.size();

    if (m == r / 2) {
        const auto ref = reference_gray_map(r / 2);
        std::set<CandidateGrayMap> orbit;
        std::vector<int> mu(static_cast<std::size_t>(m));
        std::iota(mu.begin(), mu.end(), 0);
        do orbit.insert(permute_coordinates(ref, mu));
        while (std::next_permutation(mu.begin(), mu.end()));
        const std::set<CandidateGrayMap> found(rep.survivors.begin(), rep.survivors.end());
        rep.survivors_within_reference_orbit =
            std::all_of(found.begin(), found.end(), [&](const CandidateGrayMap& s) { return orbit.contains(s); });
        rep.reference_orbit_within_survivors =
            std::all_of(orbit.begin(), orbit.end(), [&](const CandidateGrayMap& s) { return found.contains(s); });
    }
    return rep;
}

struct ParityReport {
    int r = 0;
    std::vector<std::pair<int, std::uint64_t>> counts;  // (m, number of Gray maps)

    bool all_zero() const {
        return std::all_of(counts.begin(), counts.end(), [](const auto& c) { return c.second == 0; });
    }
};

inline ParityReport parity_report(int r_odd, int m_max) {
    if (r_odd % 2 == 0) throw Error("parity_report expects odd r, got r=" + std::to_string(r_odd));
    ParityReport rep;
    rep.r = r_odd;
    for (int m = 1; m <= m_max; ++m) rep.counts.emplace_back(m, count_gray_maps(r_odd, m));
    return rep;
}

}  // namespace z2k
