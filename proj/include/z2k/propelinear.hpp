#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binary_word.hpp"
#include "detail/parallel.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace z2k {

/// Binary code in which every codeword x carries a coordinate permutation
/// pi_x. The permutations are stored extensionally, so arbitrary (possibly
/// non-propelinear) assignments can be represented and checked.
class PropelinearCode {
public:
    using Entry = std::pair<BinaryWord, CoordinatePermutation>;

    PropelinearCode(std::size_t length, std::vector<Entry> entries) : length_(length) {
        if (length == 0) throw LengthMismatch("code length must be >= 1");
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        words_.reserve(entries.size());
        perms_.reserve(entries.size());
        for (auto& [w, p] : entries) {
            if (w.size() != length) throw LengthMismatch("codeword " + w.to_string() + " has wrong length");
            if (p.size() != length) throw LengthMismatch("permutation for " + w.to_string() + " has wrong degree");
            if (!index_.emplace(w, words_.size()).second) throw Error("duplicate codeword " + w.to_string());
            words_.push_back(std::move(w));
            perms_.push_back(std::move(p));
        }
    }

    /// Code with every pi_x the identity (a linear code when the words form a subspace).
    static PropelinearCode with_identity_permutations(std::size_t length, const std::vector<BinaryWord>& words) {
        std::vector<Entry> entries;
        entries.reserve(words.size());
        for (const auto& w : words) entries.emplace_back(w, CoordinatePermutation::identity(length));
        return PropelinearCode(length, std::move(entries));
    }

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<BinaryWord>& words() const noexcept { return words_; }
    const BinaryWord& word(std::size_t i) const { return words_.at(i); }
    const CoordinatePermutation& perm(std::size_t i) const { return perms_.at(i); }

    std::optional<std::size_t> index_of(const BinaryWord& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const BinaryWord& w) const { return index_.contains(w); }

    const CoordinatePermutation& perm_of(const BinaryWord& x) const {
        auto i = index_of(x);
        if (!i) throw NotACodeword(x.to_string() + " is not a codeword");
        return perms_[*i];
    }

private:
    std::size_t length_;
    std::vector<BinaryWord> words_;
    std::vector<CoordinatePermutation> perms_;
    std::unordered_map<BinaryWord, std::size_t, BinaryWordHash> index_;
};

/// x * v = x + pi_x(v).
inline BinaryWord star(const PropelinearCode& code, const BinaryWord& x, const BinaryWord& v) {
    if (v.size() != code.length()) throw LengthMismatch("vector length does not match code length");
    return x ^ code.perm_of(x)(v);
}

/// x^{-1} = pi_x^{-1}(x).
inline BinaryWord codeword_inverse(const PropelinearCode& code, const BinaryWord& x) {
    return code.perm_of(x).inverse()(x);
}

/// Knobs shared by the whole-space checkers. A quantifier over F^n (or over
/// tuples of codewords) runs exhaustively when its domain has at most
/// `exhaustive_limit` elements, otherwise on `sample_size` pseudorandom draws
/// from a generator seeded with `seed`.
struct CheckOptions {
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    std::uint64_t sample_size = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    /// Vectors tried before the regular scan order (translation invariance).
    std::vector<BinaryWord> probe_first;
};

namespace detail {

inline BinaryWord random_word(std::mt19937_64& rng, std::size_t n) {
    BinaryWord w(n);
    std::uint64_t pool = 0;
    int left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (left == 0) {
            pool = rng();
            left = 64;
        }
        w.set(i, pool & 1U);
        pool >>= 1;
        --left;
    }
    return w;
}

/// Domain over F^n: every word in integer order when 2^n <= limit, else a seeded sample.
struct VectorDomain {
    bool exhaustive = true;
    std::uint64_t count = 0;
    std::size_t length = 0;
    std::vector<BinaryWord> sample;

    VectorDomain(std::size_t n, const CheckOptions& opt) : length(n) {
        if (n < 63 && (std::uint64_t{1} << n) <= opt.exhaustive_limit) {
            count = std::uint64_t{1} << n;
        } else {
            exhaustive = false;
            std::mt19937_64 rng(opt.seed);
            sample.reserve(opt.sample_size);
            for (std::uint64_t s = 0; s < opt.sample_size; ++s) sample.push_back(random_word(rng, n));
            count = sample.size();
        }
    }

    BinaryWord operator[](std::uint64_t i) const {
        return exhaustive ? BinaryWord::from_integer(i, length) : sample[i];
    }
};

inline bool fits(std::uint64_t a, std::uint64_t b, std::uint64_t limit) { return b == 0 || a <= limit / b; }

}  // namespace detail

struct Counterexample {
    std::vector<BinaryWord> words;
    std::string description;
};

struct AxiomCheck {
    AxiomCheck() = default;
    explicit AxiomCheck(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;
};

struct PropelinearReport {
    std::vector<AxiomCheck> axioms;
    std::uint64_t seed = 0;

    bool passed() const {
        return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.passed; });
    }

    const AxiomCheck& axiom(const std::string& name) const {
        for (const auto& a : axioms)
            if (a.name == name) return a;
        throw Error("no axiom named " + name);
    }
};

/// Checks, on codewords only: identity (0 is a codeword with pi_0 = Id),
/// closure (x*y in C), coherence (pi_{x*y} = pi_x o pi_y), closure of
/// {pi_x} under composition, two-sided inverses x^{-1} = pi_x^{-1}(x), and
/// associativity. Commutativity is deliberately not required.
inline PropelinearReport check_propelinear(const PropelinearCode& code, const CheckOptions& opt = {}) {
    PropelinearReport report;
    report.seed = opt.seed;
    const std::uint64_t N = code.size();
    const BinaryWord zero(code.length());

    {
        AxiomCheck a("identity");
        a.checked = 1;
        auto z = code.index_of(zero);
        if (!z) {
            a.passed = false;
            a.counterexample = Counterexample{{zero}, "all-zero word is not a codeword"};
        } else if (!code.perm(*z).is_identity()) {
            a.passed = false;
            a.counterexample = Counterexample{{zero}, "pi_0 = " + code.perm(*z).to_string() + " is not the identity"};
        }
        report.axioms.push_back(std::move(a));
    }

    // Pairs (x, y): exhaustive or sampled.
    std::vector<std::pair<std::size_t, std::size_t>> sampled_pairs;
    const bool pairs_exhaustive = detail::fits(N, N, opt.exhaustive_limit);
    if (!pairs_exhaustive) {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t s = 0; s < opt.sample_size; ++s) {
            const auto i = rng() % N;
            sampled_pairs.emplace_back(i, rng() % N);
        }
    }
    const std::uint64_t pair_count = pairs_exhaustive ? N * N : sampled_pairs.size();
    auto pair_at = [&](std::uint64_t i) -> std::pair<std::size_t, std::size_t> {
        if (pairs_exhaustive) return {static_cast<std::size_t>(i / N), static_cast<std::size_t>(i % N)};
        return sampled_pairs[i];
    };

    std::set<CoordinatePermutation> perm_group;
    for (std::size_t i = 0; i < N; ++i) perm_group.insert(code.perm(i));

    AxiomCheck closure("closure"), coherence("coherence"), group("permutation_group");
    for (auto* a : {&closure, &coherence, &group}) {
        a->exhaustive = pairs_exhaustive;
        a->checked = pair_count;
    }
    for (std::uint64_t t = 0; t < pair_count; ++t) {
        const auto [i, j] = pair_at(t);
        const auto& x = code.word(i);
        const auto& y = code.word(j);
        const auto z = x ^ code.perm(i)(y);
        const auto composed = code.perm(i) * code.perm(j);
        const auto zi = code.index_of(z);
        if (closure.passed && !zi) {
            closure.passed = false;
            closure.counterexample = Counterexample{{x, y, z}, "x*y is not a codeword"};
        }
        if (coherence.passed && zi && code.perm(*zi) != composed) {
            coherence.passed = false;
            coherence.counterexample =
                Counterexample{{x, y, z}, "pi_{x*y} = " + code.perm(*zi).to_string() + " but pi_x o pi_y = " + composed.to_string()};
        }
        if (group.passed && !perm_group.contains(composed)) {
            group.passed = false;
            group.counterexample = Counterexample{{x, y}, "pi_x o pi_y = " + composed.to_string() + " is not any pi_z"};
        }
    }
    report.axioms.push_back(std::move(closure));
    report.axioms.push_back(std::move(coherence));
    report.axioms.push_back(std::move(group));

    {
        AxiomCheck a("inverses");
        a.checked = N;
        for (std::size_t i = 0; i < N && a.passed; ++i) {
            const auto& x = code.word(i);
            const auto inv = code.perm(i).inverse()(x);
            const auto ii = code.index_of(inv);
            if (!ii) {
                a.passed = false;
                a.counterexample = Counterexample{{x, inv}, "pi_x^{-1}(x) is not a codeword"};
            } else if (!(inv ^ code.perm(*ii)(x)).is_zero()) {
                a.passed = false;
                a.counterexample = Counterexample{{x, inv}, "x^{-1} * x is not the identity"};
            }
        }
        report.axioms.push_back(std::move(a));
    }

    {
        AxiomCheck a("associativity");
        const bool exhaustive = detail::fits(N * N, N, opt.exhaustive_limit) && detail::fits(N, N, opt.exhaustive_limit);
        a.exhaustive = exhaustive;
        std::mt19937_64 rng(opt.seed + 1);
        const std::uint64_t count = exhaustive ? N * N * N : opt.sample_size;
        a.checked = count;
        auto mul = [&](const BinaryWord& x, const BinaryWord& y) -> std::optional<BinaryWord> {
            auto i = code.index_of(x);
            if (!i) return std::nullopt;
            return x ^ code.perm(*i)(y);
        };
        for (std::uint64_t t = 0; t < count && a.passed; ++t) {
            std::size_t i, j, l;
            if (exhaustive) {
                i = t / (N * N);
                j = (t / N) % N;
                l = t % N;
            } else {
                i = rng() % N;
                j = rng() % N;
                l = rng() % N;
            }
            const auto& x = code.word(i);
            const auto& y = code.word(j);
            const auto& z = code.word(l);
            auto left = mul(x, y);
            auto right_inner = mul(y, z);
            std::optional<BinaryWord> lhs = left ? mul(*left, z) : std::nullopt;
            std::optional<BinaryWord> rhs = right_inner ? mul(x, *right_inner) : std::nullopt;
            if (!lhs || !rhs || *lhs != *rhs) {
                a.passed = false;
                a.counterexample = Counterexample{{x, y, z}, "(x*y)*z differs from x*(y*z) or leaves the code"};
            }
        }
        report.axioms.push_back(std::move(a));
    }
    return report;
}

/// Action of codewords on F^n used by the Hamming-compatibility checker.
using Action = std::function<BinaryWord(const BinaryWord& x, const BinaryWord& v)>;

struct HammingCompatibilityReport {
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    /// (x, v) with d(x, x*v) != wt(v).
    std::optional<std::pair<BinaryWord, BinaryWord>> witness;
    std::size_t witness_distance = 0;
};

/// Verifies d(x, action(x, v)) = wt(v) for every codeword x and every v in
/// F^n (or a seeded sample of v).
inline HammingCompatibilityReport check_hamming_compatible(const std::vector<BinaryWord>& codewords, std::size_t length,
                                                           const Action& action, const CheckOptions& opt = {}) {
    HammingCompatibilityReport report;
    report.seed = opt.seed;
    const detail::VectorDomain domain(length, opt);
    report.exhaustive = domain.exhaustive;
    const std::uint64_t N = codewords.size();
    report.checked = domain.count * N;
    auto fail = detail::first_failure(domain.count * N, opt.threads, [&](std::uint64_t t) {
        const auto v = domain[t / N];
        const auto& x = codewords[t % N];
        return hamming_distance(x, action(x, v)) == v.weight();
    });
    if (fail) {
        const auto v = domain[*fail / N];
        const auto& x = codewords[*fail % N];
        report.passed = false;
        report.witness = std::make_pair(x, v);
        report.witness_distance = hamming_distance(x, action(x, v));
    }
    return report;
}

inline HammingCompatibilityReport check_hamming_compatible(const PropelinearCode& code, const CheckOptions& opt = {}) {
    return check_hamming_compatible(code.words(), code.length(),
                                    [&code](const BinaryWord& x, const BinaryWord& v) { return star(code, x, v); }, opt);
}

struct IsometryReport {
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    /// (x, u, v) with d(x*u, x*v) != d(u, v).
    std::optional<std::vector<BinaryWord>> witness;
};

/// d(x*u, x*v) = d(u, v) for every codeword x and all u, v.
inline IsometryReport check_isometry(const PropelinearCode& code, const CheckOptions& opt = {}) {
    IsometryReport report;
    const auto n = code.length();
    const std::uint64_t N = code.size();
    const bool exhaustive = 2 * n < 63 && detail::fits(std::uint64_t{1} << (2 * n), N, opt.exhaustive_limit);
    report.exhaustive = exhaustive;
    std::vector<std::pair<BinaryWord, BinaryWord>> sample;
    if (!exhaustive) {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t s = 0; s < opt.sample_size; ++s) {
            auto u = detail::random_word(rng, n);
            sample.emplace_back(u, detail::random_word(rng, n));
        }
    }
    const std::uint64_t pairs = exhaustive ? (std::uint64_t{1} << (2 * n)) : sample.size();
    auto pair_at = [&](std::uint64_t p) {
        if (!exhaustive) return sample[p];
        return std::make_pair(BinaryWord::from_integer(p >> n, n), BinaryWord::from_integer(p & ((std::uint64_t{1} << n) - 1), n));
    };
    report.checked = pairs * N;
    auto fail = detail::first_failure(pairs * N, opt.threads, [&](std::uint64_t t) {
        const auto [u, v] = pair_at(t / N);
        const auto& x = code.word(t % N);
        return hamming_distance(star(code, x, u), star(code, x, v)) == hamming_distance(u, v);
    });
    if (fail) {
        const auto [u, v] = pair_at(*fail / N);
        report.passed = false;
        report.witness = std::vector<BinaryWord>{code.word(*fail % N), u, v};
    }
    return report;
}

struct TranslationWitness {
    BinaryWord x, y, u;
    std::size_t distance_before = 0;  // d(x, y)
    std::size_t distance_after = 0;   // d(x*u, y*u)
};

struct TranslationReport {
    bool invariant = true;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::optional<TranslationWitness> witness;
};

/// Checks d(x, y) = d(x*u, y*u) for all codewords x, y and all u. Vectors in
/// `opt.probe_first` are tried first, then F^n in integer order (or a seeded
/// sample); for each u, pairs (x, y) run in codeword order.
inline TranslationReport check_translation_invariant(const PropelinearCode& code, const CheckOptions& opt = {}) {
    TranslationReport report;
    report.seed = opt.seed;
    const detail::VectorDomain domain(code.length(), opt);
    report.exhaustive = domain.exhaustive;
    const std::uint64_t N = code.size();
    const std::uint64_t probes = opt.probe_first.size();
    for (const auto& p : opt.probe_first)
        if (p.size() != code.length()) throw LengthMismatch("probe vector has wrong length");

    auto u_at = [&](std::uint64_t i) { return i < probes ? opt.probe_first[i] : domain[i - probes]; };
    const std::uint64_t total = (probes + domain.count) * N * N;
    report.checked = total;
    auto distances = [&](std::uint64_t t) {
        const auto u = u_at(t / (N * N));
        const auto& x = code.word((t / N) % N);
        const auto& y = code.word(t % N);
        return std::make_pair(hamming_distance(x, y), hamming_distance(star(code, x, u), star(code, y, u)));
    };
    auto fail = detail::first_failure(total, opt.threads, [&](std::uint64_t t) {
        auto [before, after] = distances(t);
        return before == after;
    });
    if (fail) {
        auto [before, after] = distances(*fail);
        report.invariant = false;
        report.witness = TranslationWitness{code.word((*fail / N) % N), code.word(*fail % N), u_at(*fail / (N * N)), before, after};
    }
    return report;
}

/// z = (1, 0, ..., 0, 1) of length k; for k > 2 it separates d(0, phi(1)) = 1
/// from d(0*z, phi(1)*z) = 3 in the image of Z_{2k}.
inline BinaryWord translation_witness_z(int k) {
    if (k <= 2) throw OutOfRange("witness z needs k > 2, got k=" + std::to_string(k));
    BinaryWord z(static_cast<std::size_t>(k));
    z.set(0, true);
    z.set(static_cast<std::size_t>(k - 1), true);
    return z;
}

}  // namespace z2k
