#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <z2k/code_lattice.hpp>

using namespace z2k;

namespace {

// All integer combinations sum a_i g_i with 0 <= a_i < L, L the lcm of the moduli.
std::set<MixedVector> combinations(const MixedGroupType& type, const std::vector<MixedVector>& gens) {
    int L = 1;
    for (const auto& b : type.blocks()) L = std::lcm(L, b.modulus);
    const auto n = type.coordinate_count();
    std::set<MixedVector> out;
    std::vector<int> a(gens.size(), 0);
    while (true) {
        MixedVector v(n, 0);
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t c = 0; c < n; ++c) v[c] += a[g] * gens[g][c];
        for (std::size_t c = 0; c < n; ++c) v[c] %= type.modulus_at(c);
        out.insert(v);
        std::size_t g = 0;
        while (g < gens.size() && ++a[g] == L) a[g++] = 0;
        if (g == gens.size()) break;
    }
    return out;
}

int lee(int v, int m) { return std::min(v, m - v); }

GeneratorSpec random_spec(std::mt19937_64& rng) {
    std::vector<Block> blocks;
    const int nb = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < nb; ++j) blocks.push_back(Block{2 * static_cast<int>(1 + rng() % 5), 1 + static_cast<int>(rng() % 2)});
    GeneratorSpec spec{MixedGroupType(blocks), {}};
    const int ng = static_cast<int>(rng() % 3);
    for (int g = 0; g < ng; ++g) {
        MixedVector v;
        for (std::size_t c = 0; c < spec.type.coordinate_count(); ++c)
            v.push_back(static_cast<int>(rng() % static_cast<unsigned>(spec.type.modulus_at(c))));
        spec.generators.push_back(v);
    }
    return spec;
}

}  // namespace

TEST_CASE("mixed group types") {
    const MixedGroupType t({{6, 1}, {2, 4}});
    CHECK(t.coordinate_count() == 5);
    CHECK(t.binary_length() == 7);
    CHECK(t.binary_offset(1) == 3);
    CHECK(t.coordinate_offset(1) == 1);
    CHECK(t.modulus_at(0) == 6);
    CHECK(t.modulus_at(4) == 2);
    CHECK(t.to_string() == "Z6^1 x Z2^4");
    CHECK_FALSE(t.single_modulus());
    CHECK_THROWS_AS(MixedGroupType({{5, 1}}), InvalidModulus);
    CHECK_THROWS_AS(MixedGroupType({{4, 0}}), Error);
    CHECK_THROWS_AS(MixedGroupType(std::vector<Block>{}), Error);
}

TEST_CASE("generator validation") {
    GeneratorSpec bad{MixedGroupType({{4, 2}}), {{1}}};
    CHECK_THROWS_AS(bad.validate(), LengthMismatch);
    GeneratorSpec range{MixedGroupType({{4, 2}}), {{1, 4}}};
    CHECK_THROWS_AS(range.validate(), OutOfRange);
}

TEST_CASE("span agrees with integer combinations on random specs") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto spec = random_spec(rng);
        const auto code = span(spec);
        const auto oracle = combinations(spec.type, spec.generators);
        CHECK(std::set<MixedVector>(code.codewords().begin(), code.codewords().end()) == oracle);
        // Closed under addition and negation.
        for (const auto& u : code.codewords()) {
            CHECK(code.contains(mixed_negate(spec.type, u)));
            CHECK(code.contains(mixed_add(spec.type, u, code.codewords().back())));
        }
    }
}

TEST_CASE("known sizes") {
    CHECK(span(GeneratorSpec{MixedGroupType({{4, 2}}), {{1, 2}}}).size() == 4);
    CHECK(span(GeneratorSpec{MixedGroupType({{6, 1}}), {{2}}}).size() == 3);
    CHECK(span(GeneratorSpec{MixedGroupType({{6, 1}}), {{3}}}).size() == 2);
    CHECK(span(GeneratorSpec{MixedGroupType({{8, 2}}), {{2, 3}}}).size() == 8);
    CHECK(full_code(MixedGroupType({{6, 2}})).size() == 36);
    CHECK(full_code(MixedGroupType({{6, 1}, {2, 4}})).size() == 96);
    CHECK(span(GeneratorSpec{MixedGroupType({{4, 1}}), {}}).size() == 1);
    CHECK_THROWS_AS(full_code(MixedGroupType({{8, 4}}), 1000), SizeLimitExceeded);
}

TEST_CASE("decomposability is a product of projections") {
    CHECK(full_code(MixedGroupType({{6, 1}, {2, 2}})).decomposable());
    CHECK_FALSE(span(GeneratorSpec{MixedGroupType({{4, 1}, {2, 1}}), {{1, 1}}}).decomposable());
    CHECK(span(GeneratorSpec{MixedGroupType({{4, 2}}), {{1, 2}}}).decomposable());
}

TEST_CASE("binary minimum distance equals minimum Lee distance") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto code = span(random_spec(rng));
        if (code.size() < 2) {
            CHECK_THROWS_AS(min_lee_distance(code), DegenerateCode);
            continue;
        }
        // Pairwise oracle over both metrics.
        int dl = -1;
        std::size_t dh = 0;
        const auto words = binary_words(code);
        for (std::size_t i = 0; i < code.size(); ++i)
            for (std::size_t j = i + 1; j < code.size(); ++j) {
                int d = 0;
                for (std::size_t c = 0; c < code.type().coordinate_count(); ++c) {
                    const int m = code.type().modulus_at(c);
                    d += lee(((code.codewords()[i][c] - code.codewords()[j][c]) % m + m) % m, m);
                }
                if (dl < 0 || d < dl) dl = d;
                const auto h = hamming_distance(words[i], words[j]);
                if (dh == 0 || h < dh) dh = h;
            }
        CHECK(min_lee_distance(code) == dl);
        CHECK(min_hamming_distance_binary(code) == dh);
        CHECK(static_cast<std::size_t>(dl) == dh);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("information rates") {
    const auto c = span(GeneratorSpec{MixedGroupType({{6, 1}}), {{2}}});
    const auto r = info_rates(c);
    CHECK(r.rate == Catch::Approx(std::log2(3.0) / std::log2(6.0)).epsilon(1e-12));
    CHECK(r.binary_rate == Catch::Approx(std::log2(3.0) / 3.0).epsilon(1e-12));
    CHECK(r.rate == Catch::Approx(0.6131).margin(5e-5));
    CHECK(r.binary_rate == Catch::Approx(0.5283).margin(5e-5));

    const auto z4 = info_rates(full_code(MixedGroupType({{4, 1}})));
    CHECK(z4.rate == 1.0);
    CHECK(z4.binary_rate == 1.0);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        auto spec = random_spec(rng);
        if (!spec.type.single_modulus()) {
            CHECK_THROWS_AS(info_rates(span(spec)), Error);
            continue;
        }
        const auto code = span(spec);
        const auto q = info_rates(code);
        CHECK(std::abs(q.binary_rate - (1 + std::log2(q.k)) / q.k * q.rate) < 1e-12);
        if (q.k >= 3 && code.size() >= 2) CHECK(q.binary_rate < q.rate);
        if (q.k == 2) CHECK(std::abs(q.binary_rate - q.rate) < 1e-12);
    }
}

TEST_CASE("type minimization") {
    const auto rep = minimize_type(span(GeneratorSpec{MixedGroupType({{6, 1}}), {{3}}}));
    CHECK(rep.type.to_string() == "Z2^1");
    CHECK(rep.blocks[0].scale == 3);
    CHECK_FALSE(rep.any_evenness_restored());

    const auto odd = minimize_type(span(GeneratorSpec{MixedGroupType({{6, 1}}), {{2}}}));
    CHECK(odd.type.to_string() == "Z6^1");
    CHECK(odd.blocks[0].evenness_restored);

    const auto z8 = minimize_type(span(GeneratorSpec{MixedGroupType({{8, 2}, {6, 1}}), {{2, 4, 3}}}));
    CHECK(z8.type.to_string() == "Z4^2 x Z2^1");

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto code = span(random_spec(rng));
        const auto m = minimize_type(code);
        const auto small = rescale_to_minimal(code, m);
        CHECK(small.size() == code.size());
        for (std::size_t j = 0; j < m.blocks.size(); ++j) {
            CHECK(m.blocks[j].reduced_modulus % 2 == 0);
            CHECK(m.blocks[j].reduced_modulus * m.blocks[j].scale == code.type().block(j).modulus);
        }
        // Rescaling is a group isomorphism onto a subgroup of the minimized type.
        const auto& c = code.codewords();
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            const auto sum = mixed_add(code.type(), c[i], c[i + 1]);
            MixedVector scaled_sum = sum;
            std::size_t pos = 0;
            for (std::size_t j = 0; j < m.blocks.size(); ++j)
                for (int l = 0; l < m.type.block(j).length; ++l, ++pos) scaled_sum[pos] /= m.blocks[j].scale;
            CHECK(small.contains(scaled_sum));
        }
    }
}
