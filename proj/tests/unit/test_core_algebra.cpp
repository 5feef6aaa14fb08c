#include <catch_amalgamated.hpp>

#include <random>

#include <z2k/core_algebra.hpp>
#include <z2k/binary_word.hpp>
#include <z2k/permutation.hpp>

using namespace z2k;

namespace {

// Lee weight as the length of the shortest walk from 0 to v on the cycle Z_m.
int walk_length(int v, int m) {
    int steps = 0;
    for (int up = 0, down = 0; up != v && down != v; ++steps) {
        up = (up + 1) % m;
        down = (down - 1 + m) % m;
    }
    return v == 0 ? 0 : steps;
}

}  // namespace

TEST_CASE("residues reduce into [0, m)") {
    CHECK(Residue(7, 6).value() == 1);
    CHECK(Residue(-1, 6).value() == 5);
    CHECK(Residue(-13, 4).value() == 3);
    CHECK(Residue(5, 10).half() == 5);
    CHECK_THROWS_AS(Residue(1, 5), InvalidModulus);
    CHECK_THROWS_AS(Residue(1, 0), InvalidModulus);
    CHECK_THROWS_AS(Residue(1, 4) + Residue(1, 6), ModulusMismatch);
}

TEST_CASE("lee weight agrees with walk length on the cycle") {
    for (int m = 2; m <= 32; m += 2)
        for (int v = 0; v < m; ++v) {
            CAPTURE(m, v);
            CHECK(lee_weight(v, m) == walk_length(v, m));
            CHECK(lee_weight(Residue(v, m)) == lee_weight(Residue(-v, m)));
        }
}

TEST_CASE("residue group laws") {
    for (int m = 2; m <= 12; m += 2)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const Residue x(a, m), y(b, m);
                CHECK((x + y).value() == (a + b) % m);
                CHECK((x - y + y).value() == a);
                CHECK((x + -x).value() == 0);
                CHECK(lee_distance(x, y) == lee_distance(y, x));
            }
}

TEST_CASE("vectors validate their shape") {
    CHECK_THROWS_AS(ZkVector(4, {}), LengthMismatch);
    CHECK_THROWS_AS(ZkVector(4, {0, 4}), OutOfRange);
    CHECK_THROWS_AS(ZkVector(4, {-1}), OutOfRange);
    CHECK_THROWS_AS(ZkVector(3, {0}), InvalidModulus);
    CHECK_THROWS_AS(ZkVector(4, {1}) + ZkVector(4, {1, 2}), LengthMismatch);
    CHECK_THROWS_AS(ZkVector(4, {1}) + ZkVector(6, {1}), ModulusMismatch);
    CHECK(ZkVector::zero(6, 3).is_zero());
}

TEST_CASE("lee metric on vectors: random property checks") {
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 * static_cast<int>(1 + rng() % 8);
        const std::size_t n = 1 + rng() % 6;
        auto draw = [&] {
            std::vector<int> c(n);
            for (auto& x : c) x = static_cast<int>(rng() % static_cast<unsigned>(m));
            return ZkVector(m, c);
        };
        const auto u = draw(), v = draw(), w = draw();
        CHECK(u + v == v + u);
        CHECK((u + v) + w == u + (v + w));
        CHECK(vector_lee_distance(u, w) <= vector_lee_distance(u, v) + vector_lee_distance(v, w));
        CHECK(vector_lee_weight(u) >= vector_symbol_weight(u));
        CHECK(vector_lee_weight(u) <= static_cast<int>(n) * (m / 2));
        int sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += walk_length(u[i], m);
        CHECK(vector_lee_weight(u) == sum);
    }
}

TEST_CASE("binary words") {
    const auto w = BinaryWord::from_string("1011000");
    CHECK(w.size() == 7);
    CHECK(w.weight() == 3);
    CHECK(w.to_string() == "1011000");
    CHECK(w.to_integer() == 0b1011000);
    CHECK(BinaryWord::from_integer(0b1011000, 7) == w);
    CHECK(w.slice(2, 3).to_string() == "110");
    CHECK(concat(BinaryWord::from_string("10"), BinaryWord::from_string("01")).to_string() == "1001");
    CHECK(hamming_distance(w, BinaryWord::from_string("1010100")) == 2);
    CHECK_THROWS_AS(BinaryWord::from_string("10a"), Error);
    CHECK_THROWS_AS(w + BinaryWord::from_string("1"), LengthMismatch);
    for (std::uint64_t x = 0; x < 256; ++x) CHECK(BinaryWord::from_integer(x, 8).to_integer() == x);
}

TEST_CASE("coordinate permutations") {
    const auto id = CoordinatePermutation::identity(4);
    CHECK(id.is_identity());
    CHECK_THROWS_AS(CoordinatePermutation({0, 0, 1}), Error);

    // Destination convention: out[images[p]] = w[p].
    const CoordinatePermutation p({1, 2, 0});
    CHECK(p.apply(BinaryWord::from_string("100")).to_string() == "010");
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.pow(3).is_identity());
    CHECK(p.pow(-1) == p.inverse());

    // a * b applies b first.
    const CoordinatePermutation a({1, 0, 2}), b({0, 2, 1});
    const auto w = BinaryWord::from_string("110");
    CHECK((a * b).apply(w) == a.apply(b.apply(w)));

    // Cycle (1 3 2) sends position 1 to 3, 3 to 2, 2 to 1.
    const auto c = CoordinatePermutation::from_cycle(3, {1, 3, 2});
    CHECK(c.apply(BinaryWord::from_string("100")).to_string() == "001");
    CHECK(c.apply(BinaryWord::from_string("010")).to_string() == "100");

    const auto s = direct_sum(p, CoordinatePermutation::identity(2));
    CHECK(s.apply(BinaryWord::from_string("10011")).to_string() == "01011");
}

TEST_CASE("permutations preserve weight and distance") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        std::vector<std::size_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        const CoordinatePermutation p(img);
        const auto x = BinaryWord::from_integer(rng(), n), y = BinaryWord::from_integer(rng(), n);
        CHECK(p.apply(x).weight() == x.weight());
        CHECK(hamming_distance(p.apply(x), p.apply(y)) == hamming_distance(x, y));
        CHECK(p.apply(x + y) == p.apply(x) + p.apply(y));
    }
}
