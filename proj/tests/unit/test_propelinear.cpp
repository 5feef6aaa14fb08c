#include <catch_amalgamated.hpp>

#include <random>

#include <z2k/code_lattice.hpp>
#include <z2k/detail/parallel.hpp>
#include <z2k/propelinear.hpp>

using namespace z2k;

namespace {

SpannedCode make(std::vector<Block> blocks, std::vector<MixedVector> gens) {
    return span(GeneratorSpec{MixedGroupType(std::move(blocks)), std::move(gens)});
}

std::vector<SpannedCode> corpus() {
    std::vector<SpannedCode> out;
    out.push_back(make({{4, 2}}, {{1, 2}}));
    out.push_back(make({{6, 2}}, {{1, 0}, {0, 1}}));
    out.push_back(make({{8, 2}}, {{2, 3}}));
    out.push_back(make({{6, 1}}, {{3}}));
    out.push_back(make({{6, 1}}, {{1}}));
    out.push_back(make({{6, 1}, {2, 2}}, {{1, 1, 0}, {0, 0, 1}}));
    out.push_back(make({{10, 1}, {4, 1}}, {{2, 1}}));
    return out;
}

bool by_name(const PropelinearReport& r, const std::string& name) {
    for (const auto& a : r.axioms)
        if (a.name == name) return a.passed;
    FAIL("missing axiom " << name);
    return false;
}

}  // namespace

TEST_CASE("star product on the image is Phi of the sum") {
    for (const auto& code : corpus()) {
        const auto image = binary_image(code);
        const auto& type = code.type();
        for (const auto& u : code.codewords())
            for (const auto& v : code.codewords())
                CHECK(star(image, mixed_phi(type, u), mixed_phi(type, v)) == mixed_phi(type, mixed_add(type, u, v)));
    }
}

TEST_CASE("images of spanned codes are propelinear") {
    for (const auto& code : corpus()) {
        const auto rep = check_propelinear(binary_image(code));
        CAPTURE(code.type().to_string(), code.size());
        CHECK(rep.passed());
        for (const auto& a : rep.axioms) CHECK(a.exhaustive);
    }
}

TEST_CASE("inverse of a codeword is Phi of the negation") {
    for (const auto& code : corpus()) {
        const auto image = binary_image(code);
        for (const auto& u : code.codewords())
            CHECK(codeword_inverse(image, mixed_phi(code.type(), u)) == mixed_phi(code.type(), mixed_negate(code.type(), u)));
    }
}

TEST_CASE("broken permutation assignments are caught") {
    // Phi(Z_6) with pi_{phi(1)} replaced by the identity.
    const auto code = make({{6, 1}}, {{1}});
    std::vector<PropelinearCode::Entry> entries;
    for (const auto& u : code.codewords()) {
        auto p = mixed_pi(code.type(), u);
        if (u[0] == 1) p = CoordinatePermutation::identity(3);
        entries.emplace_back(mixed_phi(code.type(), u), p);
    }
    const auto rep = check_propelinear(PropelinearCode(3, entries));
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(by_name(rep, "closure"));
    REQUIRE(rep.axiom("closure").counterexample);
    CHECK(rep.axiom("closure").counterexample->words.size() == 3);
}

TEST_CASE("a code without the zero word fails the identity axiom") {
    const auto code = PropelinearCode::with_identity_permutations(2, {BinaryWord::from_string("01"), BinaryWord::from_string("10")});
    const auto rep = check_propelinear(code);
    CHECK_FALSE(by_name(rep, "identity"));
    CHECK_FALSE(by_name(rep, "closure"));
}

TEST_CASE("linear binary codes are propelinear with identity permutations") {
    const auto code = PropelinearCode::with_identity_permutations(
        3, {BinaryWord::from_string("000"), BinaryWord::from_string("011"), BinaryWord::from_string("101"), BinaryWord::from_string("110")});
    CHECK(check_propelinear(code).passed());
    CHECK(check_translation_invariant(code).invariant);
}

TEST_CASE("construction rejects malformed entries") {
    CHECK_THROWS_AS(PropelinearCode::with_identity_permutations(2, {BinaryWord::from_string("00"), BinaryWord::from_string("00")}), Error);
    CHECK_THROWS_AS(PropelinearCode::with_identity_permutations(2, {BinaryWord::from_string("000")}), LengthMismatch);
    const auto code = PropelinearCode::with_identity_permutations(2, {BinaryWord::from_string("00")});
    CHECK_THROWS_AS(code.perm_of(BinaryWord::from_string("11")), NotACodeword);
}

TEST_CASE("Hamming compatibility holds exhaustively on the corpus") {
    for (const auto& code : corpus()) {
        const auto rep = check_hamming_compatible(binary_image(code));
        CHECK(rep.passed);
        CHECK(rep.exhaustive);
        CHECK(rep.checked == (std::uint64_t{1} << code.type().binary_length()) * code.size());
    }
}

TEST_CASE("Hamming compatibility detects a non-permutational action") {
    const auto code = binary_image(make({{6, 1}}, {{1}}));
    // x acts by v -> pi_x(x + v): distance d(x, that) is not wt(v) in general.
    const Action bad = [&](const BinaryWord& x, const BinaryWord& v) { return code.perm_of(x).apply(x + v); };
    const auto rep = check_hamming_compatible(code.words(), code.length(), bad);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.witness);
    const auto& [x, v] = *rep.witness;
    CHECK(hamming_distance(x, bad(x, v)) != v.weight());
    CHECK(rep.witness_distance == hamming_distance(x, bad(x, v)));
}

TEST_CASE("codeword actions are isometries") {
    for (const auto& code : corpus()) {
        const auto rep = check_isometry(binary_image(code));
        CHECK(rep.passed);
    }
}

TEST_CASE("translation invariance: Z_2 and Z_4 yes, Z_2k with k > 2 no") {
    CHECK(check_translation_invariant(binary_image(make({{2, 1}}, {{1}}))).invariant);
    CHECK(check_translation_invariant(binary_image(make({{4, 1}}, {{1}}))).invariant);
    CHECK(check_translation_invariant(binary_image(make({{4, 2}}, {{1, 0}, {0, 1}}))).invariant);
    for (int k = 3; k <= 6; ++k) {
        const auto image = binary_image(make({{2 * k, 1}}, {{1}}));
        CheckOptions opt;
        opt.probe_first = {translation_witness_z(k)};
        const auto rep = check_translation_invariant(image, opt);
        REQUIRE_FALSE(rep.invariant);
        const auto& w = *rep.witness;
        CHECK(w.u == translation_witness_z(k));
        CHECK(w.x == phi(0, k));
        CHECK(w.y == phi(1, k));
        CHECK(w.distance_before == 1);
        CHECK(w.distance_after == 3);
        CHECK(hamming_distance(star(image, w.x, w.u), star(image, w.y, w.u)) == 3);
        // Also found without the probe.
        CHECK_FALSE(check_translation_invariant(image).invariant);
    }
    CHECK_THROWS_AS(translation_witness_z(2), OutOfRange);
}

TEST_CASE("translation check returns the first failure in scan order") {
    const auto image = binary_image(make({{6, 1}}, {{1}}));
    const auto rep = check_translation_invariant(image);
    REQUIRE(rep.witness);
    // Brute force in the same order: u ascending, then x, then y.
    for (std::uint64_t u = 0; u < 8; ++u)
        for (const auto& x : image.words())
            for (const auto& y : image.words()) {
                const auto uw = BinaryWord::from_integer(u, 3);
                if (hamming_distance(x, y) != hamming_distance(star(image, x, uw), star(image, y, uw))) {
                    CHECK(rep.witness->u == uw);
                    CHECK(rep.witness->x == x);
                    CHECK(rep.witness->y == y);
                    return;
                }
            }
    FAIL("no failure found by brute force");
}

TEST_CASE("sampling is deterministic in the seed and thread count") {
    const auto code = binary_image(make({{6, 1}, {2, 4}}, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CheckOptions opt;
    opt.exhaustive_limit = 16;
    opt.sample_size = 2000;
    const auto a = check_translation_invariant(code, opt);
    opt.threads = 4;
    const auto b = check_translation_invariant(code, opt);
    CHECK_FALSE(a.exhaustive);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->u == b.witness->u);
    CHECK(a.witness->x == b.witness->x);
    CHECK(a.witness->y == b.witness->y);

    const auto h1 = check_hamming_compatible(code, opt);
    opt.threads = 1;
    const auto h2 = check_hamming_compatible(code, opt);
    CHECK(h1.passed);
    CHECK(h1.checked == h2.checked);
    CHECK_FALSE(h1.exhaustive);
    const auto p = check_propelinear(code, opt);
    CHECK(p.passed());
}

TEST_CASE("parallel first_failure returns the minimal index") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t count = 3000 + rng() % 100000;
        const std::uint64_t a = rng() % count, b = rng() % count;
        auto ok = [&](std::uint64_t i) { return i != a && i != b; };
        for (unsigned t : {1U, 2U, 3U, 8U}) CHECK(detail::first_failure(count, t, ok) == std::min(a, b));
    }
    CHECK_FALSE(detail::first_failure(5000, 4, [](std::uint64_t) { return true; }));
}
