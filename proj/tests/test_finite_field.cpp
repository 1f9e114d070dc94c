#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dihedral/finite_field.hpp>

using namespace dihedral;

// F_4 with modulus x^2 + x + 1: indices 0, 1, 2 (= a), 3 (= a + 1 = a^2).
// Frozen tables derived by hand from a^2 = a + 1.
TEST_CASE("F4 arithmetic against hand tables") {
    auto F = make_field(2, 2);
    REQUIRE(F->order() == 4);
    REQUIRE(F->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    REQUIRE(F->generator() == 2);

    const std::uint32_t a = 2, a2 = 3;
    // addition is coefficientwise xor
    CHECK(F->add(a, 1) == a2);
    CHECK(F->add(a, a) == 0);
    CHECK(F->add(a2, a) == 1);
    // multiplication: a * a = a + 1, a * a^2 = 1
    CHECK(F->mul(a, a) == a2);
    CHECK(F->mul(a, a2) == 1);
    CHECK(F->mul(a2, a2) == a);
    CHECK(F->inv(a) == a2);
    CHECK(F->element_order(a) == 3);
    CHECK(F->log(a) == 1);
    CHECK(F->log(a2) == 2);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 6}, {5, 3}}) {
        auto F = make_field(p, k);
        for (int t = 0; t < 200; ++t) {
            const auto x = static_cast<std::uint32_t>(rng() % F->order());
            const auto y = static_cast<std::uint32_t>(rng() % F->order());
            const auto z = static_cast<std::uint32_t>(rng() % F->order());
            CHECK(F->add(x, y) == F->add(y, x));
            CHECK(F->mul(x, y) == F->mul(y, x));
            CHECK(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
            CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->add(x, F->neg(x)) == 0);
            if (x) CHECK(F->mul(x, F->inv(x)) == 1);
            // Frobenius is additive
            const auto frob = [&](std::uint32_t v) { return F->pow(v, static_cast<std::int64_t>(p)); };
            CHECK(frob(F->add(x, y)) == F->add(frob(x), frob(y)));
        }
    }
}

TEST_CASE("generator order and log/exp roundtrip") {
    auto F = make_field(2, 10); // F_1024
    CHECK(multiplicative_order(F->generator_element()) == 1023);
    auto F64 = make_field(2, 6);
    for (std::uint32_t v = 1; v < 64; ++v) {
        CHECK(F64->pow(F64->generator(), F64->log(v)) == v);
        CHECK(63 % F64->element_order(v) == 0);
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_field(4, 1), error);        // characteristic must be prime
    CHECK_THROWS_AS(make_field(6, 2), error);
    CHECK_THROWS_AS(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), error); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(make_field(2, 0), error);
    auto F = make_field(3, 1);
    CHECK_THROWS_AS(F->inv(0), error);
    CHECK_THROWS_AS(F->log(0), error);
}

TEST_CASE("explicit modulus is honored and verified") {
    auto F = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1, irreducible mod 3
    CHECK(F->order() == 9);
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // the root i of x^2+1 has order 4; the stored generator must still span F_9*
    CHECK(F->element_order(F->generator()) == 8);
}

TEST_CASE("field instances are cached") {
    CHECK(make_field(2, 2).get() == make_field(2, 2).get());
    CHECK(make_field(2, 2).get() != make_field(2, 3).get());
}

TEST_CASE("primitive root of unity") {
    auto F = make_field(2, 10);
    auto w = primitive_root_of_unity(*F, 11);
    CHECK(multiplicative_order(w) == 11);
    CHECK_THROWS_AS(primitive_root_of_unity(*F, 7), error); // 7 does not divide 1023
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    auto S = make_field(2, 2);
    auto E = make_field(2, 10);
    SubfieldEmbedding emb(S, E);
    CHECK(emb.map(0) == 0);
    CHECK(emb.map(1) == 1);
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) {
            CHECK(emb.map(S->add(x, y)) == E->add(emb.map(x), emb.map(y)));
            CHECK(emb.map(S->mul(x, y)) == E->mul(emb.map(x), emb.map(y)));
        }
    // embedded elements keep their multiplicative order
    CHECK(E->element_order(emb.map(S->generator())) == 3);
    // characteristic mismatch rejected
    CHECK_THROWS_AS(SubfieldEmbedding(make_field(3, 1), E), error);
    CHECK_THROWS_AS(SubfieldEmbedding(make_field(2, 3), E), error); // 3 does not divide 10
}

TEST_CASE("large field fallback without tables") {
    auto F = make_field(2, 28); // needed by splitting fields for m = 29
    CHECK_FALSE(F->has_tables());
    CHECK(F->order() == (1ull << 28));
    const std::uint32_t g = F->generator();
    CHECK(F->element_order(g) == F->order() - 1);
    CHECK(F->mul(g, F->inv(g)) == 1);
    CHECK(F->pow(g, static_cast<std::int64_t>(F->order() - 1)) == 1);
}

TEST_CASE("digits roundtrip") {
    auto F = make_field(3, 4);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto v = static_cast<std::uint32_t>(rng() % F->order());
        CHECK(F->from_digits(F->digits(v)) == v);
    }
}

TEST_CASE("field element wrapper guards against mixing fields") {
    auto F4 = make_field(2, 2);
    auto F8 = make_field(2, 3);
    FieldElement x = F4->element(2), y = F8->element(2);
    CHECK_THROWS_AS(x + y, error);
    CHECK((x * x).value() == 3);
    CHECK((x + x).is_zero());
}
