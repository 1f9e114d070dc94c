#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dihedral/cyclic.hpp>
#include <dihedral/format.hpp>
#include <dihedral/polynomial.hpp>

using namespace dihedral;

namespace {
Polynomial random_poly(std::mt19937_64& rng, std::shared_ptr<const FiniteField> F, unsigned maxd) {
    std::vector<std::uint32_t> c(1 + rng() % (maxd + 1));
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % F->order());
    return Polynomial(F, std::move(c));
}
} // namespace

TEST_CASE("text roundtrip over F4") {
    auto F = make_field(2, 2);
    const std::string s = "1,a^2,1,1,a,1";
    Polynomial p = parse_polynomial(F, s);
    CHECK(p.degree() == 5);
    CHECK(p.coeffs() == std::vector<std::uint32_t>{1, 3, 1, 1, 2, 1});
    CHECK(format_polynomial(p) == s);
    CHECK(format_polynomial(Polynomial::zero(F)) == "0");
    CHECK_THROWS_AS(parse_polynomial(F, "1,c,1"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(F, "1,,1"), parse_error);
    CHECK(parse_polynomial(F, " 1 , a ").coeffs() == std::vector<std::uint32_t>{1, 2});
}

// x^5 + x + 1 = (x^2 + x + 1)(x^3 + x^2 + 1) over F_2, checked by hand.
TEST_CASE("division with known factorization") {
    auto F = make_field(2, 1);
    Polynomial f(F, {1, 1, 0, 0, 0, 1});
    Polynomial g(F, {1, 1, 1});
    auto [quot, rem] = divmod(f, g);
    CHECK(rem.is_zero());
    CHECK(quot.coeffs() == std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK_THROWS_AS(divmod(f, Polynomial::zero(F)), error);
}

TEST_CASE("gcd and lcm on known factors") {
    auto F = make_field(2, 1);
    Polynomial a(F, {1, 0, 0, 1}); // x^3+1 = (x+1)(x^2+x+1)
    Polynomial b(F, {1, 0, 1});    // x^2+1 = (x+1)^2
    CHECK(poly_gcd(a, b).coeffs() == std::vector<std::uint32_t>{1, 1});
    Polynomial c(F, {1, 1});
    Polynomial d(F, {1, 1, 1});
    CHECK(poly_lcm(c, d).coeffs() == std::vector<std::uint32_t>{1, 0, 0, 1});
    CHECK(poly_gcd(Polynomial::zero(F), Polynomial::zero(F)).is_zero());
    CHECK(poly_lcm(Polynomial::zero(F), c).is_zero());
}

TEST_CASE("division identity on random polynomials") {
    std::mt19937_64 rng(3);
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {3, 2}}) {
        auto F = make_field(p, k);
        for (int t = 0; t < 100; ++t) {
            Polynomial f = random_poly(rng, F, 12);
            Polynomial g = random_poly(rng, F, 6);
            if (g.is_zero()) continue;
            auto [quot, rem] = divmod(f, g);
            CHECK(quot * g + rem == f);
            CHECK(rem.degree() < g.degree());
            Polynomial gg = poly_gcd(f, g);
            if (!gg.is_zero()) {
                CHECK(divmod(f, gg).second.is_zero());
                CHECK(divmod(g, gg).second.is_zero());
                Polynomial ll = poly_lcm(f, g);
                if (!f.is_zero()) {
                    CHECK(divmod(ll, f).second.is_zero());
                    CHECK(divmod(ll, g).second.is_zero());
                    // gcd * lcm = f * g up to a scalar
                    CHECK((gg * ll).monic() == (f * g).monic());
                }
            }
        }
    }
}

TEST_CASE("quotient ring helpers") {
    auto F = make_field(2, 1);
    CHECK(quotient_reduce(Polynomial::x_power(F, 5), 3).coeffs() == std::vector<std::uint32_t>{0, 0, 1});
    Polynomial f(F, {1, 1}); // x + 1
    CHECK(substitute_power(f, 2, 3).coeffs() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(xm_minus_one(F, 4).coeffs() == std::vector<std::uint32_t>{1, 0, 0, 0, 1});
    // substitution by a unit exponent permutes the nonzero coefficient count
    auto F4 = make_field(2, 2);
    Polynomial g = parse_polynomial(F4, "1,a,0,a^2,1");
    Polynomial h = substitute_power(substitute_power(g, 3, 7), 5, 7); // 3*5 = 15 = 1 mod 7
    std::vector<std::uint32_t> padded(g.coeffs());
    padded.resize(7, 0);
    CHECK(h == Polynomial(F4, padded));
}

TEST_CASE("evaluation") {
    auto F = make_field(2, 2);
    Polynomial f = parse_polynomial(F, "1,1,1"); // x^2 + x + 1 kills both generators of F_4*
    CHECK(f(F->element(2)).is_zero());
    CHECK(f(F->element(3)).is_zero());
    CHECK(f(F->element(1)).value() == 1);
}

TEST_CASE("cyclotomic cosets of 4 mod 11") {
    // 1 -> 4 -> 16=5 -> 20=9 -> 36=3 -> 12=1, worked by hand
    auto part = cyclotomic_cosets(11, 4);
    REQUIRE(part.cosets.size() == 3);
    CHECK(part.cosets[0] == std::vector<unsigned>{0});
    CHECK(part.cosets[1] == std::vector<unsigned>{1, 3, 4, 5, 9});
    CHECK(part.cosets[2] == std::vector<unsigned>{2, 6, 7, 8, 10});
    CHECK(coset_of(part, 7)[0] == 2);
    CHECK_THROWS_AS(cyclotomic_cosets(9, 3), error); // base shares a factor with m
}

TEST_CASE("cosets partition and are closed under the base") {
    for (unsigned m : {5u, 11u, 33u, 43u}) {
        auto part = cyclotomic_cosets(m, 4 % m);
        std::size_t total = 0;
        for (const auto& c : part.cosets) {
            total += c.size();
            for (unsigned x : c) {
                unsigned y = static_cast<unsigned>((static_cast<std::uint64_t>(x) * 4) % m);
                CHECK(std::binary_search(c.begin(), c.end(), y));
            }
        }
        CHECK(total == m);
    }
}

TEST_CASE("minimal polynomials multiply to x^m - 1") {
    auto F4 = make_field(2, 2);
    auto ctx = make_root_context(F4, 11);
    CHECK(ctx->t == 5);
    CHECK(ctx->big->order() == 1u << 10); // F_{4^5}
    Polynomial prod = Polynomial::one(F4);
    for (const auto& coset : ctx->cosets.cosets) {
        Polynomial mp = minimal_polynomial(*ctx, coset[0]);
        CHECK(mp.degree() == static_cast<int>(coset.size()));
        // roots are exactly the omega powers in the coset
        CHECK(roots_among_powers(mp, *ctx) == coset);
        prod = prod * mp;
    }
    CHECK(prod == xm_minus_one(F4, 11));
}

TEST_CASE("root context rejects m sharing a factor with q") {
    auto F4 = make_field(2, 2);
    CHECK_THROWS_AS(make_root_context(F4, 6), error);
}
