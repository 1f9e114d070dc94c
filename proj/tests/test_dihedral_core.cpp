#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <dihedral/analysis.hpp>
#include <dihedral/dihedral.hpp>
#include <dihedral/format.hpp>

using namespace dihedral;

namespace {
DihedralSpec d22_spec() {
    auto ctx = DihedralContext::make(2, 11);
    return DihedralSpec(ctx, parse_polynomial(ctx->ext, "1,a^2,1,1,a,1"));
}
} // namespace

TEST_CASE("context basics") {
    auto ctx = DihedralContext::make(2, 11);
    CHECK(ctx->n() == 22);
    CHECK(ctx->coprime());
    CHECK(ctx->r() == 5); // (m-1)/2 in the binary case
    CHECK_THROWS_AS(DihedralContext::make(2, 2), error);
    CHECK_THROWS_AS(DihedralContext::make(6, 5), error); // 6 is not a prime power
    // q*r = -1 mod m whenever gcd(m, q) = 1
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 7}, {3, 8}, {4, 9}, {5, 11}, {9, 7}}) {
        auto c = DihedralContext::make(q, m);
        CHECK((q * c->r()) % m == m - 1);
    }
}

TEST_CASE("conjugation on F4 by hand") {
    auto ctx = DihedralContext::make(2, 3);
    // tau = a0 + a1*alpha: conj swaps the two basis coordinates
    CHECK(ctx->conj(0) == 0);
    CHECK(ctx->conj(1) == 2);     // 1 -> alpha
    CHECK(ctx->conj(2) == 1);     // alpha -> 1
    CHECK(ctx->conj(3) == 3);     // 1 + alpha is fixed
    for (std::uint32_t t = 0; t < 4; ++t)
        CHECK(ctx->conj(t) == ctx->conj_linearized(t));
}

TEST_CASE("fold and unfold") {
    auto ctx = DihedralContext::make(2, 3);
    std::vector<std::uint32_t> v{1, 0, 0, 1, 1, 1};
    auto w = fold(*ctx, v);
    CHECK(w == std::vector<std::uint32_t>{1, 2, 3}); // 1, alpha, 1 + alpha
    CHECK(unfold(*ctx, w) == v);
    CHECK_THROWS_AS(fold(*ctx, std::vector<std::uint32_t>{1, 0, 1}), error);
}

TEST_CASE("conjugate generator paths agree on the [22,12,6] generator") {
    DihedralSpec spec = d22_spec();
    Polynomial pbar = conjugate_generator(spec);
    CHECK(pbar == conjugate_generator_formula(spec));
    CHECK(pbar == conjugate_generator_char2(spec));
    // applying the conjugation twice returns the generator
    CHECK(conjugate_generator(DihedralSpec(spec.ctx, pbar)) == spec.gen);
    // beta' maps the unfolded generator onto the unfolded conjugate
    auto act = dihedral_action(11);
    std::vector<std::uint32_t> pv(spec.gen.coeffs());
    pv.resize(11, 0);
    std::vector<std::uint32_t> pbv(pbar.coeffs());
    pbv.resize(11, 0);
    CHECK(apply_perm(unfold(*spec.ctx, pv), act.beta_perm) == unfold(*spec.ctx, pbv));
}

TEST_CASE("code expansion of the [22,12,6] generator") {
    DihedralSpec spec = d22_spec();
    LinearCode C = code_from_generator(spec);
    CHECK(C.n == 22);
    CHECK(C.k() == 12);
    CHECK(dimension_lower_bound(spec) == 6);
    CHECK(static_cast<int>(C.k()) >= dimension_lower_bound(spec));
    CHECK(is_dihedral_invariant(C));
    CHECK(is_dihedral_invariant(dual_code(C)));
    CHECK(char2_containment(spec));
    // non-principal setting is rejected
    auto bad = DihedralContext::make(2, 4);
    CHECK_THROWS_AS(code_from_generator(DihedralSpec(bad, Polynomial::one(bad->ext))),
                    error);
}

TEST_CASE("dihedral action group relations") {
    for (unsigned m : {3u, 5u, 11u}) {
        auto act = dihedral_action(m);
        const unsigned n = 2 * m;
        auto compose = [&](const std::vector<unsigned>& f, const std::vector<unsigned>& g) {
            // apply f first, then g
            std::vector<unsigned> h(n);
            for (unsigned j = 0; j < n; ++j) h[j] = g[f[j]];
            return h;
        };
        std::vector<unsigned> id(n);
        std::iota(id.begin(), id.end(), 0u);
        // alpha' has order m
        std::vector<unsigned> p = id;
        for (unsigned t = 0; t < m; ++t) p = compose(p, act.alpha_perm);
        CHECK(p == id);
        // beta' is an involution
        CHECK(compose(act.beta_perm, act.beta_perm) == id);
        // beta alpha beta = alpha^{m-1}
        std::vector<unsigned> lhs = compose(compose(act.beta_perm, act.alpha_perm), act.beta_perm);
        std::vector<unsigned> rhs = id;
        for (unsigned t = 0; t + 1 < m; ++t) rhs = compose(rhs, act.alpha_perm);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("invariance detects a non-dihedral code") {
    auto F = make_field(2, 1);
    std::vector<std::uint32_t> e0(6, 0);
    e0[0] = 1;
    LinearCode C = code_from_rows(F, 6, {e0});
    CHECK_FALSE(is_dihedral_invariant(C));
    CHECK_THROWS_AS(is_dihedral_invariant(code_from_rows(F, 4, {{1, 0, 0, 0}})), error);
}

TEST_CASE("binary condition reports") {
    auto r11 = binary_condition(11);
    CHECK(r11.holds);
    CHECK(r11.s.value() == 2); // 2^5 = 32 = -1 mod 11
    CHECK(r11.s2 == 10);
    CHECK(r11.is_prime_m);
    CHECK_FALSE(binary_condition(7).holds);
    // m = 21: s2 = 6 = 2 mod 4 yet no odd power of 2 reaches -1 (composite exception)
    auto r21 = binary_condition(21);
    CHECK(r21.s2 == 6);
    CHECK_FALSE(r21.holds);
    CHECK_THROWS_AS(binary_condition(8), error);
}

TEST_CASE("binary construction at m=11") {
    // window starting at b=3 stays inside one coset: degree 5
    DihedralSpec s3 = binary_bch_generator(11, 3, 4);
    CHECK(s3.gen.degree() == 5);
    LinearCode C = code_from_generator(s3);
    CHECK(C.k() == 12);
    // window starting at b=1 touches both nonzero cosets: degree 10
    CHECK(binary_bch_generator(11, 1, 4).gen.degree() == 10);
    CHECK_THROWS_AS(binary_bch_generator(7, 1, 3), error);  // condition (c) fails at 7
    CHECK_THROWS_AS(binary_bch_generator(11, 0, 4), error); // swallows every coset
    CHECK_THROWS_AS(binary_bch_generator(11, 1, 1), error); // delta out of range
}

TEST_CASE("general construction places the three root families") {
    DihedralSpec spec = bch_dihedral_generator(3, 5, 1, 3);
    auto rctx = spec.ctx->roots();
    auto roots = roots_among_powers(spec.gen, *rctx);
    const unsigned m = 5, r = spec.ctx->r();
    for (unsigned j = 0; j <= 1; ++j) {
        const unsigned e = (1 + j) % m;
        for (unsigned want : {e, (m - e) % m, (e * r) % m})
            CHECK(std::binary_search(roots.begin(), roots.end(), want));
    }
    // generator divides x^m - 1
    CHECK(divmod(xm_minus_one(spec.ctx->ext, m), spec.gen).second.is_zero());
    CHECK_THROWS_AS(bch_dihedral_generator(2, 4, 1, 2), error); // gcd(m, q) != 1
}

TEST_CASE("star product and duality relations") {
    DihedralSpec spec = d22_spec();
    LinearCode C = code_from_generator(spec);
    LinearCode D = dual_code(C);
    CHECK(D.k() == C.n - C.k());
    Polynomial qpoly(spec.ctx->ext, fold(*spec.ctx, D.gen.row(0)));
    CHECK(verify_dual_relations(spec, qpoly));
    // a generator of the code itself is not *-orthogonal to the code
    CHECK_FALSE(verify_dual_relations(spec, spec.gen));
}

TEST_CASE("two-generator plumbing matches the principal span") {
    DihedralSpec spec = d22_spec();
    LinearCode one = code_from_generator(spec);
    LinearCode two = code_from_generators(spec.ctx, {spec.gen, spec.gen});
    CHECK(two.k() == one.k());
    for (unsigned i = 0; i < one.k(); ++i) CHECK(two.gen.contains(one.gen.row(i)));
    // adding a second generator can only grow the span
    Polynomial extra = parse_polynomial(spec.ctx->ext, "1,1");
    LinearCode sum = code_from_generators(spec.ctx, {spec.gen, extra});
    CHECK(sum.k() >= one.k());
}

TEST_CASE("spec serialization roundtrip") {
    DihedralSpec spec = d22_spec();
    const std::string line = format_spec(spec, true);
    CHECK(line == "q=2 m=11 p=1,a^2,1,1,a,1 alpha-modulus=1,1,1");
    DihedralSpec back = parse_spec(line);
    CHECK(back.ctx->q == 2);
    CHECK(back.ctx->m == 11);
    CHECK(back.gen == spec.gen);
    CHECK_THROWS_AS(parse_spec("q=2 m=11"), parse_error);
    CHECK_THROWS_AS(parse_spec("q=2 m=11 p=1 bogus=3"), parse_error);
    CHECK_THROWS_AS(parse_spec("q=2 m=11 p=1,a alpha-modulus=1,0,1"), error);
}
