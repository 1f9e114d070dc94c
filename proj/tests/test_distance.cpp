#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dihedral/analysis.hpp>
#include <dihedral/distance.hpp>
#include <dihedral/format.hpp>

using namespace dihedral;

namespace {
DihedralSpec spec_of(const char* preset) { return spec_from_preset(find_preset(preset)); }

unsigned weight(const std::vector<std::uint32_t>& v) {
    unsigned w = 0;
    for (auto x : v)
        if (x) ++w;
    return w;
}
} // namespace

TEST_CASE("exhaustive distance of the [22,12,6] code") {
    LinearCode C = code_from_generator(spec_of("d22"));
    DistanceResult res = min_distance_exhaustive(C);
    CHECK(res.d == 6);
    CHECK(res.exact());
    CHECK(res.method == "exhaustive");
    CHECK(res.work == (1u << 12) - 1);
    CHECK(weight(res.witness) == 6);
    CHECK(C.gen.contains(res.witness));
}

TEST_CASE("bch lower bound") {
    CHECK(bch_lower_bound(spec_of("d22")) == 4);
    CHECK(bch_lower_bound(spec_of("d86a")) == 8);
    // a generator with no roots among the omega powers gives the vacuous bound
    auto ctx = DihedralContext::make(2, 11);
    DihedralSpec unit(ctx, Polynomial::one(ctx->ext));
    CHECK(bch_lower_bound(unit) == 1);
    CHECK_THROWS_AS(bch_lower_bound(DihedralSpec(ctx, Polynomial::zero(ctx->ext))), error);
    // the bound is read cyclically: a window through exponent 0 still counts
    CHECK(bch_lower_bound(binary_bch_generator(11, 10, 3)) >= 3);
}

TEST_CASE("exhaustive guards") {
    LinearCode C = code_from_generator(spec_of("d22"));
    CHECK_THROWS_AS(min_distance_exhaustive(C, 8), error); // k = 12 over the cap
    auto F = make_field(2, 1);
    LinearCode empty = code_from_rows(F, 6, {{0, 0, 0, 0, 0, 0}});
    CHECK_THROWS_AS(min_distance_exhaustive(empty), error);
    CHECK_THROWS_AS(min_distance_bz(empty), error);
}

TEST_CASE("ternary tetracode") {
    // [4, 2, 3] self-dual code over F_3, parameters known in closed form
    auto F = make_field(3, 1);
    LinearCode C = code_from_rows(F, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(min_distance_exhaustive(C).d == 3);
    DistanceResult bz = min_distance_bz(C);
    CHECK(bz.d == 3);
    CHECK(bz.exact());
}

TEST_CASE("brouwer-zimmermann certifies the degree-7 generator code") {
    LinearCode C = code_from_generator(spec_of("d86b"));
    DistanceResult res = min_distance_bz(C);
    CHECK(res.d == 5);
    CHECK(res.exact());
    CHECK(res.method == "brouwer_zimmermann");
    CHECK(weight(res.witness) == 5);
    CHECK(C.gen.contains(res.witness));
}

TEST_CASE("budget exhaustion leaves an uncertified upper bound") {
    LinearCode C = code_from_generator(spec_of("d86b"));
    DistanceResult res = min_distance_bz(C, 100);
    CHECK(res.work <= 100);
    CHECK(res.upper_certified);
    CHECK_FALSE(res.exact());
    CHECK(res.d >= 5); // the true distance is a lower bound for any upper bound
}

TEST_CASE("early exit at a target lower bound") {
    LinearCode C = code_from_generator(spec_of("d86a"));
    DistanceResult res = min_distance_bz(C, 0, 4);
    CHECK(res.lower_bound >= 4);
    CHECK(res.work < 1000000); // stops long before the full weight-8 sweep
}

TEST_CASE("exhaustive agrees with brouwer-zimmermann on random codes") {
    std::mt19937_64 rng(99);
    auto F2 = make_field(2, 1);
    auto F3 = make_field(3, 1);
    for (int t = 0; t < 30; ++t) {
        const bool ternary = t % 3 == 2;
        auto F = ternary ? F3 : F2;
        const unsigned n = 8 + rng() % 17;
        const unsigned kreq = 1 + rng() % 8;
        std::vector<std::vector<std::uint32_t>> rows(kreq, std::vector<std::uint32_t>(n));
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<std::uint32_t>(rng() % F->order());
        LinearCode C = code_from_rows(F, n, rows);
        if (C.k() == 0) continue;
        DistanceResult a = min_distance_exhaustive(C, 16);
        DistanceResult b = min_distance_bz(C);
        CHECK(a.d == b.d);
        CHECK(b.exact());
    }
}

TEST_CASE("sampled weight bound is reproducible and sound") {
    LinearCode C = code_from_generator(spec_of("d22"));
    const unsigned w1 = weight_upper_bound_sample(C, 200, 42);
    CHECK(w1 == weight_upper_bound_sample(C, 200, 42));
    CHECK(w1 >= 6);
    CHECK(w1 <= 22);
}

TEST_CASE("distance results feed the report pipeline") {
    DistanceOptions opts;
    auto out = analyze_spec(spec_of("d22"), opts);
    CHECK(out.report.d == 6);
    CHECK(out.report.d_method == "exhaustive"); // auto picks full enumeration at k = 12
    opts.method = "bz";
    CHECK(analyze_spec(spec_of("d22"), opts).report.d_method == "brouwer_zimmermann");
    opts.method = "bound-only";
    auto bo = analyze_spec(spec_of("d22"), opts);
    CHECK(bo.report.d_method == "bound_only");
    CHECK(bo.report.d_lower_bound == 4);
    CHECK_FALSE(bo.report.d_upper_certified);
}
