#ifndef DIHEDRAL_ANALYSIS_HPP
#define DIHEDRAL_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihedral.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "format.hpp"

namespace dihedral {

using ordered_json = nlohmann::ordered_json;

struct DistanceOptions {
    std::string method = "auto"; // auto | exhaustive | bz | bound-only
    unsigned exhaustive_cap = 28;
    std::uint64_t budget = 0; // 0 = unlimited
    std::uint64_t seed = 1;
};

/// Certified parameters and verification flags for one code.
struct AnalysisReport {
    int schema = 1;
    std::uint64_t q = 0;
    unsigned m = 0;
    std::string generator;
    unsigned n = 0;
    unsigned k = 0;
    unsigned d = 0; // exact when both certified flags hold, else best upper bound
    std::string d_method;
    unsigned d_lower_bound = 0;
    bool d_lower_certified = false;
    bool d_upper_certified = false;
    std::uint64_t d_work = 0;
    unsigned bch_bound = 0;
    int dim_bound = 0;
    bool dihedral_invariant = false;
    bool principal_guarantee = false;
    std::optional<bool> char2_containment_ok;
};

inline ordered_json report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["q"] = r.q;
    j["m"] = r.m;
    j["generator"] = r.generator;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["d_method"] = r.d_method;
    j["d_lower_bound"] = r.d_lower_bound;
    j["d_lower_certified"] = r.d_lower_certified;
    j["d_upper_certified"] = r.d_upper_certified;
    j["d_work"] = r.d_work;
    j["bch_bound"] = r.bch_bound;
    j["dim_bound"] = r.dim_bound;
    j["dihedral_invariant"] = r.dihedral_invariant;
    j["principal_guarantee"] = r.principal_guarantee;
    if (r.char2_containment_ok) j["char2_containment"] = *r.char2_containment_ok;
    return j;
}

inline std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "schema: " << r.schema << '\n'
        << "q: " << r.q << '\n'
        << "m: " << r.m << '\n'
        << "generator: " << r.generator << '\n'
        << "n: " << r.n << '\n'
        << "k: " << r.k << '\n'
        << "d: " << r.d << '\n'
        << "d_method: " << r.d_method << '\n'
        << "d_lower_bound: " << r.d_lower_bound << '\n'
        << "d_lower_certified: " << (r.d_lower_certified ? "true" : "false") << '\n'
        << "d_upper_certified: " << (r.d_upper_certified ? "true" : "false") << '\n'
        << "d_work: " << r.d_work << '\n'
        << "bch_bound: " << r.bch_bound << '\n'
        << "dim_bound: " << r.dim_bound << '\n'
        << "dihedral_invariant: " << (r.dihedral_invariant ? "true" : "false") << '\n'
        << "principal_guarantee: " << (r.principal_guarantee ? "true" : "false") << '\n';
    if (r.char2_containment_ok)
        out << "char2_containment: " << (*r.char2_containment_ok ? "true" : "false") << '\n';
    return out.str();
}

/// Distance of an expanded code under the configured policy.
inline DistanceResult run_distance(const LinearCode& C, const DistanceOptions& opts,
                                   unsigned bound_hint = 0) {
    const std::uint64_t q = C.field->order();
    std::string method = opts.method;
    if (method == "auto") {
        double bits = static_cast<double>(C.k()) * std::log2(static_cast<double>(q));
        method = bits <= static_cast<double>(opts.exhaustive_cap) ? "exhaustive" : "bz";
    }
    if (method == "exhaustive") return min_distance_exhaustive(C, std::max(opts.exhaustive_cap, C.k()));
    if (method == "bz") return min_distance_bz(C, opts.budget);
    if (method == "bound-only") {
        DistanceResult res;
        res.method = "bound_only";
        res.d = 0;
        res.lower_bound = bound_hint;
        res.lower_certified = false;
        res.upper_certified = false;
        return res;
    }
    throw error(errc::parse_error, "unknown distance method '" + method + "'");
}

struct AnalysisOutput {
    AnalysisReport report;
    LinearCode code;
    DihedralSpec spec;
};

inline AnalysisOutput analyze_spec(const DihedralSpec& spec, const DistanceOptions& opts) {
    AnalysisOutput out{AnalysisReport{}, LinearCode{}, spec};
    AnalysisReport& r = out.report;
    const auto& ctx = *spec.ctx;
    r.q = ctx.q;
    r.m = ctx.m;
    r.generator = format_polynomial(spec.gen);
    r.n = ctx.n();
    r.principal_guarantee = spec.principal_guarantee();
    out.code = code_from_generator(spec);
    r.k = out.code.k();
    r.dim_bound = spec.gen.is_zero() ? 0 : dimension_lower_bound(spec);
    r.bch_bound = spec.gen.is_zero() ? 0 : bch_lower_bound(spec);
    r.dihedral_invariant = is_dihedral_invariant(out.code);
    if (ctx.base->characteristic() == 2) r.char2_containment_ok = char2_containment(spec);
    if (r.k > 0) {
        DistanceResult dist = run_distance(out.code, opts, r.bch_bound);
        r.d = dist.d;
        r.d_method = dist.method;
        r.d_lower_bound = std::max(dist.lower_bound, r.bch_bound);
        r.d_lower_certified = dist.lower_certified;
        r.d_upper_certified = dist.upper_certified;
        r.d_work = dist.work;
    } else {
        r.d_method = "none";
    }
    return out;
}

// --- spec text serialization ---------------------------------------------

/// `q=<int> m=<int> p=<poly-string>` plus optional `alpha-modulus=<coeffs>`.
inline std::string format_spec(const DihedralSpec& spec, bool with_modulus = false) {
    std::ostringstream out;
    out << "q=" << spec.ctx->q << " m=" << spec.ctx->m << " p=" << format_polynomial(spec.gen);
    if (with_modulus) {
        out << " alpha-modulus=";
        const auto& mod = spec.ctx->ext->modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << mod[i];
    }
    return out.str();
}

inline DihedralSpec parse_spec(const std::string& line) {
    std::optional<std::uint64_t> q;
    std::optional<unsigned> m;
    std::optional<std::string> p, alpha_mod;
    std::istringstream in(line);
    std::string tok;
    std::size_t pos = 0;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value, got '" + tok + "'", pos);
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "q") q = std::stoull(val);
            else if (key == "m") m = static_cast<unsigned>(std::stoul(val));
            else if (key == "p") p = val;
            else if (key == "alpha-modulus") alpha_mod = val;
            else throw parse_error("unknown key '" + key + "'", pos);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad value '" + val + "'", pos);
        }
        pos += tok.size() + 1;
    }
    if (!q || !m || !p) throw parse_error("spec needs q=, m= and p=", 0);
    auto ctx = DihedralContext::make(*q, *m);
    if (alpha_mod) {
        std::ostringstream ours;
        const auto& mod = ctx->ext->modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) ours << (i ? "," : "") << mod[i];
        if (ours.str() != *alpha_mod)
            throw error(errc::unsupported_field,
                        "alpha-modulus differs from the canonical modulus " + ours.str());
    }
    return DihedralSpec(ctx, parse_polynomial(ctx->ext, *p));
}

// --- presets -------------------------------------------------------------

struct Preset {
    std::string name;
    std::uint64_t q;
    unsigned m;
    std::string gen;
    unsigned published_n, published_k, published_d;
};

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        {"d22", 2, 11, "1,a^2,1,1,a,1", 22, 12, 6},
        {"d66", 2, 33, "1,a^2,1,0,1,1,a,a,a^2,a^2,1,1,0,1,a,1", 66, 33, 12},
        {"d86a", 2, 43, "1,a^2,0,a^2,a^2,a^2,1,0,0,0,a,a^2,0,0,0,1,a,a,a,0,a,1", 86, 44, 15},
        {"d86b", 2, 43, "1,1,a^2,0,0,a,1,1", 86, 72, 5},
    };
    return table;
}

inline const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw error(errc::parse_error, "unknown preset '" + name + "'");
}

inline DihedralSpec spec_from_preset(const Preset& p) {
    auto ctx = DihedralContext::make(p.q, p.m);
    return DihedralSpec(ctx, parse_polynomial(ctx->ext, p.gen));
}

// --- reproduction of the published examples ------------------------------

struct ReproduceRow {
    std::string name;
    AnalysisReport report;
    unsigned published_n, published_k, published_d;
    int formula_k; // 2(m - deg p)
    bool n_match, k_match, d_match;
    std::string note;
};

inline std::vector<ReproduceRow> run_reproduce(const DistanceOptions& opts) {
    std::vector<ReproduceRow> rows;
    for (const auto& p : presets()) {
        DihedralSpec spec = spec_from_preset(p);
        AnalysisOutput out = analyze_spec(spec, opts);
        ReproduceRow row;
        row.name = p.name;
        row.report = out.report;
        row.published_n = p.published_n;
        row.published_k = p.published_k;
        row.published_d = p.published_d;
        row.formula_k = 2 * (static_cast<int>(p.m) - spec.gen.degree());
        row.n_match = out.report.n == p.published_n;
        row.k_match = out.report.k == p.published_k;
        row.d_match = out.report.d == p.published_d && out.report.d_lower_certified &&
                      out.report.d_upper_certified;
        if (!row.k_match)
            row.note = "dimension differs from the published value " + std::to_string(p.published_k) +
                       "; the closing formula 2(m - deg p) gives " + std::to_string(row.formula_k);
        if (!row.d_match && out.report.d_lower_certified && out.report.d_upper_certified) {
            if (!row.note.empty()) row.note += ". ";
            row.note += "certified distance " + std::to_string(out.report.d) +
                        " differs from the published value " + std::to_string(p.published_d);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// --- search --------------------------------------------------------------

struct SearchOptions {
    std::uint64_t q = 2;
    unsigned m_min = 3, m_max = 50;
    unsigned delta_min = 2, delta_max = 2;
    unsigned b_min = 0;
    std::optional<unsigned> b_max;
    DistanceOptions distance;
};

struct SearchRow {
    unsigned m, b, delta;
    AnalysisReport report;
    bool meets; // certified d >= delta and k >= m - deg p
};

inline std::vector<SearchRow> run_search(const SearchOptions& so) {
    std::vector<SearchRow> rows;
    std::set<std::pair<unsigned, std::string>> seen;
    for (unsigned m = std::max(3u, so.m_min); m <= so.m_max; ++m) {
        if (std::gcd<std::uint64_t>(m, so.q) != 1) continue;
        const bool binary_fast = so.q == 2 && binary_condition(m).holds;
        if (so.q == 2 && !binary_fast) continue; // binary search follows the condition scan
        for (unsigned delta = so.delta_min; delta <= std::min(so.delta_max, m); ++delta) {
            const unsigned b_hi = std::min(so.b_max.value_or(m - 1), m - 1);
            for (unsigned b = so.b_min; b <= b_hi; ++b) {
                std::optional<DihedralSpec> made;
                try {
                    made = binary_fast ? binary_bch_generator(m, b, delta)
                                       : bch_dihedral_generator(so.q, m, b, delta);
                } catch (const error& e) {
                    if (e.code() == errc::degenerate_generator) continue;
                    throw;
                }
                DihedralSpec spec = std::move(*made);
                std::string gen_str = format_polynomial(spec.gen);
                if (!seen.insert({m, gen_str}).second) continue;
                AnalysisOutput out = analyze_spec(spec, so.distance);
                SearchRow row;
                row.m = m;
                row.b = b;
                row.delta = delta;
                row.report = out.report;
                const int need_k = static_cast<int>(m) - spec.gen.degree();
                row.meets = out.report.d_lower_certified &&
                            out.report.d_lower_bound >= delta &&
                            static_cast<int>(out.report.k) >= need_k;
                rows.push_back(std::move(row));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
        return std::tie(a.m, a.delta, a.b) < std::tie(b.m, b.delta, b.b);
    });
    return rows;
}

// --- quantified property suites ------------------------------------------

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::string detail;
};

struct VerifyOptions {
    unsigned m_max = 201;     // binary-equivalence sweep
    unsigned spec_count = 0;  // 0 = suite default
    std::uint64_t seed = 12345;
};

namespace detail {

inline Polynomial random_poly(std::mt19937_64& rng, std::shared_ptr<const FiniteField> field,
                              unsigned max_deg) {
    std::vector<std::uint32_t> c(max_deg + 1, 0);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % field->order());
    Polynomial p(field, std::move(c));
    if (p.is_zero()) return Polynomial::one(field);
    return p;
}

// certified statement "min distance >= bound"; exact when cheap
inline bool distance_at_least(const LinearCode& C, unsigned bound) {
    if (C.k() == 0) return false;
    if (C.field->order() == 2 && C.k() <= 20) {
        return min_distance_exhaustive(C, 20).d >= bound;
    }
    DistanceResult res = min_distance_bz(C, 0, bound);
    if (res.exact()) return res.d >= bound;
    return res.lower_bound >= bound;
}

} // namespace detail

/// Proposition (a)<=>(b)<=>(c) for every odd m, plus (c)<=>(d) for primes and
/// the prime set below 50.
inline PropertyResult prop_binary_equivalence(const VerifyOptions& vo) {
    PropertyResult pr;
    pr.name = "binary-equivalence";
    std::vector<unsigned> prime_set_below_50;
    for (unsigned m = 3; m <= vo.m_max; m += 2) {
        auto part = cyclotomic_cosets(m, 4 % m);
        // (b): ((m-1)/2) C_i = C_i for all i
        bool cond_b = true;
        const std::uint64_t half = (m - 1) / 2;
        for (const auto& coset : part.cosets) {
            std::vector<unsigned> image;
            for (unsigned x : coset)
                image.push_back(static_cast<unsigned>((x * half) % m));
            std::sort(image.begin(), image.end());
            if (image != coset) { cond_b = false; break; }
        }
        // (a): same statement on the zero sets Z(M_{omega^i}) = {omega^j : j in C_i};
        // for small m verify on actual field elements
        bool cond_a = cond_b;
        if (m <= 30 && m % 2 == 1) {
            auto ctx = DihedralContext::make(2, m);
            auto rctx = ctx->roots();
            cond_a = true;
            for (const auto& coset : part.cosets) {
                std::set<std::uint32_t> zeros, image;
                for (unsigned j : coset) {
                    std::uint32_t z = rctx->big->pow(rctx->omega, j);
                    zeros.insert(z);
                    image.insert(rctx->big->pow(z, static_cast<std::int64_t>(half)));
                }
                if (zeros != image) { cond_a = false; break; }
            }
        }
        ConditionReport rep = binary_condition(m);
        if (cond_a != cond_b || cond_b != rep.holds) {
            pr.pass = false;
            pr.detail = "equivalence fails at m=" + std::to_string(m);
            return pr;
        }
        if (rep.is_prime_m) {
            if (rep.holds != (rep.s2 % 4 == 2)) {
                pr.pass = false;
                pr.detail = "(c)<=>(d) fails at prime m=" + std::to_string(m);
                return pr;
            }
            if (m < 50 && rep.holds) prime_set_below_50.push_back(m);
        }
        ++pr.checked;
    }
    if (vo.m_max >= 50 && prime_set_below_50 != std::vector<unsigned>{3, 11, 19, 43}) {
        pr.pass = false;
        pr.detail = "prime set below 50 differs from {3, 11, 19, 43}";
    }
    std::ostringstream det;
    det << "prime set below 50: {";
    for (std::size_t i = 0; i < prime_set_below_50.size(); ++i)
        det << (i ? ", " : "") << prime_set_below_50[i];
    det << "}";
    if (pr.pass) pr.detail = det.str();
    return pr;
}

/// Exact or certified distance >= BCH bound over random specs.
inline PropertyResult prop_bch_bound_soundness(const VerifyOptions& vo) {
    PropertyResult pr;
    pr.name = "bch-bound-soundness";
    const unsigned count = vo.spec_count ? vo.spec_count : 300;
    std::mt19937_64 rng(vo.seed);
    std::vector<std::pair<std::uint64_t, unsigned>> pool;
    for (unsigned m = 3; m <= 35; m += 2) pool.push_back({2, m});
    for (unsigned m = 4; m <= 20; ++m)
        if (m % 3 != 0) pool.push_back({3, m});
    while (pr.checked < count) {
        auto [q, m] = pool[rng() % pool.size()];
        auto ctx = DihedralContext::make(q, m);
        DihedralSpec spec = [&]() -> DihedralSpec {
            if (rng() % 2 == 0) {
                // BCH-dihedral construction with random window
                unsigned delta = 2 + static_cast<unsigned>(rng() % std::min(5u, m - 1));
                unsigned b = static_cast<unsigned>(rng() % m);
                try {
                    return bch_dihedral_generator(q, m, b, delta);
                } catch (const error&) {
                    return DihedralSpec(ctx, Polynomial::one(ctx->ext));
                }
            }
            return DihedralSpec(ctx, detail::random_poly(rng, ctx->ext, m - 1));
        }();
        if (spec.gen.is_zero()) continue;
        LinearCode C = code_from_generator(spec);
        if (C.k() == 0) continue;
        unsigned bound = bch_lower_bound(spec);
        if (!detail::distance_at_least(C, bound)) {
            pr.pass = false;
            pr.detail = "violation at q=" + std::to_string(q) + " m=" + std::to_string(m) +
                        " p=" + format_polynomial(spec.gen);
            return pr;
        }
        ++pr.checked;
    }
    return pr;
}

/// d >= delta and k >= m - deg p for the binary construction across the
/// small prescribed-distance grid.
inline PropertyResult prop_binary_soundness(const VerifyOptions&) {
    PropertyResult pr;
    pr.name = "binary-soundness";
    for (unsigned m : {3u, 11u, 19u, 33u, 43u}) {
        for (unsigned b = 0; b < m; ++b) {
            for (unsigned delta = 2; delta <= std::min(6u, m); ++delta) {
                DihedralSpec spec = [&]() -> DihedralSpec {
                    try {
                        return binary_bch_generator(m, b, delta);
                    } catch (const error& e) {
                        if (e.code() == errc::degenerate_generator)
                            return DihedralSpec(DihedralContext::make(2, m),
                                                Polynomial::zero(DihedralContext::make(2, m)->ext));
                        throw;
                    }
                }();
                if (spec.gen.is_zero()) continue; // x^m - 1 swallowed every coset
                // p divides p-bar(x^{m-1}) as F_4[x] polynomials
                Polynomial pbar = conjugate_generator(spec);
                if (!divmod(pbar, spec.gen).second.is_zero()) {
                    pr.pass = false;
                    pr.detail = "p does not divide p-bar at m=" + std::to_string(m) +
                                " b=" + std::to_string(b) + " delta=" + std::to_string(delta);
                    return pr;
                }
                LinearCode C = code_from_generator(spec);
                const int need_k = static_cast<int>(m) - spec.gen.degree();
                if (static_cast<int>(C.k()) < need_k || !detail::distance_at_least(C, delta)) {
                    pr.pass = false;
                    pr.detail = "violation at m=" + std::to_string(m) + " b=" + std::to_string(b) +
                                " delta=" + std::to_string(delta);
                    return pr;
                }
                ++pr.checked;
            }
        }
    }
    return pr;
}

/// Structure invariants over random specs plus the exhaustive conjugation
/// checks for q in {2, 3, 4, 5}.
inline PropertyResult prop_structure_invariants(const VerifyOptions& vo) {
    PropertyResult pr;
    pr.name = "structure-invariants";
    auto fail = [&](const std::string& msg) {
        pr.pass = false;
        pr.detail = msg;
        return pr;
    };

    // conjugation: involution, F_q-linearity, L-formula == coefficient swap
    for (std::uint64_t q : {2, 3, 4, 5}) {
        auto ctx = DihedralContext::make(q, 3);
        const FiniteField& E = *ctx->ext;
        for (std::uint32_t tau = 0; tau < E.order(); ++tau) {
            if (ctx->conj(tau) != ctx->conj_linearized(tau))
                return fail("L formula disagrees with basis swap at q=" + std::to_string(q));
            if (ctx->conj(ctx->conj(tau)) != tau)
                return fail("conjugation is not an involution at q=" + std::to_string(q));
            for (std::uint32_t sigma = 0; sigma < E.order(); ++sigma)
                if (ctx->conj(E.add(tau, sigma)) != E.add(ctx->conj(tau), ctx->conj(sigma)))
                    return fail("conjugation is not additive at q=" + std::to_string(q));
            for (std::uint64_t c = 0; c < q; ++c) {
                std::uint32_t ce = ctx->embed_base_elem(static_cast<std::uint32_t>(c));
                if (ctx->conj(E.mul(ce, tau)) != E.mul(ce, ctx->conj(tau)))
                    return fail("conjugation is not F_q-linear at q=" + std::to_string(q));
            }
        }
        ++pr.checked;
    }

    const unsigned count = vo.spec_count ? vo.spec_count : 200;
    std::mt19937_64 rng(vo.seed + 1);
    std::vector<std::pair<std::uint64_t, unsigned>> pool;
    for (unsigned m = 3; m <= 25; m += 2) pool.push_back({2, m});
    for (unsigned m = 4; m <= 25; ++m)
        if (m % 3 != 0) pool.push_back({3, m});
    while (pr.checked < count + 4) {
        auto [q, m] = pool[rng() % pool.size()];
        auto ctx = DihedralContext::make(q, m);
        DihedralSpec spec(ctx, detail::random_poly(rng, ctx->ext, m - 1));
        if (spec.gen.is_zero()) continue;

        // fold/unfold roundtrip on a random vector
        std::vector<std::uint32_t> v(2 * m);
        for (auto& x : v) x = static_cast<std::uint32_t>(rng() % q);
        if (unfold(*ctx, fold(*ctx, v)) != v) return fail("fold/unfold roundtrip broke");

        // conjugate generator: involution and formula agreement
        Polynomial pbar = conjugate_generator(spec);
        DihedralSpec spec_bar(ctx, pbar);
        if (conjugate_generator(spec_bar) != spec.gen)
            return fail("conjugate generator applied twice is not the identity");
        if (conjugate_generator_formula(spec) != pbar)
            return fail("closed formula disagrees with coefficient conjugation");
        if (q == 2 && conjugate_generator_char2(spec) != pbar)
            return fail("characteristic-2 shortcut disagrees");

        // beta' action sends unfold(p) to unfold(p-bar(x^{m-1}))
        auto act = dihedral_action(m);
        std::vector<std::uint32_t> pv(spec.gen.coeffs());
        pv.resize(m, 0);
        std::vector<std::uint32_t> pbv(pbar.coeffs());
        pbv.resize(m, 0);
        if (apply_perm(unfold(*ctx, pv), act.beta_perm) != unfold(*ctx, pbv))
            return fail("beta' action mismatch with the conjugate generator");

        LinearCode C = code_from_generator(spec);
        if (!is_dihedral_invariant(C)) return fail("code is not dihedral invariant");
        LinearCode D = dual_code(C);
        if (!is_dihedral_invariant(D)) return fail("dual code is not dihedral invariant");
        if (D.k() != C.n - C.k()) return fail("dual dimension mismatch");
        if (static_cast<int>(C.k()) < dimension_lower_bound(spec))
            return fail("dimension bound violated");
        if (q == 2 && !char2_containment(spec)) return fail("char-2 containment violated");

        // any dual row folds to a polynomial satisfying the *-relations
        if (D.k() > 0) {
            Polynomial qpoly(ctx->ext, fold(*ctx, D.gen.row(0)));
            if (!verify_dual_relations(spec, qpoly))
                return fail("dual *-orthogonality relations violated");
        }
        ++pr.checked;
    }
    return pr;
}

/// Exhaustive and Brouwer-Zimmermann agree on random binary codes.
inline PropertyResult prop_distance_oracle(const VerifyOptions& vo) {
    PropertyResult pr;
    pr.name = "distance-oracle";
    const unsigned count = vo.spec_count ? vo.spec_count : 100;
    std::mt19937_64 rng(vo.seed + 2);
    auto f2 = make_field(2, 1);
    while (pr.checked < count) {
        unsigned n = 10 + static_cast<unsigned>(rng() % 31); // 10..40
        unsigned kreq = 1 + static_cast<unsigned>(rng() % 16);
        std::vector<std::vector<std::uint32_t>> rows;
        for (unsigned i = 0; i < kreq; ++i) {
            std::vector<std::uint32_t> r(n);
            for (auto& x : r) x = static_cast<std::uint32_t>(rng() & 1);
            rows.push_back(std::move(r));
        }
        LinearCode C = code_from_rows(f2, n, rows);
        if (C.k() == 0) continue;
        DistanceResult a = min_distance_exhaustive(C, 16);
        DistanceResult b = min_distance_bz(C);
        if (!b.exact() || a.d != b.d) {
            pr.pass = false;
            pr.detail = "disagreement on a random [" + std::to_string(n) + "," +
                        std::to_string(C.k()) + "] code";
            return pr;
        }
        // witnesses are genuine codewords of the stated weight
        unsigned wt = 0;
        for (auto x : b.witness)
            if (x) ++wt;
        if (wt != b.d || !C.gen.contains(b.witness)) {
            pr.pass = false;
            pr.detail = "invalid witness";
            return pr;
        }
        // sampled upper bound dominates the exact distance
        if (weight_upper_bound_sample(C, 50, vo.seed + pr.checked) < a.d) {
            pr.pass = false;
            pr.detail = "sampled upper bound below the exact distance";
            return pr;
        }
        ++pr.checked;
    }
    return pr;
}

inline std::vector<PropertyResult> run_verify(const VerifyOptions& vo,
                                              const std::string& only = "") {
    std::vector<PropertyResult> out;
    auto want = [&](const std::string& name) { return only.empty() || only == name; };
    if (want("binary-equivalence")) out.push_back(prop_binary_equivalence(vo));
    if (want("bch-bound-soundness")) out.push_back(prop_bch_bound_soundness(vo));
    if (want("binary-soundness")) out.push_back(prop_binary_soundness(vo));
    if (want("structure-invariants")) out.push_back(prop_structure_invariants(vo));
    if (want("distance-oracle")) out.push_back(prop_distance_oracle(vo));
    if (out.empty()) throw error(errc::parse_error, "unknown property '" + only + "'");
    return out;
}

} // namespace dihedral

#endif
