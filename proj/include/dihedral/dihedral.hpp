#ifndef DIHEDRAL_DIHEDRAL_HPP
#define DIHEDRAL_DIHEDRAL_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "matrix.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

namespace dihedral {

/// Shared setting for D_{2m}-codes over F_q: the pair of fields F_q and
/// F_{q^2} = F_q[alpha], plus the fold/unfold and conjugation tables on the
/// basis {1, alpha}.
class DihedralContext : public std::enable_shared_from_this<DihedralContext> {
  public:
    std::uint64_t q;
    unsigned m;
    std::shared_ptr<const FiniteField> base; // F_q
    std::shared_ptr<const FiniteField> ext;  // F_{q^2}
    std::uint32_t alpha;                     // generates F_{q^2} over F_q

    unsigned n() const { return 2 * m; }
    bool coprime() const { return m % base->characteristic() != 0; }

    /// r = (m'm - 1)/q with m' the inverse of m mod q; only when gcd(m,q)=1.
    unsigned r() const {
        if (!coprime()) throw error(errc::not_coprime, "r undefined when gcd(m, q) != 1");
        std::uint64_t mp = inverse_mod(m % q, q);
        return static_cast<unsigned>((mp * m - 1) / q);
    }

    std::uint32_t embed_base_elem(std::uint32_t a) const { return embed_[a]; }
    std::pair<std::uint32_t, std::uint32_t> decompose(std::uint32_t tau) const { return decomp_[tau]; }

    /// tau = a + b*alpha -> b + a*alpha, by basis swap.
    std::uint32_t conj(std::uint32_t tau) const { return conj_[tau]; }

    /// The same map through the linearised polynomial
    /// L(tau) = ((1-alpha^2)/(alpha^q-alpha)) tau^q + ((alpha^{q+1}-1)/(alpha^q-alpha)) tau.
    std::uint32_t conj_linearized(std::uint32_t tau) const {
        const FiniteField& E = *ext;
        return E.add(E.mul(c1_, E.pow(tau, static_cast<std::int64_t>(q))), E.mul(c2_, tau));
    }

    std::shared_ptr<const RootContext> roots() const {
        if (!root_ctx_) root_ctx_ = make_root_context(ext, m);
        return root_ctx_;
    }

    static std::shared_ptr<const DihedralContext> make(std::uint64_t q, unsigned m) {
        if (m < 3) throw error(errc::length_too_short, "m must be at least 3");
        std::uint64_t p;
        unsigned e;
        if (!prime_power_decompose(q, p, e))
            throw error(errc::non_prime_characteristic, "q must be a prime power");
        auto ctx = std::shared_ptr<DihedralContext>(new DihedralContext());
        ctx->q = q;
        ctx->m = m;
        ctx->base = make_field(p, e);
        ctx->ext = make_field(p, 2 * e);
        ctx->alpha = ctx->ext->generator();
        const FiniteField& E = *ctx->ext;

        SubfieldEmbedding emb(ctx->base, ctx->ext);
        ctx->embed_.resize(q);
        for (std::uint64_t a = 0; a < q; ++a)
            ctx->embed_[a] = emb.map(static_cast<std::uint32_t>(a));

        ctx->decomp_.assign(q * q, {0, 0});
        ctx->conj_.assign(q * q, 0);
        std::vector<bool> seen(q * q, false);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                std::uint32_t v = E.add(ctx->embed_[a], E.mul(ctx->embed_[b], ctx->alpha));
                if (seen[v])
                    throw error(errc::unsupported_field, "alpha does not generate F_{q^2} over F_q");
                seen[v] = true;
                ctx->decomp_[v] = {a, b};
                ctx->conj_[v] = E.add(ctx->embed_[b], E.mul(ctx->embed_[a], ctx->alpha));
            }

        const std::uint32_t aq = E.pow(ctx->alpha, static_cast<std::int64_t>(q));
        const std::uint32_t denom_inv = E.inv(E.sub(aq, ctx->alpha));
        ctx->c1_ = E.mul(E.sub(1, E.mul(ctx->alpha, ctx->alpha)), denom_inv);
        ctx->c2_ = E.mul(E.sub(E.mul(aq, ctx->alpha), 1), denom_inv);
        return ctx;
    }

  private:
    DihedralContext() = default;
    std::vector<std::uint32_t> embed_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> decomp_;
    std::vector<std::uint32_t> conj_;
    std::uint32_t c1_ = 0, c2_ = 0;
    mutable std::shared_ptr<const RootContext> root_ctx_;
};

inline FieldElement conjugate_element(const DihedralContext& ctx, const FieldElement& tau) {
    if (tau.field_ptr() != ctx.ext.get())
        throw error(errc::field_mismatch, "element not in F_{q^2}");
    return ctx.ext->element(ctx.conj(tau.value()));
}

// --- fold / unfold -------------------------------------------------------

/// Pairs (v[2j], v[2j+1]) -> v[2j] + v[2j+1]*alpha under the group ordering
/// 1, beta, alpha, alpha*beta, ...
inline std::vector<std::uint32_t> fold(const DihedralContext& ctx,
                                       const std::vector<std::uint32_t>& v) {
    if (v.size() % 2 != 0) throw error(errc::odd_length, "fold needs an even-length vector");
    const FiniteField& E = *ctx.ext;
    std::vector<std::uint32_t> w(v.size() / 2);
    for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = E.add(ctx.embed_base_elem(v[2 * j]),
                     E.mul(ctx.embed_base_elem(v[2 * j + 1]), ctx.alpha));
    return w;
}

inline std::vector<std::uint32_t> unfold(const DihedralContext& ctx,
                                         const std::vector<std::uint32_t>& w) {
    std::vector<std::uint32_t> v(2 * w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto [a, b] = ctx.decompose(w[j]);
        v[2 * j] = a;
        v[2 * j + 1] = b;
    }
    return v;
}

// --- specs and codes -----------------------------------------------------

/// A principal D_{2m}-code description: (q, m, alpha, generator p(x)).
struct DihedralSpec {
    std::shared_ptr<const DihedralContext> ctx;
    Polynomial gen; // over F_{q^2}, reduced mod x^m - 1

    DihedralSpec(std::shared_ptr<const DihedralContext> c, const Polynomial& p)
        : ctx(std::move(c)), gen(quotient_reduce(p, ctx->m)) {
        if (gen.field().get() != ctx->ext.get())
            throw error(errc::field_mismatch, "generator not over F_{q^2}");
    }

    bool principal_guarantee() const { return ctx->coprime(); }
};

inline DihedralSpec make_spec(std::uint64_t q, unsigned m, const Polynomial& p) {
    return DihedralSpec(DihedralContext::make(q, m), p);
}

/// Conjugate generator p-bar(x^{m-1}): conjugate each coefficient, then x -> x^{m-1}.
inline Polynomial conjugate_generator(const DihedralSpec& spec) {
    const auto& ctx = *spec.ctx;
    std::vector<std::uint32_t> c(spec.gen.coeffs());
    for (auto& x : c) x = ctx.conj(x);
    return substitute_power(Polynomial(ctx.ext, std::move(c)), ctx.m - 1, ctx.m);
}

/// Same polynomial through the closed formula
/// c1 * p(x^r)^q + c2 * p(x^{m-1}), with the integer exponent r.
inline Polynomial conjugate_generator_formula(const DihedralSpec& spec) {
    const auto& ctx = *spec.ctx;
    const unsigned r = ctx.r(); // throws NotCoprime when undefined
    const FiniteField& E = *ctx.ext;
    const std::uint32_t aq = E.pow(ctx.alpha, static_cast<std::int64_t>(ctx.q));
    const std::uint32_t denom_inv = E.inv(E.sub(aq, ctx.alpha));
    const std::uint32_t c1 = E.mul(E.sub(1, E.mul(ctx.alpha, ctx.alpha)), denom_inv);
    const std::uint32_t c2 = E.mul(E.sub(E.mul(aq, ctx.alpha), 1), denom_inv);
    Polynomial term1 = pow_mod_xm1(substitute_power(spec.gen, r, ctx.m),
                                   static_cast<unsigned>(ctx.q), ctx.m);
    Polynomial term2 = substitute_power(spec.gen, ctx.m - 1, ctx.m);
    return quotient_reduce(term1.scaled(c1) + term2.scaled(c2), ctx.m);
}

/// Characteristic-2 shortcut: alpha * p(x^{(m-1)/2})^2.
inline Polynomial conjugate_generator_char2(const DihedralSpec& spec) {
    const auto& ctx = *spec.ctx;
    if (ctx.base->characteristic() != 2)
        throw error(errc::not_char_two, "shortcut only valid in characteristic 2");
    if (ctx.m % 2 == 0) throw error(errc::not_coprime, "m must be odd in the binary case");
    Polynomial s = substitute_power(spec.gen, (ctx.m - 1) / 2, ctx.m);
    return quotient_reduce(s * s, ctx.m).scaled(ctx.alpha);
}

/// Length-2m linear code over F_q with a canonical RREF generator matrix.
struct LinearCode {
    std::shared_ptr<const FiniteField> field;
    unsigned n = 0;
    GFMatrix gen; // RREF

    unsigned k() const { return gen.rows(); }
};

inline LinearCode code_from_rows(std::shared_ptr<const FiniteField> field, unsigned n,
                                 const std::vector<std::vector<std::uint32_t>>& rows) {
    LinearCode C;
    C.field = field;
    C.n = n;
    C.gen = GFMatrix(field, n);
    for (const auto& r : rows) C.gen.append_row(r);
    C.gen.rref();
    return C;
}

/// Span over F_q of the shifts of each generator and of its conjugate image.
inline LinearCode code_from_generators(const std::shared_ptr<const DihedralContext>& ctx,
                                       const std::vector<Polynomial>& gens) {
    const unsigned m = ctx->m;
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : gens) {
        DihedralSpec s(ctx, g);
        for (const Polynomial& base : {s.gen, conjugate_generator(s)}) {
            std::vector<std::uint32_t> c(base.coeffs());
            c.resize(m, 0);
            for (unsigned i = 0; i < m; ++i) {
                // coefficients of x^i * poly mod x^m - 1: rotate right by i
                std::vector<std::uint32_t> rot(m);
                for (unsigned j = 0; j < m; ++j) rot[(j + i) % m] = c[j];
                rows.push_back(unfold(*ctx, rot));
            }
        }
    }
    return code_from_rows(ctx->base, 2 * m, rows);
}

/// C = <p(x)>_{F_q} + <p-bar(x^{m-1})>_{F_q}, principal case.
inline LinearCode code_from_generator(const DihedralSpec& spec) {
    if (!spec.ctx->coprime())
        throw error(errc::not_coprime, "principal construction needs gcd(m, q) = 1");
    return code_from_generators(spec.ctx, {spec.gen});
}

/// max{m - deg p, m - deg p-bar(x^{m-1})} on reduced representatives.
inline int dimension_lower_bound(const DihedralSpec& spec) {
    if (spec.gen.is_zero()) throw error(errc::zero_generator, "zero generator has no bound");
    const int m = static_cast<int>(spec.ctx->m);
    return std::max(m - spec.gen.degree(), m - conjugate_generator(spec).degree());
}

// --- BCH-dihedral constructions ------------------------------------------

inline DihedralSpec bch_dihedral_generator(std::uint64_t q, unsigned m, unsigned b,
                                           unsigned delta) {
    auto ctx = DihedralContext::make(q, m);
    if (!ctx->coprime()) throw error(errc::not_coprime, "construction needs gcd(m, q) = 1");
    if (delta < 2 || delta > m) throw error(errc::delta_out_of_range, "need 2 <= delta <= m");
    auto rctx = ctx->roots();
    const unsigned r = ctx->r();
    Polynomial p = Polynomial::one(ctx->ext);
    for (unsigned j = 0; j <= delta - 2; ++j) {
        const std::uint64_t e = b + j;
        const unsigned e1 = static_cast<unsigned>(e % m);
        const unsigned e2 = static_cast<unsigned>((m - e1 % m) % m);
        const unsigned e3 = static_cast<unsigned>((e * r) % m);
        for (unsigned exp : {e1, e2, e3})
            p = poly_lcm(p, minimal_polynomial(*rctx, exp));
    }
    if (p.degree() >= static_cast<int>(m))
        throw error(errc::degenerate_generator, "all cosets swallowed: generator is x^m - 1");
    return DihedralSpec(ctx, p);
}

/// Condition (c) report for the binary single-family construction.
struct ConditionReport {
    unsigned m = 0;
    bool holds = false;
    std::optional<unsigned> s;  // 2^{2s+1} = -1 mod m
    unsigned s2 = 0;            // order of 2 mod m
    bool is_prime_m = false;
};

inline ConditionReport binary_condition(unsigned m) {
    if (m < 3 || m % 2 == 0) throw error(errc::even_modulus, "m must be odd and at least 3");
    ConditionReport rep;
    rep.m = m;
    rep.s2 = static_cast<unsigned>(order_mod(2, m));
    rep.is_prime_m = is_prime(m);
    for (unsigned e = 1; e <= rep.s2; e += 2) {
        if (powmod_u64(2, e, m) == m - 1) {
            rep.holds = true;
            rep.s = (e - 1) / 2;
            break;
        }
    }
    if (rep.is_prime_m && rep.holds != (rep.s2 % 4 == 2))
        throw error(errc::unsupported_field, "condition (c)/(d) mismatch for prime m");
    return rep;
}

/// Binary fast path: p = lcm{M_{omega^b}, ..., M_{omega^{b+delta-2}}} over F_4.
inline DihedralSpec binary_bch_generator(unsigned m, unsigned b, unsigned delta) {
    if (!binary_condition(m).holds)
        throw error(errc::condition_fails, "condition (c) fails; use the general construction");
    if (delta < 2 || delta > m) throw error(errc::delta_out_of_range, "need 2 <= delta <= m");
    auto ctx = DihedralContext::make(2, m);
    auto rctx = ctx->roots();
    Polynomial p = Polynomial::one(ctx->ext);
    for (unsigned j = 0; j <= delta - 2; ++j)
        p = poly_lcm(p, minimal_polynomial(*rctx, static_cast<unsigned>((b + j) % m)));
    if (p.degree() >= static_cast<int>(m))
        throw error(errc::degenerate_generator, "all cosets swallowed: generator is x^m - 1");
    return DihedralSpec(ctx, p);
}

// --- duality -------------------------------------------------------------

/// p(x) * q(x) := <unfold(p), unfold(q)> over F_q.
inline std::uint32_t star_product(const DihedralContext& ctx, const Polynomial& f,
                                  const Polynomial& g) {
    const FiniteField& F = *ctx.base;
    std::uint32_t acc = 0;
    for (unsigned j = 0; j < ctx.m; ++j) {
        auto [af, bf] = ctx.decompose(f.coeff(j));
        auto [ag, bg] = ctx.decompose(g.coeff(j));
        acc = F.add(acc, F.add(F.mul(af, ag), F.mul(bf, bg)));
    }
    return acc;
}

inline LinearCode dual_code(const LinearCode& C) {
    LinearCode D;
    D.field = C.field;
    D.n = C.n;
    if (C.k() == 0) {
        // dual of the zero code is the full space
        GFMatrix full(C.field, C.n);
        for (unsigned i = 0; i < C.n; ++i) {
            std::vector<std::uint32_t> e(C.n, 0);
            e[i] = 1;
            full.append_row(std::move(e));
        }
        full.rref();
        D.gen = std::move(full);
        return D;
    }
    D.gen = C.gen.nullspace();
    return D;
}

inline Polynomial shift_poly(const Polynomial& f, unsigned i, unsigned m) {
    std::vector<std::uint32_t> c(f.coeffs());
    c.resize(m, 0);
    std::vector<std::uint32_t> rot(m);
    for (unsigned j = 0; j < m; ++j) rot[(j + i) % m] = c[j];
    return Polynomial(f.field(), std::move(rot));
}

/// The four *-orthogonality relations of the duality proposition, over all
/// shifts of both generators.
inline bool verify_dual_relations(const DihedralSpec& spec, const Polynomial& qpoly) {
    const auto& ctx = *spec.ctx;
    const unsigned m = ctx.m;
    DihedralSpec qspec(spec.ctx, qpoly);
    const Polynomial p = spec.gen;
    const Polynomial pbar = conjugate_generator(spec);
    const Polynomial qq = qspec.gen;
    const Polynomial qbar = conjugate_generator(qspec);
    for (unsigned i = 0; i < m; ++i) {
        Polynomial pi = shift_poly(p, i, m);
        Polynomial pbi = shift_poly(pbar, i, m);
        for (unsigned j = 0; j < m; ++j) {
            Polynomial qj = shift_poly(qq, j, m);
            Polynomial qbj = shift_poly(qbar, j, m);
            if (star_product(ctx, pi, qj) || star_product(ctx, pi, qbj) ||
                star_product(ctx, pbi, qj) || star_product(ctx, pbi, qbj))
                return false;
        }
    }
    return true;
}

/// In characteristic 2, <p-bar(x^{m-1})> lies inside <p>^perp.
inline bool char2_containment(const DihedralSpec& spec) {
    const auto& ctx = *spec.ctx;
    if (ctx.base->characteristic() != 2)
        throw error(errc::not_char_two, "containment statement needs characteristic 2");
    const unsigned m = ctx.m;
    const Polynomial pbar = conjugate_generator(spec);
    for (unsigned i = 0; i < m; ++i) {
        Polynomial pi = shift_poly(spec.gen, i, m);
        for (unsigned j = 0; j < m; ++j)
            if (star_product(ctx, pi, shift_poly(pbar, j, m))) return false;
    }
    return true;
}

// --- the dihedral action -------------------------------------------------

/// The permutations alpha' and beta' on 2m coordinates; perm[j] is where
/// coordinate j is sent.
struct DihedralAction {
    unsigned m = 0;
    std::vector<unsigned> alpha_perm;
    std::vector<unsigned> beta_perm;
};

inline DihedralAction dihedral_action(unsigned m) {
    DihedralAction act;
    act.m = m;
    const unsigned n = 2 * m;
    act.alpha_perm.resize(n);
    act.beta_perm.resize(n);
    // alpha' = (1 3 5 ... 2m-1)(2 4 6 ... 2m), 0-based: j -> j+2 mod 2m within parity
    for (unsigned j = 0; j < n; ++j) act.alpha_perm[j] = (j + 2) % n;
    // beta' = (1 2)(3 2m)(4 2m-1)...(m+1 m+2), 0-based: 0<->1, j<->2m+1-j for j >= 2
    act.beta_perm[0] = 1;
    act.beta_perm[1] = 0;
    for (unsigned j = 2; j < n; ++j) act.beta_perm[j] = n + 1 - j;
    return act;
}

inline std::vector<std::uint32_t> apply_perm(const std::vector<std::uint32_t>& v,
                                             const std::vector<unsigned>& perm) {
    std::vector<std::uint32_t> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[perm[j]] = v[j];
    return w;
}

/// Membership of alpha' and beta' in PAut(C).
inline bool is_dihedral_invariant(const LinearCode& C) {
    if (C.n < 6 || C.n % 2 != 0)
        throw error(errc::length_too_short, "need even length at least 6");
    const DihedralAction act = dihedral_action(C.n / 2);
    for (unsigned i = 0; i < C.k(); ++i) {
        if (!C.gen.contains(apply_perm(C.gen.row(i), act.alpha_perm))) return false;
        if (!C.gen.contains(apply_perm(C.gen.row(i), act.beta_perm))) return false;
    }
    return true;
}

} // namespace dihedral

#endif
