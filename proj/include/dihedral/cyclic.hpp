#ifndef DIHEDRAL_CYCLIC_HPP
#define DIHEDRAL_CYCLIC_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

namespace dihedral {

/// Orbits of {0,...,m-1} under multiplication by `base` mod m.
struct CosetPartition {
    unsigned m = 0;
    unsigned base = 0;
    std::vector<std::vector<unsigned>> cosets; // each sorted, minimum first; ordered by representative
};

inline CosetPartition cyclotomic_cosets(unsigned m, std::uint64_t base) {
    if (m == 0) throw error(errc::base_not_coprime, "modulus must be positive");
    base %= m;
    if (std::gcd(base, static_cast<std::uint64_t>(m)) != 1)
        throw error(errc::base_not_coprime, "base not coprime to modulus");
    CosetPartition part;
    part.m = m;
    part.base = static_cast<unsigned>(base);
    std::vector<bool> seen(m, false);
    for (unsigned i = 0; i < m; ++i) {
        if (seen[i]) continue;
        std::vector<unsigned> coset;
        unsigned j = i;
        do {
            coset.push_back(j);
            seen[j] = true;
            j = static_cast<unsigned>((static_cast<std::uint64_t>(j) * base) % m);
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    return part;
}

inline const std::vector<unsigned>& coset_of(const CosetPartition& part, unsigned i) {
    for (const auto& c : part.cosets)
        if (std::binary_search(c.begin(), c.end(), i % part.m)) return c;
    throw error(errc::base_not_coprime, "index not covered by partition");
}

/// Everything needed to talk about m-th roots of unity over F_{q^2}:
/// the splitting field F_{q^{2t}}, a fixed primitive root omega, and the
/// embedding of F_{q^2} into the splitting field.
struct RootContext {
    unsigned m = 0;
    unsigned t = 0;
    std::shared_ptr<const FiniteField> small; // F_{q^2}
    std::shared_ptr<const FiniteField> big;   // F_{q^{2t}}
    std::uint32_t omega = 0;
    std::shared_ptr<const SubfieldEmbedding> embed;
    std::unordered_map<std::uint32_t, std::uint32_t> pullback; // big index -> small index
    CosetPartition cosets; // base q^2 mod m

    FieldElement omega_power(std::uint64_t i) const {
        return big->element(big->pow(omega, static_cast<std::int64_t>(i % m)));
    }
};

inline std::shared_ptr<const RootContext>
make_root_context(std::shared_ptr<const FiniteField> small, unsigned m) {
    if (m == 0) throw error(errc::not_coprime, "m must be positive");
    auto ctx = std::make_shared<RootContext>();
    ctx->m = m;
    ctx->small = small;
    const std::uint64_t S = small->order();
    if (std::gcd(S % m == 0 ? m : S % m, static_cast<std::uint64_t>(m)) != 1 && m > 1)
        throw error(errc::not_coprime, "field order not coprime to m");
    ctx->t = static_cast<unsigned>(m == 1 ? 1 : order_mod(S % m, m));
    ctx->big = make_field(small->characteristic(), small->degree() * ctx->t);
    ctx->omega = primitive_root_of_unity(*ctx->big, m).value();
    ctx->embed = std::make_shared<SubfieldEmbedding>(small, ctx->big);
    ctx->pullback.reserve(static_cast<std::size_t>(S));
    for (std::uint64_t v = 0; v < S; ++v)
        ctx->pullback.emplace(ctx->embed->map(static_cast<std::uint32_t>(v)),
                              static_cast<std::uint32_t>(v));
    ctx->cosets = cyclotomic_cosets(m, S % m);
    return ctx;
}

/// f(omega^i) computed in the splitting field.
inline FieldElement evaluate(const Polynomial& f, const RootContext& ctx, std::uint64_t i) {
    if (f.field().get() != ctx.small.get())
        throw error(errc::field_mismatch, "polynomial not over the context's base field");
    const FiniteField& B = *ctx.big;
    const std::uint32_t x = ctx.big->pow(ctx.omega, static_cast<std::int64_t>(i % ctx.m));
    std::uint32_t acc = 0;
    for (std::size_t j = f.coeffs().size(); j-- > 0;)
        acc = B.add(B.mul(acc, x), ctx.embed->map(f.coeffs()[j]));
    return B.element(acc);
}

/// Minimal polynomial of omega^i over F_{q^2}: the product of (x - omega^j)
/// over the cyclotomic coset of i, with coefficients pulled back.
inline Polynomial minimal_polynomial(const RootContext& ctx, unsigned i) {
    const auto& coset = coset_of(ctx.cosets, i);
    const FiniteField& B = *ctx.big;
    // product over the big field
    std::vector<std::uint32_t> prod{1};
    for (unsigned j : coset) {
        std::uint32_t root = B.pow(ctx.omega, static_cast<std::int64_t>(j));
        std::vector<std::uint32_t> next(prod.size() + 1, 0);
        for (std::size_t d = 0; d < prod.size(); ++d) {
            next[d + 1] = B.add(next[d + 1], prod[d]);
            next[d] = B.sub(next[d], B.mul(prod[d], root));
        }
        prod = std::move(next);
    }
    std::vector<std::uint32_t> small_coeffs(prod.size());
    for (std::size_t d = 0; d < prod.size(); ++d) {
        auto it = ctx.pullback.find(prod[d]);
        if (it == ctx.pullback.end())
            throw error(errc::coefficient_not_in_subfield,
                        "minimal polynomial coefficient escaped the base field");
        small_coeffs[d] = it->second;
    }
    return Polynomial(ctx.small, std::move(small_coeffs));
}

/// { i in [0, m) : f(omega^i) = 0 }, sorted.
inline std::vector<unsigned> roots_among_powers(const Polynomial& f, const RootContext& ctx) {
    std::vector<unsigned> roots;
    if (f.is_zero()) {
        roots.resize(ctx.m);
        std::iota(roots.begin(), roots.end(), 0u);
        return roots;
    }
    for (unsigned i = 0; i < ctx.m; ++i)
        if (evaluate(f, ctx, i).is_zero()) roots.push_back(i);
    return roots;
}

} // namespace dihedral

#endif
