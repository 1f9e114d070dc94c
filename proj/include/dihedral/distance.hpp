#ifndef DIHEDRAL_DISTANCE_HPP
#define DIHEDRAL_DISTANCE_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "cyclic.hpp"
#include "dihedral.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace dihedral {

struct DistanceResult {
    unsigned d = 0;                     // best upper bound; exact when both flags hold
    std::vector<std::uint32_t> witness; // codeword of weight d
    std::string method;                 // exhaustive | brouwer_zimmermann | bound_only
    std::uint64_t work = 0;             // enumerated combinations
    unsigned lower_bound = 0;           // certified lower bound
    bool lower_certified = false;
    bool upper_certified = false;

    bool exact() const { return lower_certified && upper_certified; }
};

/// BCH bound: 1 + length of the longest cyclic run of consecutive exponents i
/// with omega^i a common root of p(x) and p-bar(x^{m-1}).
inline unsigned bch_lower_bound(const DihedralSpec& spec) {
    if (!spec.ctx->coprime()) throw error(errc::not_coprime, "bound needs gcd(m, q) = 1");
    if (spec.gen.is_zero()) throw error(errc::zero_generator, "zero generator");
    auto rctx = spec.ctx->roots();
    const unsigned m = spec.ctx->m;
    std::vector<bool> common(m, false);
    for (unsigned i : roots_among_powers(spec.gen, *rctx)) common[i] = true;
    std::vector<bool> keep(m, false);
    for (unsigned i : roots_among_powers(conjugate_generator(spec), *rctx))
        keep[i] = common[i];
    unsigned best = 0, run = 0;
    // wrap-around runs count; scan two laps
    for (unsigned i = 0; i < 2 * m; ++i) {
        if (keep[i % m]) {
            ++run;
            if (run > best) best = run;
            if (run >= m) break; // p would be 0 mod x^m-1; excluded by precondition
        } else {
            run = 0;
        }
    }
    if (best >= m) best = m - 1;
    return best + 1;
}

namespace detail {

constexpr unsigned max_words = 4; // up to 256 columns bit-packed

struct PackedRows {
    unsigned n = 0, words = 0;
    std::vector<std::array<std::uint64_t, max_words>> rows;
};

inline PackedRows pack_rows(const std::vector<std::vector<std::uint32_t>>& rows, unsigned n) {
    PackedRows p;
    p.n = n;
    p.words = (n + 63) / 64;
    for (const auto& r : rows) {
        std::array<std::uint64_t, max_words> w{};
        for (unsigned j = 0; j < n; ++j)
            if (r[j]) w[j / 64] |= 1ull << (j % 64);
        p.rows.push_back(w);
    }
    return p;
}

inline unsigned popcount_words(const std::array<std::uint64_t, max_words>& w, unsigned words) {
    unsigned c = 0;
    for (unsigned i = 0; i < words; ++i) c += static_cast<unsigned>(std::popcount(w[i]));
    return c;
}

inline std::vector<std::uint32_t> unpack_word(const std::array<std::uint64_t, max_words>& w,
                                              unsigned n) {
    std::vector<std::uint32_t> v(n, 0);
    for (unsigned j = 0; j < n; ++j)
        if ((w[j / 64] >> (j % 64)) & 1) v[j] = 1;
    return v;
}

// Weight-w combinations of packed rows; returns false if the budget ran out.
template <typename Fn>
inline bool enumerate_combinations_binary(const PackedRows& rows, unsigned w,
                                          std::uint64_t budget, std::uint64_t& work, Fn&& visit) {
    const unsigned k = static_cast<unsigned>(rows.rows.size());
    if (w > k) return true;
    std::vector<unsigned> idx(w);
    std::vector<std::array<std::uint64_t, max_words>> acc(w + 1);
    acc[0] = {};
    unsigned depth = 0;
    idx[0] = 0;
    while (true) {
        if (idx[depth] > k - (w - depth)) {
            if (depth == 0) return true;
            --depth;
            ++idx[depth];
            continue;
        }
        for (unsigned i = 0; i < rows.words; ++i)
            acc[depth + 1][i] = acc[depth][i] ^ rows.rows[idx[depth]][i];
        if (depth + 1 == w) {
            ++work;
            visit(acc[w]);
            if (budget && work >= budget) return false;
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
}

// General-q variant: combinations of rows with nonzero scalars, the first
// scalar fixed to 1 (weights are invariant under global scaling).
template <typename Fn>
inline bool enumerate_combinations_general(const FiniteField& F,
                                           const std::vector<std::vector<std::uint32_t>>& rows,
                                           unsigned n, unsigned w, std::uint64_t budget,
                                           std::uint64_t& work, Fn&& visit) {
    const unsigned k = static_cast<unsigned>(rows.size());
    if (w > k) return true;
    std::vector<std::uint32_t> nonzero;
    for (std::uint32_t v = 1; v < F.order(); ++v) nonzero.push_back(v);
    std::vector<std::vector<std::uint32_t>> acc(w + 1, std::vector<std::uint32_t>(n, 0));
    bool ok = true;
    // recursive lambda over (depth)
    auto rec = [&](auto&& self, unsigned depth, unsigned start) -> void {
        if (!ok) return;
        for (unsigned i = start; i <= k - (w - depth); ++i) {
            const auto& row = rows[i];
            const std::size_t nscal = depth == 0 ? 1 : nonzero.size();
            for (std::size_t si = 0; si < nscal && ok; ++si) {
                const std::uint32_t s = nonzero[si];
                for (unsigned j = 0; j < n; ++j)
                    acc[depth + 1][j] = F.add(acc[depth][j], F.mul(s, row[j]));
                if (depth + 1 == w) {
                    ++work;
                    visit(acc[w]);
                    if (budget && work >= budget) { ok = false; return; }
                } else {
                    self(self, depth + 1, i + 1);
                }
            }
            if (!ok) return;
        }
    };
    rec(rec, 0, 0);
    return ok;
}

} // namespace detail

/// Exact minimum distance by full codeword enumeration.
inline DistanceResult min_distance_exhaustive(const LinearCode& C, unsigned cap = 28) {
    if (C.k() == 0) throw error(errc::empty_code, "zero code has no minimum distance");
    if (C.k() > cap) throw error(errc::dimension_exceeds_cap, "dimension exceeds the exhaustive cap");
    DistanceResult res;
    res.method = "exhaustive";
    const FiniteField& F = *C.field;
    if (F.order() == 2) {
        auto packed = detail::pack_rows(C.gen.data(), C.n);
        std::array<std::uint64_t, detail::max_words> cw{};
        unsigned best = C.n + 1;
        std::array<std::uint64_t, detail::max_words> bw{};
        const std::uint64_t total = (1ull << C.k()) - 1;
        for (std::uint64_t g = 1; g <= total; ++g) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(g));
            for (unsigned i = 0; i < packed.words; ++i) cw[i] ^= packed.rows[bit][i];
            ++res.work;
            const unsigned wt = detail::popcount_words(cw, packed.words);
            if (wt < best) {
                best = wt;
                bw = cw;
            }
        }
        res.d = best;
        res.witness = detail::unpack_word(bw, C.n);
    } else {
        // odometer over message digits with incremental codeword updates
        const unsigned k = C.k();
        std::vector<std::uint32_t> msg(k, 0), cw(C.n, 0);
        unsigned best = C.n + 1;
        std::vector<std::uint32_t> bw;
        const std::uint64_t q = F.order();
        std::uint64_t total = 1;
        for (unsigned i = 0; i < k; ++i) total *= q;
        for (std::uint64_t step = 1; step < total; ++step) {
            unsigned pos = 0;
            while (true) {
                const std::uint32_t old = msg[pos];
                const std::uint32_t nv = old + 1 == q ? 0 : old + 1;
                msg[pos] = nv;
                const std::uint32_t delta = F.sub(nv, old);
                for (unsigned j = 0; j < C.n; ++j)
                    cw[j] = F.add(cw[j], F.mul(delta, C.gen.row(pos)[j]));
                if (nv != 0) break;
                ++pos;
            }
            ++res.work;
            unsigned wt = 0;
            for (auto x : cw)
                if (x) ++wt;
            if (wt < best) {
                best = wt;
                bw = cw;
            }
        }
        res.d = best;
        res.witness = std::move(bw);
    }
    res.lower_bound = res.d;
    res.lower_certified = true;
    res.upper_certified = true;
    return res;
}

namespace detail {

struct InfoSet {
    std::vector<std::vector<std::uint32_t>> rows; // k rows, eliminated form
    unsigned deficiency = 0;                      // pivots borrowed from used columns
};

// Successive information sets on disjoint column blocks, borrowing columns
// rightward when the remaining block is rank deficient.
inline std::vector<InfoSet> info_set_schedule(const LinearCode& C) {
    const FiniteField& F = *C.field;
    const unsigned k = C.k(), n = C.n;
    std::vector<bool> used(n, false);
    std::vector<InfoSet> sets;
    while (true) {
        std::vector<std::vector<std::uint32_t>> M(C.gen.data());
        std::vector<unsigned> order;
        for (unsigned c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        const unsigned fresh = static_cast<unsigned>(order.size());
        for (unsigned c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);
        unsigned r = 0;
        std::vector<unsigned> piv;
        unsigned fresh_pivots = 0;
        for (std::size_t oi = 0; oi < order.size() && r < k; ++oi) {
            const unsigned c = order[oi];
            unsigned sel = r;
            while (sel < k && M[sel][c] == 0) ++sel;
            if (sel == k) continue;
            std::swap(M[r], M[sel]);
            const std::uint32_t inv = F.inv(M[r][c]);
            if (inv != 1)
                for (auto& x : M[r]) x = F.mul(x, inv);
            for (unsigned i = 0; i < k; ++i) {
                if (i == r || M[i][c] == 0) continue;
                const std::uint32_t factor = M[i][c];
                for (unsigned j = 0; j < n; ++j)
                    M[i][j] = F.sub(M[i][j], F.mul(factor, M[r][j]));
            }
            piv.push_back(c);
            if (oi < fresh) ++fresh_pivots;
            ++r;
        }
        if (fresh_pivots == 0) break;
        for (std::size_t oi = 0; oi < piv.size(); ++oi) used[piv[oi]] = true;
        InfoSet s;
        s.rows = std::move(M);
        s.deficiency = k - fresh_pivots;
        sets.push_back(std::move(s));
    }
    return sets;
}

} // namespace detail

/// Brouwer-Zimmermann minimum weight. Stops as soon as the growing lower
/// bound meets the best upper bound (exact), reaches `target` (certified
/// partial answer), or exhausts `budget` combinations.
inline DistanceResult min_distance_bz(const LinearCode& C, std::uint64_t budget = 0,
                                      unsigned target = 0) {
    if (C.k() == 0) throw error(errc::empty_code, "zero code has no minimum distance");
    DistanceResult res;
    res.method = "brouwer_zimmermann";
    const FiniteField& F = *C.field;
    const unsigned k = C.k(), n = C.n;
    auto sets = detail::info_set_schedule(C);

    unsigned ub = n + 1;
    std::vector<std::uint32_t> witness;
    const bool binary = F.order() == 2;
    std::vector<detail::PackedRows> packed;
    if (binary)
        for (const auto& s : sets) packed.push_back(detail::pack_rows(s.rows, n));

    unsigned lb = 0;
    bool out_of_budget = false;
    for (unsigned w = 1; w <= k && !out_of_budget; ++w) {
        for (std::size_t si = 0; si < sets.size() && !out_of_budget; ++si) {
            if (binary) {
                auto visit = [&](const std::array<std::uint64_t, detail::max_words>& cw) {
                    const unsigned wt = detail::popcount_words(cw, packed[si].words);
                    if (wt < ub) {
                        ub = wt;
                        witness = detail::unpack_word(cw, n);
                    }
                };
                if (!detail::enumerate_combinations_binary(packed[si], w, budget, res.work, visit))
                    out_of_budget = true;
            } else {
                auto visit = [&](const std::vector<std::uint32_t>& cw) {
                    unsigned wt = 0;
                    for (auto x : cw)
                        if (x) ++wt;
                    if (wt < ub) {
                        ub = wt;
                        witness = cw;
                    }
                };
                if (!detail::enumerate_combinations_general(F, sets[si].rows, n, w, budget,
                                                            res.work, visit))
                    out_of_budget = true;
            }
        }
        if (out_of_budget) break;
        unsigned new_lb = 0;
        for (const auto& s : sets)
            new_lb += (w + 1 > s.deficiency) ? (w + 1 - s.deficiency) : 0;
        lb = std::max(lb, std::min<unsigned>(new_lb, n));
        if (w == k) lb = std::max(lb, ub); // full enumeration of set 1 is exhaustive
        if (lb >= ub) break;
        if (target && lb >= target) break;
    }

    res.d = ub <= n ? ub : 0;
    res.witness = std::move(witness);
    res.lower_bound = std::min(lb, ub);
    res.lower_certified = lb >= ub;
    res.upper_certified = ub <= n;
    return res;
}

/// Minimum weight over `trials` pseudo-random nonzero codewords; an upper
/// bound on the true distance, reproducible for a fixed seed.
inline unsigned weight_upper_bound_sample(const LinearCode& C, unsigned trials,
                                          std::uint64_t seed) {
    if (C.k() == 0) throw error(errc::empty_code, "zero code has no codewords to sample");
    const FiniteField& F = *C.field;
    std::mt19937_64 rng(seed);
    const std::uint64_t q = F.order();
    unsigned best = C.n + 1;
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> msg(C.k());
        bool nonzero = false;
        do {
            for (auto& x : msg) {
                x = static_cast<std::uint32_t>(rng() % q);
                if (x) nonzero = true;
            }
        } while (!nonzero);
        std::vector<std::uint32_t> cw(C.n, 0);
        for (unsigned i = 0; i < C.k(); ++i) {
            if (msg[i] == 0) continue;
            for (unsigned j = 0; j < C.n; ++j)
                cw[j] = F.add(cw[j], F.mul(msg[i], C.gen.row(i)[j]));
        }
        unsigned wt = 0;
        for (auto x : cw)
            if (x) ++wt;
        if (wt < best) best = wt;
    }
    return best;
}

} // namespace dihedral

#endif
