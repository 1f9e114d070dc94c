#ifndef DIHEDRAL_FINITE_FIELD_HPP
#define DIHEDRAL_FINITE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace dihedral {

namespace detail {

// Polynomials over the prime field Z_p, ascending coefficients, used only while
// building field moduli. The leading coefficient of a nonzero poly is nonzero.
using ppoly = std::vector<std::uint32_t>;

inline void pp_trim(ppoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ppoly pp_mul(const ppoly& f, const ppoly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    ppoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p);
    return r;
}

// Remainder of f by monic g.
inline ppoly pp_rem(ppoly f, const ppoly& g, std::uint64_t p) {
    pp_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint64_t c = f.back();
        std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::uint64_t sub = (c * g[j]) % p;
            f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p - sub) % p);
        }
        pp_trim(f);
    }
    return f;
}

inline ppoly pp_powmod(ppoly base, std::uint64_t e, const ppoly& mod, std::uint64_t p) {
    ppoly r{1};
    base = pp_rem(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = pp_rem(pp_mul(r, base, p), mod, p);
        base = pp_rem(pp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

inline ppoly pp_gcd(ppoly a, ppoly b, std::uint64_t p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        std::uint64_t lead_inv = inverse_mod(b.back(), p);
        ppoly bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>((c * lead_inv) % p);
        ppoly r = pp_rem(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f monic of degree k is irreducible over Z_p iff x^{p^k} = x (mod f)
// and gcd(x^{p^{k/l}} - x, f) = 1 for every prime l | k.
inline bool pp_irreducible_fast(const ppoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    auto frob = [&](const ppoly& g) { return pp_powmod(g, p, f, p); };
    std::vector<ppoly> iter(k + 1);
    iter[0] = {0, 1}; // x
    for (std::size_t i = 1; i <= k; ++i) iter[i] = frob(iter[i - 1]);
    ppoly top = iter[k];
    ppoly x{0, 1};
    // x^{p^k} - x must vanish mod f
    ppoly diff = top;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    pp_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t l : prime_factors(k)) {
        ppoly g = iter[k / l];
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        pp_trim(g);
        ppoly d = pp_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

// Exhaustive check: no monic divisor of degree 1..k/2 divides f.
inline bool pp_irreducible_trial_division(const ppoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            ppoly g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (pp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

class FieldElement;

/// A finite field F_{p^k}, elements encoded as integer indices whose base-p
/// digits are the coefficients on the power basis of the modulus root.
/// Fields with at most 2^20 elements carry exp/log tables; larger ones fall
/// back to direct polynomial arithmetic modulo the defining polynomial.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
  public:
    static constexpr std::uint64_t table_limit = 1u << 20;
    static constexpr std::uint64_t order_limit = 1ull << 32;

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }
    std::uint32_t generator() const { return generator_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0;
        std::uint64_t pw = 1;
        while (a || b) {
            std::uint64_t d = (a % p_ + b % p_) % p_;
            r += static_cast<std::uint32_t>(d * pw);
            a = static_cast<std::uint32_t>(a / p_);
            b = static_cast<std::uint32_t>(b / p_);
            pw *= p_;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0;
        std::uint64_t pw = 1;
        while (a) {
            std::uint64_t d = a % p_;
            if (d) d = p_ - d;
            r += static_cast<std::uint32_t>(d * pw);
            a = static_cast<std::uint32_t>(a / p_);
            pw *= p_;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) return exp_[log_[a] + log_[b]];
        return mul_poly(a, b);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error(errc::division_by_zero, "inverse of zero");
        if (has_tables()) return exp_[order_ - 1 - log_[a]];
        return pow(a, static_cast<std::int64_t>(order_) - 2);
    }

    std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
        const std::int64_t n1 = static_cast<std::int64_t>(order_ - 1);
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw error(errc::division_by_zero, "zero raised to a negative power");
        }
        std::int64_t r = e % n1;
        if (r < 0) r += n1;
        if (has_tables())
            return exp_[static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) % (order_ - 1)];
        std::uint32_t acc = 1, base = a;
        std::uint64_t ee = static_cast<std::uint64_t>(r);
        while (ee) {
            if (ee & 1) acc = mul_poly_or_one(acc, base);
            base = mul_poly_or_one(base, base);
            ee >>= 1;
        }
        return acc;
    }

    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw error(errc::zero_element, "log of zero");
        if (has_tables()) return log_[a];
        // discrete log by scan; only small fields lack tables by request
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < order_ - 1; ++i) {
            if (x == a) return static_cast<std::uint32_t>(i);
            x = mul(x, generator_);
        }
        throw error(errc::zero_element, "log: element not in generator orbit");
    }

    // Smallest e >= 1 with a^e = 1.
    std::uint64_t element_order(std::uint32_t a) const {
        if (a == 0) throw error(errc::zero_element, "multiplicative order of zero");
        std::uint64_t e = order_ - 1;
        for (std::uint64_t f : unit_group_factors_)
            while (e % f == 0 && pow(a, static_cast<std::int64_t>(e / f)) == 1) e /= f;
        return e;
    }

    // Digits of the coefficient vector, ascending, length degree().
    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(k_, 0);
        for (unsigned i = 0; i < k_ && a; ++i) {
            d[i] = static_cast<std::uint32_t>(a % p_);
            a = static_cast<std::uint32_t>(a / p_);
        }
        return d;
    }

    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < d.size(); ++i) {
            v += (d[i] % p_) * pw;
            pw *= p_;
        }
        return static_cast<std::uint32_t>(v);
    }

    FieldElement element(std::uint32_t v) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator_element() const;

    // --- construction ----------------------------------------------------

    static std::shared_ptr<const FiniteField>
    make(std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  private:
    FiniteField(std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus);

    std::uint32_t mul_poly_or_one(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return mul_poly(a, b);
    }

    // Product by polynomial multiplication and reduction; no tables needed.
    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) {
            std::uint64_t acc = 0, aa = a;
            std::uint32_t bb = b;
            while (bb) {
                if (bb & 1) acc ^= aa;
                aa <<= 1;
                bb >>= 1;
            }
            const std::uint64_t mm = mod_mask_;
            for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
                if ((acc >> i) & 1) acc ^= mm << (i - k_);
            return static_cast<std::uint32_t>(acc);
        }
        std::uint32_t da[64], db[64];
        std::uint64_t conv[127] = {0};
        unsigned na = 0, nb = 0;
        for (std::uint32_t x = a; x; x = static_cast<std::uint32_t>(x / p_)) da[na++] = static_cast<std::uint32_t>(x % p_);
        for (std::uint32_t x = b; x; x = static_cast<std::uint32_t>(x / p_)) db[nb++] = static_cast<std::uint32_t>(x % p_);
        for (unsigned i = 0; i < na; ++i)
            for (unsigned j = 0; j < nb; ++j)
                conv[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
        for (int i = static_cast<int>(na + nb) - 2; i >= static_cast<int>(k_); --i) {
            std::uint64_t c = conv[i] % p_;
            if (c == 0) continue;
            conv[i] = 0;
            for (unsigned j = 0; j < k_; ++j)
                conv[i - k_ + j] += (p_ - modulus_[j] % p_) % p_ * c;
        }
        std::uint64_t v = 0, pw = 1;
        for (unsigned i = 0; i < k_; ++i) {
            v += (conv[i] % p_) * pw;
            pw *= p_;
        }
        return static_cast<std::uint32_t>(v);
    }

    void build_tables();
    std::uint32_t find_generator() const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_; // length k+1, monic
    std::uint64_t mod_mask_ = 0;         // p = 2 only: modulus as bitmask
    std::uint32_t generator_ = 0;
    std::vector<std::uint64_t> unit_group_factors_;
    std::vector<std::uint32_t> exp_; // size 2(order-1) when present
    std::vector<std::uint32_t> log_;
};

/// Value handle pairing an element index with its field.
class FieldElement {
  public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const FiniteField* f, std::uint32_t v) : f_(f), v_(v) {}

    const FiniteField& field() const { return *f_; }
    const FiniteField* field_ptr() const { return f_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement inverse() const { return {f_, f_->inv(v_)}; }
    FieldElement pow(std::int64_t e) const { return {f_, f_->pow(v_, e)}; }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }

  private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_)
            throw error(errc::field_mismatch, "operands belong to different fields");
    }
    const FiniteField* f_;
    std::uint32_t v_;
};

inline FieldElement FiniteField::element(std::uint32_t v) const {
    if (v >= order_) throw error(errc::field_mismatch, "element index out of range");
    return FieldElement(this, v);
}
inline FieldElement FiniteField::zero() const { return FieldElement(this, 0); }
inline FieldElement FiniteField::one() const { return FieldElement(this, 1); }
inline FieldElement FiniteField::generator_element() const { return FieldElement(this, generator_); }

inline FiniteField::FiniteField(std::uint64_t p, unsigned k,
                                std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), k_(k) {
    if (!is_prime(p)) throw error(errc::non_prime_characteristic, "characteristic must be prime");
    if (k < 1) throw error(errc::unsupported_field, "degree must be positive");
    order_ = 1;
    for (unsigned i = 0; i < k; ++i) {
        order_ *= p;
        if (order_ > order_limit)
            throw error(errc::unsupported_field, "field order exceeds supported limit");
    }
    unit_group_factors_ = prime_factors(order_ - 1);

    if (k == 1) {
        // F_p itself. Modulus x - g pins the generator to the smallest
        // primitive root mod p.
        std::uint32_t g = 1;
        if (p > 2) {
            for (std::uint32_t c = 2; c < p; ++c) {
                bool prim = true;
                for (std::uint64_t f : unit_group_factors_)
                    if (powmod_u64(c, (p - 1) / f, p) == 1) { prim = false; break; }
                if (prim) { g = c; break; }
            }
        }
        if (modulus) {
            if (modulus->size() != 2 || (*modulus)[1] != 1 || (*modulus)[0] >= p)
                throw error(errc::reducible_modulus, "prime field modulus must be monic linear");
            modulus_ = *modulus;
            g = static_cast<std::uint32_t>((p - modulus_[0]) % p); // root of x + c0
            if (g == 0 || element_order(g) != p - 1)
                throw error(errc::reducible_modulus, "prime field modulus root is not a generator");
        } else {
            modulus_ = {static_cast<std::uint32_t>((p - g) % p), 1};
        }
        generator_ = g;
        if (order_ <= table_limit) build_tables();
        return;
    }

    if (modulus) {
        modulus_ = *modulus;
        if (modulus_.size() != k + 1 || modulus_[k] != 1)
            throw error(errc::reducible_modulus, "modulus must be monic of the stated degree");
        for (auto c : modulus_)
            if (c >= p) throw error(errc::reducible_modulus, "modulus coefficient out of range");
        if (!detail::pp_irreducible_trial_division(modulus_, p))
            throw error(errc::reducible_modulus, "modulus is reducible");
        if (p_ == 2)
            for (unsigned i = 0; i <= k_; ++i)
                if (modulus_[i]) mod_mask_ |= 1ull << i;
        generator_ = find_generator();
        if (order_ <= table_limit) build_tables();
        return;
    }

    // Deterministic default: scan monic degree-k polynomials in ascending
    // order of their coefficient encoding; take the first irreducible one
    // whose root x is a multiplicative generator.
    std::uint64_t count = order_; // p^k candidates for the low coefficients
    detail::ppoly f(k + 1, 0);
    f[k] = 1;
    bool found = false;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (f[0] == 0) continue;
        if (!detail::pp_irreducible_fast(f, p)) continue;
        // primitivity of x mod f
        bool prim = true;
        for (std::uint64_t fac : unit_group_factors_) {
            detail::ppoly r = detail::pp_powmod({0, 1}, (order_ - 1) / fac, f, p);
            if (r.size() == 1 && r[0] == 1) { prim = false; break; }
        }
        if (!prim) continue;
        modulus_ = f;
        found = true;
        break;
    }
    if (!found) throw error(errc::unsupported_field, "no primitive modulus found");
    // the invariant check on the chosen modulus
    if (!detail::pp_irreducible_trial_division(modulus_, p))
        throw error(errc::reducible_modulus, "chosen modulus failed verification");
    if (p_ == 2)
        for (unsigned i = 0; i <= k_; ++i)
            if (modulus_[i]) mod_mask_ |= 1ull << i;
    generator_ = static_cast<std::uint32_t>(p); // the element x
    if (order_ <= table_limit) build_tables();
}

inline std::uint32_t FiniteField::find_generator() const {
    for (std::uint32_t c = 2; c < order_; ++c) {
        bool prim = true;
        for (std::uint64_t fac : unit_group_factors_) {
            std::uint32_t acc = 1, base = c;
            std::uint64_t e = (order_ - 1) / fac;
            while (e) {
                if (e & 1) acc = mul_poly_or_one(acc, base);
                base = mul_poly_or_one(base, base);
                e >>= 1;
            }
            if (acc == 1) { prim = false; break; }
        }
        if (prim) return c;
    }
    throw error(errc::unsupported_field, "no generator found");
}

inline void FiniteField::build_tables() {
    const std::uint64_t n1 = order_ - 1;
    exp_.assign(2 * n1, 0);
    log_.assign(order_, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < n1; ++i) {
        exp_[i] = x;
        exp_[i + n1] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = (k_ == 1) ? static_cast<std::uint32_t>(mulmod_u64(x, generator_, p_))
                      : mul_poly(x, generator_);
    }
    if (x != 1) throw error(errc::unsupported_field, "generator has deficient order");
}

inline std::shared_ptr<const FiniteField>
FiniteField::make(std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
    static std::mutex mtx;
    static std::map<std::tuple<std::uint64_t, unsigned, std::vector<std::uint32_t>>,
                    std::shared_ptr<const FiniteField>>
        cache;
    std::vector<std::uint32_t> key_mod = modulus ? *modulus : std::vector<std::uint32_t>{};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({p, k, key_mod});
        if (it != cache.end()) return it->second;
    }
    auto field = std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(modulus)));
    std::lock_guard<std::mutex> lock(mtx);
    cache.insert({{p, k, key_mod}, field});
    return field;
}

inline std::shared_ptr<const FiniteField>
make_field(std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    return FiniteField::make(p, k, std::move(modulus));
}

inline std::uint64_t multiplicative_order(const FieldElement& a) {
    return a.field().element_order(a.value());
}

/// omega = g^{(|E|-1)/m} for the stored generator g; requires m | |E|-1.
inline FieldElement primitive_root_of_unity(const FiniteField& E, std::uint64_t m) {
    if (m == 0 || (E.order() - 1) % m != 0)
        throw error(errc::order_not_divisible, "m does not divide the unit group order");
    return E.element(E.pow(E.generator(), static_cast<std::int64_t>((E.order() - 1) / m)));
}

/// Ring embedding of a subfield into E, fixed by sending the subfield's
/// modulus root to the smallest-power root of that modulus inside E.
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(std::shared_ptr<const FiniteField> small, std::shared_ptr<const FiniteField> big)
        : small_(std::move(small)), big_(std::move(big)) {
        if (small_->characteristic() != big_->characteristic())
            throw error(errc::characteristic_mismatch, "fields have different characteristics");
        if (big_->degree() % small_->degree() != 0)
            throw error(errc::order_not_divisible, "no subfield copy of this size");
        const std::uint64_t stride = (big_->order() - 1) / (small_->order() - 1);
        // root of the small modulus among the order-(S-1) subgroup of E*;
        // prime-subfield coefficients embed as their own indices
        const auto& mod = small_->modulus();
        std::uint32_t root = 0;
        if (small_->degree() > 1) {
            for (std::uint64_t i = 1; i < small_->order(); ++i) {
                std::uint32_t cand = big_->pow(big_->generator(), static_cast<std::int64_t>(stride * i));
                std::uint32_t acc = 0;
                for (std::size_t j = mod.size(); j-- > 0;)
                    acc = big_->add(big_->mul(acc, cand), mod[j]);
                if (acc == 0) { root = cand; break; }
            }
            if (root == 0)
                throw error(errc::characteristic_mismatch, "modulus has no root in target field");
        }
        root_powers_.resize(small_->degree());
        std::uint32_t x = 1;
        for (unsigned i = 0; i < small_->degree(); ++i) {
            root_powers_[i] = x;
            x = big_->mul(x, root);
        }
    }

    std::uint32_t map(std::uint32_t a) const {
        std::uint32_t acc = 0;
        unsigned i = 0;
        const std::uint64_t p = small_->characteristic();
        while (a) {
            std::uint32_t d = static_cast<std::uint32_t>(a % p);
            if (d) {
                // d copies of root_powers_[i] (d < p, small)
                std::uint32_t term = 0;
                for (std::uint32_t c = 0; c < d; ++c) term = big_->add(term, root_powers_[i]);
                acc = big_->add(acc, term);
            }
            a = static_cast<std::uint32_t>(a / p);
            ++i;
        }
        return acc;
    }

    FieldElement operator()(const FieldElement& a) const {
        if (a.field_ptr() != small_.get())
            throw error(errc::field_mismatch, "element not in the source field");
        return big_->element(map(a.value()));
    }

    const FiniteField& source() const { return *small_; }
    const FiniteField& target() const { return *big_; }

  private:
    std::shared_ptr<const FiniteField> small_;
    std::shared_ptr<const FiniteField> big_;
    std::vector<std::uint32_t> root_powers_;
};

inline FieldElement subfield_embed(const FieldElement& a, std::shared_ptr<const FiniteField> E) {
    auto small = a.field().shared_from_this();
    SubfieldEmbedding emb(small, std::move(E));
    return emb(a);
}

} // namespace dihedral

#endif
