#ifndef DIHEDRAL_POLYNOMIAL_HPP
#define DIHEDRAL_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"

namespace dihedral {

/// Polynomial over a finite field, ascending coefficients. The zero
/// polynomial has an empty coefficient list and degree -1.
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::shared_ptr<const FiniteField> field,
                        std::vector<std::uint32_t> coeffs = {})
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        for (auto c : coeffs_)
            if (c >= field_->order())
                throw error(errc::field_mismatch, "coefficient outside the field");
        trim();
    }

    static Polynomial zero(std::shared_ptr<const FiniteField> field) { return Polynomial(std::move(field)); }
    static Polynomial one(std::shared_ptr<const FiniteField> field) { return Polynomial(std::move(field), {1}); }

    static Polynomial x_power(std::shared_ptr<const FiniteField> field, unsigned e,
                              std::uint32_t scale = 1) {
        std::vector<std::uint32_t> c(e + 1, 0);
        c[e] = scale;
        return Polynomial(std::move(field), std::move(c));
    }

    const std::shared_ptr<const FiniteField>& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const FiniteField& F = a.check(b);
        std::vector<std::uint32_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        const FiniteField& F = a.check(b);
        std::vector<std::uint32_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const FiniteField& F = a.check(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_ ? a.field_ : b.field_);
        std::vector<std::uint32_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = F.add(c[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Polynomial(a.field_, std::move(c));
    }

    Polynomial scaled(std::uint32_t s) const {
        std::vector<std::uint32_t> c(coeffs_);
        for (auto& x : c) x = field_->mul(x, s);
        return Polynomial(field_, std::move(c));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv(coeffs_.back()));
    }

    /// Evaluation by Horner's rule; the point must live in the same field.
    FieldElement operator()(const FieldElement& x) const {
        if (x.field_ptr() != field_.get())
            throw error(errc::field_mismatch, "evaluation point in a different field");
        std::uint32_t acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = field_->add(field_->mul(acc, x.value()), coeffs_[i]);
        return field_->element(acc);
    }

  private:
    const FiniteField& check(const Polynomial& other) const {
        const FiniteField* f = field_ ? field_.get() : other.field_.get();
        if (field_ && other.field_ && field_.get() != other.field_.get())
            throw error(errc::field_mismatch, "polynomials over different fields");
        if (!f) throw error(errc::field_mismatch, "polynomial without a field");
        return *f;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::shared_ptr<const FiniteField> field_;
    std::vector<std::uint32_t> coeffs_;
};

/// Quotient and remainder; g must be nonzero.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw error(errc::division_by_zero, "division by the zero polynomial");
    const auto& field = g.field();
    if (f.degree() < g.degree()) return {Polynomial::zero(field), f};
    const FiniteField& F = *field;
    std::vector<std::uint32_t> rem(f.coeffs());
    std::vector<std::uint32_t> quot(f.degree() - g.degree() + 1, 0);
    const std::uint32_t lead_inv = F.inv(g.coeffs().back());
    for (int i = f.degree(); i >= g.degree(); --i) {
        std::uint32_t c = rem[i];
        if (c == 0) continue;
        std::uint32_t q = F.mul(c, lead_inv);
        quot[i - g.degree()] = q;
        for (int j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] =
                F.sub(rem[i - g.degree() + j], F.mul(q, g.coeffs()[j]));
    }
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm; zero if either argument is zero.
inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial::zero(a.field() ? a.field() : b.field());
    Polynomial g = poly_gcd(a, b);
    return divmod(a * b, g).first.monic();
}

/// Canonical representative of f in F[x]/(x^m - 1): exponents folded mod m.
inline Polynomial quotient_reduce(const Polynomial& f, unsigned m) {
    if (f.is_zero()) return f;
    const FiniteField& F = *f.field();
    std::vector<std::uint32_t> c(m, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        c[i % m] = F.add(c[i % m], f.coeffs()[i]);
    return Polynomial(f.field(), std::move(c));
}

/// Image of f under x -> x^e in F[x]/(x^m - 1).
inline Polynomial substitute_power(const Polynomial& f, std::uint64_t e, unsigned m) {
    if (f.is_zero()) return f;
    const FiniteField& F = *f.field();
    std::vector<std::uint32_t> c(m, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        std::size_t j = static_cast<std::size_t>((static_cast<std::uint64_t>(i) * e) % m);
        c[j] = F.add(c[j], f.coeffs()[i]);
    }
    return Polynomial(f.field(), std::move(c));
}

/// f^e modulo x^m - 1 (small exponents).
inline Polynomial pow_mod_xm1(const Polynomial& f, unsigned e, unsigned m) {
    Polynomial r = Polynomial::one(f.field());
    for (unsigned i = 0; i < e; ++i) r = quotient_reduce(r * f, m);
    return r;
}

/// x^m - 1 over the given field.
inline Polynomial xm_minus_one(std::shared_ptr<const FiniteField> field, unsigned m) {
    std::vector<std::uint32_t> c(m + 1, 0);
    c[0] = field->neg(1);
    c[m] = 1;
    return Polynomial(std::move(field), std::move(c));
}

} // namespace dihedral

#endif
