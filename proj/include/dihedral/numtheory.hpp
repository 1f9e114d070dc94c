#ifndef DIHEDRAL_NUMTHEORY_HPP
#define DIHEDRAL_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace dihedral {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Least e >= 1 with a^e = 1 (mod m). Requires gcd(a, m) = 1.
inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    a %= m;
    if (std::gcd(a, m) != 1)
        throw error(errc::not_coprime, "order_mod: base not coprime to modulus");
    if (m == 1) return 1;
    std::uint64_t e = 1, x = a;
    while (x != 1) {
        x = mulmod_u64(x, a, m);
        ++e;
    }
    return e;
}

// Inverse of a modulo m (extended Euclid); requires gcd(a, m) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t quot = r / nr;
        std::int64_t tmp = t - quot * nt;
        t = nt;
        nt = tmp;
        tmp = r - quot * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw error(errc::not_coprime, "inverse_mod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// Writes n as p^e with p prime, or returns false.
inline bool prime_power_decompose(std::uint64_t n, std::uint64_t& p, unsigned& e) {
    if (n < 2) return false;
    auto fs = prime_factors(n);
    if (fs.size() != 1) return false;
    p = fs[0];
    e = 0;
    while (n > 1) {
        n /= p;
        ++e;
    }
    return true;
}

} // namespace dihedral

#endif
