#ifndef DIHEDRAL_FORMAT_HPP
#define DIHEDRAL_FORMAT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace dihedral {

/// "0", "1", "a", "a^k" as powers of the stored generator; prime fields
/// render as decimal residues instead.
inline std::string format_element(const FiniteField& F, std::uint32_t v) {
    if (F.degree() == 1) return std::to_string(v);
    if (v == 0) return "0";
    if (v == 1) return "1";
    const std::uint32_t e = F.log(v);
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

inline std::uint32_t parse_element(const FiniteField& F, const std::string& tok,
                                   std::size_t pos) {
    if (tok.empty()) throw parse_error("empty coefficient", pos);
    if (tok == "0") return 0;
    if (tok == "1") return 1;
    if (tok == "a") return F.generator();
    if (tok.rfind("a^", 0) == 0) {
        const std::string exp = tok.substr(2);
        if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad exponent '" + exp + "'", pos);
        return F.pow(F.generator(), static_cast<std::int64_t>(std::stoull(exp)));
    }
    if (tok.find_first_not_of("0123456789") == std::string::npos) {
        // decimal residue: n copies of 1 (prime-subfield element)
        std::uint64_t nrep = std::stoull(tok) % F.characteristic();
        std::uint32_t acc = 0;
        for (std::uint64_t i = 0; i < nrep; ++i) acc = F.add(acc, 1);
        return acc;
    }
    throw parse_error("unrecognized coefficient '" + tok + "'", pos);
}

/// Comma-separated ascending coefficients, e.g. "1,a^2,1,1,a,1".
inline Polynomial parse_polynomial(std::shared_ptr<const FiniteField> field,
                                   const std::string& text) {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(start, comma - start);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        coeffs.push_back(parse_element(*field, tok, start));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return Polynomial(std::move(field), std::move(coeffs));
}

inline std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out << ',';
        out << format_element(*f.field(), f.coeffs()[i]);
    }
    return out.str();
}

/// One row per line, space-separated element indices (base-q digits).
inline std::string format_matrix(const GFMatrix& M) {
    std::ostringstream out;
    for (unsigned i = 0; i < M.rows(); ++i) {
        for (unsigned j = 0; j < M.cols(); ++j) {
            if (j) out << ' ';
            out << M.row(i)[j];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace dihedral

#endif
