#ifndef DIHEDRAL_ERRORS_HPP
#define DIHEDRAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dihedral {

enum class errc {
    non_prime_characteristic,
    reducible_modulus,
    field_mismatch,
    division_by_zero,
    characteristic_mismatch,
    zero_element,
    order_not_divisible,
    base_not_coprime,
    not_coprime,
    coefficient_not_in_subfield,
    odd_length,
    zero_generator,
    delta_out_of_range,
    condition_fails,
    degenerate_generator,
    not_char_two,
    length_too_short,
    dimension_exceeds_cap,
    empty_code,
    even_modulus,
    unsupported_field,
    parse_error,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

// Parse failures carry the offset of the offending token.
class parse_error : public error {
  public:
    parse_error(const std::string& what, std::size_t position)
        : error(errc::parse_error, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace dihedral

#endif
