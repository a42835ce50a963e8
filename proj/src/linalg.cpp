#include "gentlekit/linalg.hpp"

#include <charconv>

namespace gentlekit::linalg {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("field characteristic "
                                  + std::to_string(p) + " is not prime");
    }
  }

  PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) {
      throw std::domain_error("division by zero in GF(p)");
    }
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) {
        result = result * base % p_;
      }
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

}  // namespace gentlekit::linalg

namespace gentlekit {

  FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!linalg::is_prime(p)) {
      throw std::invalid_argument("field characteristic " + std::to_string(p)
                                  + " is not prime");
    }
    return {Kind::PrimeField, p};
  }

  FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") {
      return rationals();
    }
    if (text.starts_with("gf:")) {
      auto const    digits = text.substr(3);
      std::uint32_t p      = 0;
      auto const [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
        return prime(p);
      }
    }
    throw std::invalid_argument("field must be 'q' or 'gf:<prime>', got '"
                                + std::string(text) + "'");
  }

  std::string FieldSpec::to_string() const {
    return kind == Kind::Rationals ? "q" : "gf:" + std::to_string(modulus);
  }

}  // namespace gentlekit
