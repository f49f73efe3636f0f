#include "barbridge/field.hpp"

#include <string>

#include "barbridge/error.hpp"

namespace barbridge {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (!is_prime(p_) || p_ >= (1u << 16))
    throw InputError("field characteristic must be a prime below 65536, got " +
                     std::to_string(p_));
  inverse_.assign(p_, 0);
  // Fermat: a^(p-2) is the inverse of a.
  for (Scalar a = 1; a < p_; ++a) {
    Scalar result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    inverse_[a] = result;
  }
}

}  // namespace barbridge
