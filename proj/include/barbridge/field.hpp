#pragma once

#include <cstdint>
#include <vector>

namespace barbridge {

using Scalar = std::uint32_t;

// Prime field GF(p). Elements are canonical residues in [0, p).
class FieldSpec {
 public:
  // Throws InputError unless p is a prime below 2^16.
  explicit FieldSpec(std::uint32_t characteristic = 2);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_gf2() const noexcept { return p_ == 2; }

  Scalar reduce(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  // a must be nonzero.
  Scalar inv(Scalar a) const noexcept { return inverse_[a]; }
  Scalar div(Scalar a, Scalar b) const noexcept { return mul(a, inv(b)); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
  std::vector<Scalar> inverse_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace barbridge
