#pragma once

#include <cstdint>

namespace factorforge {

/// True when `poly` (bit i = coefficient of x^i) is irreducible over GF(2).
bool is_irreducible_gf2(std::uint32_t poly);

/// Arithmetic in GF(2^m), elements encoded as polynomials over GF(2) in the
/// low m bits, reduced modulo a fixed irreducible polynomial per m.
class GF2m {
 public:
  explicit GF2m(int m);

  /// x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1 for m = 1..5.
  static std::uint32_t default_modulus(int m);

  int degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  int size() const { return 1 << m_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, unsigned k) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// Multiplicative order of a nonzero element.
  int order(std::uint32_t a) const;
  /// Smallest element generating the multiplicative group.
  std::uint32_t primitive_element() const;

 private:
  int m_;
  std::uint32_t modulus_;
};

}  // namespace factorforge
