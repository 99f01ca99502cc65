#include "factorforge/gf2m.hpp"

#include <bit>

#include "factorforge/error.hpp"

namespace factorforge {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f)
    if (poly_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t GF2m::default_modulus(int m) {
  switch (m) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    default: throw Error(ErrorCode::TooLarge, "GF(2^m) supported for 1 <= m <= 5");
  }
}

GF2m::GF2m(int m) : m_(m), modulus_(default_modulus(m)) {}

std::uint32_t GF2m::mul(std::uint32_t a, std::uint32_t b) const {
  return poly_mod(poly_mul(a, b), modulus_);
}

std::uint32_t GF2m::pow(std::uint32_t a, unsigned k) const {
  std::uint32_t r = 1;
  while (k) {
    if (k & 1U) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint32_t GF2m::inv(std::uint32_t a) const {
  // a^(q-2) in the multiplicative group of order q-1.
  return pow(a, static_cast<unsigned>(size() - 2));
}

int GF2m::order(std::uint32_t a) const {
  int k = 1;
  for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::uint32_t GF2m::primitive_element() const {
  for (std::uint32_t a = 1; a < static_cast<std::uint32_t>(size()); ++a)
    if (order(a) == size() - 1) return a;
  return 1;
}

}  // namespace factorforge
