#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorforge/factorization.hpp"

namespace factorforge {

/// An element of Z[G] with nonnegative coefficients.
class RingVector {
 public:
  explicit RingVector(const GroupTable& g);

  /// f(X): the 0/1 indicator of X.
  static RingVector indicator(const GroupTable& g, const ElementSet& x);

  const GroupTable& group() const { return *g_; }
  std::uint64_t coeff(Elem x) const { return coeffs_[x]; }
  void set_coeff(Elem x, std::uint64_t c) { coeffs_[x] = c; }
  /// Adds c to the coefficient of x; throws Overflow.
  void add(Elem x, std::uint64_t c);
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  ElementSet support() const;
  bool is_zero_one() const;

  /// Monomials as "c*label" joined by " + ", in element order.
  std::string to_string() const;

  friend bool operator==(const RingVector& a, const RingVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  const GroupTable* g_;
  std::vector<std::uint64_t> coeffs_;
};

/// Convolution: coeff(z) = sum over xy = z of u(x) v(y). Throws Overflow.
RingVector ring_mul(const RingVector& u, const RingVector& v);
RingVector operator+(const RingVector& u, const RingVector& v);

/// Parses "e + b*t + a^2*b^2*t^2"; repeated monomials accumulate.
RingVector parse_ring_element(const GroupTable& g, std::string_view text);

/// f_1 f_2 ... f_k, expected to equal f(G).
struct FormalProduct {
  std::vector<RingVector> factors;
  std::map<std::string, std::string> meta;  // "# key: value" header lines
};

/// One factor per non-blank line; '#' starts a comment.
FormalProduct parse_identity(const GroupTable& g, std::string_view text);

struct IdentityCheck {
  bool holds = false;
  bool factors_zero_one = true;
  std::optional<Elem> mismatch;  // some element whose coefficient is not 1
  std::uint64_t mismatch_coeff = 0;
};

IdentityCheck verify_identity(const GroupTable& g, const FormalProduct& p);

/// Supports of the factors; throws IdentityFails unless the identity holds.
Factorization identity_to_factorization(const GroupTable& g, const FormalProduct& p);

}  // namespace factorforge
