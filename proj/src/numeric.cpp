#include "factorforge/numeric.hpp"

namespace factorforge {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace factorforge
