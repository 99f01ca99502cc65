#pragma once

#include <vector>

namespace factorforge {

bool is_prime(int n);
/// Prime factors with multiplicity, ascending.
std::vector<int> prime_factors(int n);
/// All positive divisors, ascending.
std::vector<int> divisors(int n);
/// Largest power of p dividing n.
int p_part(int n, int p);
bool is_power_of(int n, int p);

}  // namespace factorforge
