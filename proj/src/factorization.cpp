#include "factorforge/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "factorforge/error.hpp"
#include "factorforge/numeric.hpp"

namespace factorforge {

FactorShape FactorShape::parse(std::string_view text) {
  FactorShape shape;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')')) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw Error(ErrorCode::ParseError, "shape '" + std::string(text) + "'");
    const int size = std::stoi(std::string(text.substr(i, j - i)));
    if (size < 1) throw Error(ErrorCode::ParseError, "shape '" + std::string(text) + "' has an empty factor");
    shape.sizes.push_back(size);
    i = j;
    while (i < text.size() && (text[i] == ' ' || text[i] == ')')) ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw Error(ErrorCode::ParseError, "shape '" + std::string(text) + "'");
      ++i;
    }
  }
  if (shape.sizes.empty()) throw Error(ErrorCode::ParseError, "empty shape");
  return shape;
}

long long FactorShape::product() const {
  long long p = 1;
  for (int s : sizes) p *= s;
  return p;
}

FactorShape FactorShape::reversed() const {
  return FactorShape{std::vector<int>(sizes.rbegin(), sizes.rend())};
}

std::string FactorShape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  return out;
}

FactorShape Factorization::shape() const {
  FactorShape s;
  for (const auto& f : factors) s.sizes.push_back(f.count());
  return s;
}

ElementSet set_product(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.mul(static_cast<Elem>(x), static_cast<Elem>(y))); }); });
  return out;
}

bool verify_factorization(const GroupTable& g, const Factorization& f, const ElementSet& target) {
  if (f.factors.empty()) return target == ElementSet::single(0);
  const ElementSet universe = g.all();
  ElementSet prefix = ElementSet::single(0);
  long long expected = 1;
  for (const auto& factor : f.factors) {
    if (!factor.is_subset_of(universe) || factor.none()) return false;
    prefix = set_product(g, prefix, factor);
    expected *= factor.count();
    if (prefix.count() != expected) return false;
  }
  return prefix == target;
}

Factorization group_factors(const GroupTable& g, const Factorization& f, const FactorShape& coarse) {
  Factorization out;
  std::size_t i = 0;
  for (int want : coarse.sizes) {
    if (i == f.factors.size()) throw Error(ErrorCode::ShapeMismatch, "coarse shape is longer");
    ElementSet acc = f.factors[i++];
    while (acc.count() < want && i < f.factors.size()) acc = set_product(g, acc, f.factors[i++]);
    if (acc.count() != want) throw Error(ErrorCode::ShapeMismatch, "sizes do not group into " + coarse.to_string());
    out.factors.push_back(acc);
  }
  if (i != f.factors.size()) throw Error(ErrorCode::ShapeMismatch, "coarse shape is shorter");
  return out;
}

std::vector<FactorShape> prime_shapes(int n) {
  std::vector<int> primes = prime_factors(n);
  if (primes.empty()) primes.push_back(1);
  std::vector<FactorShape> out;
  do {
    out.push_back(FactorShape{primes});
  } while (std::next_permutation(primes.begin(), primes.end()));
  return out;
}

std::string digest(const Factorization& f) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const auto& factor : f.factors) {
    factor.for_each([&](int x) { mix(static_cast<std::uint64_t>(x) + 1); });
    mix(0xffff);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string describe(const GroupTable& g, const Factorization& f) {
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) out += " . ";
    out += '{';
    bool first = true;
    f.factors[i].for_each([&](int x) {
      if (!first) out += ", ";
      out += g.label(static_cast<Elem>(x));
      first = false;
    });
    out += '}';
  }
  return out;
}

}  // namespace factorforge
