#include "factorforge/ring.hpp"

#include <sstream>

#include "factorforge/error.hpp"

namespace factorforge {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

RingVector::RingVector(const GroupTable& g) : g_(&g), coeffs_(static_cast<std::size_t>(g.order()), 0) {}

RingVector RingVector::indicator(const GroupTable& g, const ElementSet& x) {
  RingVector v(g);
  x.for_each([&](int i) { v.coeffs_[static_cast<std::size_t>(i)] = 1; });
  return v;
}

void RingVector::add(Elem x, std::uint64_t c) {
  std::uint64_t sum;
  if (__builtin_add_overflow(coeffs_[x], c, &sum)) throw Error(ErrorCode::Overflow, "ring coefficient");
  coeffs_[x] = sum;
}

ElementSet RingVector::support() const {
  ElementSet s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) s.set(static_cast<int>(i));
  return s;
}

bool RingVector::is_zero_one() const {
  for (auto c : coeffs_)
    if (c > 1) return false;
  return true;
}

std::string RingVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    if (!out.empty()) out += " + ";
    if (coeffs_[i] != 1) out += std::to_string(coeffs_[i]) + "*";
    out += g_->label(static_cast<Elem>(i));
  }
  return out.empty() ? "0" : out;
}

RingVector ring_mul(const RingVector& u, const RingVector& v) {
  const GroupTable& g = u.group();
  if (!g.same_table(v.group())) throw Error(ErrorCode::InvalidTable, "ring_mul across different groups");
  RingVector out(g);
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    const std::uint64_t cx = u.coeff(static_cast<Elem>(x));
    if (!cx) continue;
    for (int y = 0; y < n; ++y) {
      const std::uint64_t cy = v.coeff(static_cast<Elem>(y));
      if (!cy) continue;
      std::uint64_t term;
      if (__builtin_mul_overflow(cx, cy, &term)) throw Error(ErrorCode::Overflow, "ring coefficient");
      out.add(g.mul(static_cast<Elem>(x), static_cast<Elem>(y)), term);
    }
  }
  return out;
}

RingVector operator+(const RingVector& u, const RingVector& v) {
  RingVector out = u;
  for (int x = 0; x < u.group().order(); ++x) out.add(static_cast<Elem>(x), v.coeff(static_cast<Elem>(x)));
  return out;
}

RingVector parse_ring_element(const GroupTable& g, std::string_view text) {
  RingVector v(g);
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    const std::string term = trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty monomial in '" + std::string(text) + "'");
    v.add(evaluate_word(g, term), 1);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return v;
}

FormalProduct parse_identity(const GroupTable& g, std::string_view text) {
  FormalProduct p;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(std::string_view(line).substr(hash + 1));
      const std::size_t colon = comment.find(':');
      if (colon != std::string::npos) p.meta[trim(comment.substr(0, colon))] = trim(comment.substr(colon + 1));
      line.resize(hash);
    }
    if (trim(line).empty()) continue;
    try {
      p.factors.push_back(parse_ring_element(g, line));
    } catch (const Error& e) {
      throw Error(e.code() == ErrorCode::UnknownGenerator ? e.code() : ErrorCode::ParseError,
                  "identity line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return p;
}

IdentityCheck verify_identity(const GroupTable& g, const FormalProduct& p) {
  IdentityCheck check;
  RingVector acc = RingVector::indicator(g, ElementSet::single(0));
  for (const auto& f : p.factors) {
    if (!f.is_zero_one()) check.factors_zero_one = false;
    acc = ring_mul(acc, f);
  }
  for (int x = 0; x < g.order(); ++x) {
    const auto c = acc.coeff(static_cast<Elem>(x));
    if (c != 1) {
      check.mismatch = static_cast<Elem>(x);
      check.mismatch_coeff = c;
      return check;
    }
  }
  check.holds = check.factors_zero_one;
  return check;
}

Factorization identity_to_factorization(const GroupTable& g, const FormalProduct& p) {
  const IdentityCheck check = verify_identity(g, p);
  if (!check.holds) {
    std::string why = check.mismatch ? "coefficient " + std::to_string(check.mismatch_coeff) + " at " +
                                           g.label(*check.mismatch)
                                     : "a factor has a coefficient above 1";
    throw Error(ErrorCode::IdentityFails, why);
  }
  Factorization f;
  for (const auto& factor : p.factors) f.factors.push_back(factor.support());
  return f;
}

}  // namespace factorforge
