#include "factorforge/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "factorforge/error.hpp"

namespace factorforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidPermutation, "images are not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

namespace {

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'e' && cycles.empty() && text.find('(') == std::string_view::npos) {
      ++i;
      continue;
    }
    if (c != '(') throw bad("expected '('");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw bad("unclosed cycle");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> cycle;
    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
      std::size_t j = 0;
      while (j < body.size()) {
        if (body[j] == ' ' || body[j] == ',') {
          ++j;
          continue;
        }
        std::size_t k = j;
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
        if (k == j) throw bad("expected a point");
        cycle.push_back(std::stoi(std::string(body.substr(j, k - j))));
        j = k;
      }
    } else {
      for (char d : body) {
        if (!std::isdigit(static_cast<unsigned char>(d))) throw bad("expected a digit");
        cycle.push_back(d - '0');
      }
    }
    for (int p : cycle)
      if (p < 1) throw bad("points are 1-based");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return cycles;
}

}  // namespace

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  const auto cycles = parse_cycles(text);
  int max_point = 0;
  for (const auto& c : cycles)
    for (int p : c) max_point = std::max(max_point, p);
  if (degree == 0) degree = max_point;
  if (max_point > degree)
    throw Error(ErrorCode::InvalidPermutation, "point exceeds degree in " + std::string(text));
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  // Cycles compose left to right, so later cycles act after earlier ones.
  Permutation result = identity(degree);
  for (const auto& c : cycles) {
    std::vector<int> step(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) step[static_cast<std::size_t>(i)] = i;
    std::fill(used.begin(), used.end(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k] - 1;
      if (used[static_cast<std::size_t>(from)])
        throw Error(ErrorCode::InvalidPermutation, "repeated point in cycle " + std::string(text));
      used[static_cast<std::size_t>(from)] = 1;
      step[static_cast<std::size_t>(from)] = c[(k + 1) % c.size()] - 1;
    }
    result = result.then(Permutation(std::move(step)));
  }
  return result;
}

Permutation Permutation::then(const Permutation& next) const {
  const int d = std::max(degree(), next.degree());
  std::vector<int> img(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const int mid = i < degree() ? (*this)(i) : i;
    img[static_cast<std::size_t>(i)] = mid < next.degree() ? next(mid) : mid;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::extended(int d) const {
  if (d <= degree()) return *this;
  std::vector<int> img(images_);
  for (int i = degree(); i < d; ++i) img.push_back(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  const bool spaced = degree() > 9;
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    int p = start;
    bool first = true;
    do {
      if (!first && spaced) out += ' ';
      out += std::to_string(p + 1);
      seen[static_cast<std::size_t>(p)] = 1;
      p = (*this)(p);
      first = false;
    } while (p != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace factorforge
