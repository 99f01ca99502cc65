#include "factorforge/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "factorforge/error.hpp"
#include "factorforge/gf2m.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

GroupTable::GroupTable(int order, std::vector<Elem> mul, std::vector<std::string> labels,
                       std::vector<NamedGenerator> generators)
    : n_(order), mul_(std::move(mul)), labels_(std::move(labels)), generators_(std::move(generators)) {
  if (n_ < 1 || n_ > kMaxOrder)
    throw Error(ErrorCode::InvalidTable, "order " + std::to_string(n_) + " outside [1, " +
                                             std::to_string(kMaxOrder) + "]");
  const auto n = static_cast<std::size_t>(n_);
  if (mul_.size() != n * n) throw Error(ErrorCode::InvalidTable, "table is not n x n");
  for (Elem v : mul_)
    if (v >= n_) throw Error(ErrorCode::InvalidTable, "entry out of range");
  for (std::size_t x = 0; x < n; ++x)
    if (mul_[x] != x || mul_[x * n] != x)
      throw Error(ErrorCode::InvalidTable, "element 0 is not the identity");
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) seen[mul_[r * n + c]] = 1;
    if (std::count(seen.begin(), seen.end(), 0))
      throw Error(ErrorCode::InvalidTable, "row " + std::to_string(r) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) seen[mul_[c * n + r]] = 1;
    if (std::count(seen.begin(), seen.end(), 0))
      throw Error(ErrorCode::InvalidTable, "column " + std::to_string(r) + " is not a permutation");
  }
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a * n + b] == 0) inv_[a] = static_cast<Elem>(b);
  if (labels_.empty()) {
    labels_.reserve(n);
    labels_.push_back("e");
    for (std::size_t i = 1; i < n; ++i) labels_.push_back("#" + std::to_string(i));
  }
  if (labels_.size() != n) throw Error(ErrorCode::InvalidTable, "label count mismatch");
  for (const auto& g : generators_)
    if (g.element >= n_) throw Error(ErrorCode::InvalidTable, "generator out of range");
}

std::optional<Elem> GroupTable::find_label(std::string_view text) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == text) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<Elem> GroupTable::generator(std::string_view name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.element;
  return std::nullopt;
}

GroupTable GroupTable::with_labels(std::vector<std::string> labels) const {
  return GroupTable(n_, mul_, std::move(labels), generators_);
}

GroupTable GroupTable::with_generators(std::vector<NamedGenerator> generators) const {
  return GroupTable(n_, mul_, labels_, std::move(generators));
}

std::optional<std::string> audit(const GroupTable& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    const auto e = static_cast<Elem>(x);
    if (g.mul(0, e) != e || g.mul(e, 0) != e) return "identity law fails at " + std::to_string(x);
    if (g.mul(e, g.inv(e)) != 0 || g.mul(g.inv(e), e) != 0)
      return "inverse law fails at " + std::to_string(x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Elem xy = g.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      for (int z = 0; z < n; ++z)
        if (g.mul(xy, static_cast<Elem>(z)) != g.mul(static_cast<Elem>(x), g.mul(static_cast<Elem>(y), static_cast<Elem>(z))))
          return "associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z) + ")";
    }
  return std::nullopt;
}

int element_order(const GroupTable& g, Elem x) {
  int k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

void check_cap(long long order, int cap) {
  if (order > cap || order > kMaxOrder)
    throw Error(ErrorCode::OrderExceedsCap,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(std::min(cap, kMaxOrder)));
}

std::vector<NamedGenerator> merge_generators(const std::vector<NamedGenerator>& left,
                                             const std::vector<NamedGenerator>& right,
                                             const std::function<Elem(Elem)>& map_left,
                                             const std::function<Elem(Elem)>& map_right) {
  std::vector<NamedGenerator> out;
  for (const auto& g : left) out.push_back({g.name, map_left(g.element)});
  for (const auto& g : right) {
    std::string name = g.name;
    auto taken = [&](const std::string& s) {
      return std::any_of(out.begin(), out.end(), [&](const NamedGenerator& o) { return o.name == s; });
    };
    for (int k = 2; taken(name); ++k) name = g.name + "_" + std::to_string(k);
    out.push_back({name, map_right(g.element)});
  }
  return out;
}

GroupTable relabel_by_words(GroupTable g) {
  if (g.generators().empty()) return g;
  auto labels = word_labels(g);
  return g.with_labels(std::move(labels));
}

}  // namespace

GroupTable from_permutations(std::span<const Permutation> gens, int cap, std::vector<std::string> names) {
  int degree = 1;
  for (const auto& p : gens) degree = std::max(degree, p.degree());
  std::vector<Permutation> norm_gens;
  for (const auto& p : gens) norm_gens.push_back(p.extended(degree));

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, Elem> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : norm_gens) {
      Permutation next = elems[head].then(gen);
      if (index.count(next)) continue;
      check_cap(static_cast<long long>(elems.size()) + 1, cap);
      index.emplace(next, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const auto n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(elems[a].then(elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(p.to_cycles());
  std::vector<NamedGenerator> named;
  for (std::size_t i = 0; i < norm_gens.size(); ++i) {
    std::string name = i < names.size() ? names[i] : "g" + std::to_string(i + 1);
    named.push_back({std::move(name), index.at(norm_gens[i])});
  }
  return GroupTable(static_cast<int>(n), std::move(mul), std::move(labels), std::move(named));
}

GroupTable cyclic(int n, std::string generator_name) {
  if (n < 1) throw Error(ErrorCode::InvalidTable, "cyclic order must be positive");
  check_cap(n, kMaxOrder);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Elem> mul(un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) mul[i * un + j] = static_cast<Elem>((i + j) % un);
  std::vector<std::string> labels{"e"};
  for (int k = 1; k < n; ++k) labels.push_back(k == 1 ? generator_name : generator_name + "^" + std::to_string(k));
  std::vector<NamedGenerator> gens{{std::move(generator_name), static_cast<Elem>(n > 1 ? 1 : 0)}};
  return GroupTable(n, std::move(mul), std::move(labels), std::move(gens));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, int cap) {
  const int ng = g.order();
  const int nh = h.order();
  check_cap(static_cast<long long>(ng) * nh, cap);
  const auto n = static_cast<std::size_t>(ng * nh);
  std::vector<Elem> mul(n * n);
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b) {
      const Elem i = g.mul(static_cast<Elem>(a / nh), static_cast<Elem>(b / nh));
      const Elem j = h.mul(static_cast<Elem>(a % nh), static_cast<Elem>(b % nh));
      mul[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<Elem>(i * nh + j);
    }
  auto gens = merge_generators(
      g.generators(), h.generators(), [&](Elem x) { return static_cast<Elem>(x * nh); },
      [](Elem x) { return x; });
  return relabel_by_words(GroupTable(static_cast<int>(n), std::move(mul), {}, std::move(gens)));
}

ActionTable trivial_action(const GroupTable& target, const GroupTable& acting) {
  ActionTable act{acting.order(), target.order(), {}};
  act.table.resize(static_cast<std::size_t>(acting.order()) * target.order());
  for (int h = 0; h < acting.order(); ++h)
    for (int x = 0; x < target.order(); ++x)
      act.table[static_cast<std::size_t>(h) * target.order() + x] = static_cast<Elem>(x);
  return act;
}

namespace {

// Extends generator images multiplicatively over the group generated by
// `gens`; returns std::nullopt when the extension is not well defined.
std::optional<std::vector<Elem>> extend_map(const GroupTable& src, const GroupTable& dst,
                                            const std::vector<Elem>& gens, const std::vector<Elem>& images) {
  const int n = src.order();
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  phi[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem z = src.mul(y, gens[i]);
      const Elem img = dst.mul(static_cast<Elem>(phi[y]), images[i]);
      if (phi[z] < 0) {
        phi[z] = img;
        queue.push_back(z);
      } else if (phi[z] != img) {
        return std::nullopt;
      }
    }
  }
  std::vector<Elem> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (phi[static_cast<std::size_t>(x)] < 0)
      throw Error(ErrorCode::InvalidTable, "named generators do not generate the group");
    out[static_cast<std::size_t>(x)] = static_cast<Elem>(phi[static_cast<std::size_t>(x)]);
  }
  return out;
}

bool is_automorphism(const GroupTable& g, const std::vector<Elem>& phi) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Elem v : phi) seen[v] = 1;
  if (std::count(seen.begin(), seen.end(), 0)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[g.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          g.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

}  // namespace

ActionTable action_from_images(const GroupTable& target, const GroupTable& acting,
                               const std::vector<std::vector<Elem>>& images) {
  const auto& tgens = target.generators();
  const auto& agens = acting.generators();
  if (images.size() != agens.size())
    throw Error(ErrorCode::NotAHomomorphism, "one image list per acting generator required");
  std::vector<Elem> tgen_elems;
  for (const auto& g : tgens) tgen_elems.push_back(g.element);

  std::vector<std::vector<Elem>> gen_autos;
  for (std::size_t i = 0; i < agens.size(); ++i) {
    if (images[i].size() != tgens.size())
      throw Error(ErrorCode::NotAnAutomorphism, "image count mismatch for generator " + agens[i].name);
    auto phi = extend_map(target, target, tgen_elems, images[i]);
    if (!phi || !is_automorphism(target, *phi))
      throw Error(ErrorCode::NotAnAutomorphism,
                  "images under " + agens[i].name + " do not define an automorphism");
    gen_autos.push_back(std::move(*phi));
  }

  const int h = acting.order();
  const int n = target.order();
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(h));
  rows[0].resize(static_cast<std::size_t>(n));
  std::iota(rows[0].begin(), rows[0].end(), Elem{0});
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < agens.size(); ++i) {
      const Elem z = acting.mul(y, agens[i].element);
      std::vector<Elem> row(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        row[static_cast<std::size_t>(x)] = rows[y][gen_autos[i][static_cast<std::size_t>(x)]];
      if (rows[z].empty()) {
        rows[z] = std::move(row);
        queue.push_back(z);
      } else if (rows[z] != row) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "generator images are inconsistent with the acting group's relations");
      }
    }
  }
  ActionTable act{h, n, {}};
  act.table.reserve(static_cast<std::size_t>(h) * n);
  for (auto& r : rows) {
    if (r.empty()) throw Error(ErrorCode::InvalidTable, "acting generators do not generate the acting group");
    act.table.insert(act.table.end(), r.begin(), r.end());
  }
  validate_action(target, acting, act);
  return act;
}

void validate_action(const GroupTable& target, const GroupTable& acting, const ActionTable& act) {
  const int h = acting.order();
  const int n = target.order();
  if (act.acting_order != h || act.target_order != n ||
      act.table.size() != static_cast<std::size_t>(h) * n)
    throw Error(ErrorCode::NotAHomomorphism, "action table dimensions do not match the groups");
  for (int a = 0; a < h; ++a) {
    std::vector<Elem> row(act.table.begin() + static_cast<std::ptrdiff_t>(a) * n,
                          act.table.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
    if (!is_automorphism(target, row))
      throw Error(ErrorCode::NotAnAutomorphism, "row " + std::to_string(a) + " is not an automorphism");
  }
  for (int x = 0; x < n; ++x)
    if (act.apply(0, static_cast<Elem>(x)) != x)
      throw Error(ErrorCode::NotAHomomorphism, "identity does not act trivially");
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const Elem ab = acting.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      for (int x = 0; x < n; ++x)
        if (act.apply(ab, static_cast<Elem>(x)) !=
            act.apply(static_cast<Elem>(a), act.apply(static_cast<Elem>(b), static_cast<Elem>(x))))
          throw Error(ErrorCode::NotAHomomorphism, "row composition does not match acting multiplication");
    }
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting, const ActionTable& act,
                              int cap) {
  validate_action(normal, acting, act);
  const int nn = normal.order();
  const int nh = acting.order();
  check_cap(static_cast<long long>(nn) * nh, cap);
  const auto n = static_cast<std::size_t>(nn * nh);
  std::vector<Elem> mul(n * n);
  for (int a = 0; a < static_cast<int>(n); ++a) {
    const auto n1 = static_cast<Elem>(a / nh);
    const auto h1 = static_cast<Elem>(a % nh);
    for (int b = 0; b < static_cast<int>(n); ++b) {
      const auto n2 = static_cast<Elem>(b / nh);
      const auto h2 = static_cast<Elem>(b % nh);
      const Elem nn_part = normal.mul(n1, act.apply(h1, n2));
      const Elem hh_part = acting.mul(h1, h2);
      mul[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<Elem>(nn_part * nh + hh_part);
    }
  }
  auto gens = merge_generators(
      normal.generators(), acting.generators(), [&](Elem x) { return static_cast<Elem>(x * nh); },
      [](Elem x) { return x; });
  return relabel_by_words(GroupTable(static_cast<int>(n), std::move(mul), {}, std::move(gens)));
}

GroupTable affine_gf2s(int s) {
  if (s < 1 || s > 5) throw Error(ErrorCode::TooLarge, "affine_gf2s supports 1 <= s <= 5");
  const GF2m field(s);
  const int q = field.size();
  const auto n = static_cast<std::size_t>(q * (q - 1));
  auto index = [q](std::uint32_t a, std::uint32_t u) {
    return static_cast<Elem>((static_cast<int>(a) - 1) * q + static_cast<int>(u));
  };
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 1; a < static_cast<std::uint32_t>(q); ++a)
    for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(q); ++u) {
      const Elem x = index(a, u);
      labels[x] = "[" + std::to_string(a) + "," + std::to_string(u) + "]";
      for (std::uint32_t b = 1; b < static_cast<std::uint32_t>(q); ++b)
        for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(q); ++v)
          // [[a,u],[0,1]] * [[b,v],[0,1]] = [[ab, av+u],[0,1]]
          mul[static_cast<std::size_t>(x) * n + index(b, v)] = index(field.mul(a, b), field.add(field.mul(a, v), u));
    }
  labels[0] = "e";
  std::vector<NamedGenerator> gens;
  if (q > 2) gens.push_back({"m", index(field.primitive_element(), 0)});
  gens.push_back({"u", index(1, 1)});
  return GroupTable(static_cast<int>(n), std::move(mul), std::move(labels), std::move(gens));
}

// ---------------------------------------------------------------------------
// Words and element lookup

Elem evaluate_word(const GroupTable& g, std::string_view word) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "word '" + std::string(word) + "': " + why);
  };
  Elem acc = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
  };
  bool expect_term = true;
  skip_ws();
  if (i == word.size()) throw fail("empty word");
  while (i < word.size()) {
    if (!expect_term) {
      if (word[i] != '*') throw fail("expected '*'");
      ++i;
      skip_ws();
      expect_term = true;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(word[i]))) throw fail("expected a generator name");
    std::size_t j = i;
    while (j < word.size() && (std::isalnum(static_cast<unsigned char>(word[j])) || word[j] == '_')) ++j;
    const std::string name(word.substr(i, j - i));
    i = j;
    skip_ws();
    long long exponent = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      skip_ws();
      std::size_t k = i;
      if (k < word.size() && word[k] == '-') ++k;
      const std::size_t digits = k;
      while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
      if (k == digits) throw fail("expected an exponent");
      exponent = std::stoll(std::string(word.substr(i, k - i)));
      i = k;
      skip_ws();
    }
    Elem base = 0;
    if (name == "e") {
      base = 0;
    } else if (auto gen = g.generator(name)) {
      base = *gen;
    } else {
      throw Error(ErrorCode::UnknownGenerator, "'" + name + "' in word '" + std::string(word) + "'");
    }
    if (exponent < 0) {
      base = g.inv(base);
      exponent = -exponent;
    }
    exponent %= element_order(g, base);
    for (long long k = 0; k < exponent; ++k) acc = g.mul(acc, base);
    expect_term = false;
  }
  if (expect_term) throw fail("dangling '*'");
  return acc;
}

std::optional<Elem> resolve_element(const GroupTable& g, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const long long idx = std::stoll(std::string(text));
    if (idx < g.order()) return static_cast<Elem>(idx);
    return std::nullopt;
  }
  if (auto hit = g.find_label(text)) return hit;
  if (text.front() == '(') {
    try {
      const auto p = Permutation::from_cycles(text);
      if (auto hit = g.find_label(p.to_cycles())) return hit;
    } catch (const Error&) {
    }
    return std::nullopt;
  }
  try {
    return evaluate_word(g, text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<std::string> word_labels(const GroupTable& g) {
  const int n = g.order();
  // Word as (generator index, exponent) runs.
  std::vector<std::vector<std::pair<std::size_t, int>>> words(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  std::deque<Elem> queue{0};
  const auto& gens = g.generators();
  while (!queue.empty()) {
    const Elem y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem z = g.mul(y, gens[i].element);
      if (seen[z]) continue;
      seen[z] = 1;
      auto w = words[y];
      if (!w.empty() && w.back().first == i) {
        ++w.back().second;
      } else {
        w.emplace_back(i, 1);
      }
      words[z] = std::move(w);
      queue.push_back(z);
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    if (x == 0) {
      labels[ux] = "e";
    } else if (!seen[ux]) {
      labels[ux] = "#" + std::to_string(x);
    } else {
      std::string s;
      for (const auto& [gi, e] : words[ux]) {
        if (!s.empty()) s += '*';
        s += gens[gi].name;
        if (e > 1) s += "^" + std::to_string(e);
      }
      labels[ux] = s;
    }
  }
  return labels;
}

std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;
  std::vector<int> ord_g(static_cast<std::size_t>(n));
  std::vector<int> ord_h(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ord_g[static_cast<std::size_t>(x)] = element_order(g, static_cast<Elem>(x));
    ord_h[static_cast<std::size_t>(x)] = element_order(h, static_cast<Elem>(x));
  }
  {
    auto a = ord_g;
    auto b = ord_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Greedy generating set, highest element orders first.
  std::vector<Elem> by_order(static_cast<std::size_t>(n));
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) { return ord_g[a] > ord_g[b]; });
  std::vector<Elem> gens;
  ElementSet span = ElementSet::single(0);
  for (Elem x : by_order) {
    if (span.count() == n) break;
    if (span.test(x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  std::vector<Elem> images(gens.size());
  std::optional<std::vector<Elem>> found;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (found) return;
    if (k == gens.size()) {
      auto phi = extend_map(g, h, gens, images);
      if (!phi) return;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (Elem v : *phi) seen[v] = 1;
      if (std::count(seen.begin(), seen.end(), 0)) return;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if ((*phi)[g.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
              h.mul((*phi)[static_cast<std::size_t>(x)], (*phi)[static_cast<std::size_t>(y)]))
            return;
      found = std::move(phi);
      return;
    }
    for (int y = 0; y < n && !found; ++y) {
      if (ord_h[static_cast<std::size_t>(y)] != ord_g[gens[k]]) continue;
      images[k] = static_cast<Elem>(y);
      assign(k + 1);
    }
  };
  assign(0);
  return found;
}

}  // namespace factorforge
