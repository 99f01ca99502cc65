#include "factorforge/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "embedded_data.hpp"
#include "factorforge/error.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

using nlohmann::json;

bool CatalogRecord::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

[[noreturn]] void bad_record(const std::string& source, int line, const std::string& why) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + why);
}

CatalogRecord record_from_json(const json& j, const std::string& source, int line) {
  if (!j.is_object()) bad_record(source, line, "record must be a JSON object");
  CatalogRecord r;
  r.line = line;
  try {
    r.id = j.at("id").get<std::string>();
    r.name = j.value("name", r.id);
    r.construction = j.at("construction");
    r.expected_order = j.at("expected_order").get<int>();
    if (j.contains("tags")) r.tags = j.at("tags").get<std::vector<std::string>>();
    if (j.contains("subgroups"))
      for (const auto& [name, gens] : j.at("subgroups").items())
        r.subgroups[name] = gens.get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    bad_record(source, line, std::string("schema: ") + e.what());
  }
  if (r.id.empty()) bad_record(source, line, "empty id");
  return r;
}

Permutation permutation_from_json(const json& p, int degree) {
  if (p.is_string()) return Permutation::from_cycles(p.get<std::string>(), degree);
  std::vector<int> images;
  for (const auto& v : p) images.push_back(v.get<int>() - 1);
  const int own = static_cast<int>(images.size());
  return Permutation(std::move(images)).extended(std::max(degree, own));
}

}  // namespace

Catalog Catalog::parse(std::string_view text, const std::string& source) {
  Catalog cat;
  cat.source_ = source;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line_no) + ":" + std::to_string(e.byte) +
                                             ": " + e.what());
    }
    CatalogRecord r = record_from_json(j, source, line_no);
    if (cat.find(r.id)) bad_record(source, line_no, "duplicate id '" + r.id + "'");
    cat.records_.push_back(std::move(r));
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open catalog '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const Catalog& Catalog::bundled() {
  static const Catalog cat = parse(embedded::kRegistry, "registry.jsonl");
  return cat;
}

const CatalogRecord* Catalog::find(std::string_view id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

GroupTable Catalog::build(const CatalogRecord& record, int cap) const {
  std::vector<std::string> stack;
  return build_record(record, stack, cap);
}

GroupTable Catalog::build_record(const CatalogRecord& record, std::vector<std::string>& stack, int cap) const {
  stack.push_back(record.id);
  GroupTable g = build_construction(record.construction, stack, cap);
  stack.pop_back();
  if (g.order() != record.expected_order)
    throw Error(ErrorCode::OrderMismatch, "record '" + record.id + "' built order " + std::to_string(g.order()) +
                                              ", expected " + std::to_string(record.expected_order));
  return g;
}

GroupTable Catalog::build(std::string_view id, int cap) const {
  const CatalogRecord* r = find(id);
  if (!r) throw Error(ErrorCode::UnknownName, "no catalog record '" + std::string(id) + "'");
  return build(*r, cap);
}

GroupTable Catalog::build_construction(const json& c, std::vector<std::string>& stack, int cap) const {
  if (c.is_string()) {
    const auto id = c.get<std::string>();
    if (std::find(stack.begin(), stack.end(), id) != stack.end())
      throw Error(ErrorCode::UnknownName, "cyclic reference through '" + id + "'");
    const CatalogRecord* r = find(id);
    if (!r) throw Error(ErrorCode::UnknownName, "reference to unknown record '" + id + "'");
    return build_record(*r, stack, cap);
  }
  const std::string where = "record '" + stack.back() + "'";
  try {
    const std::string type = c.at("type").get<std::string>();
    if (type == "cyclic") return cyclic(c.at("n").get<int>(), c.value("generator", std::string("g")));
    if (type == "permutations") {
      const int degree = c.value("degree", 0);
      std::vector<Permutation> gens;
      for (const auto& p : c.at("generators")) gens.push_back(permutation_from_json(p, degree));
      std::vector<std::string> names;
      if (c.contains("names")) names = c.at("names").get<std::vector<std::string>>();
      return from_permutations(gens, cap, names);
    }
    if (type == "direct_product") {
      const auto& factors = c.at("factors");
      if (factors.empty()) throw Error(ErrorCode::ParseError, where + ": direct_product needs factors");
      GroupTable g = build_construction(factors[0], stack, cap);
      for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, build_construction(factors[i], stack, cap), cap);
      return g;
    }
    if (type == "semidirect") {
      const GroupTable normal = build_construction(c.at("normal"), stack, cap);
      const GroupTable acting = build_construction(c.at("acting"), stack, cap);
      const json action = c.value("action", json::object());
      for (const auto& [gen, _] : action.items())
        if (!acting.generator(gen)) throw Error(ErrorCode::UnknownGenerator, where + ": acting generator '" + gen + "'");
      std::vector<std::vector<Elem>> images;
      for (const auto& h : acting.generators()) {
        std::vector<Elem> row;
        const json rules = action.contains(h.name) ? action.at(h.name) : json::object();
        for (const auto& [gen, _] : rules.items())
          if (!normal.generator(gen)) throw Error(ErrorCode::UnknownGenerator, where + ": normal generator '" + gen + "'");
        for (const auto& x : normal.generators())
          row.push_back(rules.contains(x.name) ? evaluate_word(normal, rules.at(x.name).get<std::string>()) : x.element);
        images.push_back(std::move(row));
      }
      return semidirect_product(normal, acting, action_from_images(normal, acting, images), cap);
    }
    if (type == "affine_gf2") return affine_gf2s(c.at("s").get<int>());
    throw Error(ErrorCode::ParseError, where + ": unknown construction type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, where + ": " + e.what());
  }
}

std::vector<CatalogRecord> load_catalog(const std::string& path) { return Catalog::load(path).records(); }

namespace {

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  int v = 0;
  for (char ch : name.substr(prefix.size())) {
    if (ch < '0' || ch > '9' || v > 100000) return std::nullopt;
    v = v * 10 + (ch - '0');
  }
  return v;
}

Permutation cycle_on(int degree, int from, int to) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (int i = from; i < to; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  images[static_cast<std::size_t>(to)] = from;
  return Permutation(std::move(images));
}

}  // namespace

GroupTable named_group(std::string_view name, int cap) {
  const Catalog& reg = Catalog::bundled();
  if (reg.find(name)) return reg.build(name, cap);
  if (auto n = suffix_number(name, "C"); n && *n >= 1) return cyclic(*n);
  if (auto n = suffix_number(name, "S"); n && *n >= 1 && *n <= 6) {
    if (*n == 1) return cyclic(1);
    const std::vector<Permutation> gens{cycle_on(*n, 0, *n - 1), cycle_on(*n, 0, 1)};
    return from_permutations(gens, cap, {"r", "s"});
  }
  if (auto n = suffix_number(name, "A"); n && *n >= 1 && *n <= 6) {
    if (*n <= 2) return cyclic(1);
    std::vector<Permutation> gens{cycle_on(*n, 0, 2)};
    if (*n > 3) gens.push_back(*n % 2 ? cycle_on(*n, 0, *n - 1) : cycle_on(*n, 1, *n - 1));
    return from_permutations(gens, cap, {"s", "r"});
  }
  if (auto n = suffix_number(name, "D"); n && *n >= 3) {
    std::vector<int> flip(static_cast<std::size_t>(*n));
    for (int i = 0; i < *n; ++i) flip[static_cast<std::size_t>(i)] = *n - 1 - i;
    const std::vector<Permutation> gens{cycle_on(*n, 0, *n - 1), Permutation(flip)};
    return from_permutations(gens, cap, {"r", "s"});
  }
  if (name.size() > 3 && name.substr(0, 2) == "G(" && name.back() == ')') {
    if (auto q = suffix_number(name.substr(0, name.size() - 1), "G("))
      for (int s = 1; s <= 5; ++s)
        if (*q == (1 << s)) return affine_gf2s(s);
  }
  throw Error(ErrorCode::UnknownName, "unknown group '" + std::string(name) + "'");
}

ElementSet named_subgroup(const GroupTable& g, const CatalogRecord& record, std::string_view name) {
  const auto it = record.subgroups.find(std::string(name));
  if (it == record.subgroups.end())
    throw Error(ErrorCode::UnknownName, "record '" + record.id + "' has no subgroup '" + std::string(name) + "'");
  std::vector<Elem> gens;
  for (const auto& text : it->second) {
    auto x = resolve_element(g, text);
    if (!x) throw Error(ErrorCode::UnknownName, "subgroup '" + std::string(name) + "': element '" + text + "'");
    gens.push_back(*x);
  }
  return generated_subgroup(g, gens);
}

ElementSet resolve_subgroup_spec(const GroupTable& g, std::string_view spec, const CatalogRecord* record) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "subgroup spec '" + std::string(spec) + "' needs a kind prefix");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "sylow") {
    int p = 0;
    try {
      p = std::stoi(std::string(body));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "sylow spec needs a prime");
    }
    return sylow(g, p);
  }
  if (kind == "named") {
    if (!record) throw Error(ErrorCode::UnknownName, "named subgroups need a catalog group");
    return named_subgroup(g, *record, body);
  }
  if (kind == "gen") {
    std::vector<Elem> gens;
    int depth = 0;
    std::string token;
    auto emit = [&] {
      if (token.empty()) return;
      auto x = resolve_element(g, token);
      if (!x) throw Error(ErrorCode::UnknownName, "element '" + token + "'");
      gens.push_back(*x);
      token.clear();
    };
    for (char ch : body) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) emit();
      else token += ch;
    }
    emit();
    return generated_subgroup(g, gens);
  }
  throw Error(ErrorCode::ParseError, "unknown subgroup spec kind '" + std::string(kind) + "'");
}

const std::map<std::string, std::string>& bundled_identities() {
  static const std::map<std::string, std::string> files = [] {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < embedded::kIdentityCount; ++i)
      m.emplace(embedded::kIdentities[i].name, embedded::kIdentities[i].text);
    return m;
  }();
  return files;
}

}  // namespace factorforge
