#include "factorforge/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "factorforge/error.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorCode::ParseError, "unknown report format '" + std::string(name) + "'");
}

namespace {

void sort_entries(std::vector<ReportEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return std::tie(a.order, a.id) < std::tie(b.order, b.id); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace

json stats_json(const SearchStats& s) {
  return json{{"nodes", s.nodes},
              {"prunes",
               {{"normalization", s.prune_normalization},
                {"symmetry", s.prune_symmetry},
                {"exactness", s.prune_exactness},
                {"divisibility", s.prune_divisibility},
                {"exact_cover", s.prune_exact_cover},
                {"memo", s.prune_memo}}},
              {"millis", static_cast<long long>(s.millis)}};
}

json report_json(std::vector<ReportEntry> entries) {
  sort_entries(entries);
  json list = json::array();
  for (const auto& e : entries) {
    json w = json::array();
    for (const auto& d : e.witnesses) w.push_back({{"shape", d.shape}, {"digest", d.digest}});
    list.push_back({{"id", e.id},
                    {"order", e.order},
                    {"supersolvable", e.supersolvable},
                    {"multifold", e.multifold},
                    {"failing_shape", e.failing_shape.empty() ? json(nullptr) : json(e.failing_shape)},
                    {"failing_proof", e.failing_proof.empty() ? json(nullptr) : json(e.failing_proof)},
                    {"witnesses", w},
                    {"nodes", e.nodes},
                    {"millis", e.millis}});
  }
  return json{{"schema", "factorforge.classification/1"}, {"entries", list}};
}

std::string emit_report(std::vector<ReportEntry> entries, ReportFormat format) {
  sort_entries(entries);
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json:
      out << report_json(std::move(entries)).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      out << "id,order,supersolvable,multifold,failing_shape,nodes,millis\n";
      for (const auto& e : entries)
        out << csv_field(e.id) << ',' << e.order << ',' << (e.supersolvable ? "true" : "false") << ',' << e.multifold
            << ',' << csv_field(e.failing_shape) << ',' << e.nodes << ',' << e.millis << '\n';
      break;
    case ReportFormat::Text:
      for (const auto& e : entries) {
        out << e.id << "  order " << e.order << "  supersolvable " << (e.supersolvable ? "yes" : "no")
            << "  multifold " << e.multifold;
        if (!e.failing_shape.empty()) out << "  fails (" << e.failing_shape << ") by " << e.failing_proof;
        out << "  nodes " << e.nodes << "  " << e.millis << " ms\n";
      }
      break;
  }
  return out.str();
}

std::vector<ReportEntry> parse_csv_report(std::string_view text) {
  std::vector<ReportEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    if (++line_no == 1 || line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "CSV line " + std::to_string(line_no) + ": expected 7 fields");
    ReportEntry e;
    try {
      e.id = f[0];
      e.order = std::stoi(f[1]);
      e.supersolvable = f[2] == "true";
      e.multifold = f[3];
      e.failing_shape = f[4];
      e.nodes = std::stoull(f[5]);
      e.millis = std::stoll(f[6]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "CSV line " + std::to_string(line_no) + ": bad number");
    }
    out.push_back(std::move(e));
  }
  return out;
}

ReportEntry classify_group(const std::string& id, const GroupTable& g, const SearchOptions& opts) {
  ReportEntry e;
  e.id = id;
  e.order = g.order();
  e.supersolvable = is_supersolvable(g);
  const MultifoldResult r = is_multifold(g, opts);
  e.multifold = r.verdict == Verdict::Found ? "yes" : r.verdict == Verdict::None ? "no" : "undecided";
  if (r.failing_shape) {
    e.failing_shape = r.failing_shape->to_string();
    e.failing_proof = r.failing_proof;
  }
  for (const auto& [shape, f] : r.witnesses) e.witnesses.push_back({shape.to_string(), digest(f)});
  e.nodes = r.stats.nodes;
  e.millis = static_cast<long long>(r.stats.millis);
  return e;
}

std::vector<ReportEntry> classify(const Catalog& catalog, int max_order, int jobs, const SearchOptions& opts) {
  std::vector<const CatalogRecord*> todo;
  for (const auto& r : catalog.records())
    if (r.expected_order <= max_order) todo.push_back(&r);
  std::vector<ReportEntry> out(todo.size());
  SearchOptions per_group = opts;
  per_group.jobs = 1;
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(todo.size());
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      try {
        out[i] = classify_group(todo[i]->id, catalog.build(*todo[i], kMaxOrder), per_group);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs <= 0) jobs = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) throw Error(ErrorCode::ParseError, "record '" + todo[i]->id + "': " + errors[i]);
  sort_entries(out);
  return out;
}

}  // namespace factorforge
