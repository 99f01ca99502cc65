#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "factorforge/report.hpp"
#include "factorforge/structure.hpp"
#include "helpers.hpp"

using namespace fft;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidTable;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("bundled registry") {
  const auto& cat = Catalog::bundled();
  CHECK(cat.records().size() >= 16);
  int non_multifold = 0;
  for (const auto& r : cat.records()) non_multifold += r.has_tag("non-multifold");
  CHECK(non_multifold == 8);
  for (const char* id : {"A4", "C2^2:C9", "C3xA4", "C2^3:C7", "A5", "C5xA4", "C7xA4", "C7:A4"}) {
    const auto* r = cat.find(id);
    REQUIRE(r);
    CHECK(r->has_tag("non-multifold"));
  }
  CHECK(cat.find("nope") == nullptr);
  CHECK(cat.build("A5").order() == 60);
}

TEST_CASE("parsing catalogs") {
  CHECK(Catalog::parse("").records().empty());
  CHECK(Catalog::parse("\n\n").records().empty());

  const auto cat = Catalog::parse(R"({"id":"X","construction":{"type":"cyclic","n":12},"expected_order":12}
{"id":"Y","construction":{"type":"direct_product","factors":["X",{"type":"cyclic","n":2}]},"expected_order":24,"tags":["t"]}
)");
  CHECK(cat.records().size() == 2);
  CHECK(cat.build("Y").order() == 24);
  CHECK(cat.find("Y")->has_tag("t"));
  CHECK(cat.find("Y")->line == 2);

  const auto bad = Catalog::parse(R"({"id":"C12","construction":{"type":"cyclic","n":12},"expected_order":13})");
  CHECK(code_of([&] { bad.build("C12"); }) == ErrorCode::OrderMismatch);

  const std::string text = "{\"id\":\"A\",\"construction\":{\"type\":\"cyclic\",\"n\":2},\"expected_order\":2}\n{\"id\": oops}\n";
  CHECK(code_of([&] { Catalog::parse(text, "mine.jsonl"); }) == ErrorCode::ParseError);
  CHECK(message_of([&] { Catalog::parse(text, "mine.jsonl"); }).find("mine.jsonl:2:") != std::string::npos);

  const std::string dup = "{\"id\":\"A\",\"construction\":{\"type\":\"cyclic\",\"n\":2},\"expected_order\":2}\n"
                          "{\"id\":\"A\",\"construction\":{\"type\":\"cyclic\",\"n\":3},\"expected_order\":3}\n";
  CHECK(code_of([&] { Catalog::parse(dup); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { Catalog::parse(R"({"construction":{"type":"cyclic","n":2},"expected_order":2})"); }) ==
        ErrorCode::ParseError);

  const auto loop = Catalog::parse(R"({"id":"P","construction":{"type":"direct_product","factors":["Q","Q"]},"expected_order":4}
{"id":"Q","construction":{"type":"direct_product","factors":["P","P"]},"expected_order":4})");
  CHECK(code_of([&] { loop.build("P"); }) == ErrorCode::UnknownName);
  const auto dangling = Catalog::parse(R"({"id":"P","construction":"R","expected_order":4})");
  CHECK(code_of([&] { dangling.build("P"); }) == ErrorCode::UnknownName);
}

TEST_CASE("construction types") {
  const auto cat = Catalog::parse(R"J({"id":"S3","construction":{"type":"permutations","degree":3,"generators":["(123)","(12)"]},"expected_order":6}
{"id":"D5","construction":{"type":"semidirect","normal":{"type":"cyclic","n":5,"generator":"r"},"acting":{"type":"cyclic","n":2,"generator":"s"},"action":{"s":{"r":"r^4"}}},"expected_order":10}
{"id":"G4","construction":{"type":"affine_gf2","s":2},"expected_order":12}
{"id":"Bad","construction":{"type":"semidirect","normal":{"type":"cyclic","n":5,"generator":"r"},"acting":{"type":"cyclic","n":2,"generator":"s"},"action":{"s":{"q":"r"}}},"expected_order":10}
{"id":"Odd","construction":{"type":"tetrahedron"},"expected_order":12})J");
  CHECK(cat.build("S3").order() == 6);
  const auto d5 = cat.build("D5");
  CHECK(d5.order() == 10);
  CHECK(is_supersolvable(d5));
  CHECK(center(d5).count() == 1);
  CHECK(find_isomorphism(cat.build("G4"), named_group("A4")).has_value());
  CHECK(code_of([&] { cat.build("Bad"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([&] { cat.build("Odd"); }) == ErrorCode::ParseError);
}

TEST_CASE("builds are deterministic") {
  const auto& cat = Catalog::bundled();
  for (const char* id : {"S4", "C2^4:C5", "C7:A4"}) {
    const auto a = cat.build(id);
    const auto b = cat.build(id);
    CHECK(a.same_table(b));
    CHECK(a.labels() == b.labels());
  }
}

TEST_CASE("loading from a file") {
  const std::string path = "factorforge_test_catalog.jsonl";
  {
    std::ofstream out(path);
    out << R"({"id":"C5","construction":{"type":"cyclic","n":5},"expected_order":5})" << '\n';
  }
  const auto records = load_catalog(path);
  CHECK(records.size() == 1);
  CHECK(records[0].id == "C5");
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_catalog("does/not/exist.jsonl"), Error);
}

TEST_CASE("subgroup specs") {
  const auto& cat = Catalog::bundled();
  const auto s5 = cat.build("S5");
  const auto* rec = cat.find("S5");
  CHECK(resolve_subgroup_spec(s5, "sylow:2").count() == 8);
  CHECK(resolve_subgroup_spec(s5, "sylow:5").count() == 5);
  CHECK(resolve_subgroup_spec(s5, "named:D5", rec).count() == 10);
  CHECK(resolve_subgroup_spec(s5, "named:A4", rec).count() == 12);
  CHECK(resolve_subgroup_spec(s5, "gen:(12),(345)").count() == 6);
  CHECK(resolve_subgroup_spec(s5, "gen:(12)(34)").count() == 2);
  CHECK(code_of([&] { resolve_subgroup_spec(s5, "sylow:7"); }) == ErrorCode::NotPrimeDivisor);
  CHECK(code_of([&] { resolve_subgroup_spec(s5, "named:Q", rec); }) == ErrorCode::UnknownName);
  CHECK(code_of([&] { resolve_subgroup_spec(s5, "bogus"); }) == ErrorCode::ParseError);
  CHECK(named_subgroup(s5, *rec, "V").count() == 4);
}

TEST_CASE("reports") {
  ReportEntry s4{"S4", 24, false, "yes", "", "", {{"2,3,2,2", "abc"}}, 120, 3};
  ReportEntry a4{"A4", 12, false, "no", "2,3,2", "2m2-cover", {}, 30, 0};
  ReportEntry odd{"odd, \"quoted\"", 12, true, "undecided", "", "", {}, 5, 1};
  const std::vector<ReportEntry> entries{s4, odd, a4};

  const auto json = nlohmann::json::parse(emit_report(entries, ReportFormat::Json));
  CHECK(json["schema"] == "factorforge.classification/1");
  REQUIRE(json["entries"].size() == 3);
  CHECK(json["entries"][0]["id"] == "A4");
  CHECK(json["entries"][2]["id"] == "S4");
  CHECK(json["entries"][0]["failing_shape"] == "2,3,2");

  const auto csv = emit_report(entries, ReportFormat::Csv);
  CHECK(csv.rfind("id,order,supersolvable,multifold,failing_shape,nodes,millis\n", 0) == 0);
  const auto back = parse_csv_report(csv);
  REQUIRE(back.size() == 3);
  CHECK(back[0].id == "A4");
  CHECK(back[1].id == odd.id);
  CHECK(back[1].supersolvable);
  CHECK(back[2].nodes == 120);
  CHECK(back[0].failing_shape == "2,3,2");

  const auto text = emit_report(entries, ReportFormat::Text);
  CHECK(text.find("A4") < text.find("S4"));

  const auto empty = nlohmann::json::parse(emit_report({}, ReportFormat::Json));
  CHECK(empty["entries"].empty());
  CHECK(parse_csv_report(emit_report({}, ReportFormat::Csv)).empty());
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parse_report_format("xml"), Error);
}

TEST_CASE("classification of small registry groups") {
  const auto entries = classify(Catalog::bundled(), 12, 1, SearchOptions{});
  CHECK(entries.size() == 24);
  for (const auto& e : entries) {
    CAPTURE(e.id);
    CHECK(e.multifold == (e.id == "A4" ? "no" : "yes"));
  }
  CHECK(entries.front().id == "C1");
  CHECK(entries.back().order == 12);
}
