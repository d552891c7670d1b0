#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cosets/report.hpp"
#include "cosets/reproduce.hpp"

using namespace cosets;

namespace {

AnalysisReport tiny_report(bool passing) {
  RunSettings rs;
  AnalysisReport rep = base_report(rs, "sym:3", 6);
  rep.infos.emplace_back("degree", "3");
  CosetBlock b;
  b.n_order = 3;
  b.x_class = "2a";
  b.shape = "single-class";
  b.classes_met = "{2a}";
  b.size_k = 3;
  b.quotient_centralizer = 2;
  rep.cosets.push_back(b);
  TheoremReport sec;
  sec.title = "demo section";
  sec.lines.push_back({"first check", true, "fine"});
  sec.lines.push_back({"second check", passing, passing ? "also fine" : "broken"});
  rep.sections.push_back(sec);
  return rep;
}

}  // namespace

TEST_CASE("reports round trip losslessly through the text form") {
  AnalysisReport rep = tiny_report(true);
  std::string text = serialize_report(rep);
  AnalysisReport back = parse_report(text);
  REQUIRE(back == rep);
  REQUIRE(serialize_report(back) == text);
  REQUIRE(rep.pass());
  REQUIRE_THAT(text, Catch::Matchers::EndsWith("verdict: pass\n"));
}

TEST_CASE("failing reports carry a FAIL verdict and round trip too") {
  AnalysisReport rep = tiny_report(false);
  REQUIRE_FALSE(rep.pass());
  std::string text = serialize_report(rep);
  REQUIRE_THAT(text, Catch::Matchers::EndsWith("verdict: FAIL\n"));
  REQUIRE(parse_report(text) == rep);
}

TEST_CASE("not-applicable sections render a reason and count as passing") {
  AnalysisReport rep = tiny_report(true);
  TheoremReport na;
  na.title = "skipped part";
  na.applicable = false;
  na.skip_reason = "the hypotheses are not met";
  rep.sections.push_back(na);
  REQUIRE(rep.pass());
  std::string text = serialize_report(rep);
  REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("== skipped part (not applicable)"));
  REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("reason: the hypotheses are not met"));
  REQUIRE(parse_report(text) == rep);
}

TEST_CASE("the serializer refuses field text that would corrupt the format") {
  AnalysisReport rep = tiny_report(true);
  rep.infos.emplace_back("note", "two\nlines");
  REQUIRE_THROWS_WITH(serialize_report(rep),
                      Catch::Matchers::ContainsSubstring("contains a line break"));
  rep.infos.pop_back();
  // a separator inside the detail is unambiguous: the parser splits at the
  // first occurrence, so only names must stay clean
  rep.sections[0].lines[0].detail = "lhs :: rhs";
  AnalysisReport back = parse_report(serialize_report(rep));
  REQUIRE(back.sections[0].lines[0].detail == "lhs :: rhs");
  rep.sections[0].lines[0].name = "bad :: name";
  REQUIRE_THROWS_WITH(serialize_report(rep),
                      Catch::Matchers::ContainsSubstring("' :: ' separator"));
}

TEST_CASE("parse errors report the line and reject doctored verdicts") {
  REQUIRE_THROWS_WITH(parse_report("bogus\n"),
                      Catch::Matchers::ContainsSubstring("report parse: line 1"));
  std::string text = serialize_report(tiny_report(true));
  REQUIRE_THROWS_WITH(parse_report(text + "extra\n"),
                      Catch::Matchers::ContainsSubstring("content after the verdict"));
  std::string::size_type pos = text.find("verdict: pass");
  std::string doctored = text;
  doctored.replace(pos, 13, "verdict: FAIL");
  REQUIRE_THROWS_WITH(parse_report(doctored),
                      Catch::Matchers::ContainsSubstring("does not match the recorded checks"));
  std::string truncated = text.substr(0, pos);
  REQUIRE_THROWS_WITH(parse_report(truncated),
                      Catch::Matchers::ContainsSubstring("missing verdict"));
}

TEST_CASE("reproducing the worked examples passes with the advertised shapes") {
  RunSettings rs;
  ReproduceOutcome out = reproduce_examples(rs, false);
  REQUIRE(out.pass);
  REQUIRE(out.blocks.size() == 4);
  REQUIRE(out.blocks[0].first == "example 1");
  REQUIRE(out.blocks[3].first == "example 4");
  for (const auto& [label, rep] : out.blocks) {
    INFO(label);
    REQUIRE(rep.pass());
    REQUIRE(rep.tool == "cosets 0.1.0");
    // every block round trips through the serialized form
    REQUIRE(parse_report(serialize_report(rep)) == rep);
  }
  const AnalysisReport& ex1 = out.blocks[0].second;
  REQUIRE(ex1.cosets.size() == 1);
  REQUIRE(ex1.cosets[0].size_k == 1);
  REQUIRE(ex1.cosets[0].size_d == 3);
  REQUIRE(ex1.cosets[0].quotient_centralizer == 6);
  const AnalysisReport& ex4 = out.blocks[3].second;
  REQUIRE(ex4.group_spec == "pgammal:2:9");
  REQUIRE(ex4.cosets.back().size_k == 180);
  REQUIRE(ex4.cosets.back().size_d == 180);
}

TEST_CASE("timings stay zero by default so reruns are byte stable") {
  RunSettings rs;
  AnalysisReport rep = reproduce_example_1(rs);
  REQUIRE(rep.timing_ms == 0);
  rs.timings = true;
  // with timings requested the field may take any value; the format still parses
  AnalysisReport timed = reproduce_example_1(rs);
  REQUIRE(parse_report(serialize_report(timed)).group_spec == rep.group_spec);
}
