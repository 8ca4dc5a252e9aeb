#include "doctest.h"

#include <sstream>

#include "levired/commands.hpp"
#include "levired/errors.hpp"

using namespace levired;

namespace {

ProblemDocument parse_one(const std::string& text) {
  std::istringstream in(text);
  auto docs = parse_documents(in, "inline");
  REQUIRE(docs.size() == 1);
  return docs.front();
}

Report without_timing(Report r) {
  if (r.is_object()) {
    r.erase("elapsed_ms");
    for (auto& [k, v] : r.items()) v = without_timing(v);
  } else if (r.is_array()) {
    for (auto& v : r) v = without_timing(v);
  }
  return r;
}

const char* kGH = R"(
name: GH
group: A5
factors: 3,1,3,2,1; 4,1,2,3,4
target: 1,1,8,3,4
I: 2,3,4,5
words: s1; s1
w: s2 s1
)";

}  // namespace

TEST_CASE("GL coordinates") {
  CHECK(gl_to_sl({32, 28, 26, 16, 10, 0}) == Weight{4, 2, 10, 6, 10});
  CHECK(gl_to_sl({5, 5, 5, 5}).is_zero());
  CHECK(gl_to_sl({21, 16, 13, 12, 9, 5, 0}) == Weight{5, 3, 1, 3, 4, 5});
  CHECK_THROWS_AS(gl_to_sl({1, 2, 0}), InputError);

  auto a5 = RootSystem::build("A5");
  const auto blocks = gl_restrict(WeylElement::parse(a5, "s4 s3"), {60, 51, 28, 26, 25, 2}, {0, 1, 3, 4});
  CHECK(format_blocks(blocks) == "60,51,25|28,26,2");
  // singleton blocks are dropped
  const auto gl7 = gl_restrict(WeylElement::parse(RootSystem::build("A6"), "s1"), {16, 13, 12, 9, 7, 3, 0},
                               {1, 2, 3, 4, 5});
  CHECK(format_blocks(gl7) == "16,12,9,7,3,0");
}

TEST_CASE("document parsing") {
  const ProblemDocument doc = parse_one(kGH);
  CHECK(doc.group == "A5");
  CHECK(doc.mode == Mode::SL);
  CHECK(doc.factors.size() == 2);
  CHECK(doc.I == std::vector<int>{2, 3, 4, 5});
  CHECK(doc.face().w == WeylElement::parse(doc.system(), "s2 s1"));
  CHECK(doc.problem().target == Weight{1, 1, 8, 3, 4});

  std::istringstream two("group: A1\nfactors: 1\ntarget: 1\n---\ngroup: A2\n\n\n# trailing comment\n");
  CHECK(parse_documents(two, "x").size() == 2);

  std::istringstream bad("group: A2\nfactors: 1,0\nfrobnicate: 3\n");
  try {
    parse_documents(bad, "bad.txt");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("bad.txt:3") != std::string::npos);
  }
  std::istringstream bad_entry("factors: 1,0; 2,q\n");
  CHECK_THROWS_WITH_AS(parse_documents(bad_entry, "f"), doctest::Contains("factor 2, entry 2"), InputError);

  ProblemDocument gl = parse_one("group: A2\nmode: gl\nfactors: 2,1,0\ntarget: 2,1,1\n");
  CHECK_THROWS_WITH_AS(gl.problem(), doctest::Contains("sum"), InputError);
  gl.group = "B2";
  CHECK_THROWS_AS(gl.problem(), InputError);
}

TEST_CASE("commands") {
  ProblemDocument doc = parse_one(kGH);
  const CommandResult red = cmd_reduce(doc);
  CHECK(red.exit_code == kOk);
  CHECK(red.report["mult_big"] == 24);
  CHECK(red.report["mult_small"] == 24);
  CHECK(red.report["reduced"]["target"] == "1,9,3,4");
  CHECK(red.report["verdicts"]["cond_iii"] == true);
  for (const char* key : {"group", "mode", "face", "verdicts", "mult_big", "mult_small", "elapsed_ms"}) {
    CHECK(red.report.contains(key));
  }

  ProblemDocument one;
  one.group = "C3";
  one.factors = {{1, 2, 0}};
  one.target = IntVec{1, 2, 0};
  CHECK(cmd_mult(one).report["mult_big"] == 1);

  doc.expect_mult = 23;
  CHECK(cmd_reduce(doc).exit_code == kMismatch);
  doc.expect_mult.reset();
  doc.target = IntVec{2, 1, 8, 3, 4};
  const CommandResult off = cmd_reduce(doc);
  CHECK(off.exit_code == kInputError);
  CHECK(off.report["error"]["kind"] == "precondition");

  ProblemDocument sch;
  sch.group = "A4";
  sch.words = {"s2", "s2"};
  const CommandResult s = cmd_schubert(sch);
  CHECK(s.report["product"] == "[s1 s2] + [s3 s2]");

  ProblemDocument capped;
  capped.group = "A7";
  capped.words = {"s4 s3", "s4 s5"};
  CommandOptions tight;
  tight.schubert.max_weyl_size = 50;
  CHECK(cmd_schubert(capped, tight).exit_code == kResourceLimit);

  ProblemDocument rules;
  rules.group = "A4";
  rules.words = {"s3 s4 s2", "s4 s2 s3"};
  rules.w = "s2 s3 s4 s2 s3 s2";
  const CommandResult g = cmd_gen_rules(rules);
  CHECK(g.exit_code == kOk);
  bool found = false;
  for (const auto& r : g.report["rules"]) {
    if (r["I"] != Report{1, 2}) continue;
    auto a4 = RootSystem::build("A4");
    found = WeylElement::parse(a4, r["w"].get<std::string>()) == WeylElement::parse(a4, "s2 s3 s4 s2 s3");
  }
  CHECK(found);
  rules.words = {"s3", "s3"};
  CHECK(cmd_gen_rules(rules).exit_code == kInputError);
}

TEST_CASE("GL and SL presentations agree") {
  // the same problem written both ways
  ProblemDocument sl = parse_one(kGH);
  ProblemDocument gl = sl;
  gl.mode = Mode::GL;
  gl.factors = {{10, 7, 6, 3, 1, 0}, {14, 10, 9, 7, 4, 0}};
  gl.target = IntVec{19, 18, 17, 9, 6, 2};
  REQUIRE(gl.problem().factors == sl.problem().factors);
  const Report a = cmd_reduce(sl).report, b = cmd_reduce(gl).report;
  CHECK(a["mult_big"] == b["mult_big"]);
  CHECK(a["reduced"]["factors"] == b["reduced"]["factors"]);
  CHECK(a["reduced"]["target"] == b["reduced"]["target"]);

  ProblemDocument gl7 = parse_one(R"(
group: A6
mode: gl
factors: 16,13,12,9,7,3,0; 21,16,13,12,9,5,0
target: 29,28,27,26,13,9,4
I: 2,3,4,5,6
words: s1; s2 s1
w: s3 s2 s1
)");
  ProblemDocument sl7 = gl7;
  sl7.mode = Mode::SL;
  sl7.factors.clear();
  for (const auto& f : gl7.factors) sl7.factors.push_back(gl_to_sl(f).coords());
  sl7.target = gl_to_sl(*gl7.target).coords();
  const Report c = cmd_reduce(gl7).report, d = cmd_reduce(sl7).report;
  CHECK(c["mult_big"] == 108);
  CHECK(d["mult_big"] == 108);
  CHECK(c["reduced"]["factors"] == d["reduced"]["factors"]);
  CHECK(c["reduced"]["gl"][0] == "16,12,9,7,3,0");
}

TEST_CASE("reports are reproducible") {
  const ProblemDocument doc = parse_one(kGH);
  CommandOptions opts;
  opts.samples = 4;
  opts.seed = 99;
  const std::string first = without_timing(cmd_check_face(doc, opts).report).dump();
  const std::string second = without_timing(cmd_check_face(doc, opts).report).dump();
  CHECK(first == second);
  CHECK(without_timing(cmd_reduce(doc).report).dump() == without_timing(cmd_reduce(doc).report).dump());
  CHECK(render_text(without_timing(cmd_reduce(doc).report)).find("mult_big: 24") != std::string::npos);
}

TEST_CASE("corpus replay") {
  const auto corpus = load_documents(default_corpus_path());
  CHECK(corpus.size() == 8);
  const CommandResult typeA = replay_corpus(corpus, "A");
  CHECK(typeA.exit_code == kOk);
  CHECK(typeA.report["summary"] == "6/6");
  const CommandResult none = replay_corpus(corpus, "E");
  CHECK(none.exit_code == kInputError);
  CHECK(none.report["summary"] == "no fixtures selected");
  const CommandResult c5 = replay_corpus(corpus, "C");
  CHECK(c5.report["multiplicities"] == Report{31});
}
