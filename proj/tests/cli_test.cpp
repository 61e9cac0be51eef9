#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using ballmodal::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(BALLMODAL_TEST_DATA) + "/" + name;
}

}  // namespace

TEST(Cli, Eval) {
  auto r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "w",
                   "--formula", "[]p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0, not designated\n");
  r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "u", "--formula", "T"});
  EXPECT_EQ(r.out, "1, designated\n");
  r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "u", "--formula", "p",
              "--ultrafilter", "e2"});
  EXPECT_EQ(r.out, "e1, not designated\n");
}

TEST(Cli, EvalErrors) {
  auto r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "x",
                   "--formula", "p"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("x"), std::string::npos);
  r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "w", "--formula", "p &"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos);
  r = invoke({"eval", "--model", data("bad_element.json"), "--world", "w", "--formula", "p"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("valuation.w.p"), std::string::npos);
  r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "w", "--formula", "q"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"eval", "--model", data("nonnormal.json"), "--world", "w", "--formula", "q",
              "--default-bottom"});
  EXPECT_EQ(r.out, "0, not designated\n");
}

TEST(Cli, Valid) {
  auto r = invoke({"valid", "--frame", data("loop.json"), "--formula", "[]p -> p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid under e1\n");
  r = invoke({"valid", "--frame", "fixture:euc3", "--formula", "<>p -> []<>p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid under e1\ncountermodel:\n{"), std::string::npos);
  EXPECT_NE(r.out.find("\"valuation\""), std::string::npos);
  r = invoke({"valid", "--frame", "fixture:euc3", "--formula", "<>@p -> []<>@p",
              "--all-ultrafilters"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid under e1\nvalid under e2\nvalid under e3\n");
  r = invoke({"valid", "--frame", "fixture:nope", "--formula", "p"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("euc3"), std::string::npos);
}

TEST(Cli, FourValued) {
  auto r = invoke({"cons4", "--premises", "p", "--goal", "@p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not a consequence; witness p=a\n");
  r = invoke({"cons4", "--premises", "@p", "@q", "--goal", "@(p & q)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "consequence\n");
  r = invoke({"taut4", "--formula", "@@p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tautology\n");
  r = invoke({"taut4", "--formula", "[]p"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Search) {
  auto r = invoke({"search", "--premises", "p", "--goal", "[]p", "--max-worlds", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("countermodel with 2 worlds"), std::string::npos);
  r = invoke({"search", "--goal", "[](p -> q) -> ([]p -> []q)", "--max-worlds", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "no countermodel up to 2 worlds\n");
  r = invoke({"search", "--goal", "<>p -> []<>p", "--max-worlds", "3", "--require",
              "euclidean"});
  EXPECT_EQ(r.code, 1);
  r = invoke({"search", "--goal", "[]p", "--max-worlds", "2", "--require", "dense"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Correspond) {
  auto r = invoke({"correspond", "--property", "reflexive", "--formula", "[]p -> p",
                   "--max-worlds", "3", "--all-ultrafilters"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("13824+144+6 frames × 3 ultrafilters, 0 mismatches"),
            std::string::npos)
      << r.out;
  r = invoke({"correspond", "--property", "euclidean", "--formula", "<>p -> []<>p",
              "--max-worlds", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("frame_encoding,property_holds,formula_valid,witness,ultrafilter\n", 0),
            0u);
  r = invoke({"correspond", "--property", "serial", "--formula", "[]p -> <>p",
              "--max-worlds", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"frames_checked\": 150"), std::string::npos);
}

TEST(Cli, ResourceCaps) {
  auto r = invoke({"correspond", "--property", "reflexive", "--formula", "[]p -> p",
                   "--max-worlds", "2", "--max-valuations", "4"});
  EXPECT_EQ(r.code, 3);
  r = invoke({"search", "--goal", "[]p", "--max-worlds", "3", "--max-frames", "10"});
  EXPECT_EQ(r.code, 3);
  r = invoke({"correspond", "--property", "reflexive", "--formula", "p",
              "--max-valuations", "0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Enumerate) {
  auto r = invoke({"enumerate", "--worlds", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1:0:A\n1:0:B\n1:0:C\n1:1:A\n1:1:B\n1:1:C\n6 frames\n");
  r = invoke({"enumerate", "--worlds", "2", "--modulo-isomorphism"});
  EXPECT_NE(r.out.find("\n78 frames\n"), std::string::npos);
  r = invoke({"enumerate", "--worlds", "1", "--property", "reflexive", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "frame_encoding,index,reflexive");
  EXPECT_NE(r.out.find("1:1:B,4,true\n"), std::string::npos);
}

TEST(Cli, Indiscern) {
  auto r = invoke({"indiscern", "--corpus-depth", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "soob_F and soob_Fprime agree on all 5 corpus formulas\n");
  r = invoke({"indiscern", "--corpus-depth", "1", "--first", data("loop.json"),
              "--second", data("dead_end.json"), "--format", "csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "formula,ultrafilter,valid_in_first,valid_in_second");
  EXPECT_NE(r.out.find("\"[]p\",e1,false,true\n"), std::string::npos) << r.out;
}

TEST(Cli, CheckProof) {
  auto r = invoke({"checkproof", "--proof", data("necessitation.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "accepted: |- [](p | ~p)\n");
  r = invoke({"checkproof", "--proof", data("necessitation.json"), "--crosscheck", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no countermodel"), std::string::npos);
  r = invoke({"checkproof", "--proof", data("bad_ball_rule.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("rejected at step 1: ", 0), 0u);
  r = invoke({"checkproof", "--proof", data("missing.json")});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--world", "w"}).code, 2);
  EXPECT_EQ(invoke({"valid", "--frame", "fixture:euc3", "--formula", "p",
                    "--ultrafilter", "e1", "--all-ultrafilters"})
                .code,
            2);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("correspond"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"correspond", "--property", "euclidean",
                                      "--formula", "<>p -> []<>p", "--max-worlds", "2",
                                      "--all-ultrafilters", "--workers", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}
