#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ballmodal/error.hpp"
#include "ballmodal/frames.hpp"
#include "ballmodal/io.hpp"

using namespace ballmodal;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(BALLMODAL_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_of(const std::string& text) {
  try {
    model_from_json(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ModelIo, ReadsDocument) {
  const Model m = model_from_json(data("nonnormal.json"));
  EXPECT_EQ(m.frame().names(), (std::vector<std::string>{"w", "u"}));
  EXPECT_EQ(m.frame().lattices(), (std::vector<Lattice>{Lattice::B, Lattice::A}));
  EXPECT_TRUE(m.frame().accesses(0, 1));
  EXPECT_EQ(m.value(1, "p"), Element::e1());
  EXPECT_EQ(eval(m, "w", parse("[]p")), Element::bottom());
}

TEST(ModelIo, RoundTrip) {
  for (const char* file : {"nonnormal.json", "euclidean_witness.json"}) {
    const Model m = model_from_json(data(file));
    EXPECT_EQ(model_from_json(model_to_json(m)), m) << file;
  }
  for (const auto& name : fixture_names()) {
    const Frame f = *fixture(name);
    EXPECT_EQ(frame_from_json(frame_to_json(f)), f) << name;
  }
}

TEST(ModelIo, DefaultsAndOptionalFields) {
  const Model m = model_from_json(R"({"worlds": ["w"], "lattices": {"w": "A"}})");
  EXPECT_EQ(m.ultrafilter(), Ultrafilter{});
  EXPECT_TRUE(m.frame().edges().empty());
  EXPECT_TRUE(m.variables().empty());
}

TEST(ModelIo, ErrorsNameTheField) {
  EXPECT_NE(error_of(data("bad_element.json")).find("valuation.w.p"), std::string::npos);
  EXPECT_NE(error_of("{").find("malformed"), std::string::npos);
  EXPECT_NE(error_of(R"({"lattices": {}})").find("worlds"), std::string::npos);
  EXPECT_NE(error_of(R"({"worlds": ["w"], "lattices": {"w": "D"}})").find("lattices.w"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"worlds": ["w"], "lattices": {"w": "A"}, "edges": [["w", "x"]]})")
                .find("edges[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"worlds": ["w"], "lattices": {"w": "A"}, "ultrafilter": "e4"})")
                .find("ultrafilter"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"worlds": ["w"], "lattices": {"w": "A", "v": "B"}})")
                .find("unknown world"),
            std::string::npos);
}

TEST(ProofIo, ReadsDocument) {
  const Derivation d = derivation_from_json(data("necessitation.json"));
  EXPECT_EQ(d.name, "necessitation");
  ASSERT_EQ(d.steps.size(), 4u);
  EXPECT_EQ(d.steps[3].rule, Rule::IN);
  EXPECT_EQ(d.steps[3].cites, (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(d.steps[3].params->phi, parse("p | ~p"));
  EXPECT_TRUE(check(d).accepted());
  EXPECT_EQ(derivation_from_json(data("bad_ball_rule.json")).steps[1].rule, Rule::BR);
}

TEST(ProofIo, Errors) {
  EXPECT_THROW(derivation_from_json(R"({"steps": [{"conclusion": "p"}]})"), InputError);
  EXPECT_THROW(derivation_from_json(R"({"steps": [{"conclusion": "p &", "rule": "DB"}]})"),
               InputError);
  EXPECT_THROW(derivation_from_json(R"({"steps": [{"conclusion": "p", "rule": "XX"}]})"),
               InputError);
  EXPECT_THROW(
      derivation_from_json(R"({"steps": [{"conclusion": "p", "rule": "DB", "cites": [-1]}]})"),
      InputError);
}
