#include <gtest/gtest.h>

#include <map>

#include "ballmodal/error.hpp"
#include "ballmodal/prop4.hpp"

using namespace ballmodal;

namespace {

// Four-valued truth tables on two bits, one per coordinate: bit 1 is "a",
// bit 0 is "-a".  Written without reference to B8.
using V = unsigned;
constexpr V kZero = 0b00, kA = 0b10, kNotA = 0b01, kOne = 0b11;
constexpr V kAll[] = {kZero, kA, kNotA, kOne};

V ref_eval(const Formula& f, const std::map<std::string, V>& v) {
  switch (f.op()) {
    case Op::Var:
      return v.at(f.name());
    case Op::Top:
      return kOne;
    case Op::Bot:
      return kZero;
    case Op::Not:
      return ~ref_eval(f.lhs(), v) & 3u;
    case Op::And:
      return ref_eval(f.lhs(), v) & ref_eval(f.rhs(), v);
    case Op::Or:
      return ref_eval(f.lhs(), v) | ref_eval(f.rhs(), v);
    case Op::Ball: {
      const V x = ref_eval(f.lhs(), v);
      return (x == kZero || x == kOne) ? kOne : kZero;
    }
    default:
      throw std::logic_error("modal formula in oracle");
  }
}

bool ref_designated(V x) { return (x & kA) != 0; }

Element to_element(V x) {
  switch (x) {
    case kA:
      return four::kA;
    case kNotA:
      return four::kNotA;
    case kOne:
      return Element::top();
    default:
      return Element::bottom();
  }
}

// Every assignment of the four values to `vars`.
std::vector<std::map<std::string, V>> assignments(const std::set<std::string>& vars) {
  std::vector<std::map<std::string, V>> out{{}};
  for (const auto& name : vars) {
    std::vector<std::map<std::string, V>> next;
    for (const auto& partial : out) {
      for (V x : kAll) {
        auto a = partial;
        a[name] = x;
        next.push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

bool ref_consequence(const std::vector<Formula>& premises, const Formula& goal) {
  std::set<std::string> vars = goal.variables();
  for (const auto& p : premises) {
    const auto pv = p.variables();
    vars.insert(pv.begin(), pv.end());
  }
  for (const auto& a : assignments(vars)) {
    bool all = true;
    for (const auto& p : premises) all = all && ref_designated(ref_eval(p, a));
    if (all && !ref_designated(ref_eval(goal, a))) return false;
  }
  return true;
}

Valuation4 lift(const std::map<std::string, V>& a) {
  Valuation4 out;
  for (const auto& [k, x] : a) out[k] = to_element(x);
  return out;
}

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");

}  // namespace

TEST(Four, Values) {
  EXPECT_EQ(four::kA, Element::e1());
  EXPECT_EQ(four::kNotA, complement(Element::e1()));
  EXPECT_TRUE(four::designated(four::kA));
  EXPECT_TRUE(four::designated(Element::top()));
  EXPECT_FALSE(four::designated(four::kNotA));
  EXPECT_FALSE(four::designated(Element::bottom()));
  EXPECT_EQ(four::name(four::kA), "a");
  EXPECT_EQ(four::name(four::kNotA), "-a");
  for (Element x : four::kValues) EXPECT_EQ(four::from_name(four::name(x)), x);
  EXPECT_EQ(to_string(Valuation4{{"p", four::kA}, {"q", Element::bottom()}}),
            "p=a, q=0");
}

TEST(Eval4, Examples) {
  EXPECT_EQ(eval4(ball(p), {{"p", four::kA}}), Element::bottom());
  EXPECT_EQ(eval4(disj(p, neg(p)), {{"p", four::kA}}), Element::top());
  EXPECT_EQ(eval4(ball(conj(p, q)), {{"p", four::kA}, {"q", four::kNotA}}),
            Element::top());
}

TEST(Eval4, MatchesTruthTables) {
  for (const auto& f : generate_corpus({"p", "q"}, 3)) {
    if (!f.is_modal_free()) continue;
    for (const auto& a : assignments({"p", "q"})) {
      ASSERT_EQ(eval4(f, lift(a)), to_element(ref_eval(f, a))) << print(f);
    }
  }
}

TEST(Eval4, Errors) {
  EXPECT_THROW(eval4(box(p), {{"p", four::kA}}), InputError);
  EXPECT_THROW(eval4(p, {}), InputError);
  EXPECT_THROW(eval4(p, {{"p", Element::e2()}}), InputError);
  try {
    eval4(conj(p, diamond(q)), {{"p", four::kA}, {"q", four::kA}});
    ADD_FAILURE();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("<>q"), std::string::npos) << e.what();
  }
}

TEST(Consequence4, Examples) {
  EXPECT_TRUE(consequence4({}, ball(ball(p))).holds);
  const auto r = consequence4({p}, ball(p));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (Valuation4{{"p", four::kA}}));
  EXPECT_TRUE(consequence4({ball(p), ball(q)}, ball(conj(p, q))).holds);
  EXPECT_TRUE(consequence4({ball(p), ball(q)}, ball(disj(p, q))).holds);
}

TEST(Consequence4, MatchesOracle) {
  const auto corpus = generate_corpus({"p", "q"}, 2);
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    for (std::size_t j = 0; j < corpus.size(); j += 5) {
      if (!corpus[i].is_modal_free() || !corpus[j].is_modal_free()) continue;
      const auto r = consequence4({corpus[i]}, corpus[j]);
      ASSERT_EQ(r.holds, ref_consequence({corpus[i]}, corpus[j]));
      if (!r.holds) {
        EXPECT_TRUE(four::designated(eval4(corpus[i], *r.witness)));
        EXPECT_FALSE(four::designated(eval4(corpus[j], *r.witness)));
      }
    }
  }
}

TEST(Consequence4, ReflexiveAndMonotone) {
  const auto corpus = generate_corpus({"p", "q"}, 2);
  for (std::size_t i = 0; i < corpus.size(); i += 4) {
    const Formula& f = corpus[i];
    if (!f.is_modal_free()) continue;
    EXPECT_TRUE(consequence4({f}, f).holds);
    for (std::size_t j = 0; j < corpus.size(); j += 9) {
      if (!corpus[j].is_modal_free()) continue;
      if (consequence4({f}, corpus[j]).holds) {
        EXPECT_TRUE(consequence4({f, ball(q)}, corpus[j]).holds);
      }
    }
  }
}

TEST(Consequence4, ClassicalTautologiesTakeTop) {
  for (const char* text : {"p | ~p", "p -> p", "(p -> q) -> (~q -> ~p)",
                           "~(p & ~p)", "p & q -> q & p", "(p -> (q -> p))"}) {
    EXPECT_TRUE(always_top4(parse(text))) << text;
  }
  EXPECT_FALSE(always_top4(p));
  EXPECT_FALSE(always_top4(ball(p)));
}

TEST(Consequence4, FirstWitnessFollowsOrder) {
  const auto r = consequence4({}, p);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (Valuation4{{"p", Element::bottom()}}));
  const auto two = consequence4({}, disj(p, q));
  EXPECT_EQ(two.witness,
            (Valuation4{{"p", Element::bottom()}, {"q", Element::bottom()}}));
}

TEST(Schemes, AllSoundAgainstOracle) {
  const auto schemes = value_functional_schemes();
  ASSERT_EQ(schemes.size(), 11u);
  const std::vector<std::string> tags{"CL", "DB",   "BR",   "BF", "AwB", "NwB",
                                      "NB", "TNB1", "TNB2", "BC", "OV"};
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    EXPECT_EQ(schemes[i].tag, tags[i]);
    EXPECT_FALSE(schemes[i].instances.empty());
    for (const auto& inst : schemes[i].instances) {
      EXPECT_TRUE(ref_consequence(inst.premises, inst.conclusion)) << schemes[i].tag;
    }
    EXPECT_TRUE(check_scheme(schemes[i]).sound) << schemes[i].tag;
  }
}

TEST(Schemes, NegativeControl) {
  const auto bad = awb_without_ball();
  const auto r = check_scheme(bad);
  ASSERT_FALSE(r.sound);
  ASSERT_TRUE(r.witness.has_value());
  const auto& inst = bad.instances.at(*r.failing_instance);
  EXPECT_FALSE(ref_consequence(inst.premises, inst.conclusion));
  for (const auto& prem : inst.premises) {
    EXPECT_TRUE(four::designated(eval4(prem, *r.witness)));
  }
  EXPECT_FALSE(four::designated(eval4(inst.conclusion, *r.witness)));

  // Opposite middle values join to 1, so they do not refute the scheme.
  const Valuation4 opposite{{"p", four::kA}, {"q", four::kNotA}};
  EXPECT_TRUE(four::designated(eval4(inst.conclusion, opposite)));
}

TEST(Schemes, IntroductionOfBall) {
  for (const auto& f : theorem_corpus4()) {
    EXPECT_TRUE(always_top4(f)) << print(f);
    EXPECT_TRUE(always_top4(ball(f))) << print(f);
  }
}

TEST(Schemes, Report) {
  const auto report = rule_soundness_report();
  EXPECT_TRUE(report.schemes_sound());
  EXPECT_TRUE(report.ib_holds());
  EXPECT_FALSE(report.negative_control.sound);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.ib_theorems.size(), theorem_corpus4().size());

  const auto with_bad = rule_soundness_report({p});
  EXPECT_FALSE(with_bad.ib_holds());
  EXPECT_FALSE(with_bad.passed());
}
