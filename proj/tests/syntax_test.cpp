#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ballmodal/error.hpp"
#include "ballmodal/syntax.hpp"

using namespace ballmodal;

namespace {

// Number of corpus formulas with exactly k connectives over `vars`
// variables: three unary heads plus the binary conjunction.
std::vector<std::uint64_t> exact_counts(std::uint64_t vars, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[0] = vars;
  for (std::size_t n = 1; n <= k; ++n) {
    c[n] = 3 * c[n - 1];
    for (std::size_t i = 0; i + 1 <= n; ++i) c[n] += c[i] * c[n - 1 - i];
  }
  return c;
}

std::uint64_t cumulative(std::uint64_t vars, std::size_t k) {
  std::uint64_t total = 0;
  for (auto x : exact_counts(vars, k)) total += x;
  return total;
}

// Brute-force generation by size, independent of the library generator.
std::set<Formula> brute_force(const std::vector<std::string>& vars, std::size_t k) {
  std::vector<std::vector<Formula>> by_size(k + 1);
  for (const auto& v : vars) by_size[0].push_back(Formula::var(v));
  for (std::size_t n = 1; n <= k; ++n) {
    for (const auto& f : by_size[n - 1]) {
      by_size[n].push_back(neg(f));
      by_size[n].push_back(ball(f));
      by_size[n].push_back(box(f));
    }
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      for (const auto& a : by_size[i]) {
        for (const auto& b : by_size[n - 1 - i]) by_size[n].push_back(conj(a, b));
      }
    }
  }
  std::set<Formula> out;
  for (const auto& level : by_size) out.insert(level.begin(), level.end());
  return out;
}

std::size_t occurrences(const Formula& f) {
  if (f.op() == Op::Var) return 1;
  if (is_binary(f.op())) return occurrences(f.lhs()) + occurrences(f.rhs());
  if (is_unary(f.op())) return occurrences(f.lhs());
  return 0;
}

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");
const Formula r = Formula::var("r");

}  // namespace

TEST(Parser, Atoms) {
  EXPECT_EQ(parse("p"), p);
  EXPECT_EQ(parse("T"), Formula::top());
  EXPECT_EQ(parse("F"), Formula::bot());
  EXPECT_EQ(parse("  x_1A "), Formula::var("x_1A"));
}

TEST(Parser, UnaryOperators) {
  EXPECT_EQ(parse("~p"), neg(p));
  EXPECT_EQ(parse("@p"), ball(p));
  EXPECT_EQ(parse("[]p"), box(p));
  EXPECT_EQ(parse("<>p"), diamond(p));
  EXPECT_EQ(parse("[=]p"), box_same(p));
  EXPECT_EQ(parse("[-]p"), box_diff(p));
  EXPECT_EQ(parse("~@[]p"), neg(ball(box(p))));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse("~p & q"), conj(neg(p), q));
  EXPECT_EQ(parse("p | q & r"), disj(p, conj(q, r)));
  EXPECT_EQ(parse("p ^ q & r"), exclusive_or(p, conj(q, r)));
  EXPECT_EQ(parse("p | q ^ r"), disj(p, exclusive_or(q, r)));
  EXPECT_EQ(parse("p -> q | r"), implies(p, disj(q, r)));
  EXPECT_EQ(parse("p <-> q -> r"), iff(p, implies(q, r)));
  EXPECT_EQ(parse("[]p -> p"), implies(box(p), p));
}

TEST(Parser, Associativity) {
  EXPECT_EQ(parse("p -> q -> r"), implies(p, implies(q, r)));
  EXPECT_EQ(parse("p & q & r"), conj(conj(p, q), r));
  EXPECT_EQ(parse("(p -> q) -> r"), implies(implies(p, q), r));
}

TEST(Parser, SugarIsExpanded) {
  EXPECT_EQ(implies(p, q), disj(neg(p), q));
  EXPECT_EQ(iff(p, q), conj(implies(p, q), implies(q, p)));
  EXPECT_EQ(exclusive_or(p, q), disj(conj(p, neg(q)), conj(neg(p), q)));
  EXPECT_EQ(parse("p -> q"), parse("~p | q"));
}

TEST(Parser, ErrorsCarryOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const auto& c : {Case{"p &", 3}, Case{"(p", 2}, Case{"p q", 2},
                        Case{"", 0}, Case{"P", 0}, Case{"p -", 2},
                        Case{"[x]p", 0}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text;
      EXPECT_FALSE(e.expected().empty()) << c.text;
    }
  }
}

TEST(Printer, MinimalParentheses) {
  EXPECT_EQ(print(parse("(p & q) & r")), "p & q & r");
  EXPECT_EQ(print(parse("p & (q & r)")), "p & (q & r)");
  EXPECT_EQ(print(parse("~(p | q)")), "~(p | q)");
  EXPECT_EQ(print(parse("[](p & q)")), "[](p & q)");
  EXPECT_EQ(print(parse("@@p")), "@@p");
}

TEST(Printer, UnicodeNotation) {
  EXPECT_EQ(print(parse("[]@p & <>~q"), Notation::Unicode), "□∘p ∧ ◇¬q");
  EXPECT_EQ(print(parse("[=]p | [-]T"), Notation::Unicode), "■p ∨ ⊟⊤");
}

TEST(Printer, RoundTripsSpecialForms) {
  for (const char* text :
       {"[]p -> p", "[]p -> [][]p", "<>p -> []<>p", "<>@p -> []<>@p",
        "[]p -> <>p", "p -> []<>p", "<>T -> ([]~@p -> ~[]p)", "[]p -> [=][=]p",
        "[]p -> [-][=](@p & p)", "p ^ q", "p <-> q", "F | T"}) {
    const Formula f = parse(text);
    EXPECT_EQ(parse(print(f)), f) << text;
    EXPECT_EQ(parse(print(ball_substitution(f))), ball_substitution(f)) << text;
  }
}

TEST(Formula, Accessors) {
  const Formula f = parse("[](p & ~q) | @r");
  EXPECT_EQ(f.op(), Op::Or);
  EXPECT_EQ(f.lhs().op(), Op::Box);
  EXPECT_EQ(f.rhs().lhs().name(), "r");
  EXPECT_EQ(f.connective_count(), 5u);
  EXPECT_EQ(f.variables(), (std::set<std::string>{"p", "q", "r"}));
  EXPECT_FALSE(f.is_modal_free());
  EXPECT_TRUE(parse("@p & ~q").is_modal_free());
  EXPECT_EQ(Formula::top().connective_count(), 0u);
}

TEST(Formula, OrderingIsTotal) {
  const std::vector<Formula> fs{p, q, neg(p), conj(p, q), box(p), Formula::top()};
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      EXPECT_EQ(a == b, (a <=> b) == 0);
      EXPECT_EQ((a <=> b) < 0, (b <=> a) > 0);
    }
  }
}

TEST(BallSubstitution, Examples) {
  EXPECT_EQ(ball_substitution(parse("[]p -> p")), parse("[]@p -> @p"));
  EXPECT_EQ(ball_substitution(parse("@p & q")), parse("@@p & @q"));
}

TEST(BallSubstitution, CountsAndIdempotence) {
  for (const auto& f : generate_corpus({"p", "q"}, 3)) {
    const Formula g = ball_substitution(f);
    EXPECT_EQ(g.connective_count(), f.connective_count() + occurrences(f));
    EXPECT_EQ(g.variables(), f.variables());
  }
  for (const char* text : {"T", "[]F", "@T & ~F"}) {
    const Formula f = parse(text);
    EXPECT_EQ(ball_substitution(f), f);
  }
}

TEST(Corpus, SmallCases) {
  EXPECT_EQ(generate_corpus({"p"}, 0), std::vector<Formula>{p});
  const std::vector<Formula> one{p, neg(p), conj(p, p), ball(p), box(p)};
  const auto got = generate_corpus({"p"}, 1);
  EXPECT_EQ(std::set<Formula>(got.begin(), got.end()),
            std::set<Formula>(one.begin(), one.end()));
  EXPECT_EQ(got.front(), p);
}

TEST(Corpus, CountsFollowRecurrence) {
  EXPECT_EQ(exact_counts(1, 3), (std::vector<std::uint64_t>{1, 4, 20, 116}));
  for (std::size_t k = 0; k <= 3; ++k) {
    EXPECT_EQ(generate_corpus({"p"}, k).size(), cumulative(1, k)) << k;
  }
  EXPECT_EQ(generate_corpus({"p"}, 2).size(), 25u);
  EXPECT_EQ(generate_corpus({"p"}, 3).size(), 141u);
  EXPECT_EQ(generate_corpus({"p", "q"}, 4).size(), cumulative(2, 4));
}

TEST(Corpus, MatchesBruteForce) {
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto got = generate_corpus({"p", "q"}, k);
    EXPECT_EQ(std::set<Formula>(got.begin(), got.end()), brute_force({"p", "q"}, k));
  }
}

TEST(Corpus, DuplicateFreeAndOrdered) {
  const auto corpus = generate_corpus({"p", "q"}, 4);
  std::set<Formula> unique(corpus.begin(), corpus.end());
  EXPECT_EQ(unique.size(), corpus.size());
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    const auto key = [](const Formula& f) {
      return std::make_pair(f.connective_count(), print(f));
    };
    EXPECT_LT(key(corpus[i - 1]), key(corpus[i])) << i;
  }
}

TEST(Corpus, RoundTrips) {
  for (const auto& f : generate_corpus({"p", "q"}, 4)) {
    ASSERT_EQ(parse(print(f)), f) << print(f);
    ASSERT_EQ(parse(print(f, Notation::Ascii)), f);
  }
}
