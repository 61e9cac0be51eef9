#include "ballmodal/proofs.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "ballmodal/error.hpp"
#include "ballmodal/io.hpp"

namespace ballmodal {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 19> kRuleNames = {{
    {Rule::Premise, "Premise"}, {Rule::TautCons, "TautCons"},
    {Rule::DB, "DB"},           {Rule::BR, "BR"},
    {Rule::BF, "BF"},           {Rule::AwB, "AwB"},
    {Rule::NwB, "NwB"},         {Rule::NB, "NB"},
    {Rule::TNB1, "TNB1"},       {Rule::TNB2, "TNB2"},
    {Rule::BC, "BC"},           {Rule::OV, "OV"},
    {Rule::IB, "IB"},           {Rule::KA, "KA"},
    {Rule::BB, "BB"},           {Rule::FC, "FC"},
    {Rule::EA, "EA"},           {Rule::IN, "IN"},
    {Rule::Weaken, "Weaken"},
}};

// Metavariable names cannot collide with parsed identifiers.
Formula phi() { return Formula::var("?phi"); }
Formula psi() { return Formula::var("?psi"); }

struct Shape {
  std::vector<Formula> premises;
  Formula conclusion;
};

using Binding = std::map<std::string, Formula>;

bool match(const Formula& pattern, const Formula& f, Binding& binding) {
  if (pattern.op() == Op::Var && pattern.name().starts_with('?')) {
    auto [it, fresh] = binding.emplace(pattern.name(), f);
    return fresh || it->second == f;
  }
  if (pattern.op() != f.op()) return false;
  if (pattern.op() == Op::Var) return pattern.name() == f.name();
  if (is_unary(pattern.op())) return match(pattern.lhs(), f.lhs(), binding);
  if (is_binary(pattern.op())) {
    return match(pattern.lhs(), f.lhs(), binding) &&
           match(pattern.rhs(), f.rhs(), binding);
  }
  return true;
}

std::vector<Shape> shapes(Rule rule) {
  const Formula p = phi();
  const Formula q = psi();
  switch (rule) {
    case Rule::DB:
      return {{{}, ball(ball(p))}};
    case Rule::BR:
      return {{{ball(p)}, ball(neg(p))}, {{ball(neg(p))}, ball(p)}};
    case Rule::BF:
      return {{{ball(p), ball(q)}, ball(conj(p, q))},
              {{ball(p), ball(q)}, ball(disj(p, q))}};
    case Rule::AwB:
      return {{{p, ball(p)}, ball(disj(p, q))}};
    case Rule::NwB:
      return {{{neg(p), ball(p)}, ball(conj(p, q))}};
    case Rule::NB:
      return {{{neg(ball(p)), ball(q)},
               disj(neg(ball(conj(p, q))), neg(ball(disj(p, q))))}};
    case Rule::TNB1:
      return {{{neg(ball(p)), neg(ball(q)), conj(p, q)},
               neg(ball(conj(p, q)))}};
    case Rule::TNB2:
      return {{{neg(ball(p)), neg(ball(q)), neg(disj(p, q))},
               neg(ball(conj(p, q)))}};
    case Rule::BC:
      return {{{ball(conj(p, q)), conj(p, q)}, conj(ball(p), ball(q))}};
    case Rule::OV:
      return {{{iff(ball(p), ball(q)), iff(p, neg(q))}, ball(conj(p, q))}};
    case Rule::KA:
      return {{{}, implies(box(implies(p, q)), implies(box(p), box(q)))}};
    case Rule::BB:
      return {{{box(p), ball(box(p))}, box(ball(p))}};
    case Rule::FC:
      return {{{diamond(p), diamond(neg(p))}, ball(box(p))}};
    case Rule::EA:
      return {{{neg(ball(box(p)))},
               exclusive_or(diamond(conj(p, neg(ball(p)))),
                            diamond(conj(neg(p), neg(ball(p)))))}};
    default:
      return {};
  }
}

std::string describe(const Shape& s) {
  std::string out;
  for (const auto& f : s.premises) {
    if (!out.empty()) out += ", ";
    out += print(f);
  }
  return out + (out.empty() ? "|- " : " |- ") + print(s.conclusion);
}

bool subset(const std::set<Formula>& a, const std::set<Formula>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<std::string> check_schematic(const Derivation& d,
                                           const DerivationStep& step) {
  const auto alternatives = shapes(step.rule);
  for (const auto& shape : alternatives) {
    if (shape.premises.size() != step.cites.size()) continue;
    std::vector<std::size_t> order(step.cites.begin(), step.cites.end());
    std::sort(order.begin(), order.end());
    do {
      Binding binding;
      bool ok = true;
      for (std::size_t k = 0; ok && k < order.size(); ++k) {
        ok = match(shape.premises[k], d.steps[order[k]].judgment.conclusion,
                   binding);
      }
      if (ok && match(shape.conclusion, step.judgment.conclusion, binding)) {
        return std::nullopt;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::string expected;
  for (const auto& shape : alternatives) {
    if (!expected.empty()) expected += " or ";
    expected += describe(shape);
  }
  return to_string(step.rule) + " requires the shape " + expected;
}

Judgment judgment_of(std::set<Formula> premises, Formula conclusion) {
  return {std::move(premises), std::move(conclusion)};
}

std::optional<std::string> check_in(const Derivation& d,
                                    const DerivationStep& step) {
  if (!step.params) return std::string("IN needs lambda and gamma parameters");
  const Formula& conclusion = step.judgment.conclusion;
  if (conclusion.op() != Op::Box) {
    return "IN concludes a []-headed formula, not " + print(conclusion);
  }
  const Formula body = conclusion.lhs();
  if (step.params->phi && *step.params->phi != body) {
    return "IN parameter phi " + print(*step.params->phi) +
           " differs from the boxed conclusion " + print(body);
  }
  const std::set<Formula> lambda(step.params->lambda.begin(),
                                 step.params->lambda.end());
  const std::set<Formula> gamma(step.params->gamma.begin(),
                                step.params->gamma.end());
  std::set<Formula> expected = lambda;
  for (const auto& g : gamma) expected.insert(box(g));
  if (expected != step.judgment.premises) {
    return "IN premises must be lambda together with [] of each gamma member";
  }
  if (step.cites.size() != 2) return std::string("IN cites exactly two steps");
  std::set<Formula> lg = lambda;
  lg.insert(gamma.begin(), gamma.end());
  std::set<Formula> lgb = lg;
  for (const auto& g : gamma) lgb.insert(ball(g));
  const Judgment with_ball = judgment_of(lgb, conj(body, ball(body)));
  const Judgment plain = judgment_of(lg, body);
  const Judgment& a = d.steps[step.cites[0]].judgment;
  const Judgment& b = d.steps[step.cites[1]].judgment;
  if ((a == with_ball && b == plain) || (a == plain && b == with_ball)) {
    return std::nullopt;
  }
  if (a != with_ball && b != with_ball) {
    return "IN needs a cited step proving " + to_string(with_ball);
  }
  return "IN needs a cited step proving " + to_string(plain);
}

}  // namespace

std::string to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string key = lower(name);
  for (const auto& [r, n] : kRuleNames) {
    if (lower(n) == key) return r;
  }
  return std::nullopt;
}

std::string to_string(const Judgment& j) {
  std::string out;
  for (const auto& p : j.premises) {
    if (!out.empty()) out += ", ";
    out += print(p);
  }
  return out + (out.empty() ? "|- " : " |- ") + print(j.conclusion);
}

bool tautological_consequence(const std::vector<Formula>& from,
                              const Formula& to) {
  std::map<Formula, std::size_t> atoms;
  auto collect = [&](auto&& self, const Formula& f) -> void {
    switch (f.op()) {
      case Op::Top:
      case Op::Bot:
        return;
      case Op::Not:
        self(self, f.lhs());
        return;
      case Op::And:
      case Op::Or:
        self(self, f.lhs());
        self(self, f.rhs());
        return;
      default:
        atoms.emplace(f, atoms.size());
    }
  };
  for (const auto& f : from) collect(collect, f);
  collect(collect, to);
  if (atoms.size() > 24) {
    throw ResourceLimitExceeded("truth table over " +
                                std::to_string(atoms.size()) + " atoms");
  }
  auto truth = [&](auto&& self, const Formula& f, std::uint32_t row) -> bool {
    switch (f.op()) {
      case Op::Top:
        return true;
      case Op::Bot:
        return false;
      case Op::Not:
        return !self(self, f.lhs(), row);
      case Op::And:
        return self(self, f.lhs(), row) && self(self, f.rhs(), row);
      case Op::Or:
        return self(self, f.lhs(), row) || self(self, f.rhs(), row);
      default:
        return (row >> atoms.at(f)) & 1u;
    }
  };
  const std::uint32_t rows = std::uint32_t{1} << atoms.size();
  for (std::uint32_t row = 0; row < rows; ++row) {
    const bool premises = std::all_of(from.begin(), from.end(), [&](const Formula& f) {
      return truth(truth, f, row);
    });
    if (premises && !truth(truth, to, row)) return false;
  }
  return true;
}

std::optional<std::string> check_step(const Derivation& d, std::size_t i) {
  if (i >= d.steps.size()) throw InputError("no step " + std::to_string(i));
  const DerivationStep& step = d.steps[i];
  for (std::size_t c : step.cites) {
    if (c >= i) {
      return "cites step " + std::to_string(c) + ", which is not earlier";
    }
  }
  const auto cited_premises_fit = [&]() -> std::optional<std::string> {
    for (std::size_t c : step.cites) {
      if (!subset(d.steps[c].judgment.premises, step.judgment.premises)) {
        return "premises of cited step " + std::to_string(c) +
               " are not among this step's premises";
      }
    }
    return std::nullopt;
  };
  switch (step.rule) {
    case Rule::Premise:
      if (!step.cites.empty()) return std::string("Premise cites nothing");
      if (!step.judgment.premises.contains(step.judgment.conclusion)) {
        return print(step.judgment.conclusion) + " is not a premise";
      }
      return std::nullopt;
    case Rule::TautCons: {
      if (auto bad = cited_premises_fit()) return bad;
      std::vector<Formula> from;
      for (std::size_t c : step.cites) from.push_back(d.steps[c].judgment.conclusion);
      if (!tautological_consequence(from, step.judgment.conclusion)) {
        return print(step.judgment.conclusion) +
               " is not a tautological consequence of the cited conclusions";
      }
      return std::nullopt;
    }
    case Rule::DB:
    case Rule::KA:
      if (!step.cites.empty()) return to_string(step.rule) + " is an axiom and cites nothing";
      return check_schematic(d, step);
    case Rule::IB: {
      if (step.cites.size() != 1) return std::string("IB cites exactly one step");
      const Judgment& cited = d.steps[step.cites[0]].judgment;
      if (!cited.premises.empty()) {
        return std::string("IB applies only to a theorem, but the cited step has premises");
      }
      if (!step.judgment.premises.empty()) {
        return std::string("IB concludes a theorem, so its premise set must be empty");
      }
      if (step.judgment.conclusion != ball(cited.conclusion)) {
        return "IB must conclude " + print(ball(cited.conclusion));
      }
      return std::nullopt;
    }
    case Rule::IN:
      return check_in(d, step);
    case Rule::Weaken: {
      if (step.cites.size() != 1) return std::string("Weaken cites exactly one step");
      if (auto bad = cited_premises_fit()) return bad;
      if (d.steps[step.cites[0]].judgment.conclusion != step.judgment.conclusion) {
        return std::string("Weaken keeps the cited conclusion unchanged");
      }
      return std::nullopt;
    }
    default:
      if (auto bad = cited_premises_fit()) return bad;
      return check_schematic(d, step);
  }
}

CheckResult check(const Derivation& d) {
  if (d.steps.empty()) return {StepViolation{0, "derivation has no steps"}, std::nullopt};
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    if (auto reason = check_step(d, i)) {
      return {StepViolation{i, *reason}, std::nullopt};
    }
  }
  return {std::nullopt, d.steps.back().judgment};
}

CrosscheckReport semantic_crosscheck(const Judgment& j, std::size_t max_worlds,
                                     const SearchLimits& limits) {
  const std::vector<Formula> premises(j.premises.begin(), j.premises.end());
  return {j, max_worlds,
          countermodel_search(premises, j.conclusion, max_worlds,
                              kAllUltrafilters, limits)};
}

CrosscheckReport semantic_crosscheck(const Derivation& d, std::size_t max_worlds,
                                     const SearchLimits& limits) {
  const auto result = check(d);
  if (!result.accepted()) {
    throw InputError("derivation rejected at step " +
                     std::to_string(result.violation->step) + ": " +
                     result.violation->reason);
  }
  return semantic_crosscheck(*result.conclusion, max_worlds, limits);
}

Derivation weaken_all(const Derivation& d, const Formula& extra) {
  Derivation out = d;
  for (auto& step : out.steps) {
    step.judgment.premises.insert(extra);
    if (step.rule == Rule::IN && step.params) step.params->lambda.push_back(extra);
  }
  return out;
}

namespace {

constexpr const char* kCorpus[] = {
    R"json({"name": "double-ball", "steps": [
      {"premises": [], "conclusion": "@@p", "rule": "DB", "cites": []}]})json",
    R"json({"name": "ball-factorization", "steps": [
      {"premises": ["@p", "@q"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["@p", "@q"], "conclusion": "@q", "rule": "Premise", "cites": []},
      {"premises": ["@p", "@q"], "conclusion": "@(p & q)", "rule": "BF", "cites": [0, 1]}]})json",
    R"json({"name": "ball-factorization-or", "steps": [
      {"premises": ["@p", "@q"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["@p", "@q"], "conclusion": "@q", "rule": "Premise", "cites": []},
      {"premises": ["@p", "@q"], "conclusion": "@(p | q)", "rule": "BF", "cites": [0, 1]}]})json",
    R"json({"name": "ball-rule", "steps": [
      {"premises": ["@p"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["@p"], "conclusion": "@~p", "rule": "BR", "cites": [0]},
      {"premises": ["@p"], "conclusion": "@p", "rule": "BR", "cites": [1]}]})json",
    R"json({"name": "affirming-with-ball", "steps": [
      {"premises": ["p", "@p"], "conclusion": "p", "rule": "Premise", "cites": []},
      {"premises": ["p", "@p"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["p", "@p"], "conclusion": "@(p | q)", "rule": "AwB", "cites": [0, 1]}]})json",
    R"json({"name": "negating-with-ball", "steps": [
      {"premises": ["~p", "@p"], "conclusion": "~p", "rule": "Premise", "cites": []},
      {"premises": ["~p", "@p"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["~p", "@p"], "conclusion": "@(p & q)", "rule": "NwB", "cites": [0, 1]}]})json",
    R"json({"name": "not-ball", "steps": [
      {"premises": ["~@p", "@q"], "conclusion": "~@p", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "@q"], "conclusion": "@q", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "@q"], "conclusion": "~@(p & q) | ~@(p | q)", "rule": "NB", "cites": [0, 1]}]})json",
    R"json({"name": "two-not-ball", "steps": [
      {"premises": ["~@p", "~@q", "p & q"], "conclusion": "~@p", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "p & q"], "conclusion": "~@q", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "p & q"], "conclusion": "p & q", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "p & q"], "conclusion": "~@(p & q)", "rule": "TNB1", "cites": [0, 1, 2]}]})json",
    R"json({"name": "two-not-ball-negated", "steps": [
      {"premises": ["~@p", "~@q", "~(p | q)"], "conclusion": "~@p", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "~(p | q)"], "conclusion": "~@q", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "~(p | q)"], "conclusion": "~(p | q)", "rule": "Premise", "cites": []},
      {"premises": ["~@p", "~@q", "~(p | q)"], "conclusion": "~@(p & q)", "rule": "TNB2", "cites": [0, 1, 2]}]})json",
    R"json({"name": "ball-conjunction", "steps": [
      {"premises": ["@(p & q)", "p & q"], "conclusion": "@(p & q)", "rule": "Premise", "cites": []},
      {"premises": ["@(p & q)", "p & q"], "conclusion": "p & q", "rule": "Premise", "cites": []},
      {"premises": ["@(p & q)", "p & q"], "conclusion": "@p & @q", "rule": "BC", "cites": [0, 1]},
      {"premises": ["@(p & q)", "p & q"], "conclusion": "@q", "rule": "TautCons", "cites": [2]}]})json",
    R"json({"name": "opposite-value", "steps": [
      {"premises": ["@p <-> @q", "p <-> ~q"], "conclusion": "@p <-> @q", "rule": "Premise", "cites": []},
      {"premises": ["@p <-> @q", "p <-> ~q"], "conclusion": "p <-> ~q", "rule": "Premise", "cites": []},
      {"premises": ["@p <-> @q", "p <-> ~q"], "conclusion": "@(p & q)", "rule": "OV", "cites": [0, 1]}]})json",
    R"json({"name": "introduction-of-ball", "steps": [
      {"premises": [], "conclusion": "p | ~p", "rule": "TautCons", "cites": []},
      {"premises": [], "conclusion": "@(p | ~p)", "rule": "IB", "cites": [0]}]})json",
    R"json({"name": "k-axiom", "steps": [
      {"premises": ["[](p -> q)", "[]p"], "conclusion": "[](p -> q) -> ([]p -> []q)", "rule": "KA", "cites": []},
      {"premises": ["[](p -> q)", "[]p"], "conclusion": "[](p -> q)", "rule": "Premise", "cites": []},
      {"premises": ["[](p -> q)", "[]p"], "conclusion": "[]p", "rule": "Premise", "cites": []},
      {"premises": ["[](p -> q)", "[]p"], "conclusion": "[]q", "rule": "TautCons", "cites": [0, 1, 2]}]})json",
    R"json({"name": "ball-and-box", "steps": [
      {"premises": ["[]p", "@[]p"], "conclusion": "[]p", "rule": "Premise", "cites": []},
      {"premises": ["[]p", "@[]p"], "conclusion": "@[]p", "rule": "Premise", "cites": []},
      {"premises": ["[]p", "@[]p"], "conclusion": "[]@p", "rule": "BB", "cites": [0, 1]}]})json",
    R"json({"name": "false-necessity-certainty", "steps": [
      {"premises": ["<>p", "<>~p"], "conclusion": "<>p", "rule": "Premise", "cites": []},
      {"premises": ["<>p", "<>~p"], "conclusion": "<>~p", "rule": "Premise", "cites": []},
      {"premises": ["<>p", "<>~p"], "conclusion": "@[]p", "rule": "FC", "cites": [0, 1]}]})json",
    R"json({"name": "existence-axiom", "steps": [
      {"premises": ["~@[]p"], "conclusion": "~@[]p", "rule": "Premise", "cites": []},
      {"premises": ["~@[]p"], "conclusion": "<>(p & ~@p) ^ <>(~p & ~@p)", "rule": "EA", "cites": [0]}]})json",
    R"json({"name": "necessitation", "steps": [
      {"premises": [], "conclusion": "p | ~p", "rule": "TautCons", "cites": []},
      {"premises": [], "conclusion": "@(p | ~p)", "rule": "IB", "cites": [0]},
      {"premises": [], "conclusion": "(p | ~p) & @(p | ~p)", "rule": "TautCons", "cites": [0, 1]},
      {"premises": [], "conclusion": "[](p | ~p)", "rule": "IN", "cites": [2, 0],
       "params": {"lambda": [], "gamma": [], "phi": "p | ~p"}}]})json",
    R"json({"name": "necessity-from-boxed-premise", "steps": [
      {"premises": ["p", "@p"], "conclusion": "p", "rule": "Premise", "cites": []},
      {"premises": ["p", "@p"], "conclusion": "@p", "rule": "Premise", "cites": []},
      {"premises": ["p", "@p"], "conclusion": "p & @p", "rule": "TautCons", "cites": [0, 1]},
      {"premises": ["p"], "conclusion": "p", "rule": "Premise", "cites": []},
      {"premises": ["[]p"], "conclusion": "[]p", "rule": "IN", "cites": [2, 3],
       "params": {"lambda": [], "gamma": ["p"]}}]})json",
    R"json({"name": "weakening", "steps": [
      {"premises": ["p"], "conclusion": "p", "rule": "Premise", "cites": []},
      {"premises": ["p", "q"], "conclusion": "p", "rule": "Weaken", "cites": [0]}]})json",
};

struct Edit {
  const char* derivation;
  std::size_t step;
  const char* description;
  void (*apply)(DerivationStep&);
};

const Edit kEdits[] = {
    {"double-ball", 0, "DB step concludes a single ball",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@p"); }},
    {"ball-factorization", 2, "BF conclusion mentions a fresh variable",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@(p & r)"); }},
    {"ball-factorization", 0, "premise step asserts a formula outside the premises",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@r"); }},
    {"ball-rule", 1, "BR step cites nothing",
     [](DerivationStep& s) { s.cites.clear(); }},
    {"affirming-with-ball", 2, "AwB drops the ball premise",
     [](DerivationStep& s) { s.cites = {0}; }},
    {"negating-with-ball", 2, "NwB concludes a disjunction",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@(p | q)"); }},
    {"opposite-value", 2, "OV concludes a disjunction",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@(p | q)"); }},
    {"ball-conjunction", 2, "BC cites a later step",
     [](DerivationStep& s) { s.cites = {3, 1}; }},
    {"introduction-of-ball", 1, "IB applied under a premise",
     [](DerivationStep& s) { s.judgment.premises.insert(parse("p")); }},
    {"k-axiom", 0, "KA with swapped boxes",
     [](DerivationStep& s) {
       s.judgment.conclusion = parse("[](p -> q) -> ([]q -> []p)");
     }},
    {"k-axiom", 3, "TautCons concludes an unrelated box",
     [](DerivationStep& s) { s.judgment.conclusion = parse("[]r"); }},
    {"ball-and-box", 2, "BB concludes the ball of the box",
     [](DerivationStep& s) { s.judgment.conclusion = parse("@[]p"); }},
    {"false-necessity-certainty", 2, "FC cites the same diamond twice",
     [](DerivationStep& s) { s.cites = {0, 0}; }},
    {"existence-axiom", 1, "EA with plain disjunction",
     [](DerivationStep& s) {
       s.judgment.conclusion = parse("<>(p & ~@p) | <>(~p & ~@p)");
     }},
    {"necessitation", 3, "IN cites the bare theorem twice, omitting the ball conjunct",
     [](DerivationStep& s) { s.cites = {0, 0}; }},
    {"necessity-from-boxed-premise", 4, "IN declares an empty gamma",
     [](DerivationStep& s) { s.params->gamma.clear(); }},
    {"weakening", 1, "Weaken drops a premise of the cited step",
     [](DerivationStep& s) { s.judgment.premises = {parse("q")}; }},
};

}  // namespace

std::vector<Derivation> derivation_corpus() {
  std::vector<Derivation> out;
  for (const char* text : kCorpus) out.push_back(derivation_from_json(text));
  return out;
}

std::vector<Corruption> corruption_corpus() {
  const auto corpus = derivation_corpus();
  std::vector<Corruption> out;
  for (const auto& edit : kEdits) {
    auto it = std::find_if(corpus.begin(), corpus.end(), [&](const Derivation& d) {
      return d.name == edit.derivation;
    });
    Derivation d = *it;
    edit.apply(d.steps.at(edit.step));
    d.name += "/" + std::to_string(edit.step);
    out.push_back({edit.description, std::move(d), edit.step});
  }
  return out;
}

}  // namespace ballmodal
