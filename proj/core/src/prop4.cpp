#include "ballmodal/prop4.hpp"

#include <algorithm>
#include <set>

#include "ballmodal/error.hpp"

namespace ballmodal {

namespace four {

std::string name(Element x) {
  if (x == Element::top()) return "1";
  if (x == Element::bottom()) return "0";
  if (x == kA) return "a";
  if (x == kNotA) return "-a";
  throw InputError("value " + ballmodal::to_string(x) +
                   " is outside the four-valued algebra");
}

std::optional<Element> from_name(std::string_view text) {
  for (Element x : kValues) {
    if (name(x) == text) return x;
  }
  return std::nullopt;
}

}  // namespace four

std::string to_string(const Valuation4& v) {
  std::string out;
  for (const auto& [var, value] : v) {
    if (!out.empty()) out += ", ";
    out += var + "=" + four::name(value);
  }
  return out;
}

Element eval4(const Formula& f, const Valuation4& v) {
  switch (f.op()) {
    case Op::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) {
        throw InputError("variable '" + f.name() + "' has no value");
      }
      if (!in_carrier(it->second, Lattice::A)) {
        throw InputError("value of '" + f.name() +
                         "' is outside the four-valued algebra");
      }
      return it->second;
    }
    case Op::Top:
      return Element::top();
    case Op::Bot:
      return Element::bottom();
    case Op::Not:
      return complement(eval4(f.lhs(), v));
    case Op::And:
      return meet(eval4(f.lhs(), v), eval4(f.rhs(), v));
    case Op::Or:
      return join(eval4(f.lhs(), v), eval4(f.rhs(), v));
    case Op::Ball:
      return ball(eval4(f.lhs(), v));
    case Op::Box:
    case Op::Diamond:
    case Op::BoxSame:
    case Op::BoxDiff:
      break;
  }
  throw InputError("modal subformula " + print(f) +
                   " has no four-valued interpretation");
}

namespace {

std::vector<std::string> variables_of(const std::vector<Formula>& premises,
                                      const Formula& goal) {
  std::set<std::string> vars = goal.variables();
  for (const auto& p : premises) {
    const auto pv = p.variables();
    vars.insert(pv.begin(), pv.end());
  }
  return {vars.begin(), vars.end()};
}

void require_modal_free(const Formula& f) {
  if (!f.is_modal_free()) eval4(f, {});  // throws naming the modal part
}

// Calls visit on every valuation in order until it returns false.
template <typename Visit>
void for_each_valuation(const std::vector<std::string>& vars, Visit visit) {
  const std::size_t n = vars.size();
  std::vector<std::size_t> digits(n, 0);
  Valuation4 v;
  for (const auto& name : vars) v[name] = four::kValues[0];
  while (true) {
    if (!visit(static_cast<const Valuation4&>(v))) return;
    std::size_t p = n;
    while (true) {
      if (p == 0) return;
      --p;
      if (++digits[p] < 4) {
        v[vars[p]] = four::kValues[digits[p]];
        break;
      }
      digits[p] = 0;
      v[vars[p]] = four::kValues[0];
    }
  }
}

Formula v(const char* name) { return Formula::var(name); }

}  // namespace

Consequence4 consequence4(const std::vector<Formula>& premises,
                          const Formula& goal) {
  for (const auto& p : premises) require_modal_free(p);
  require_modal_free(goal);
  Consequence4 result;
  for_each_valuation(variables_of(premises, goal), [&](const Valuation4& val) {
    const bool premises_hold =
        std::all_of(premises.begin(), premises.end(), [&](const Formula& p) {
          return four::designated(eval4(p, val));
        });
    if (premises_hold && !four::designated(eval4(goal, val))) {
      result = {false, val};
      return false;
    }
    return true;
  });
  return result;
}

bool always_top4(const Formula& f) {
  require_modal_free(f);
  bool top = true;
  for_each_valuation(variables_of({}, f), [&](const Valuation4& val) {
    top = eval4(f, val) == Element::top();
    return top;
  });
  return top;
}

std::vector<RuleScheme> value_functional_schemes() {
  const Formula p = v("p");
  const Formula q = v("q");
  const Formula bp = ball(p);
  const Formula bq = ball(q);
  return {
      {"CL",
       "Classical logic",
       {{{p, implies(p, q)}, q},
        {{p, q}, conj(p, q)},
        {{conj(p, q)}, p},
        {{conj(p, q)}, q},
        {{p}, disj(p, q)},
        {{}, disj(p, neg(p))},
        {{neg(neg(p))}, p},
        {{p, neg(p)}, q}}},
      {"DB", "Double ball axiom", {{{}, ball(bp)}}},
      {"BR", "Ball rule", {{{bp}, ball(neg(p))}, {{ball(neg(p))}, bp}}},
      {"BF",
       "Ball factorization rule",
       {{{bp, bq}, ball(conj(p, q))}, {{bp, bq}, ball(disj(p, q))}}},
      {"AwB", "Affirming with ball rule", {{{p, bp}, ball(disj(p, q))}}},
      {"NwB", "Negating with ball rule", {{{neg(p), bp}, ball(conj(p, q))}}},
      {"NB",
       "Not ball rule",
       {{{neg(bp), bq},
         disj(neg(ball(conj(p, q))), neg(ball(disj(p, q))))}}},
      {"TNB1",
       "Two not ball rule 1",
       {{{neg(bp), neg(bq), conj(p, q)}, neg(ball(conj(p, q)))}}},
      {"TNB2",
       "Two not ball rule 2",
       {{{neg(bp), neg(bq), neg(disj(p, q))}, neg(ball(conj(p, q)))}}},
      {"BC",
       "Ball and conjunction rule",
       {{{ball(conj(p, q)), conj(p, q)}, conj(bp, bq)}}},
      {"OV",
       "Opposite value rule",
       {{{iff(bp, bq), iff(p, neg(q))}, ball(conj(p, q))}}},
  };
}

RuleScheme awb_without_ball() {
  const Formula p = v("p");
  const Formula q = v("q");
  return {"AwB'", "Affirming without ball", {{{p}, ball(disj(p, q))}}};
}

std::vector<Formula> theorem_corpus4() {
  const char* texts[] = {
      "p | ~p",
      "~(p & ~p)",
      "~~p <-> p",
      "p -> (q -> p)",
      "((p -> q) -> p) -> p",
      "(p -> q) -> (~q -> ~p)",
      "(p & q) -> (q & p)",
      "@@p",
      "@p <-> @~p",
      "@p | ~@p",
      "@(p | ~p)",
      "@(p & ~p)",
      "@T",
      "@F",
      "(@p & @q) -> @(p & q)",
      "(@p & @q) -> @(p | q)",
      "(p & @p) -> @(p | q)",
      "@(@p -> @q)",
  };
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

SchemeResult check_scheme(const RuleScheme& scheme) {
  SchemeResult result{scheme.tag, true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < scheme.instances.size(); ++i) {
    const auto& inst = scheme.instances[i];
    auto c = consequence4(inst.premises, inst.conclusion);
    if (!c.holds) {
      result.sound = false;
      result.witness = c.witness;
      result.failing_instance = i;
      break;
    }
  }
  return result;
}

bool SoundnessReport::schemes_sound() const {
  return std::all_of(schemes.begin(), schemes.end(),
                     [](const SchemeResult& s) { return s.sound; });
}

bool SoundnessReport::ib_holds() const {
  return std::all_of(ib_theorems.begin(), ib_theorems.end(),
                     [](const TheoremResult& t) { return t.always_top; });
}

bool SoundnessReport::passed() const {
  return schemes_sound() && ib_holds() && !negative_control.sound;
}

SoundnessReport rule_soundness_report(
    const std::vector<Formula>& extra_theorems) {
  SoundnessReport report{{}, check_scheme(awb_without_ball()), {}};
  for (const auto& scheme : value_functional_schemes()) {
    report.schemes.push_back(check_scheme(scheme));
  }
  auto theorems = theorem_corpus4();
  theorems.insert(theorems.end(), extra_theorems.begin(), extra_theorems.end());
  for (const auto& t : theorems) report.ib_theorems.push_back({t, always_top4(t)});
  return report;
}

}  // namespace ballmodal
