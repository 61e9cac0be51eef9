#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ballmodal/algebra.hpp"
#include "ballmodal/syntax.hpp"

namespace ballmodal {

// The four-valued algebra {0, a, -a, 1} is lattice A of B8 read under the
// ultrafilter generated by e1, so a = e1 and the designated values are 1, a.
namespace four {

inline constexpr Element kA = Element::e1();
inline constexpr Element kNotA = complement(Element::e1());
inline constexpr Ultrafilter kUltrafilter{};

// Enumeration order: 0, a, -a, 1.
inline constexpr std::array<Element, 4> kValues = carrier(Lattice::A);

inline constexpr bool designated(Element x) {
  return is_designated(x, kUltrafilter);
}

std::string name(Element x);
std::optional<Element> from_name(std::string_view name);

}  // namespace four

using Valuation4 = std::map<std::string, Element>;

std::string to_string(const Valuation4& v);

// Throws InputError if f has a modal operator or a variable v leaves out,
// or if v maps outside {0, a, -a, 1}.
Element eval4(const Formula& f, const Valuation4& v);

struct Consequence4 {
  bool holds = true;
  std::optional<Valuation4> witness;  // first countervaluation, when refuted
};

// Valuations run over the sorted variables with the first one most
// significant, each through 0, a, -a, 1.
Consequence4 consequence4(const std::vector<Formula>& premises,
                          const Formula& goal);

// True when f takes the value 1 under every valuation.
bool always_top4(const Formula& f);

// One sequent of a rule scheme, with metavariables instantiated as
// distinct variables.
struct SchemeInstance {
  std::vector<Formula> premises;
  Formula conclusion;
};

struct RuleScheme {
  std::string tag;
  std::string title;
  std::vector<SchemeInstance> instances;
};

// CL, DB, BR, BF, AwB, NwB, NB, TNB1, TNB2, BC, OV.
std::vector<RuleScheme> value_functional_schemes();

// AwB without its ball premise; unsound.
RuleScheme awb_without_ball();

// Modal-free theorems of the four-valued calculus used to exercise IB.
std::vector<Formula> theorem_corpus4();

struct SchemeResult {
  std::string tag;
  bool sound = true;
  std::optional<Valuation4> witness;
  std::optional<std::size_t> failing_instance;
};

struct TheoremResult {
  Formula formula;
  bool always_top = true;
};

struct SoundnessReport {
  std::vector<SchemeResult> schemes;
  SchemeResult negative_control;
  std::vector<TheoremResult> ib_theorems;

  bool schemes_sound() const;
  bool ib_holds() const;
  // Every scheme sound, IB holds, and the negative control refuted.
  bool passed() const;
};

SchemeResult check_scheme(const RuleScheme& scheme);

// `extra_theorems` joins the bundled theorem corpus for the IB check.
SoundnessReport rule_soundness_report(
    const std::vector<Formula>& extra_theorems = {});

}  // namespace ballmodal
