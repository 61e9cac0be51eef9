#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ballmodal/kripke.hpp"
#include "ballmodal/syntax.hpp"

namespace ballmodal {

enum class Rule {
  Premise,
  TautCons,
  DB,
  BR,
  BF,
  AwB,
  NwB,
  NB,
  TNB1,
  TNB2,
  BC,
  OV,
  IB,
  KA,
  BB,
  FC,
  EA,
  IN,
  Weaken,
};

std::string to_string(Rule rule);
// Case-insensitive.
std::optional<Rule> rule_from_name(std::string_view name);

struct Judgment {
  std::set<Formula> premises;
  Formula conclusion;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};

// "p, @p |- p & @p"
std::string to_string(const Judgment& j);

// The Lambda / Gamma split an IN step declares, and optionally its phi.
struct StepParams {
  std::vector<Formula> lambda;
  std::vector<Formula> gamma;
  std::optional<Formula> phi;

  friend bool operator==(const StepParams&, const StepParams&) = default;
};

struct DerivationStep {
  Judgment judgment;
  Rule rule;
  std::vector<std::size_t> cites;
  std::optional<StepParams> params;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Derivation {
  std::string name;
  std::vector<DerivationStep> steps;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// nullopt when step i is correctly justified, otherwise the failed condition.
std::optional<std::string> check_step(const Derivation& d, std::size_t i);

struct StepViolation {
  std::size_t step;
  std::string reason;
};

struct CheckResult {
  std::optional<StepViolation> violation;
  std::optional<Judgment> conclusion;  // final judgment when accepted

  bool accepted() const { return !violation.has_value(); }
};

CheckResult check(const Derivation& d);

// Tautological consequence with every subformula headed by @, [], <>, [=]
// or [-] treated as an opaque atom.
bool tautological_consequence(const std::vector<Formula>& from,
                              const Formula& to);

struct CrosscheckReport {
  Judgment judgment;
  std::size_t max_worlds = 0;
  std::optional<Model> countermodel;  // a soundness alarm when present

  bool sound() const { return !countermodel.has_value(); }
};

// Searches for a model of the premises refuting the conclusion under every
// ultrafilter.
CrosscheckReport semantic_crosscheck(const Judgment& j, std::size_t max_worlds,
                                     const SearchLimits& limits = {});
// Throws InputError unless d is accepted.
CrosscheckReport semantic_crosscheck(const Derivation& d, std::size_t max_worlds,
                                     const SearchLimits& limits = {});

// Adds `extra` to the premises of every step and to the Lambda of IN steps.
Derivation weaken_all(const Derivation& d, const Formula& extra);

std::vector<Derivation> derivation_corpus();

struct Corruption {
  std::string description;
  Derivation derivation;
  std::size_t corrupted_step;
};

// Single-edit variants of corpus derivations.
std::vector<Corruption> corruption_corpus();

}  // namespace ballmodal
