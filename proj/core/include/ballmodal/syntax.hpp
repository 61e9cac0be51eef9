#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ballmodal {

enum class Op : std::uint8_t {
  Var,
  Top,
  Bot,
  Not,
  And,
  Or,
  Ball,
  Box,
  Diamond,
  BoxSame,  // necessity over successors sharing the observer's lattice
  BoxDiff,  // necessity over successors with a different lattice
};

bool is_unary(Op op);
bool is_binary(Op op);
bool is_modal(Op op);

// Immutable formula tree with shared subterms.  Implication, equivalence and
// exclusive disjunction have no node of their own: their factory functions
// build the expanded form, so structural equality is taken after sugar
// expansion.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bot();

  Op op() const;
  // Variable name; empty for every other node.
  const std::string& name() const;
  // First operand of unary and binary nodes.
  const Formula& lhs() const;
  // Second operand of binary nodes.
  const Formula& rhs() const;

  std::size_t connective_count() const;
  std::set<std::string> variables() const;
  bool is_modal_free() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, const Formula* a,
                      const Formula* b);
  static std::strong_ordering compare(const Node* a, const Node* b);

  friend Formula neg(Formula f);
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula ball(Formula f);
  friend Formula box(Formula f);
  friend Formula diamond(Formula f);
  friend Formula box_same(Formula f);
  friend Formula box_diff(Formula f);

  std::shared_ptr<const Node> node_;
};

Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula ball(Formula f);
Formula box(Formula f);
Formula diamond(Formula f);
Formula box_same(Formula f);
Formula box_diff(Formula f);

// a -> b  is stored as  ~a | b.
Formula implies(Formula a, Formula b);
// a <-> b  is stored as  (a -> b) & (b -> a).
Formula iff(Formula a, Formula b);
// a ^ b  is stored as  (a & ~b) | (~a & b).
Formula exclusive_or(Formula a, Formula b);

Formula parse(std::string_view text);

enum class Notation { Ascii, Unicode };

// Minimal-parentheses rendering.  The ASCII form parses back to the same
// tree; the Unicode form is for display only.
std::string print(const Formula& f, Notation notation = Notation::Ascii);

// Replaces every variable occurrence x by @x.
Formula ball_substitution(const Formula& f);

// Every formula over `vars` built from ~, &, @ and [] with at most
// `max_connectives` connective nodes, ordered by (size, printed text).
std::vector<Formula> generate_corpus(const std::vector<std::string>& vars,
                                     std::size_t max_connectives);

}  // namespace ballmodal
