#include "ballmodal/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

#include "ballmodal/error.hpp"

namespace ballmodal {

bool is_unary(Op op) {
  switch (op) {
    case Op::Not:
    case Op::Ball:
    case Op::Box:
    case Op::Diamond:
    case Op::BoxSame:
    case Op::BoxDiff:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) { return op == Op::And || op == Op::Or; }

bool is_modal(Op op) {
  return op == Op::Box || op == Op::Diamond || op == Op::BoxSame ||
         op == Op::BoxDiff;
}

struct Formula::Node {
  Op op;
  std::string name;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::size_t connectives = 0;
};

Formula Formula::make(Op op, std::string name, const Formula* a,
                      const Formula* b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  if (a != nullptr) {
    node->a = *a;
    node->connectives += 1 + a->connective_count();
  }
  if (b != nullptr) {
    node->b = *b;
    node->connectives += b->connective_count();
  }
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) {
  return make(Op::Var, std::move(name), nullptr, nullptr);
}

Formula Formula::top() {
  static const Formula t = make(Op::Top, {}, nullptr, nullptr);
  return t;
}

Formula Formula::bot() {
  static const Formula f = make(Op::Bot, {}, nullptr, nullptr);
  return f;
}

Op Formula::op() const { return node_->op; }

const std::string& Formula::name() const { return node_->name; }

std::size_t Formula::connective_count() const { return node_->connectives; }

const Formula& Formula::lhs() const {
  if (!node_->a) throw std::logic_error("formula node has no operand");
  return *node_->a;
}

const Formula& Formula::rhs() const {
  if (!node_->b) throw std::logic_error("formula node has no second operand");
  return *node_->b;
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->op == Op::Var) out.insert(n->name);
    if (n->a) stack.push_back(n->a->node_.get());
    if (n->b) stack.push_back(n->b->node_.get());
  }
  return out;
}

bool Formula::is_modal_free() const {
  if (is_modal(op())) return false;
  if (is_unary(op())) return lhs().is_modal_free();
  if (is_binary(op())) return lhs().is_modal_free() && rhs().is_modal_free();
  return true;
}

std::strong_ordering Formula::compare(const Node* x, const Node* y) {
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->op <=> y->op; c != 0) return c;
  if (auto c = x->name <=> y->name; c != 0) return c;
  if (x->a) {
    if (auto c = compare(x->a->node_.get(), y->a->node_.get()); c != 0) return c;
  }
  if (x->b) {
    if (auto c = compare(x->b->node_.get(), y->b->node_.get()); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  return Formula::compare(a.node_.get(), b.node_.get());
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

Formula neg(Formula f) { return Formula::make(Op::Not, {}, &f, nullptr); }
Formula conj(Formula a, Formula b) { return Formula::make(Op::And, {}, &a, &b); }
Formula disj(Formula a, Formula b) { return Formula::make(Op::Or, {}, &a, &b); }
Formula ball(Formula f) { return Formula::make(Op::Ball, {}, &f, nullptr); }
Formula box(Formula f) { return Formula::make(Op::Box, {}, &f, nullptr); }
Formula diamond(Formula f) {
  return Formula::make(Op::Diamond, {}, &f, nullptr);
}
Formula box_same(Formula f) {
  return Formula::make(Op::BoxSame, {}, &f, nullptr);
}
Formula box_diff(Formula f) {
  return Formula::make(Op::BoxDiff, {}, &f, nullptr);
}

Formula implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}

Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula exclusive_or(Formula a, Formula b) {
  return disj(conj(a, neg(b)), conj(neg(a), b));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident,
  True,
  False,
  Not,
  Ball,
  Box,
  Diamond,
  BoxSame,
  BoxDiff,
  And,
  Or,
  Xor,
  Imp,
  Iff,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

const std::vector<std::string>& operand_start() {
  static const std::vector<std::string> v = {
      "identifier", "T", "F", "(", "~", "@", "[]", "<>", "[=]", "[-]"};
  return v;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, "end of input"};

    static constexpr std::pair<std::string_view, Tok> kSymbols[] = {
        {"<->", Tok::Iff}, {"[=]", Tok::BoxSame}, {"[-]", Tok::BoxDiff},
        {"->", Tok::Imp},  {"[]", Tok::Box},      {"<>", Tok::Diamond},
        {"~", Tok::Not},   {"@", Tok::Ball},      {"&", Tok::And},
        {"|", Tok::Or},    {"^", Tok::Xor},       {"(", Tok::LParen},
        {")", Tok::RParen},
    };
    for (const auto& [sym, kind] : kSymbols) {
      if (text_.substr(pos_, sym.size()) == sym) {
        pos_ += sym.size();
        return {kind, start, std::string(sym)};
      }
    }

    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return {Tok::Ident, start, std::string(text_.substr(start, pos_ - start))};
    }
    if ((c == 'T' || c == 'F') &&
        (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return {c == 'T' ? Tok::True : Tok::False, start, std::string(1, c)};
    }
    throw ParseError(start, operand_start(),
                     "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::End) {
      throw ParseError(cur_.offset,
                       {"&", "^", "|", "->", "<->", "end of input"},
                       "'" + cur_.text + "'");
    }
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Formula parse_iff() {
    Formula left = parse_imp();
    while (cur_.kind == Tok::Iff) {
      advance();
      left = iff(left, parse_imp());
    }
    return left;
  }

  Formula parse_imp() {
    Formula left = parse_or();
    if (cur_.kind == Tok::Imp) {
      advance();
      return implies(left, parse_imp());
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_xor();
    while (cur_.kind == Tok::Or) {
      advance();
      left = disj(left, parse_xor());
    }
    return left;
  }

  Formula parse_xor() {
    Formula left = parse_and();
    while (cur_.kind == Tok::Xor) {
      advance();
      left = exclusive_or(left, parse_and());
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary();
    while (cur_.kind == Tok::And) {
      advance();
      left = conj(left, parse_unary());
    }
    return left;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return neg(parse_unary());
      case Tok::Ball:
        advance();
        return ball(parse_unary());
      case Tok::Box:
        advance();
        return box(parse_unary());
      case Tok::Diamond:
        advance();
        return diamond(parse_unary());
      case Tok::BoxSame:
        advance();
        return box_same(parse_unary());
      case Tok::BoxDiff:
        advance();
        return box_diff(parse_unary());
      default:
        return parse_atom();
    }
  }

  Formula parse_atom() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::var(cur_.text);
        advance();
        return f;
      }
      case Tok::True:
        advance();
        return Formula::top();
      case Tok::False:
        advance();
        return Formula::bot();
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        if (cur_.kind != Tok::RParen) {
          throw ParseError(cur_.offset,
                           {"&", "^", "|", "->", "<->", ")"},
                           cur_.kind == Tok::End ? cur_.text
                                                 : "'" + cur_.text + "'");
        }
        advance();
        return f;
      }
      default:
        throw ParseError(cur_.offset, operand_start(),
                         cur_.kind == Tok::End ? cur_.text
                                               : "'" + cur_.text + "'");
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, {}};
};

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : Error("syntax error at offset " + std::to_string(offset) + ": found " +
            found + ", expected one of: " + join_expected(expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

struct Glyphs {
  std::string_view top, bot, neg, ball, box, diamond, box_same, box_diff, conj,
      disj;
};

constexpr Glyphs kAscii{"T", "F", "~", "@", "[]", "<>", "[=]", "[-]", " & ",
                        " | "};
constexpr Glyphs kUnicode{"⊤", "⊥", "¬", "∘", "□", "◇", "■", "⊟", " ∧ ",
                          " ∨ "};

// Binding strength: | is loosest, then &, then prefix operators and atoms.
int strength(Op op) {
  if (op == Op::Or) return 1;
  if (op == Op::And) return 2;
  return 3;
}

void print_into(std::string& out, const Formula& f, const Glyphs& g) {
  auto operand = [&](const Formula& child, bool parens) {
    if (parens) out += '(';
    print_into(out, child, g);
    if (parens) out += ')';
  };
  switch (f.op()) {
    case Op::Var:
      out += f.name();
      return;
    case Op::Top:
      out += g.top;
      return;
    case Op::Bot:
      out += g.bot;
      return;
    case Op::Not:
    case Op::Ball:
    case Op::Box:
    case Op::Diamond:
    case Op::BoxSame:
    case Op::BoxDiff: {
      const Op op = f.op();
      out += op == Op::Not        ? g.neg
             : op == Op::Ball     ? g.ball
             : op == Op::Box      ? g.box
             : op == Op::Diamond  ? g.diamond
             : op == Op::BoxSame  ? g.box_same
                                  : g.box_diff;
      operand(f.lhs(), strength(f.lhs().op()) < 3);
      return;
    }
    case Op::And:
    case Op::Or: {
      const int s = strength(f.op());
      // Left-associative: an equal-strength right operand needs parentheses.
      operand(f.lhs(), strength(f.lhs().op()) < s);
      out += f.op() == Op::And ? g.conj : g.disj;
      operand(f.rhs(), strength(f.rhs().op()) <= s);
      return;
    }
  }
}

}  // namespace

std::string print(const Formula& f, Notation notation) {
  std::string out;
  print_into(out, f, notation == Notation::Ascii ? kAscii : kUnicode);
  return out;
}

// ---------------------------------------------------------------------------
// Transforms and corpus
// ---------------------------------------------------------------------------

Formula ball_substitution(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
      return ball(f);
    case Op::Top:
    case Op::Bot:
      return f;
    case Op::Not:
      return neg(ball_substitution(f.lhs()));
    case Op::Ball:
      return ball(ball_substitution(f.lhs()));
    case Op::Box:
      return box(ball_substitution(f.lhs()));
    case Op::Diamond:
      return diamond(ball_substitution(f.lhs()));
    case Op::BoxSame:
      return box_same(ball_substitution(f.lhs()));
    case Op::BoxDiff:
      return box_diff(ball_substitution(f.lhs()));
    case Op::And:
      return conj(ball_substitution(f.lhs()), ball_substitution(f.rhs()));
    case Op::Or:
      return disj(ball_substitution(f.lhs()), ball_substitution(f.rhs()));
  }
  return f;
}

std::vector<Formula> generate_corpus(const std::vector<std::string>& vars,
                                     std::size_t max_connectives) {
  // by_size[k] holds every formula with exactly k connectives.
  std::vector<std::vector<Formula>> by_size(max_connectives + 1);
  std::set<std::string> distinct(vars.begin(), vars.end());
  for (const auto& v : distinct) by_size[0].push_back(Formula::var(v));

  for (std::size_t k = 1; k <= max_connectives; ++k) {
    auto& level = by_size[k];
    for (const Formula& f : by_size[k - 1]) {
      level.push_back(neg(f));
      level.push_back(ball(f));
      level.push_back(box(f));
    }
    for (std::size_t i = 0; i + 1 <= k; ++i) {
      for (const Formula& a : by_size[i]) {
        for (const Formula& b : by_size[k - 1 - i]) level.push_back(conj(a, b));
      }
    }
  }

  std::vector<Formula> out;
  for (auto& level : by_size) {
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(level.size());
    for (auto& f : level) keyed.emplace_back(print(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [_, f] : keyed) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ballmodal
