#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcolkit/error.hpp"

namespace wcolkit {

/// A variable occurrence. Slot 0 is x, slot 1 is y, and a variable bound by
/// the quantifier at nesting depth k (0-based) lives in slot 2 + k.
struct Var {
  std::string name;
  int slot = 0;
  bool operator==(const Var&) const = default;
};

class Formula {
 public:
  enum class Kind { True, False, Adj, Eq, Color, Not, And, Or, Imp, Iff, Exists, Forall };

  struct Node {
    Kind kind;
    std::string color;        // Color
    Var a, b;                 // Adj, Eq: a, b; Color: a; quantifiers: a is bound
    std::shared_ptr<const Node> left, right;  // Not, quantifiers: left only
  };
  using NodePtr = std::shared_ptr<const Node>;

  Formula() : root_(leaf(Kind::True)) {}
  explicit Formula(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  static NodePtr leaf(Kind k) { return std::make_shared<const Node>(Node{k, {}, {}, {}, {}, {}}); }
  static NodePtr relation(Kind k, Var a, Var b) {
    return std::make_shared<const Node>(Node{k, {}, std::move(a), std::move(b), {}, {}});
  }
  static NodePtr color_atom(std::string name, Var a) {
    return std::make_shared<const Node>(Node{Kind::Color, std::move(name), std::move(a), {}, {}, {}});
  }
  static NodePtr unary(Kind k, NodePtr child, Var bound = {}) {
    return std::make_shared<const Node>(Node{k, {}, std::move(bound), {}, std::move(child), {}});
  }
  static NodePtr binary(Kind k, NodePtr l, NodePtr r) {
    return std::make_shared<const Node>(Node{k, {}, {}, {}, std::move(l), std::move(r)});
  }

  /// Maximum nesting depth of quantifiers.
  int quantifier_rank() const { return rank_of(*root_); }

  /// Number of variable slots an evaluator needs.
  int slot_count() const { return 2 + rank_of(*root_); }

  std::set<std::string> colors() const {
    std::set<std::string> out;
    collect_colors(*root_, out);
    return out;
  }

  /// Fully parenthesized text that parses back to the same formula.
  std::string to_string() const { return print(*root_); }

  bool operator==(const Formula& other) const { return to_string() == other.to_string(); }

 private:
  static int rank_of(const Node& n) {
    switch (n.kind) {
      case Kind::Not:
        return rank_of(*n.left);
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
      case Kind::Iff:
        return std::max(rank_of(*n.left), rank_of(*n.right));
      case Kind::Exists:
      case Kind::Forall:
        return 1 + rank_of(*n.left);
      default:
        return 0;
    }
  }

  static void collect_colors(const Node& n, std::set<std::string>& out) {
    if (n.kind == Kind::Color) out.insert(n.color);
    if (n.left) collect_colors(*n.left, out);
    if (n.right) collect_colors(*n.right, out);
  }

  static std::string print(const Node& n) {
    switch (n.kind) {
      case Kind::True:
        return "true";
      case Kind::False:
        return "false";
      case Kind::Adj:
        return "adj(" + n.a.name + "," + n.b.name + ")";
      case Kind::Eq:
        return n.a.name + " = " + n.b.name;
      case Kind::Color:
        return n.color + "(" + n.a.name + ")";
      case Kind::Not:
        return "!" + wrap(*n.left);
      case Kind::And:
        return wrap(*n.left) + " & " + wrap(*n.right);
      case Kind::Or:
        return wrap(*n.left) + " | " + wrap(*n.right);
      case Kind::Imp:
        return wrap(*n.left) + " -> " + wrap(*n.right);
      case Kind::Iff:
        return wrap(*n.left) + " <-> " + wrap(*n.right);
      case Kind::Exists:
        return "exists " + n.a.name + " " + wrap(*n.left);
      case Kind::Forall:
        return "forall " + n.a.name + " " + wrap(*n.left);
    }
    return {};
  }

  static std::string wrap(const Node& n) {
    switch (n.kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Adj:
      case Kind::Color:
        return print(n);
      default:
        return "(" + print(n) + ")";
    }
  }

  NodePtr root_;
};

namespace detail {

struct Token {
  enum class Type { Ident, Op, LParen, RParen, Comma, End };
  Type type;
  std::string text;
  int line;
  int column;
};

class FormulaLexer {
 public:
  explicit FormulaLexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int l = line_, c = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Type::End, "", l, c});
        return out;
      }
      const char ch = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string word;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          word += advance();
        out.push_back({Token::Type::Ident, word, l, c});
      } else if (ch == '(') {
        advance();
        out.push_back({Token::Type::LParen, "(", l, c});
      } else if (ch == ')') {
        advance();
        out.push_back({Token::Type::RParen, ")", l, c});
      } else if (ch == ',') {
        advance();
        out.push_back({Token::Type::Comma, ",", l, c});
      } else if (ch == '!') {
        advance();
        out.push_back({Token::Type::Op, "!", l, c});
      } else if (is_operator_char(ch)) {
        std::string op;
        while (pos_ < text_.size() && is_operator_char(text_[pos_])) op += advance();
        if (op != "<->" && op != "->" && op != "&" && op != "|" && op != "=")
          throw Error("unknown-connective", location(l, c) + ": unknown connective '" + op + "'");
        out.push_back({Token::Type::Op, op, l, c});
      } else {
        throw Error("syntax", location(l, c) + ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
  }

  static std::string location(int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }

 private:
  static bool is_operator_char(char ch) {
    return ch == '<' || ch == '>' || ch == '-' || ch == '=' || ch == '&' || ch == '|' || ch == '^' || ch == '~' ||
           ch == '/' || ch == '\\';
  }

  char advance() {
    const char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class FormulaParser {
 public:
  using Kind = Formula::Kind;
  using NodePtr = Formula::NodePtr;

  explicit FormulaParser(std::string_view text) : tokens_(FormulaLexer(text).run()) {}

  Formula parse() {
    NodePtr root = parse_iff();
    if (peek().type != Token::Type::End) {
      const Token& t = peek();
      if (t.type == Token::Type::Ident && is_word_connective(t.text))
        throw Error("unknown-connective", where(t) + ": unknown connective '" + t.text + "'");
      fail(t, "unexpected '" + t.text + "' after formula");
    }
    return Formula(std::move(root));
  }

 private:
  static bool is_word_connective(const std::string& w) {
    static const std::set<std::string> words{"and", "or", "not", "implies", "iff", "xor", "AND", "OR", "NOT"};
    return words.contains(w);
  }

  static bool is_keyword(const std::string& w) {
    return w == "adj" || w == "exists" || w == "forall" || w == "true" || w == "false";
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  bool accept_op(const char* op) {
    if (peek().type == Token::Type::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::string where(const Token& t) { return FormulaLexer::location(t.line, t.column); }

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw Error("syntax", where(t) + ": " + what);
  }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type) fail(peek(), std::string("expected ") + what);
    ++pos_;
  }

  NodePtr parse_iff() {
    NodePtr left = parse_imp();
    while (accept_op("<->")) left = Formula::binary(Kind::Iff, left, parse_imp());
    return left;
  }

  // Right-associative: a -> b -> c is a -> (b -> c).
  NodePtr parse_imp() {
    NodePtr left = parse_or();
    if (accept_op("->")) return Formula::binary(Kind::Imp, left, parse_imp());
    return left;
  }

  NodePtr parse_or() {
    NodePtr left = parse_and();
    while (accept_op("|")) left = Formula::binary(Kind::Or, left, parse_and());
    return left;
  }

  NodePtr parse_and() {
    NodePtr left = parse_not();
    while (accept_op("&")) left = Formula::binary(Kind::And, left, parse_not());
    return left;
  }

  NodePtr parse_not() {
    if (accept_op("!")) return Formula::unary(Kind::Not, parse_not());
    return parse_atom();
  }

  Var variable() {
    const Token& t = peek();
    if (t.type != Token::Type::Ident || is_keyword(t.text)) fail(t, "expected a variable");
    ++pos_;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == t.text) return {t.text, it->second};
    if (t.text == "x") return {"x", 0};
    if (t.text == "y") return {"y", 1};
    throw Error("unbound-variable", where(t) + ": unbound variable '" + t.text + "'");
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    if (t.type == Token::Type::LParen) {
      ++pos_;
      NodePtr inner = parse_iff();
      expect(Token::Type::RParen, "')'");
      return inner;
    }
    if (t.type == Token::Type::Op) {
      if (t.text == "!") fail(t, "unexpected '!'");
      fail(t, "expected a formula before '" + t.text + "'");
    }
    if (t.type != Token::Type::Ident) fail(t, t.type == Token::Type::End ? "unexpected end of input" : "expected a formula");

    if (t.text == "true") {
      ++pos_;
      return Formula::leaf(Kind::True);
    }
    if (t.text == "false") {
      ++pos_;
      return Formula::leaf(Kind::False);
    }
    if (t.text == "exists" || t.text == "forall") {
      const Kind kind = t.text == "exists" ? Kind::Exists : Kind::Forall;
      ++pos_;
      const Token& v = peek();
      if (v.type != Token::Type::Ident || is_keyword(v.text)) fail(v, "expected a variable after quantifier");
      ++pos_;
      const Var bound{v.text, 2 + static_cast<int>(scope_.size())};
      scope_.emplace_back(v.text, bound.slot);
      NodePtr body = parse_iff();
      scope_.pop_back();
      return Formula::unary(kind, std::move(body), bound);
    }
    if (t.text == "adj") {
      ++pos_;
      expect(Token::Type::LParen, "'(' after adj");
      Var a = variable();
      expect(Token::Type::Comma, "','");
      Var b = variable();
      expect(Token::Type::RParen, "')'");
      return Formula::relation(Kind::Adj, std::move(a), std::move(b));
    }
    if (peek(1).type == Token::Type::LParen) {
      const std::string name = t.text;
      if (is_word_connective(name)) throw Error("unknown-connective", where(t) + ": unknown connective '" + name + "'");
      pos_ += 2;
      Var a = variable();
      expect(Token::Type::RParen, "')'");
      return Formula::color_atom(name, std::move(a));
    }
    if (peek(1).type == Token::Type::Op && peek(1).text == "=") {
      Var a = variable();
      ++pos_;
      Var b = variable();
      return Formula::relation(Kind::Eq, std::move(a), std::move(b));
    }
    if (is_word_connective(t.text)) throw Error("unknown-connective", where(t) + ": unknown connective '" + t.text + "'");
    fail(t, "expected an atom, got '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, int>> scope_;
};

inline Formula::NodePtr rewrite_free(const Formula::Node& n, const std::map<int, Var>& free_map) {
  using Kind = Formula::Kind;
  auto var = [&](const Var& v) {
    auto it = free_map.find(v.slot);
    return it == free_map.end() ? v : it->second;
  };
  switch (n.kind) {
    case Kind::True:
    case Kind::False:
      return Formula::leaf(n.kind);
    case Kind::Adj:
    case Kind::Eq:
      return Formula::relation(n.kind, var(n.a), var(n.b));
    case Kind::Color:
      return Formula::color_atom(n.color, var(n.a));
    case Kind::Not:
      return Formula::unary(Kind::Not, rewrite_free(*n.left, free_map));
    case Kind::Exists:
    case Kind::Forall: {
      // Bound names x/y are renamed so printed output stays unambiguous.
      Var bound = n.a;
      std::map<int, Var> inner = free_map;
      if (bound.name == "x" || bound.name == "y") {
        bound.name = "v" + std::to_string(bound.slot);
        inner[bound.slot] = bound;
      }
      return Formula::unary(n.kind, rewrite_free(*n.left, inner), bound);
    }
    default:
      return Formula::binary(n.kind, rewrite_free(*n.left, free_map), rewrite_free(*n.right, free_map));
  }
}

}  // namespace detail

/// Parses the grammar
///   iff := imp ("<->" imp)*   imp := or ("->" imp)?   or := and ("|" and)*
///   and := not ("&" not)*     not := "!" not | atom
///   atom := adj(v,v) | v = v | NAME(v) | exists v F | forall v F | (F) | true | false
/// with free variables x and y. A quantifier body extends as far right as possible.
inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

/// phi(y, x): the two free variables exchanged.
inline Formula swap_free(const Formula& phi) {
  return Formula(detail::rewrite_free(phi.root(), {{0, Var{"y", 1}}, {1, Var{"x", 0}}}));
}

/// phi(x, y) | phi(y, x), symmetric on every graph.
inline Formula symmetrize(const Formula& phi) {
  return Formula(Formula::binary(Formula::Kind::Or, detail::rewrite_free(phi.root(), {}), swap_free(phi).root_ptr()));
}

/// phi & C(x) & C(y): vertices outside C become isolated.
inline Formula guard(const Formula& phi, const std::string& color) {
  using Kind = Formula::Kind;
  auto both = Formula::binary(Kind::And, Formula::color_atom(color, {"x", 0}), Formula::color_atom(color, {"y", 1}));
  return Formula(Formula::binary(Kind::And, phi.root_ptr(), std::move(both)));
}

}  // namespace wcolkit
