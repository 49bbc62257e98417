#include "pftop/expr.hpp"

#include <cctype>

#include "pftop/error.hpp"

namespace pftop::expr {

struct Node {
  NodeKind kind;
  std::string label;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Expr Expr::name(std::string label) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Name, std::move(label), nullptr, nullptr}));
}

Expr Expr::full() { return Expr(std::make_shared<const Node>(Node{NodeKind::Full, "I", nullptr, nullptr})); }

Expr Expr::null() { return Expr(std::make_shared<const Node>(Node{NodeKind::Null, "O", nullptr, nullptr})); }

Expr Expr::union_of(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Union, {}, std::move(left.node_), std::move(right.node_)}));
}

Expr Expr::intersection_of(Expr left, Expr right) {
  return Expr(
      std::make_shared<const Node>(Node{NodeKind::Intersection, {}, std::move(left.node_), std::move(right.node_)}));
}

Expr Expr::complement_of(Expr child) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Complement, {}, std::move(child.node_), nullptr}));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
const std::string& Expr::label() const noexcept { return node_->label; }
Expr Expr::left() const { return Expr(node_->left); }
Expr Expr::right() const { return Expr(node_->right); }

bool operator==(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::Name: return a.label() == b.label();
    case NodeKind::Full:
    case NodeKind::Null: return true;
    case NodeKind::Complement: return Expr(a.node_->left) == Expr(b.node_->left);
    case NodeKind::Union:
    case NodeKind::Intersection:
      return Expr(a.node_->left) == Expr(b.node_->left) && Expr(a.node_->right) == Expr(b.node_->right);
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail({"'|'", "'&'", "end of input"});
    return e;
  }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) list += (i ? ", " : "") + expected[i];
    throw SyntaxError(pos_, std::move(expected),
                      "unexpected " + found + " at offset " + std::to_string(pos_) + ", expected one of " + list);
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (accept('|')) lhs = Expr::union_of(std::move(lhs), parse_term());
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (accept('&')) lhs = Expr::intersection_of(std::move(lhs), parse_factor());
    return lhs;
  }

  Expr parse_factor() {
    if (accept('~')) return Expr::complement_of(parse_factor());
    if (accept('(')) {
      Expr inner = parse_expr();
      if (!accept(')')) fail({"'|'", "'&'", "')'"});
      return inner;
    }
    skip_space();
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if (ident == "I") return Expr::full();
      if (ident == "O") return Expr::null();
      return Expr::name(std::move(ident));
    }
    fail({"'~'", "'('", "identifier"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Name:
    case NodeKind::Full:
    case NodeKind::Null: return e.label();
    case NodeKind::Complement: return "~" + print(e.child());
    case NodeKind::Union: return "(" + print(e.left()) + " | " + print(e.right()) + ")";
    case NodeKind::Intersection: return "(" + print(e.left()) + " & " + print(e.right()) + ")";
  }
  return {};
}

PictureFuzzySet evaluate(const Expr& e, const Family& family) {
  switch (e.kind()) {
    case NodeKind::Name: return family.at(e.label()).set;
    case NodeKind::Full: return PictureFuzzySet::full(family.universe());
    case NodeKind::Null: return PictureFuzzySet::null(family.universe());
    case NodeKind::Complement: return complement(evaluate(e.child(), family));
    case NodeKind::Union: return unite(evaluate(e.left(), family), evaluate(e.right(), family));
    case NodeKind::Intersection: return intersect(evaluate(e.left(), family), evaluate(e.right(), family));
  }
  throw Error(ErrorKind::SyntaxError, "corrupt expression tree");
}

}  // namespace pftop::expr
