#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "pftop/family.hpp"

namespace pftop::expr {

enum class NodeKind { Name, Full, Null, Union, Intersection, Complement };

struct Node;

/// Immutable expression tree over named sets; subtrees are shared.
///
/// Grammar accepted by `parse`:
///
///     expr   := term ('|' term)*
///     term   := factor ('&' factor)*
///     factor := '~' factor | '(' expr ')' | IDENT
///     IDENT  := [A-Za-z_][A-Za-z0-9_]*
///
/// `I` and `O` are reserved for the full and null sets. Binary operators
/// associate left; `~` binds tightest, then `&`, then `|`.
class Expr {
 public:
  static Expr name(std::string label);
  static Expr full();
  static Expr null();
  static Expr union_of(Expr left, Expr right);
  static Expr intersection_of(Expr left, Expr right);
  static Expr complement_of(Expr child);

  NodeKind kind() const noexcept;
  /// Only meaningful for NodeKind::Name.
  const std::string& label() const noexcept;
  /// Operands; precondition: a Union/Intersection node (left, right) or a
  /// Complement node (child).
  Expr left() const;
  Expr right() const;
  Expr child() const { return left(); }

  friend bool operator==(const Expr& a, const Expr& b) noexcept;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws pftop::SyntaxError carrying the byte offset and the expected tokens.
Expr parse(std::string_view text);

/// Fully parenthesized form: every binary node is wrapped, `~` is prefixed.
/// parse(print(e)) == e.
std::string print(const Expr& e);

/// Names resolve against `family`; I and O evaluate to the constant sets over
/// the family's universe. Throws UnknownName.
PictureFuzzySet evaluate(const Expr& e, const Family& family);

}  // namespace pftop::expr
