#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphmag/errors.hpp"
#include "graphmag/graph.hpp"

namespace graphmag::cli {

/// Graph expressions:
///   expr := term { "+" term }            disjoint union
///   term := atom { "*" atom }            cartesian product
///   atom := K n | C n | P n | E n | KB m n | petersen | W | file(path)
///         | join(expr [, v], expr [, w]) | glue(expr, a b, expr, c d) | ( expr )
struct Expr {
  enum class Kind { Complete, Cycle, Path, Edgeless, Bipartite, Petersen, W, File, Union, Product, Join, Glue };

  Kind kind = Kind::Complete;
  /// Atom sizes, or the vertices named by join/glue (one or two per operand).
  std::vector<std::size_t> params;
  std::string path;
  std::shared_ptr<const Expr> lhs, rhs;

  bool operator==(const Expr& other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Syntax or range error in an expression. `offset` is a byte offset into
/// the source; `expected` lists the tokens that would have been accepted.
class ParseError : public InputError {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

ExprPtr parse_expr(std::string_view text);

/// Canonical text for an expression; parse_expr(render(e)) == e.
std::string render(const Expr& e);

/// Builds the graph. Throws InputError for vertices out of range or
/// unreadable files.
Graph evaluate(const Expr& e);

/// Upper bound on atom sizes accepted by the parser.
inline constexpr std::size_t kMaxAtomSize = 100000;

}  // namespace graphmag::cli
