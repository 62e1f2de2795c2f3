#include "graphmag_cli/dsl.hpp"

#include <cctype>
#include <utility>

#include "graphmag/combinators.hpp"
#include "graphmag/families.hpp"

namespace graphmag::cli {

namespace {

const std::vector<std::string> kAtomStarts{"K", "C", "P", "E", "KB", "petersen", "W", "file(", "join(", "glue(", "("};

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += "'" + items[i] + "'";
  }
  return out;
}

ExprPtr make(Expr::Kind kind, std::vector<std::size_t> params = {}, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->params = std::move(params);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"+", "*", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string message =
        "parse error at byte " + std::to_string(pos_) + ": expected " + join_list(expected) + ", found " + found();
    throw ParseError(std::move(message), pos_, std::move(expected));
  }

  void expect(char c) {
    if (peek() != c) fail({std::string(1, c)});
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::size_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"});
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxAtomSize * 10)
        throw ParseError("range error at byte " + std::to_string(start) + ": integer too large", start);
      ++pos_;
    }
    return value;
  }

  std::size_t sized(std::string_view atom, std::size_t min) {
    skip_ws();
    const std::size_t at = pos_;
    const std::size_t n = integer();
    if (n < min || n > kMaxAtomSize)
      throw ParseError("range error at byte " + std::to_string(at) + ": " + std::string(atom) + " takes a size in [" +
                           std::to_string(min) + ", " + std::to_string(kMaxAtomSize) + "], got " + std::to_string(n),
                       at);
    return n;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (accept('+')) e = make(Expr::Kind::Union, {}, e, term());
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (accept('*')) e = make(Expr::Kind::Product, {}, e, atom());
    return e;
  }

  ExprPtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (peek() != ')') fail({"+", "*", ")"});
      ++pos_;
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(kAtomStarts);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);

    if (word == "K") return make(Expr::Kind::Complete, {sized("K", 1)});
    if (word == "C") return make(Expr::Kind::Cycle, {sized("C", 1)});
    if (word == "P") return make(Expr::Kind::Path, {sized("P", 1)});
    if (word == "E") return make(Expr::Kind::Edgeless, {sized("E", 0)});
    if (word == "KB") {
      const std::size_t m = sized("KB", 1);
      return make(Expr::Kind::Bipartite, {m, sized("KB", 1)});
    }
    if (word == "petersen") return make(Expr::Kind::Petersen);
    if (word == "W") return make(Expr::Kind::W);
    if (word == "file") return file();
    if (word == "join") return join();
    if (word == "glue") return glue();
    pos_ = start;
    fail(kAtomStarts);
  }

  ExprPtr file() {
    expect('(');
    std::string path;
    if (peek() == '"') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail({"\""});
        char ch = text_[pos_++];
        if (ch == '"') break;
        if (ch == '\\' && pos_ < text_.size()) ch = text_[pos_++];
        path += ch;
      }
      expect(')');
    } else {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) {
        pos_ = text_.size();
        fail({")"});
      }
      std::string_view raw = text_.substr(pos_, close - pos_);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
      if (raw.empty()) fail({"path"});
      path = raw;
      pos_ = close + 1;
    }
    if (path.empty()) fail({"path"});
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::File;
    e->path = std::move(path);
    return e;
  }

  // join(G [, v], H [, w]); an omitted vertex is 0. Atoms never start with a
  // digit, so a digit after the comma is always a vertex.
  ExprPtr join() {
    expect('(');
    ExprPtr g = expr();
    std::size_t v = 0;
    if (peek() != ',') fail({"+", "*", ","});
    ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = integer();
      expect(',');
    }
    ExprPtr h = expr();
    std::size_t w = 0;
    if (peek() != ',' && peek() != ')') fail({"+", "*", ",", ")"});
    if (accept(',')) w = integer();
    expect(')');
    return make(Expr::Kind::Join, {v, w}, g, h);
  }

  ExprPtr glue() {
    expect('(');
    ExprPtr g = expr();
    if (peek() != ',') fail({"+", "*", ","});
    ++pos_;
    const std::size_t a = integer();
    const std::size_t b = integer();
    expect(',');
    ExprPtr h = expr();
    if (peek() != ',') fail({"+", "*", ","});
    ++pos_;
    const std::size_t c = integer();
    const std::size_t d = integer();
    expect(')');
    return make(Expr::Kind::Glue, {a, b, c, d}, g, h);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Union:
      return 1;
    case Expr::Kind::Product:
      return 2;
    default:
      return 3;
  }
}

std::string render_at(const Expr& e, int min_precedence) {
  std::string s = render(e);
  return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

std::string quoted(const std::string& path) {
  std::string out = "\"";
  for (char c : path) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Vertex vertex_param(const Expr& e, std::size_t i) { return static_cast<Vertex>(e.params.at(i)); }

}  // namespace

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : InputError(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

bool Expr::operator==(const Expr& other) const {
  auto same = [](const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); };
  return kind == other.kind && params == other.params && path == other.path && same(lhs, other.lhs) &&
         same(rhs, other.rhs);
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& e) {
  auto n = [&](std::size_t i) { return std::to_string(e.params.at(i)); };
  switch (e.kind) {
    case Expr::Kind::Complete:
      return "K" + n(0);
    case Expr::Kind::Cycle:
      return "C" + n(0);
    case Expr::Kind::Path:
      return "P" + n(0);
    case Expr::Kind::Edgeless:
      return "E" + n(0);
    case Expr::Kind::Bipartite:
      return "KB " + n(0) + " " + n(1);
    case Expr::Kind::Petersen:
      return "petersen";
    case Expr::Kind::W:
      return "W";
    case Expr::Kind::File:
      return "file(" + quoted(e.path) + ")";
    case Expr::Kind::Union:
      return render_at(*e.lhs, 1) + " + " + render_at(*e.rhs, 2);
    case Expr::Kind::Product:
      return render_at(*e.lhs, 2) + " * " + render_at(*e.rhs, 3);
    case Expr::Kind::Join:
      return "join(" + render(*e.lhs) + ", " + n(0) + ", " + render(*e.rhs) + ", " + n(1) + ")";
    case Expr::Kind::Glue:
      return "glue(" + render(*e.lhs) + ", " + n(0) + " " + n(1) + ", " + render(*e.rhs) + ", " + n(2) + " " + n(3) +
             ")";
  }
  return {};
}

Graph evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Complete:
      return family::complete(e.params[0]);
    case Expr::Kind::Cycle:
      return family::cycle(e.params[0]);
    case Expr::Kind::Path:
      return family::path(e.params[0]);
    case Expr::Kind::Edgeless:
      return family::edgeless(e.params[0]);
    case Expr::Kind::Bipartite:
      return family::complete_bipartite(e.params[0], e.params[1]);
    case Expr::Kind::Petersen:
      return family::petersen();
    case Expr::Kind::W:
      return family::w_graph();
    case Expr::Kind::File:
      return read_edge_list_file(e.path);
    case Expr::Kind::Union:
      return disjoint_union(evaluate(*e.lhs), evaluate(*e.rhs));
    case Expr::Kind::Product:
      return cartesian_product(evaluate(*e.lhs), evaluate(*e.rhs));
    case Expr::Kind::Join:
      return one_point_join(evaluate(*e.lhs), vertex_param(e, 0), evaluate(*e.rhs), vertex_param(e, 1));
    case Expr::Kind::Glue:
      return edge_glue(evaluate(*e.lhs), {vertex_param(e, 0), vertex_param(e, 1)}, evaluate(*e.rhs),
                       {vertex_param(e, 2), vertex_param(e, 3)});
  }
  throw InternalError("unknown expression kind");
}

}  // namespace graphmag::cli
