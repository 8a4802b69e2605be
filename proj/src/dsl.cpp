#include "zetaforge/dsl.hpp"

#include <cctype>
#include <climits>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

struct Token {
  enum class Kind { Open, Close, Integer, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto symbol_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '-' || c == '_' || c == '+';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Token::Kind::Open : Token::Kind::Close, std::string(1, c), i});
      ++i;
    } else if (symbol_char(c)) {
      const std::size_t start = i;
      while (i < src.size() && symbol_char(src[i])) ++i;
      std::string text(src.substr(start, i - start));
      std::size_t digits_from = (text[0] == '-' || text[0] == '+') ? 1 : 0;
      const bool numeric = digits_from < text.size() &&
                           std::all_of(text.begin() + static_cast<long>(digits_from), text.end(),
                                       [](char d) { return std::isdigit(static_cast<unsigned char>(d)); });
      out.push_back({numeric ? Token::Kind::Integer : Token::Kind::Symbol, std::move(text), start});
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "offset " + std::to_string(i) + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  SchemeExpr parse_all() {
    SchemeExpr e = expr();
    if (peek().kind != Token::Kind::End) fail(peek(), "trailing input after expression");
    return e;
  }

 private:
  [[noreturn]] static void fail(const Token& at, const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) {
    throw Error(code, "offset " + std::to_string(at.offset) + ": " + msg);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    ++pos_;
  }

  bool at_close() const { return peek().kind == Token::Kind::Close; }

  Integer integer() {
    const Token& t = next();
    if (t.kind != Token::Kind::Integer) fail(t, "expected an integer");
    return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text);
  }

  long small_integer(long lo) {
    const Token& t = peek();
    const Integer v = integer();
    if (!v.fits_slong_p() || v.get_si() < lo) fail(t, "integer " + v.get_str() + " out of range");
    return v.get_si();
  }

  std::vector<Integer> integer_list() {
    expect(Token::Kind::Open, "'(' starting an integer list");
    std::vector<Integer> out;
    while (!at_close()) out.push_back(integer());
    expect(Token::Kind::Close, "')'");
    return out;
  }

  std::vector<long> small_list(long lo) {
    expect(Token::Kind::Open, "'(' starting an integer list");
    std::vector<long> out;
    while (!at_close()) out.push_back(small_integer(lo));
    expect(Token::Kind::Close, "')'");
    return out;
  }

  // Reattaches the source offset to errors thrown by the node factories.
  template <typename F>
  static SchemeExpr located(const Token& at, F&& build) {
    try {
      return build();
    } catch (const Error& e) {
      fail(at, e.what(), e.code());
    }
  }

  std::vector<SchemeExpr> children_until_close() {
    std::vector<SchemeExpr> out;
    while (!at_close()) {
      if (peek().kind == Token::Kind::End) fail(peek(), "unbalanced '('");
      out.push_back(expr());
    }
    return out;
  }

  void arity(const Token& head, std::size_t got, std::size_t want) {
    if (got != want) {
      fail(head, head.text + " takes " + std::to_string(want) + " argument" + (want == 1 ? "" : "s") + ", got " +
                     std::to_string(got),
           ErrorCode::ArityError);
    }
  }

  SchemeExpr expr() {
    expect(Token::Kind::Open, "'('");
    const Token head = next();
    if (head.kind != Token::Kind::Symbol) fail(head, "expected an operator name");
    SchemeExpr e = body(head);
    if (!at_close()) {
      if (peek().kind == Token::Kind::End) fail(peek(), "unbalanced '('");
      fail(peek(), "too many arguments to " + head.text, ErrorCode::ArityError);
    }
    ++pos_;
    return e;
  }

  SchemeExpr body(const Token& head) {
    const std::string& op = head.text;
    if (op == "point") {
      if (at_close()) arity(head, 0, 1);
      const Token& q_tok = peek();
      const Integer q = integer();
      long m = 1;
      if (!at_close()) m = small_integer(1);
      return located(q_tok, [&] { return make_point(q, m); });
    }
    if (op == "curve") {
      if (at_close()) arity(head, 0, 2);
      const Token& q_tok = peek();
      const Integer q = integer();
      if (at_close()) arity(head, 1, 2);
      IntPoly P = integer_list();
      return located(q_tok, [&] { return make_curve(q, std::move(P)); });
    }
    if (op == "Q") return make_number_ring(AbelianFieldSpec::rationals());
    if (op == "Qi") return make_number_ring(AbelianFieldSpec::gaussian());
    if (op == "numberring") {
      std::optional<long> conductor;
      std::vector<long> subgroup;
      while (!at_close()) {
        const Token& key = next();
        if (key.kind == Token::Kind::Symbol && key.text == ":conductor") {
          conductor = small_integer(1);
        } else if (key.kind == Token::Kind::Symbol && key.text == ":subgroup") {
          subgroup = small_list(LONG_MIN);
        } else {
          fail(key, "expected :conductor or :subgroup");
        }
      }
      if (!conductor) fail(head, "numberring needs :conductor", ErrorCode::ArityError);
      return located(head, [&] { return make_number_ring(AbelianFieldSpec(*conductor, subgroup)); });
    }
    if (op == "disjoint") return make_disjoint(children_until_close());
    if (op == "glue" || op == "minus") {
      auto kids = children_until_close();
      arity(head, kids.size(), 2);
      return op == "glue" ? make_glue(kids[0], kids[1]) : make_minus(kids[0], kids[1]);
    }
    if (op == "affine" || op == "proj") {
      if (at_close()) arity(head, 0, 2);
      const long r = small_integer(0);
      auto kids = children_until_close();
      arity(head, kids.size() + 1, 2);
      return op == "affine" ? make_affine(r, kids[0]) : make_proj(r, kids[0]);
    }
    if (op == "cellular") {
      if (at_close()) arity(head, 0, 2);
      SchemeExpr base = expr();
      if (at_close()) arity(head, 1, 2);
      std::vector<long> ranks = small_list(0);
      return make_cellular(std::move(base), std::move(ranks));
    }
    fail(head, "unknown operator '" + op + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += " " + p;
  return out;
}

}  // namespace

SchemeExpr parse_expr(std::string_view src) { return Parser(src).parse_all(); }

std::string print_expr(const SchemeExpr& e) {
  return std::visit(
      Overload{
          [](const PointNode& x) {
            return "(point " + x.q.get_str() + (x.m == 1 ? "" : " " + std::to_string(x.m)) + ")";
          },
          [](const CurveNode& x) {
            std::vector<std::string> cs;
            for (const auto& c : x.P) cs.push_back(c.get_str());
            std::string list = join(cs);
            return "(curve " + x.q.get_str() + " (" + (list.empty() ? "" : list.substr(1)) + "))";
          },
          [](const NumberRingNode& x) {
            std::vector<std::string> hs;
            for (long h : x.field.subgroup()) hs.push_back(std::to_string(h));
            return "(numberring :conductor " + std::to_string(x.field.conductor()) + " :subgroup (" +
                   join(hs).substr(1) + "))";
          },
          [](const DisjointNode& x) {
            std::vector<std::string> kids;
            for (const auto& c : x.children) kids.push_back(print_expr(c));
            return "(disjoint" + join(kids) + ")";
          },
          [](const GlueNode& x) { return "(glue " + print_expr(x.closed) + " " + print_expr(x.open) + ")"; },
          [](const MinusNode& x) { return "(minus " + print_expr(x.whole) + " " + print_expr(x.closed) + ")"; },
          [](const AffineNode& x) { return "(affine " + std::to_string(x.r) + " " + print_expr(x.base) + ")"; },
          [](const ProjNode& x) { return "(proj " + std::to_string(x.r) + " " + print_expr(x.base) + ")"; },
          [](const CellularNode& x) {
            std::vector<std::string> rs;
            for (long r : x.ranks) rs.push_back(std::to_string(r));
            std::string list = join(rs);
            return "(cellular " + print_expr(x.base) + " (" + (list.empty() ? "" : list.substr(1)) + "))";
          },
      },
      e->node);
}

}  // namespace zetaforge
