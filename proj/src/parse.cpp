#include "gaproj/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "gaproj/errors.hpp"
#include "gaproj/inverse.hpp"
#include "gaproj/lift.hpp"
#include "gaproj/projection.hpp"

namespace gaproj {
namespace {

struct Token {
  enum class Type { Number, Basis, Func, Plus, Minus, Star, Wedge, LContract,
                    Slash, LParen, RParen, Comma, End };
  Type type;
  std::size_t offset;
  mpz_class number;   // Number
  int index = 0;      // Basis
  Expr::Kind func;    // Func
};

const std::map<std::string_view, Expr::Kind> kFuncs = {
    {"rev", Expr::Kind::Rev},     {"gi", Expr::Kind::Gi},
    {"inv", Expr::Kind::Inv},     {"grade", Expr::Kind::Grade},
    {"proj", Expr::Kind::Proj},   {"projr", Expr::Kind::Projr},
    {"lift", Expr::Kind::Lift},
};

class Lexer {
 public:
  Lexer(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': current_.type = Token::Type::Plus; ++pos_; return;
      case '-': current_.type = Token::Type::Minus; ++pos_; return;
      case '*': current_.type = Token::Type::Star; ++pos_; return;
      case '^': current_.type = Token::Type::Wedge; ++pos_; return;
      case '/': current_.type = Token::Type::Slash; ++pos_; return;
      case '(': current_.type = Token::Type::LParen; ++pos_; return;
      case ')': current_.type = Token::Type::RParen; ++pos_; return;
      case ',': current_.type = Token::Type::Comma; ++pos_; return;
      case '_':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
          current_.type = Token::Type::LContract;
          pos_ += 2;
          return;
        }
        throw ParseError("expected '_|'", pos_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_.type = Token::Type::Number;
      current_.number =
          mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word.size() >= 2 && word[0] == 'e' &&
          std::isdigit(static_cast<unsigned char>(word[1]))) {
        int index = 0;
        auto [ptr, ec] = std::from_chars(word.data() + 1,
                                         word.data() + word.size(), index);
        if (ec != std::errc() || ptr != word.data() + word.size())
          throw ParseError("bad basis vector index", start);
        if (index < 1 || index > sig_.dim())
          throw ParseError("basis vector index out of range", start);
        current_.type = Token::Type::Basis;
        current_.index = index;
        return;
      }
      auto it = kFuncs.find(word);
      if (it == kFuncs.end())
        throw ParseError("unknown identifier '" + std::string(word) + "'",
                         start);
      current_.type = Token::Type::Func;
      current_.func = it->second;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  Token current_;
};

int func_arity(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Grade:
    case Expr::Kind::Proj:
    case Expr::Kind::Projr:
      return 2;
    default:
      return 1;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lexer_(text, sig) {}

  Expr run() {
    Expr e = add_expr();
    const Token& t = lexer_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("unexpected trailing input", t.offset);
    return e;
  }

 private:
  Expr add_expr() {
    Expr lhs = mul_expr();
    while (true) {
      Token::Type t = lexer_.peek().type;
      if (t != Token::Type::Plus && t != Token::Type::Minus) return lhs;
      lexer_.take();
      Expr node;
      node.kind = t == Token::Type::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      node.args.push_back(std::move(lhs));
      node.args.push_back(mul_expr());
      lhs = std::move(node);
    }
  }

  Expr mul_expr() {
    Expr lhs = unary();
    while (true) {
      Token::Type t = lexer_.peek().type;
      Expr::Kind kind;
      if (t == Token::Type::Star) kind = Expr::Kind::Geometric;
      else if (t == Token::Type::Wedge) kind = Expr::Kind::Outer;
      else if (t == Token::Type::LContract) kind = Expr::Kind::LeftContraction;
      else return lhs;
      lexer_.take();
      Expr node;
      node.kind = kind;
      node.args.push_back(std::move(lhs));
      node.args.push_back(unary());
      lhs = std::move(node);
    }
  }

  Expr unary() {
    if (lexer_.peek().type == Token::Type::Minus) {
      lexer_.take();
      Expr node;
      node.kind = Expr::Kind::Neg;
      node.args.push_back(unary());
      return node;
    }
    return atom();
  }

  Expr atom() {
    Token t = lexer_.take();
    switch (t.type) {
      case Token::Type::Number: {
        Expr node;
        node.kind = Expr::Kind::Literal;
        mpz_class den(1);
        if (lexer_.peek().type == Token::Type::Slash) {
          lexer_.take();
          Token d = lexer_.take();
          if (d.type != Token::Type::Number)
            throw ParseError("expected denominator", d.offset);
          if (d.number == 0)
            throw ParseError("denominator must be positive", d.offset);
          den = d.number;
        }
        node.value = Rational(t.number, den);
        return node;
      }
      case Token::Type::Basis: {
        Expr node;
        node.kind = Expr::Kind::Basis;
        node.index = t.index;
        return node;
      }
      case Token::Type::Func: {
        Expr node;
        node.kind = t.func;
        expect(Token::Type::LParen, "expected '('");
        node.args.push_back(add_expr());
        while (lexer_.peek().type == Token::Type::Comma) {
          lexer_.take();
          node.args.push_back(add_expr());
        }
        expect(Token::Type::RParen, "expected ')'");
        if (static_cast<int>(node.args.size()) != func_arity(t.func))
          throw ParseError("wrong number of arguments", t.offset);
        return node;
      }
      case Token::Type::LParen: {
        Expr inner = add_expr();
        expect(Token::Type::RParen, "expected ')'");
        return inner;
      }
      default:
        throw ParseError("expected a value", t.offset);
    }
  }

  void expect(Token::Type type, const char* message) {
    const Token& t = lexer_.peek();
    if (t.type != type) throw ParseError(message, t.offset);
    lexer_.take();
  }

  Lexer lexer_;
};

Rational scalar_value(const Multivector& x, const char* what) {
  for (std::uint32_t m = 1; m < x.size(); ++m)
    if (!x[m].is_zero()) throw DomainError(std::string(what) + " must be a scalar");
  return x[0];
}

}  // namespace

Expr parse(std::string_view text, const Signature& sig) {
  return Parser(text, sig).run();
}

Multivector eval(const Expr& expr, const Signature& sig) {
  switch (expr.kind) {
    case Expr::Kind::Literal:
      return Multivector::scalar(sig, expr.value);
    case Expr::Kind::Basis:
      return Multivector::basis_vector(sig, expr.index);
    case Expr::Kind::Neg:
      return -eval(expr.args[0], sig);
    case Expr::Kind::Add:
      return eval(expr.args[0], sig) + eval(expr.args[1], sig);
    case Expr::Kind::Sub:
      return eval(expr.args[0], sig) - eval(expr.args[1], sig);
    case Expr::Kind::Geometric:
      return geometric_product(eval(expr.args[0], sig), eval(expr.args[1], sig));
    case Expr::Kind::Outer:
      return outer_product(eval(expr.args[0], sig), eval(expr.args[1], sig));
    case Expr::Kind::LeftContraction:
      return left_contraction(eval(expr.args[0], sig), eval(expr.args[1], sig));
    case Expr::Kind::Rev:
      return reverse(eval(expr.args[0], sig));
    case Expr::Kind::Gi:
      return grade_involution(eval(expr.args[0], sig));
    case Expr::Kind::Inv: {
      auto inv = inverse(eval(expr.args[0], sig));
      if (!inv) throw NotInvertibleError("inv: argument is not invertible");
      return *inv;
    }
    case Expr::Kind::Lift: {
      Multivector x = eval(expr.args[0], sig);
      return lift_map(x.sig()).apply(x);
    }
    case Expr::Kind::Grade: {
      Multivector x = eval(expr.args[0], sig);
      Rational k = scalar_value(eval(expr.args[1], sig), "grade selector");
      if (!k.is_integer())
        throw DomainError("grade selector must be an integer");
      mpz_class n = k.num();
      if (n < -1000 || n > 1000)
        throw DomainError("grade selector out of range");
      return grade_part(x, static_cast<int>(n.get_si()));
    }
    case Expr::Kind::Proj: {
      Multivector a = eval(expr.args[0], sig);
      Multivector x = eval(expr.args[1], sig);
      return project({a, ProjectionKind::Inverse}, x);
    }
    case Expr::Kind::Projr: {
      Multivector a = eval(expr.args[0], sig);
      Multivector x = eval(expr.args[1], sig);
      return project({a, ProjectionKind::Reverse}, x);
    }
  }
  throw DomainError("eval: malformed expression");
}

Multivector eval_text(std::string_view text, const Signature& sig) {
  return eval(parse(text, sig), sig);
}

}  // namespace gaproj
