#include "ordcalc/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ordcalc/errors.hpp"

namespace ordcalc {

namespace {

enum class Tok { Nat, Omega, Times, Plus, PlusPlus, Star, Gamma, LParen, RParen, Caret, Mul, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Nat: return "number";
    case Tok::Omega: return "'w'";
    case Tok::Times: return "'x'";
    case Tok::Plus: return "'+'";
    case Tok::PlusPlus: return "'++'";
    case Tok::Star: return "'star'";
    case Tok::Gamma: return "'G'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Caret: return "'^'";
    case Tok::Mul: return "'*'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t pos;
  BigInt value;  // for Nat
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
      }
      out.push_back({Tok::Nat, start, BigInt(digits)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest known word first, so "wxw" lexes as w, x, w
      if (text.substr(i, 4) == "star") {
        out.push_back({Tok::Star, start, 0});
        i += 4;
      } else if (c == 'w') {
        out.push_back({Tok::Omega, start, 0});
        ++i;
      } else if (c == 'x') {
        out.push_back({Tok::Times, start, 0});
        ++i;
      } else if (c == 'G') {
        out.push_back({Tok::Gamma, start, 0});
        ++i;
      } else {
        std::string word;
        for (std::size_t j = i; j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]));
             ++j) {
          word += text[j];
        }
        throw ParseError("unknown word '" + word + "'", start,
                         {"'w'", "'x'", "'star'", "'G'"});
      }
      continue;
    }
    switch (c) {
      case '+':
        if (i + 1 < text.size() && text[i + 1] == '+') {
          out.push_back({Tok::PlusPlus, start, 0});
          i += 2;
        } else {
          out.push_back({Tok::Plus, start, 0});
          ++i;
        }
        continue;
      case '(': out.push_back({Tok::LParen, start, 0}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, 0}); ++i; continue;
      case '^': out.push_back({Tok::Caret, start, 0}); ++i; continue;
      case '*': out.push_back({Tok::Mul, start, 0}); ++i; continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, text.size(), 0});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  WqoExprPtr parse_expression() {
    WqoExprPtr e = expr();
    expect(Tok::End);
    return e;
  }

  Ordinal parse_bare_ordinal() {
    if (!starts_ordinal()) fail({tok_name(Tok::Omega), tok_name(Tok::Nat)});
    Ordinal o = ordinal();
    expect(Tok::End);
    return o;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += expected.size() == 2 ? " or " : (i + 1 == expected.size() ? ", or " : ", ");
      msg += expected[i];
    }
    throw ParseError(msg, peek().pos, std::move(expected));
  }

  void expect(Tok t) {
    if (peek().kind != t) fail({tok_name(t)});
    take();
  }

  bool starts_ordinal() const {
    return peek().kind == Tok::Omega || peek().kind == Tok::Nat;
  }

  WqoExprPtr expr() {
    std::vector<WqoExprPtr> parts{prod()};
    while (peek().kind == Tok::PlusPlus) {
      take();
      parts.push_back(prod());
    }
    return parts.size() == 1 ? parts[0] : WqoExpr::sum(std::move(parts));
  }

  WqoExprPtr prod() {
    std::vector<WqoExprPtr> parts{atom()};
    while (peek().kind == Tok::Times) {
      take();
      parts.push_back(atom());
    }
    return parts.size() == 1 ? parts[0] : WqoExpr::product(std::move(parts));
  }

  WqoExprPtr atom() {
    switch (peek().kind) {
      case Tok::Omega:
      case Tok::Nat: {
        const std::size_t at = peek().pos;
        Ordinal o = ordinal();
        if (o.is_zero())
          throw ZeroOrdinalLeafError("ordinal leaf evaluates to 0; the empty wqo is not allowed",
                                     at);
        return WqoExpr::ordinal(std::move(o));
      }
      case Tok::Gamma: {
        take();
        if (peek().kind != Tok::Nat) fail({tok_name(Tok::Nat)});
        Token k = take();
        if (k.value < 1)
          throw ParseError("antichain size must be >= 1", k.pos, {"number >= 1"});
        return WqoExpr::gamma(k.value);
      }
      case Tok::Star: {
        take();
        expect(Tok::LParen);
        WqoExprPtr inner = expr();
        expect(Tok::RParen);
        return WqoExpr::star(std::move(inner));
      }
      case Tok::LParen: {
        take();
        WqoExprPtr inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({tok_name(Tok::Omega), tok_name(Tok::Nat), tok_name(Tok::Gamma),
              tok_name(Tok::Star), tok_name(Tok::LParen)});
    }
  }

  Ordinal ordinal() {
    Ordinal acc = oterm();
    while (peek().kind == Tok::Plus) {
      take();
      if (!starts_ordinal()) fail({tok_name(Tok::Omega), tok_name(Tok::Nat)});
      acc = add(acc, oterm());
    }
    return acc;
  }

  Ordinal oterm() {
    if (peek().kind == Tok::Nat) {
      return Ordinal(take().value);
    }
    expect(Tok::Omega);
    Ordinal exponent(1ULL);
    if (peek().kind == Tok::Caret) {
      take();
      exponent = oatom();
    }
    BigInt coeff = 1;
    if (peek().kind == Tok::Mul) {
      take();
      if (peek().kind != Tok::Nat) fail({tok_name(Tok::Nat)});
      coeff = take().value;
    }
    return mul(omega_pow(exponent), Ordinal(coeff));
  }

  Ordinal oatom() {
    switch (peek().kind) {
      case Tok::Omega:
        take();
        return omega();
      case Tok::Nat:
        return Ordinal(take().value);
      case Tok::LParen: {
        take();
        if (!starts_ordinal()) fail({tok_name(Tok::Omega), tok_name(Tok::Nat)});
        Ordinal o = ordinal();
        expect(Tok::RParen);
        return o;
      }
      default:
        fail({tok_name(Tok::Omega), tok_name(Tok::Nat), tok_name(Tok::LParen)});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

WqoExprPtr parse_expr(std::string_view text) { return Parser(text).parse_expression(); }

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse_bare_ordinal(); }

}  // namespace ordcalc
