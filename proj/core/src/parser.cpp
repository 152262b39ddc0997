#include <cctype>
#include <sstream>
#include <vector>

#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Plus, Star, Eq, Not, And, Or, Arrow, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

constexpr std::size_t kMaxUnaryNumeral = 100000;

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
  auto is_ident = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = [&](char a, char b) { return s[i] == a && i + 1 < s.size() && s[i + 1] == b; };
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
    } else if (std::isdigit(c) || (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
    } else if (two('-', '>')) {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
    } else if (two('|', '-')) {
      out.push_back({Tok::Turnstile, "|-", start});
      i += 2;
    } else if (two('/', '\\')) {
      out.push_back({Tok::And, "/\\", start});
      i += 2;
    } else if (two('\\', '/')) {
      out.push_back({Tok::Or, "\\/", start});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '+': k = Tok::Plus; break;
        case '*': k = Tok::Star; break;
        case '=': k = Tok::Eq; break;
        case '~': k = Tok::Not; break;
        default: throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
      }
      out.push_back({k, std::string(1, static_cast<char>(c)), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : toks_(tokenize(text)), sig_(sig) {}

  Term term() {
    Term lhs = product();
    if (accept(Tok::Plus)) return binary("+", lhs, term());
    return lhs;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implication(lhs, formula());
    return lhs;
  }

  Sequent sequent() {
    Sequent s;
    if (peek().kind != Tok::Turnstile) s.antecedent = formula_list();
    expect(Tok::Turnstile, "'|-'");
    if (peek().kind != Tok::End) s.succedent = formula_list();
    return s;
  }

  void finish() {
    if (peek().kind != Tok::End) throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    return toks_[pos_++];
  }

  Term binary(const char* sym, const Term& a, const Term& b) {
    if (!sig_.function_arity(sym)) throw ParseError(std::string("operator '") + sym + "' not in signature", peek().pos);
    return Term::apply(sym, {a, b});
  }

  Term product() {
    Term lhs = term_primary();
    if (accept(Tok::Star)) return binary("*", lhs, product());
    return lhs;
  }

  Term literal(const Token& t) {
    switch (sig_.literals) {
      case LiteralMode::UnaryNumerals: {
        if (t.text.front() == '-' || t.text.find('/') != std::string::npos)
          throw ParseError("only natural numerals are allowed here", t.pos);
        BigInt v{t.text};
        if (v > kMaxUnaryNumeral) throw ParseError("numeral too large for successor notation", t.pos);
        return successor_numeral(static_cast<std::size_t>(v));
      }
      case LiteralMode::NaturalConstants: {
        auto c = canonical_natural_literal(t.text);
        if (!c) throw ParseError("expected a natural literal", t.pos);
        return Term::constant(*c);
      }
      case LiteralMode::RationalConstants: {
        auto c = canonical_rational_literal(t.text);
        if (!c) throw ParseError("malformed rational literal", t.pos);
        return Term::constant(*c);
      }
      case LiteralMode::None:
        break;
    }
    throw ParseError("numeric literals are not allowed in signature " + sig_.name, t.pos);
  }

  Term term_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return literal(t);
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) throw ParseError("expected a term", t.pos);
    ++pos_;
    if (peek().kind == Tok::LParen) {
      auto arity = sig_.function_arity(t.text);
      if (!arity) {
        if (sig_.predicate_arity(t.text)) throw ParseError("predicate '" + t.text + "' used as a term", t.pos);
        throw ParseError("unknown function symbol '" + t.text + "'", t.pos);
      }
      ++pos_;
      std::vector<Term> args{term()};
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      if (args.size() != static_cast<std::size_t>(*arity))
        throw ParseError("arity mismatch for '" + t.text + "': expected " + std::to_string(*arity) + ", got " +
                             std::to_string(args.size()),
                         t.pos);
      return Term::apply(t.text, std::move(args));
    }
    if (sig_.is_constant(t.text)) return Term::constant(t.text);
    if (sig_.function_arity(t.text)) throw ParseError("function '" + t.text + "' used without arguments", t.pos);
    if (sig_.predicate_arity(t.text)) throw ParseError("predicate '" + t.text + "' used as a term", t.pos);
    if (t.text == "forall" || t.text == "exists") throw ParseError("quantifier in term position", t.pos);
    return Term::variable(t.text);
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (accept(Tok::Or)) return Formula::disjunction(lhs, disjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (accept(Tok::And)) return Formula::conjunction(lhs, conjunction());
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      const bool universal = t.text == "forall";
      ++pos_;
      const Token& v = expect(Tok::Ident, "a bound variable");
      if (sig_.is_constant(v.text) || sig_.function_arity(v.text) || sig_.predicate_arity(v.text))
        throw ParseError("'" + v.text + "' cannot be bound", v.pos);
      std::string var = v.text;
      Formula body = unary();
      return universal ? Formula::forall(var, body) : Formula::exists(var, body);
    }
    if (t.kind == Tok::LParen) {
      // Either a parenthesised formula or the left side of an equation.
      const std::size_t save = pos_;
      try {
        return equation();
      } catch (const ParseError&) {
        pos_ = save;
      }
      ++pos_;
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && sig_.predicate_arity(t.text) && t.text != "=") {
      ++pos_;
      const int arity = *sig_.predicate_arity(t.text);
      expect(Tok::LParen, "'('");
      std::vector<Term> args{term()};
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
      if (args.size() != static_cast<std::size_t>(arity))
        throw ParseError("arity mismatch for predicate '" + t.text + "'", t.pos);
      return Formula::atom(t.text, std::move(args));
    }
    return equation();
  }

  Formula equation() {
    Term lhs = term();
    const Token& eq = expect(Tok::Eq, "'=' or a predicate application");
    if (!sig_.predicate_arity("=")) throw ParseError("equality not in signature", eq.pos);
    Term rhs = term();
    return Formula::equals(lhs, rhs);
  }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out{formula()};
    while (accept(Tok::Comma)) out.push_back(formula());
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

int term_precedence(const Term& t) {
  if (t.is_application() && t.args().size() == 2) {
    if (t.symbol() == "+") return 1;
    if (t.symbol() == "*") return 2;
  }
  return 3;
}

void print_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable:
    case TermKind::Constant:
      os << t.symbol();
      return;
    case TermKind::Application:
      break;
  }
  const int p = term_precedence(t);
  if (p < 3) {
    const Term& a = t.arg(0);
    const Term& b = t.arg(1);
    const bool pa = term_precedence(a) <= p;
    const bool pb = term_precedence(b) < p;
    if (pa) os << '(';
    print_term(os, a);
    if (pa) os << ')';
    os << t.symbol();
    if (pb) os << '(';
    print_term(os, b);
    if (pb) os << ')';
    return;
  }
  os << t.symbol() << '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) os << ',';
    print_term(os, t.arg(i));
  }
  os << ')';
}

int formula_precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

void print_formula(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (f.is_equality()) {
        print_term(os, f.args()[0]);
        os << " = ";
        print_term(os, f.args()[1]);
      } else {
        os << f.predicate() << '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) os << ',';
          print_term(os, f.args()[i]);
        }
        os << ')';
      }
      return;
    case FormulaKind::Not: {
      os << '~';
      const bool paren = formula_precedence(f.left()) < 4 || f.left().is_equality();
      if (paren) os << '(';
      print_formula(os, f.left());
      if (paren) os << ')';
      return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      os << (f.kind() == FormulaKind::Forall ? "forall " : "exists ") << f.bound_var() << " (";
      print_formula(os, f.body());
      os << ')';
      return;
    default:
      break;
  }
  const int p = formula_precedence(f);
  const char* op = f.kind() == FormulaKind::Implies ? " -> " : f.kind() == FormulaKind::Or ? " \\/ " : " /\\ ";
  const bool pa = formula_precedence(f.left()) <= p;
  const bool pb = formula_precedence(f.right()) < p;
  if (pa) os << '(';
  print_formula(os, f.left());
  if (pa) os << ')';
  os << op;
  if (pb) os << '(';
  print_formula(os, f.right());
  if (pb) os << ')';
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.finish();
  return t;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Formula f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print_formula(os, f);
  return os.str();
}

std::string to_string(const Sequent& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) os << ", ";
    print_formula(os, s.antecedent[i]);
  }
  os << (s.antecedent.empty() ? "|-" : " |-");
  for (std::size_t i = 0; i < s.succedent.size(); ++i) {
    os << (i ? ", " : " ");
    print_formula(os, s.succedent[i]);
  }
  return os.str();
}

Term successor_numeral(std::size_t n) {
  Term t = Term::constant("0");
  for (std::size_t i = 0; i < n; ++i) t = Term::apply("s", {t});
  return t;
}

}  // namespace feaslab
