#include "lindiff/cli/expr_parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace lindiff::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

bool is_reserved_name(std::string_view name) {
  if (name.empty() || name.front() != 'd') return false;
  return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); });
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, prime, underscore, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

// Semantic failure inside an algebra; the parser attaches the position.
struct Reject {
  std::string message;
};

std::vector<Token> lex(std::string_view s, SourcePos pos) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '\'': kind = Tok::prime; break;
      case '_': kind = Tok::underscore; break;
      default:
        throw ParseError(pos.line, pos.column + start,
                         std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of expression" : "'" + t.text + "'";
}

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, const Algebra& alg, SourcePos pos)
      : alg_(alg), pos_(pos), tokens_(lex(text, pos)) {}

  Value parse() {
    if (peek().kind == Tok::end) fail(peek(), "empty expression");
    Value v = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
    return v;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(pos_.line, pos_.column + at.offset, message);
  }

  template <class F>
  Value guarded(const Token& at, F&& f) const {
    try {
      return f();
    } catch (const Reject& r) {
      fail(at, r.message);
    } catch (const DivisionByZero&) {
      fail(at, "division by zero");
    }
  }

  const Token& peek() const { return tokens_[next_]; }
  const Token& take() { return tokens_[next_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++next_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (accept(Tok::plus)) {
        acc = acc + term();
      } else if (accept(Tok::minus)) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      const Token& op = peek();
      if (accept(Tok::star)) {
        acc = alg_.mul(acc, unary());
      } else if (accept(Tok::slash)) {
        const Value rhs = unary();
        acc = guarded(op, [&] { return alg_.div(acc, rhs); });
      } else {
        return acc;
      }
    }
  }

  // Unary minus binds looser than ^: -t^2 = -(t^2).
  Value unary() {
    if (accept(Tok::minus)) return -unary();
    if (accept(Tok::plus)) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    const Token& op = peek();
    if (!accept(Tok::caret)) return base;
    bool negative = accept(Tok::minus);
    if (!negative && accept(Tok::lparen)) {
      negative = accept(Tok::minus);
      const long e = exponent();
      expect(Tok::rparen, "')'");
      return guarded(op, [&] { return alg_.pow(base, negative ? -e : e); });
    }
    const long e = exponent();
    return guarded(op, [&] { return alg_.pow(base, negative ? -e : e); });
  }

  long exponent() {
    const Token& t = expect(Tok::number, "an integer exponent");
    if (t.text.size() > 4) fail(t, "exponent too large");
    return std::stol(t.text);
  }

  Value primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number:
        return alg_.number(Integer(t.text));
      case Tok::lparen: {
        Value v = expr();
        expect(Tok::rparen, "')'");
        return v;
      }
      case Tok::ident: {
        const std::optional<DerivMonomial> theta = derivative_suffix();
        return guarded(t, [&] { return alg_.symbol(t.text, theta); });
      }
      default:
        fail(t, "unexpected " + describe(t));
    }
  }

  std::optional<DerivMonomial> derivative_suffix() {
    const std::size_t m = static_cast<std::size_t>(alg_.config().num_derivations());
    if (peek().kind == Tok::prime) {
      const Token& first = peek();
      std::uint32_t count = 0;
      while (accept(Tok::prime)) ++count;
      if (m != 1) fail(first, "primes need a single derivation; write y_(i1,...,im)");
      return DerivMonomial::delta(1, 0, count);
    }
    if (!accept(Tok::underscore)) return std::nullopt;
    expect(Tok::lparen, "'('");
    std::vector<std::uint32_t> exps;
    const Token& first = peek();
    do {
      const Token& n = expect(Tok::number, "a derivative order");
      if (n.text.size() > 4) fail(n, "derivative order too large");
      exps.push_back(static_cast<std::uint32_t>(std::stoul(n.text)));
    } while (accept(Tok::comma));
    expect(Tok::rparen, "')'");
    if (exps.size() != m) {
      fail(first, "multi-index has " + std::to_string(exps.size()) + " entries, expected " +
                      std::to_string(m));
    }
    return DerivMonomial(exps);
  }

  const Algebra& alg_;
  SourcePos pos_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

void reject_suffix(const std::string& name, const std::optional<DerivMonomial>& theta) {
  if (theta) throw Reject{"'" + name + "' cannot carry a derivative"};
}

struct FieldAlgebra {
  using Value = RatFun;
  const Scope& scope;

  const DiffFieldConfig& config() const { return scope.cfg; }
  RatFun number(const Integer& n) const { return RatFun(scope.cfg, Rational(n)); }
  RatFun symbol(const std::string& name, const std::optional<DerivMonomial>& theta) const {
    if (const auto i = find_name(scope.field_names, name)) {
      reject_suffix(name, theta);
      return RatFun::variable(scope.cfg, static_cast<int>(*i));
    }
    throw Reject{"unknown field variable '" + name + "'"};
  }
  RatFun mul(const RatFun& a, const RatFun& b) const { return a * b; }
  RatFun div(const RatFun& a, const RatFun& b) const { return a / b; }
  RatFun pow(const RatFun& a, long e) const { return lindiff::pow(a, static_cast<int>(e)); }
};

struct OperatorAlgebra {
  using Value = OrePoly;
  const Scope& scope;

  const DiffFieldConfig& config() const { return scope.cfg; }
  OrePoly number(const Integer& n) const { return OrePoly(RatFun(scope.cfg, Rational(n))); }
  OrePoly symbol(const std::string& name, const std::optional<DerivMonomial>& theta) const {
    if (const auto i = find_name(scope.field_names, name)) {
      reject_suffix(name, theta);
      return OrePoly(RatFun::variable(scope.cfg, static_cast<int>(*i)));
    }
    const int m = scope.cfg.num_derivations();
    if (is_reserved_name(name)) {
      reject_suffix(name, theta);
      if (name == "d") {
        if (m != 1) throw Reject{"'d' is ambiguous with " + std::to_string(m) + " derivations; use d1..d" + std::to_string(m)};
        return OrePoly::delta(scope.cfg, 0);
      }
      const std::string digits = name.substr(1);
      const unsigned long k = digits.size() > 4 ? 0 : std::stoul(digits);
      if (k < 1 || k > static_cast<unsigned long>(m)) {
        throw Reject{"derivation '" + name + "' outside d1..d" + std::to_string(m)};
      }
      return OrePoly::delta(scope.cfg, k - 1);
    }
    if (find_name(scope.var_names, name)) {
      throw Reject{"variable '" + name + "' cannot appear in an operator"};
    }
    throw Reject{"unknown symbol '" + name + "'"};
  }
  OrePoly mul(const OrePoly& a, const OrePoly& b) const { return ore_mul(a, b); }
  // Right division by a nonzero scalar.
  OrePoly div(const OrePoly& a, const OrePoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    if (b.degree() != 0) throw Reject{"division by an operator of positive order"};
    return ore_mul(a, OrePoly(b.terms().begin()->second.inverse()));
  }
  OrePoly pow(const OrePoly& a, long e) const {
    if (e < 0) {
      if (a.degree() != 0) throw Reject{"negative power of an operator"};
      return OrePoly(lindiff::pow(a.terms().begin()->second, static_cast<int>(e)));
    }
    OrePoly out(RatFun(scope.cfg, Rational(1)));
    for (long k = 0; k < e; ++k) out = ore_mul(out, a);
    return out;
  }
};

struct DiffPolyAlgebra {
  using Value = DiffPoly;
  const Scope& scope;

  std::size_t n() const { return scope.var_names.size(); }
  const DiffFieldConfig& config() const { return scope.cfg; }
  DiffPoly number(const Integer& v) const { return DiffPoly::constant(n(), RatFun(scope.cfg, Rational(v))); }
  DiffPoly symbol(const std::string& name, const std::optional<DerivMonomial>& theta) const {
    if (const auto i = find_name(scope.var_names, name)) {
      return DiffPoly::variable(scope.cfg, n(), *i,
                                theta.value_or(DerivMonomial(static_cast<std::size_t>(scope.cfg.num_derivations()))));
    }
    if (const auto i = find_name(scope.field_names, name)) {
      reject_suffix(name, theta);
      return DiffPoly::constant(n(), RatFun::variable(scope.cfg, static_cast<int>(*i)));
    }
    throw Reject{"unknown variable '" + name + "'"};
  }
  static std::optional<RatFun> as_scalar(const DiffPoly& p) {
    if (p.is_zero()) return RatFun(p.config());
    if (p.terms().size() != 1 || !p.terms().begin()->first.empty()) return std::nullopt;
    return p.terms().begin()->second;
  }
  DiffPoly mul(const DiffPoly& a, const DiffPoly& b) const { return a * b; }
  DiffPoly div(const DiffPoly& a, const DiffPoly& b) const {
    const auto c = as_scalar(b);
    if (!c) throw Reject{"division by a non-constant differential polynomial"};
    return a.scaled(c->inverse());
  }
  DiffPoly pow(const DiffPoly& a, long e) const {
    if (e < 0) {
      const auto c = as_scalar(a);
      if (!c) throw Reject{"negative power of a non-constant differential polynomial"};
      return DiffPoly::constant(n(), lindiff::pow(*c, static_cast<int>(e)));
    }
    return lindiff::pow(a, static_cast<unsigned>(e));
  }
};

}  // namespace

RatFun parse_field_element(std::string_view text, const Scope& scope, SourcePos pos) {
  const FieldAlgebra alg{scope};
  return Parser<FieldAlgebra>(text, alg, pos).parse();
}

OrePoly parse_operator(std::string_view text, const Scope& scope, SourcePos pos) {
  const OperatorAlgebra alg{scope};
  return Parser<OperatorAlgebra>(text, alg, pos).parse();
}

DiffPoly parse_diffpoly(std::string_view text, const Scope& scope, SourcePos pos) {
  const DiffPolyAlgebra alg{scope};
  return Parser<DiffPolyAlgebra>(text, alg, pos).parse();
}

ModElement parse_linear_form(std::string_view text, const Scope& scope, SourcePos pos) {
  const DiffPoly p = parse_diffpoly(text, scope, pos);
  ModElement out(scope.cfg, scope.var_names.size());
  for (const auto& [mono, c] : p.terms()) {
    if (mono.size() != 1 || mono.begin()->second != 1) {
      throw ParseError(pos.line, pos.column, "expected a homogeneous linear expression in the variables");
    }
    const DiffVar& v = mono.begin()->first;
    out.add_term(ModTerm{v.var, v.theta}, c);
  }
  return out;
}

}  // namespace lindiff::cli
