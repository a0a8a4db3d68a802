#include "carma/parser.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "carma/errors.hpp"
#include "carma/lexer.hpp"

namespace carma {

namespace {

std::string describe(std::string message, const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  message += "; expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) message += i + 1 == expected.size() ? " or " : ", ";
    message += expected[i];
  }
  return message;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + describe(message, expected)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

constexpr int kMaxDepth = 256;

const std::set<std::string, std::less<>> kExprKeywords = {"true",   "false",  "unit",     "this",
                                                          "global", "sender", "receiver", "count"};

struct Pos {
  int line = 1;
  int column = 1;
};

struct InstanceUse {
  std::string component;
  std::size_t arity;
  Pos pos;
};

/// Rewrites attribute reads of the given names into variable reads.
Expr bindNames(const Expr& e, const std::set<std::string>& names) {
  switch (e.kind()) {
    case ExprKind::Attribute: return names.count(e.name()) ? Expr::variable(e.name()) : e;
    case ExprKind::Count: return Expr::count(bindNames(e.arg(0), names));
    case ExprKind::Unary: return Expr::unary(e.unaryOp(), bindNames(e.arg(0), names));
    case ExprKind::Binary: return Expr::binary(e.binaryOp(), bindNames(e.arg(0), names), bindNames(e.arg(1), names));
    case ExprKind::Call: {
      std::vector<Expr> args;
      for (const auto& a : e.args()) args.push_back(bindNames(a, names));
      return Expr::call(e.name(), std::move(args));
    }
    default: return e;
  }
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& symbols) {
    Lexer lex(src);
    while (true) {
      toks_.push_back(lex.next());
      if (toks_.back().kind == TokenKind::End) break;
    }
    for (const auto& s : symbols) symbols_.insert(s);
  }

  Model model();

  ProcessPtr processOnly() {
    ProcessPtr p = process();
    expect(TokenKind::End);
    return p;
  }

  Expr exprOnly() {
    Expr e = expr();
    expect(TokenKind::End);
    return e;
  }

 private:
  struct Depth {
    explicit Depth(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail("nesting too deep");
    }
    ~Depth() { --parser.depth_; }
    Parser& parser;
  };

  // Token access.
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool atWord(std::string_view w, std::size_t ahead = 0) const {
    return at(TokenKind::Ident, ahead) && peek(ahead).text == w;
  }
  Pos pos() const { return {peek().line, peek().column}; }
  Token take() {
    Token t = peek();
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool accept(TokenKind k) {
    if (!at(k)) return false;
    take();
    return true;
  }
  static std::string shown(const Token& t) {
    switch (t.kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::Ident:
      case TokenKind::Integer:
      case TokenKind::Real: return "'" + t.text + "'";
      default: return tokenKindName(t.kind);
    }
  }
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
    throw ParseError(peek().line, peek().column, message, std::move(expected));
  }
  [[noreturn]] static void failAt(Pos p, const std::string& message) { throw ParseError(p.line, p.column, message); }
  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail("unexpected " + shown(peek()), std::move(expected));
  }
  Token expect(TokenKind k) {
    if (!at(k)) unexpected({tokenKindName(k)});
    return take();
  }
  void expectWord(std::string_view w) {
    if (!atWord(w)) unexpected({"'" + std::string(w) + "'"});
    take();
  }
  std::string ident(const char* what = "identifier") {
    if (!at(TokenKind::Ident)) unexpected({what});
    return take().text;
  }

  bool bound(const std::string& name) const { return std::find(vars_.begin(), vars_.end(), name) != vars_.end(); }

  // Expressions.
  Expr expr(int minLevel = 0);
  Expr orExpr();
  Expr andExpr();
  Expr cmpExpr();
  Expr addExpr();
  Expr mulExpr();
  Expr unaryExpr();
  Expr primary();
  Expr nameExpr();
  std::vector<Expr> exprList(TokenKind close);
  Value literal(const Token& t, bool negative);

  // Processes.
  ProcessPtr process();
  ProcessPtr parallel();
  ProcessPtr guarded();
  ProcessPtr prefixed();
  ProcessPtr atom();
  bool atAction() const;
  ActionPrefix action();
  Update update();
  Assignment assignment();

  // Model items.
  void symbolsItem(Model& m);
  void definitionItem(Model& m);
  void componentItem(Model& m);
  void envItem(Model& m);
  void systemItem(Model& m);
  void measureItem(Model& m);
  std::vector<std::pair<std::string, Expr>> bindings();
  ActionPattern pattern();
  Predicate optionalGuard();
  InstanceSpec instance(Pos& where);
  double number();

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
  bool underPrefix_ = false;
  std::set<std::string> symbols_;
  std::vector<std::string> vars_;
  std::map<std::string, Pos> constantUses_;
  std::vector<InstanceUse> instanceUses_;
};

// ---------------------------------------------------------------- expressions

Expr Parser::expr(int minLevel) {
  Depth d(*this);
  return minLevel == 0 ? orExpr() : addExpr();
}

Expr Parser::orExpr() {
  Expr l = andExpr();
  while (accept(TokenKind::OrOr)) l = Expr::binary(BinaryOp::Or, l, andExpr());
  return l;
}

Expr Parser::andExpr() {
  Expr l = cmpExpr();
  while (accept(TokenKind::AndAnd)) l = Expr::binary(BinaryOp::And, l, cmpExpr());
  return l;
}

namespace {

std::optional<BinaryOp> comparison(TokenKind k) {
  switch (k) {
    case TokenKind::EqEq: return BinaryOp::Eq;
    case TokenKind::NotEq: return BinaryOp::Ne;
    case TokenKind::Less: return BinaryOp::Lt;
    case TokenKind::LessEq: return BinaryOp::Le;
    case TokenKind::Greater: return BinaryOp::Gt;
    case TokenKind::GreaterEq: return BinaryOp::Ge;
    default: return std::nullopt;
  }
}

}  // namespace

Expr Parser::cmpExpr() {
  Expr l = addExpr();
  if (auto op = comparison(peek().kind)) {
    take();
    l = Expr::binary(*op, l, addExpr());
    if (comparison(peek().kind)) fail("comparisons do not chain; add parentheses");
  }
  return l;
}

Expr Parser::addExpr() {
  Expr l = mulExpr();
  while (true) {
    if (accept(TokenKind::Plus)) {
      l = Expr::binary(BinaryOp::Add, l, mulExpr());
    } else if (accept(TokenKind::Minus)) {
      l = Expr::binary(BinaryOp::Sub, l, mulExpr());
    } else {
      return l;
    }
  }
}

Expr Parser::mulExpr() {
  Expr l = unaryExpr();
  while (true) {
    if (accept(TokenKind::Star)) {
      l = Expr::binary(BinaryOp::Mul, l, unaryExpr());
    } else if (accept(TokenKind::Slash)) {
      l = Expr::binary(BinaryOp::Div, l, unaryExpr());
    } else if (accept(TokenKind::Percent)) {
      l = Expr::binary(BinaryOp::Mod, l, unaryExpr());
    } else {
      return l;
    }
  }
}

Value Parser::literal(const Token& t, bool negative) {
  if (t.kind == TokenKind::Real) return Value::real(negative ? -t.real : t.real);
  constexpr std::uint64_t kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (t.integer > kMax + (negative ? 1 : 0)) failAt({t.line, t.column}, "integer literal out of range");
  if (negative) return Value::integer(static_cast<std::int64_t>(0 - t.integer));
  return Value::integer(static_cast<std::int64_t>(t.integer));
}

Expr Parser::unaryExpr() {
  Depth d(*this);
  if (accept(TokenKind::Minus)) {
    if (at(TokenKind::Integer) || at(TokenKind::Real)) return Expr::constant(literal(take(), true));
    return Expr::unary(UnaryOp::Neg, unaryExpr());
  }
  if (accept(TokenKind::Bang)) return Expr::unary(UnaryOp::Not, unaryExpr());
  return primary();
}

std::vector<Expr> Parser::exprList(TokenKind close) {
  std::vector<Expr> out;
  if (accept(close)) return out;
  do {
    out.push_back(expr());
  } while (accept(TokenKind::Comma));
  expect(close);
  return out;
}

Expr Parser::primary() {
  switch (peek().kind) {
    case TokenKind::Integer:
    case TokenKind::Real: return Expr::constant(literal(take(), false));
    case TokenKind::LParen: {
      Depth d(*this);
      Pos open = pos();
      take();
      if (accept(TokenKind::RParen)) return Expr::constant(Value::tuple({}));
      Expr first = expr();
      if (accept(TokenKind::RParen)) return first;
      if (!at(TokenKind::Comma)) unexpected({"')'", "','"});
      std::vector<Expr> items{first};
      while (accept(TokenKind::Comma)) {
        if (at(TokenKind::RParen)) break;
        items.push_back(expr());
      }
      expect(TokenKind::RParen);
      std::vector<Value> values;
      for (const auto& e : items) {
        if (!e.isConstant()) failAt(open, "tuple items must be literals");
        values.push_back(e.value());
      }
      return Expr::constant(Value::tuple(std::move(values)));
    }
    case TokenKind::At: {
      take();
      return Expr::inState(ident("process constant"));
    }
    case TokenKind::Ident: return nameExpr();
    default: unexpected({"expression"});
  }
}

Expr Parser::nameExpr() {
  Token t = take();
  const std::string& w = t.text;
  if (w == "true") return Expr::top();
  if (w == "false") return Expr::bottom();
  if (w == "unit") return Expr::constant(Value::unit());
  if (w == "this" || w == "global" || w == "sender" || w == "receiver") {
    expect(TokenKind::Dot);
    std::string a = ident("attribute");
    if (w == "this") return Expr::self(a);
    if (w == "global") return Expr::global(a);
    if (w == "sender") return Expr::sender(a);
    return Expr::receiver(a);
  }
  if (w == "count") {
    Depth d(*this);
    expect(TokenKind::LBracket);
    Expr p = expr();
    expect(TokenKind::RBracket);
    return Expr::count(p);
  }
  if (symbols_.count(w)) return Expr::constant(Value::symbol(w));
  if (bound(w)) return Expr::variable(w);
  if (isBuiltinFunction(w) && at(TokenKind::LParen)) {
    Depth d(*this);
    take();
    return Expr::call(w, exprList(TokenKind::RParen));
  }
  return Expr::attribute(w);
}

// ------------------------------------------------------------------ processes

ProcessPtr Parser::process() {
  Depth d(*this);
  ProcessPtr l = parallel();
  while (accept(TokenKind::Plus)) l = Process::choice(l, parallel());
  return l;
}

ProcessPtr Parser::parallel() {
  ProcessPtr l = guarded();
  while (accept(TokenKind::Bar)) l = Process::parallel(l, guarded());
  return l;
}

ProcessPtr Parser::guarded() {
  Depth d(*this);
  if (accept(TokenKind::LBracket)) {
    Predicate g = expr();
    expect(TokenKind::RBracket);
    return Process::guard(g, guarded());
  }
  return prefixed();
}

bool Parser::atAction() const {
  if (!at(TokenKind::Ident) || atWord("nil") || atWord("kill")) return false;
  switch (peek(1).kind) {
    case TokenKind::Star:
    case TokenKind::LBracket:
    case TokenKind::Less:
    case TokenKind::LParen: return true;
    default: return false;
  }
}

ProcessPtr Parser::prefixed() {
  if (!atAction()) return atom();
  std::size_t scope = vars_.size();
  ActionPrefix a = action();
  expect(TokenKind::Dot);
  bool saved = underPrefix_;
  underPrefix_ = true;
  ProcessPtr body = guarded();
  underPrefix_ = saved;
  vars_.resize(scope);
  return Process::prefix(std::move(a), body);
}

ActionPrefix Parser::action() {
  ActionPrefix a;
  a.action = take().text;
  bool broadcast = accept(TokenKind::Star);
  if (accept(TokenKind::LBracket)) {
    a.predicate = expr();
    expect(TokenKind::RBracket);
  }
  if (accept(TokenKind::Less)) {
    a.kind = broadcast ? ActionKind::BroadcastOut : ActionKind::UnicastOut;
    if (!accept(TokenKind::Greater)) {
      do {
        a.outputs.push_back(expr(1));
      } while (accept(TokenKind::Comma));
      expect(TokenKind::Greater);
    }
  } else if (accept(TokenKind::LParen)) {
    a.kind = broadcast ? ActionKind::BroadcastIn : ActionKind::UnicastIn;
    std::set<std::string> names;
    if (!accept(TokenKind::RParen)) {
      do {
        Pos p = pos();
        std::string x = ident("input variable or 'unit'");
        if (x == "unit") {
          a.inputs.emplace_back(std::nullopt);
          continue;
        }
        if (kExprKeywords.count(x) || symbols_.count(x)) failAt(p, "'" + x + "' cannot name an input variable");
        if (!names.insert(x).second) failAt(p, "input variable '" + x + "' repeated");
        a.inputs.emplace_back(x);
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    }
    // The predicate is written before the slots but sees their values.
    a.predicate = bindNames(a.predicate, names);
    for (const auto& x : names) vars_.push_back(x);
  } else {
    unexpected({"'<'", "'('"});
  }
  if (at(TokenKind::LBrace)) a.update = update();
  return a;
}

Assignment Parser::assignment() {
  std::string target = ident("attribute");
  expect(TokenKind::ColonEq);
  if (atWord("U") && at(TokenKind::LParen, 1)) {
    take();
    take();
    return Assignment::uniformChoice(target, exprList(TokenKind::RParen));
  }
  return Assignment::set(target, expr());
}

Update Parser::update() {
  Pos open = pos();
  expect(TokenKind::LBrace);
  if (accept(TokenKind::RBrace)) return Update::identity();
  std::vector<UpdateBranch> branches;
  bool weighted = (at(TokenKind::Integer) || at(TokenKind::Real)) && at(TokenKind::Colon, 1);
  if (weighted) {
    do {
      UpdateBranch b;
      Token w = take();
      b.weight = w.kind == TokenKind::Real ? w.real : static_cast<double>(w.integer);
      expect(TokenKind::Colon);
      if (!at(TokenKind::Semicolon) && !at(TokenKind::RBrace)) {
        do {
          b.assignments.push_back(assignment());
        } while (accept(TokenKind::Comma));
      }
      branches.push_back(std::move(b));
    } while (accept(TokenKind::Semicolon));
  } else {
    UpdateBranch b;
    do {
      b.assignments.push_back(assignment());
    } while (accept(TokenKind::Comma));
    branches.push_back(std::move(b));
  }
  expect(TokenKind::RBrace);
  try {
    return Update(std::move(branches));
  } catch (const ModelError& e) {
    failAt(open, e.what());
  }
}

ProcessPtr Parser::atom() {
  Pos p = pos();
  if (atWord("nil")) {
    take();
    return Process::nil();
  }
  if (atWord("kill")) {
    if (!underPrefix_) fail("kill must occur under an action prefix");
    take();
    return Process::kill();
  }
  if (accept(TokenKind::LParen)) {
    ProcessPtr inner = process();
    expect(TokenKind::RParen);
    return inner;
  }
  if (at(TokenKind::Ident)) {
    std::string name = take().text;
    constantUses_.emplace(name, p);
    return Process::constant(name);
  }
  unexpected({"process"});
}

// ---------------------------------------------------------------------- model

std::vector<std::pair<std::string, Expr>> Parser::bindings() {
  std::vector<std::pair<std::string, Expr>> out;
  std::set<std::string> seen;
  expect(TokenKind::LBrace);
  if (accept(TokenKind::RBrace)) return out;
  do {
    Pos p = pos();
    std::string a = ident("attribute");
    if (!seen.insert(a).second) failAt(p, "attribute '" + a + "' bound twice");
    expect(TokenKind::Assign);
    out.emplace_back(a, expr());
  } while (accept(TokenKind::Comma));
  expect(TokenKind::RBrace);
  return out;
}

void Parser::symbolsItem(Model& m) {
  take();
  do {
    Pos p = pos();
    std::string s = ident("symbol");
    if (kExprKeywords.count(s) || isBuiltinFunction(s)) failAt(p, "'" + s + "' is reserved");
    if (!symbols_.insert(s).second) failAt(p, "symbol '" + s + "' declared twice");
    m.symbols.push_back(s);
  } while (accept(TokenKind::Comma));
  expect(TokenKind::Semicolon);
}

void Parser::definitionItem(Model& m) {
  Pos p = pos();
  std::string name = ident("process constant");
  if (name == "nil" || name == "kill") failAt(p, "'" + name + "' is reserved");
  expect(TokenKind::ColonEq);
  ProcessPtr body = process();
  expect(TokenKind::Semicolon);
  if (!m.definitions.define(name, body)) failAt(p, "process constant '" + name + "' defined twice");
}

void Parser::componentItem(Model& m) {
  take();
  ComponentDecl c;
  Pos p = pos();
  c.name = ident("component name");
  if (m.findComponent(c.name)) failAt(p, "component '" + c.name + "' declared twice");
  if (accept(TokenKind::LParen)) {
    if (!accept(TokenKind::RParen)) {
      do {
        Pos q = pos();
        std::string x = ident("parameter");
        if (std::find(c.params.begin(), c.params.end(), x) != c.params.end()) {
          failAt(q, "parameter '" + x + "' repeated");
        }
        if (kExprKeywords.count(x) || symbols_.count(x)) failAt(q, "'" + x + "' cannot name a parameter");
        c.params.push_back(x);
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    }
  }
  expect(TokenKind::LBrace);
  vars_ = c.params;
  if (atWord("store")) {
    take();
    c.store = bindings();
  }
  expectWord("behaviour");
  c.behaviour = process();
  vars_.clear();
  expect(TokenKind::RBrace);
  m.components.push_back(std::move(c));
}

ActionPattern Parser::pattern() {
  ActionPattern p;
  std::string name = ident("action pattern");
  if (name != "_") p.name = name;
  if (accept(TokenKind::Star)) {
    p.kind = ActionPattern::Kind::Broadcast;
  } else {
    p.kind = p.name ? ActionPattern::Kind::Unicast : ActionPattern::Kind::Any;
  }
  return p;
}

Predicate Parser::optionalGuard() {
  if (!accept(TokenKind::LBracket)) return Expr::top();
  Predicate g = expr();
  expect(TokenKind::RBracket);
  return g;
}

InstanceSpec Parser::instance(Pos& where) {
  InstanceSpec s;
  where = pos();
  s.component = ident("component name");
  if (accept(TokenKind::LParen)) s.args = exprList(TokenKind::RParen);
  instanceUses_.push_back({s.component, s.args.size(), where});
  if (accept(TokenKind::Star)) {
    Token k = expect(TokenKind::Integer);
    if (k.integer > std::numeric_limits<std::uint32_t>::max()) failAt({k.line, k.column}, "multiplicity out of range");
    s.count = static_cast<std::uint32_t>(k.integer);
  }
  return s;
}

void Parser::envItem(Model& m) {
  take();
  expect(TokenKind::LBrace);
  auto& env = m.environment;
  while (!accept(TokenKind::RBrace)) {
    if (atWord("global")) {
      take();
      Pos p = pos();
      for (auto& b : bindings()) {
        for (const auto& [a, e] : env.global) {
          if (a == b.first) failAt(p, "global attribute '" + a + "' bound twice");
        }
        env.global.push_back(std::move(b));
      }
      accept(TokenKind::Semicolon);
    } else if (atWord("rate") || atWord("prob")) {
      bool rate = take().text == "rate";
      ValueRule r;
      r.pattern = pattern();
      r.guard = optionalGuard();
      expect(TokenKind::Assign);
      r.value = expr();
      expect(TokenKind::Semicolon);
      (rate ? env.rates : env.probs).push_back(std::move(r));
    } else if (atWord("update")) {
      take();
      UpdateRule r;
      r.pattern = pattern();
      r.guard = optionalGuard();
      r.update = update();
      if (atWord("spawn")) {
        take();
        expect(TokenKind::LBrace);
        if (!accept(TokenKind::RBrace)) {
          do {
            Pos where;
            r.spawn.push_back(instance(where));
          } while (accept(TokenKind::Comma));
          expect(TokenKind::RBrace);
        }
      }
      expect(TokenKind::Semicolon);
      env.updates.push_back(std::move(r));
    } else {
      unexpected({"'global'", "'rate'", "'prob'", "'update'", "'}'"});
    }
  }
}

void Parser::systemItem(Model& m) {
  take();
  expect(TokenKind::LBrace);
  if (!accept(TokenKind::RBrace)) {
    do {
      Pos where;
      m.system.push_back(instance(where));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBrace);
  }
  accept(TokenKind::Semicolon);
}

double Parser::number() {
  bool negative = accept(TokenKind::Minus);
  if (!at(TokenKind::Integer) && !at(TokenKind::Real)) unexpected({"number"});
  return literal(take(), negative).asReal();
}

void Parser::measureItem(Model& m) {
  take();
  Measure ms;
  Pos p = pos();
  ms.name = ident("measure name");
  for (const auto& other : m.measures) {
    if (other.name == ms.name) failAt(p, "measure '" + ms.name + "' declared twice");
  }
  expect(TokenKind::Assign);
  Pos k = pos();
  std::string kind = ident("measure kind");
  if (kind == "count") {
    ms.kind = MeasureKind::Count;
  } else if (kind == "min") {
    ms.kind = MeasureKind::Min;
  } else if (kind == "max") {
    ms.kind = MeasureKind::Max;
  } else if (kind == "sum") {
    ms.kind = MeasureKind::Sum;
  } else if (kind == "avg") {
    ms.kind = MeasureKind::Avg;
  } else {
    failAt(k, "unknown measure kind '" + kind + "'");
  }
  ms.filter = optionalGuard();
  if (accept(TokenKind::LParen)) {
    ms.attribute = ident("attribute");
    expect(TokenKind::RParen);
  } else if (ms.kind != MeasureKind::Count) {
    unexpected({"'('"});
  }
  expect(TokenKind::At);
  expect(TokenKind::LBracket);
  ms.start = number();
  expect(TokenKind::Colon);
  ms.end = number();
  expect(TokenKind::Colon);
  Token n = expect(TokenKind::Integer);
  if (n.integer < 2 || n.integer > std::numeric_limits<std::uint32_t>::max()) {
    failAt({n.line, n.column}, "grid needs between 2 and 2^32-1 points");
  }
  ms.samples = static_cast<std::uint32_t>(n.integer);
  expect(TokenKind::RBracket);
  expect(TokenKind::Semicolon);
  if (!(ms.end > ms.start)) failAt(p, "measure '" + ms.name + "' needs an increasing time range");
  m.measures.push_back(std::move(ms));
}

Model Parser::model() {
  Model m;
  while (!at(TokenKind::End)) {
    bool keyword = !at(TokenKind::ColonEq, 1);
    if (keyword && atWord("symbols")) {
      symbolsItem(m);
    } else if (keyword && atWord("component")) {
      componentItem(m);
    } else if (keyword && atWord("env")) {
      envItem(m);
    } else if (keyword && atWord("system")) {
      systemItem(m);
    } else if (keyword && atWord("measure")) {
      measureItem(m);
    } else if (at(TokenKind::Ident)) {
      definitionItem(m);
    } else {
      unexpected({"'symbols'", "'component'", "'env'", "'system'", "'measure'", "definition"});
    }
  }
  for (const auto& [name, p] : constantUses_) {
    if (!m.definitions.contains(name)) failAt(p, "undefined process constant '" + name + "'");
  }
  for (const auto& u : instanceUses_) {
    const ComponentDecl* d = m.findComponent(u.component);
    if (!d) failAt(u.pos, "unknown component '" + u.component + "'");
    if (d->params.size() != u.arity) {
      failAt(u.pos, "component '" + u.component + "' expects " + std::to_string(d->params.size()) + " arguments");
    }
  }
  validate(m);
  return m;
}

}  // namespace

Model parseModel(std::string_view source) { return Parser(source, {}).model(); }

ProcessPtr parseProcess(std::string_view source, const std::vector<std::string>& symbols) {
  return Parser(source, symbols).processOnly();
}

Expr parseExpr(std::string_view source, const std::vector<std::string>& symbols) {
  return Parser(source, symbols).exprOnly();
}

}  // namespace carma
