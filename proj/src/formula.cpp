#include "mvlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "mvlogic/error.hpp"

namespace mvlogic {

Formula Formula::bot() { return Formula(std::make_shared<const Node>(Node{Connective::bot, {}, {}})); }
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Connective::top, {}, {}})); }

Formula Formula::atom(std::string name) {
  if (name.empty()) throw UsageError("atom names must be nonempty");
  return Formula(std::make_shared<const Node>(Node{Connective::atom, std::move(name), {}}));
}

Formula Formula::unary(Connective op, Formula arg) {
  if (op != Connective::box && op != Connective::dia && op != Connective::rhd &&
      op != Connective::lhd) {
    throw UsageError("not a unary connective");
  }
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(arg)}}));
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  if (op != Connective::conj && op != Connective::disj) throw UsageError("not a binary connective");
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Connective::conj, std::move(lhs), std::move(rhs));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Connective::disj, std::move(lhs), std::move(rhs));
}
Formula Formula::box(Formula arg) { return unary(Connective::box, std::move(arg)); }
Formula Formula::dia(Formula arg) { return unary(Connective::dia, std::move(arg)); }
Formula Formula::rhd(Formula arg) { return unary(Connective::rhd, std::move(arg)); }
Formula Formula::lhd(Formula arg) { return unary(Connective::lhd, std::move(arg)); }

const Formula& Formula::lhs() const {
  if (node_->args.empty()) throw UsageError("formula has no operands");
  return node_->args[0];
}

const Formula& Formula::rhs() const {
  if (node_->args.size() < 2) throw UsageError("formula has no right operand");
  return node_->args[1];
}

bool Formula::is_unary() const { return node_->args.size() == 1; }
bool Formula::is_binary() const { return node_->args.size() == 2; }

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& a : node_->args) d = std::max(d, a.depth());
  return node_->args.empty() ? 0 : d + 1;
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.connective() == Connective::atom) {
      if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
      return;
    }
    for (const auto& a : f.node_->args) walk(a);
  };
  walk(*this);
  return out;
}

bool Formula::uses(Connective op) const {
  if (node_->op == op) return true;
  return std::any_of(node_->args.begin(), node_->args.end(),
                     [op](const Formula& a) { return a.uses(op); });
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->op != b.node_->op || a.node_->name != b.node_->name) return false;
  return a.node_->args == b.node_->args;
}

std::vector<std::string> Sequent::atoms() const {
  std::vector<std::string> out = lhs.atoms();
  for (auto& a : rhs.atoms()) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  }
  return out;
}

namespace {

enum class Tok { ident, kw_top, kw_bot, kw_box, kw_dia, kw_rhd, kw_lhd, amp, bar, turnstile, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", i++});
    } else if (c == '&') {
      out.push_back({Tok::amp, "&", i++});
    } else if (c == '|') {
      if (i + 1 < s.size() && s[i + 1] == '-') {
        out.push_back({Tok::turnstile, "|-", i});
        i += 2;
      } else {
        out.push_back({Tok::bar, "|", i++});
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word = s.substr(start, i - start);
      Tok kind = Tok::ident;
      if (word == "top") kind = Tok::kw_top;
      else if (word == "bot") kind = Tok::kw_bot;
      else if (word == "box") kind = Tok::kw_box;
      else if (word == "dia") kind = Tok::kw_dia;
      else if (word == "rhd") kind = Tok::kw_rhd;
      else if (word == "lhd") kind = Tok::kw_lhd;
      out.push_back({kind, std::move(word), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  Formula formula() { return disj(); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  static constexpr std::size_t max_nesting = 2000;

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'"),
                     t.pos);
  }

  Formula disj() {
    Formula acc = conj();
    while (peek().kind == Tok::bar) {
      ++pos_;
      acc = Formula::disj(std::move(acc), conj());
    }
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (peek().kind == Tok::amp) {
      ++pos_;
      acc = Formula::conj(std::move(acc), unary());
    }
    return acc;
  }

  Formula unary() {
    Connective op;
    switch (peek().kind) {
      case Tok::kw_box:
        op = Connective::box;
        break;
      case Tok::kw_dia:
        op = Connective::dia;
        break;
      case Tok::kw_rhd:
        op = Connective::rhd;
        break;
      case Tok::kw_lhd:
        op = Connective::lhd;
        break;
      default:
        return primary();
    }
    ++pos_;
    Guard g(*this);
    return Formula::unary(op, unary());
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kw_top:
        ++pos_;
        return Formula::top();
      case Tok::kw_bot:
        ++pos_;
        return Formula::bot();
      case Tok::ident:
        ++pos_;
        return Formula::atom(t.text);
      case Tok::lparen: {
        ++pos_;
        Guard g(*this);
        Formula inner = formula();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        fail("expected a formula");
    }
  }

  struct Guard {
    explicit Guard(Parser& p) : parser(p) {
      if (++parser.nesting_ > max_nesting) parser.fail("formula nested too deeply");
    }
    ~Guard() { --parser.nesting_; }
    Parser& parser;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
};

int precedence(const Formula& f) {
  switch (f.connective()) {
    case Connective::disj:
      return 1;
    case Connective::conj:
      return 2;
    case Connective::box:
    case Connective::dia:
    case Connective::rhd:
    case Connective::lhd:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (f.connective()) {
    case Connective::bot:
      out += "bot";
      return;
    case Connective::top:
      out += "top";
      return;
    case Connective::atom:
      out += f.name();
      return;
    case Connective::conj:
    case Connective::disj: {
      const int p = precedence(f);
      child(f.lhs(), precedence(f.lhs()) < p);
      out += f.connective() == Connective::conj ? " & " : " | ";
      child(f.rhs(), precedence(f.rhs()) <= p);
      return;
    }
    case Connective::box:
      out += "box ";
      break;
    case Connective::dia:
      out += "dia ";
      break;
    case Connective::rhd:
      out += "rhd ";
      break;
    case Connective::lhd:
      out += "lhd ";
      break;
  }
  child(f.lhs(), f.lhs().is_binary());
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  if (p.peek().kind == Tok::turnstile) {
    throw ParseError("'|-' is only allowed in sequents", p.peek().pos);
  }
  p.expect(Tok::end, "end of input");
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Formula lhs = p.formula();
  if (p.peek().kind != Tok::turnstile) {
    throw ParseError("expected '|-' between the two sides of the sequent", p.peek().pos);
  }
  p.expect(Tok::turnstile, "'|-'");
  Formula rhs = p.formula();
  p.expect(Tok::end, "end of input");
  return Sequent{std::move(lhs), std::move(rhs)};
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Sequent& s) { return to_string(s.lhs) + " |- " + to_string(s.rhs); }

const std::vector<Sequent>& axiom_catalogue() {
  static const std::vector<Sequent> axioms = [] {
    const char* const texts[] = {
        "p |- p",
        "bot |- p",
        "p |- top",
        "p |- p | q",
        "q |- p | q",
        "p & q |- p",
        "p & q |- q",
        "top |- box top",
        "box p & box q |- box (p & q)",
        "dia bot |- bot",
        "dia (p | q) |- dia p | dia q",
    };
    std::vector<Sequent> out;
    for (const char* t : texts) out.push_back(parse_sequent(t));
    return out;
  }();
  return axioms;
}

}  // namespace mvlogic
