#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mvlogic {

enum class Connective { bot, top, atom, conj, disj, box, dia, rhd, lhd };

// Immutable formula tree with shared subterms.
class Formula {
 public:
  static Formula bot();
  static Formula top();
  static Formula atom(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula arg);
  static Formula dia(Formula arg);
  static Formula rhd(Formula arg);
  static Formula lhd(Formula arg);
  static Formula unary(Connective op, Formula arg);
  static Formula binary(Connective op, Formula lhs, Formula rhs);

  Connective connective() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  // Operand of unary connectives and left operand of binary ones.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_unary() const;
  bool is_binary() const;
  std::size_t depth() const;

  // Atom names in first-occurrence order.
  std::vector<std::string> atoms() const;
  bool uses(Connective op) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective op;
    std::string name;
    std::vector<Formula> args;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Formula lhs;
  Formula rhs;

  // Atoms of both sides, first-occurrence order, left side first.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

// Grammar:
//   formula := disj
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := ("box" | "dia" | "rhd" | "lhd") unary | primary
//   primary := "top" | "bot" | ident | "(" formula ")"
//   sequent := formula "|-" formula
// Throws ParseError with the offending byte offset.
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

// Minimal-parenthesis rendering that parse_formula maps back to the same tree.
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

// The axioms of the basic normal logic: lattice axioms plus the normality
// axioms of box and diamond.
const std::vector<Sequent>& axiom_catalogue();

}  // namespace mvlogic
