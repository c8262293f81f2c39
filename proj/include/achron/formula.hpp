#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "achron/signature.hpp"

namespace achron {

// Modal formulas over atoms p0, p1, ... with one diamond <m> per modality m.
//
// The stored syntax is the primitive fragment: true, atoms, ~, |, <m>.
// Everything else is an abbreviation expanded on construction:
//
//   false    ~true
//   a & b    ~(~a | ~b)
//   a -> b   ~a | b
//   a <-> b  (a -> b) & (b -> a)
//   [m] a    ~<m>~a
//
// The printer pattern-matches the expansions and prints the sugared form
// back, so parse(print(f)) returns a structurally identical tree.
enum class FKind : unsigned char { Top, Atom, Not, Or, Dia };

class Formula {
public:
  FKind kind() const { return node_->kind; }
  int atom_index() const { return node_->atom; }
  const std::string& modality() const { return node_->mod; }

  Formula child() const { return Formula(node_->a); }  // Not, Dia
  Formula left() const { return Formula(node_->a); }   // Or
  Formula right() const { return Formula(node_->b); }  // Or

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  static Formula top();
  static Formula bot();
  static Formula atom(int index);
  static Formula neg(Formula a);
  static Formula dia(std::string m, Formula a);
  static Formula box(std::string m, Formula a);
  static Formula disj(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);

private:
  struct Node {
    FKind kind;
    int atom = -1;
    std::string mod;
    std::shared_ptr<const Node> a, b;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Terse builders; generator and test code reads better with these.
inline Formula top() { return Formula::top(); }
inline Formula bot() { return Formula::bot(); }
inline Formula atom(int i) { return Formula::atom(i); }
inline Formula neg(Formula a) { return Formula::neg(std::move(a)); }
inline Formula dia(std::string m, Formula a) { return Formula::dia(std::move(m), std::move(a)); }
inline Formula box(std::string m, Formula a) { return Formula::box(std::move(m), std::move(a)); }
inline Formula disj(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
inline Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
inline Formula implies(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return Formula::iff(std::move(a), std::move(b)); }

// Sugar views used by the printer and handy in tests.  Each returns the
// components when the node is the exact expansion of the abbreviation.
bool is_bot(const Formula& f);
std::optional<std::pair<Formula, Formula>> as_conj(const Formula& f);
std::optional<std::pair<Formula, Formula>> as_implies(const Formula& f);
std::optional<std::pair<Formula, Formula>> as_iff(const Formula& f);
std::optional<std::pair<std::string, Formula>> as_box(const Formula& f);

std::set<int> atoms_of(const Formula& f);
std::set<std::string> modalities_of(const Formula& f);
int modal_depth(const Formula& f);

// Simultaneous substitution of formulas for atoms.  Atoms not in the map are
// left alone.
using AtomSubst = std::map<int, Formula>;
Formula substitute(const Formula& f, const AtomSubst& sigma);

// Reflexive-closure translation: atoms and true are fixed, ~ and | commute,
// <m>a becomes a' | <m>a'.  Satisfaction of f in the reflexive closure of a
// model matches satisfaction of the translation in the original model.
Formula circ_translate(const Formula& f);

}  // namespace achron
