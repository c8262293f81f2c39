#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "achron/formula.hpp"
#include "achron/frame.hpp"
#include "achron/signature.hpp"

namespace achron {

// Terms of the equational language: 1, 0, variables, complement, join, and
// one join-preserving operator per modality.
enum class TKind : unsigned char { One, Zero, Var, Minus, Plus, OpDia };

class Term {
public:
  TKind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const std::string& modality() const { return node_->mod; }
  Term child() const { return Term(node_->a); }
  Term left() const { return Term(node_->a); }
  Term right() const { return Term(node_->b); }

  static Term one();
  static Term zero();
  static Term var(int index);
  static Term minus(Term a);
  static Term plus(Term a, Term b);
  static Term op_dia(std::string m, Term a);

  bool operator==(const Term& other) const;

private:
  struct Node {
    TKind kind;
    int var = -1;
    std::string mod;
    std::shared_ptr<const Node> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Elements of a finite atomic algebra are sets of atoms, one bit per atom.
// Atom count is capped at 64.
using AlgElement = std::uint64_t;

// Finite Boolean algebra with operators, in atomic normal form: the carrier
// is the powerset of the named atoms and each operator is stored by its
// values on atoms, extended additively to arbitrary elements.
class FiniteBao {
public:
  FiniteBao(Signature sig, std::vector<std::string> atoms,
            std::vector<std::vector<AlgElement>> op_on_atoms);

  const Signature& sig() const { return sig_; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t atom_index(const std::string& name) const;

  AlgElement one() const {
    return atoms_.size() == 64 ? ~AlgElement(0) : (AlgElement(1) << atoms_.size()) - 1;
  }

  AlgElement op_on_atom(std::size_t mi, std::size_t atom) const {
    return op_[mi][atom];
  }

  AlgElement apply(std::size_t mi, AlgElement a) const;

  bool operator==(const FiniteBao& other) const {
    return sig_ == other.sig_ && atoms_ == other.atoms_ && op_ == other.op_;
  }

private:
  Signature sig_;
  std::vector<std::string> atoms_;
  std::vector<std::vector<AlgElement>> op_;  // [modality][atom] -> element
};

// Formulas and terms translate into each other: true/1, pK/vK, ~/-, |/+,
// <m>/operator m.  Going term-to-formula, 0 becomes false.
Term formula_to_term(const Formula& f);
Formula term_to_formula(const Term& t);
// s = t rendered as a biconditional formula.
Formula equation_to_formula(const Term& lhs, const Term& rhs);

// Complex algebra of a frame: atoms are the worlds and the operator value on
// atom y is the set of worlds seeing y.
FiniteBao complex_algebra(const Frame& f);

// Atom frame of a finite algebra: worlds are the atoms, with p related to q
// exactly when p is below the operator applied to q.
Frame ultrafilter_frame(const FiniteBao& a);

// Canonical extension; for finite algebras this is the complex algebra of
// the atom frame.
FiniteBao canonical_extension(const FiniteBao& a);

struct EquationVerdict {
  bool valid;
  std::optional<std::vector<AlgElement>> witness;  // value per variable
};

// Exhaustive check of lhs = rhs over all assignments of elements to the
// variables of both sides, in ascending-assignment order; the witness is the
// first failing assignment.
EquationVerdict validates_equation(const FiniteBao& a, const Term& lhs, const Term& rhs,
                                   std::uint64_t budget);

// Exhaustive isomorphism search over atom bijections; capped at 8 atoms.
bool isomorphic(const FiniteBao& a, const FiniteBao& b);

}  // namespace achron
