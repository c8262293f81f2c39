#include "achron/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace achron {

Term Term::one() {
  static const auto n = std::make_shared<const Node>(Node{TKind::One, -1, {}, nullptr, nullptr});
  return Term(n);
}

Term Term::zero() {
  static const auto n = std::make_shared<const Node>(Node{TKind::Zero, -1, {}, nullptr, nullptr});
  return Term(n);
}

Term Term::var(int index) {
  if (index < 0) fail(ErrorCode::Param, "negative variable index");
  return Term(std::make_shared<const Node>(Node{TKind::Var, index, {}, nullptr, nullptr}));
}

Term Term::minus(Term a) {
  return Term(std::make_shared<const Node>(Node{TKind::Minus, -1, {}, std::move(a.node_), nullptr}));
}

Term Term::plus(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{TKind::Plus, -1, {}, std::move(a.node_), std::move(b.node_)}));
}

Term Term::op_dia(std::string m, Term a) {
  return Term(std::make_shared<const Node>(
      Node{TKind::OpDia, -1, std::move(m), std::move(a.node_), nullptr}));
}

bool Term::operator==(const Term& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TKind::One:
    case TKind::Zero: return true;
    case TKind::Var: return x->var == y->var;
    case TKind::Minus: return Term(x->a) == Term(y->a);
    case TKind::Plus: return Term(x->a) == Term(y->a) && Term(x->b) == Term(y->b);
    case TKind::OpDia: return x->mod == y->mod && Term(x->a) == Term(y->a);
  }
  return false;
}

FiniteBao::FiniteBao(Signature sig, std::vector<std::string> atoms,
                     std::vector<std::vector<AlgElement>> op_on_atoms)
    : sig_(std::move(sig)), atoms_(std::move(atoms)), op_(std::move(op_on_atoms)) {
  if (atoms_.empty()) fail(ErrorCode::Param, "algebra needs at least one atom");
  if (atoms_.size() > 64) fail(ErrorCode::Param, "atom count capped at 64");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].empty()) fail(ErrorCode::Param, "empty atom name");
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j])
        fail(ErrorCode::Param, "duplicate atom name '" + atoms_[i] + "'");
  }
  if (op_.size() != sig_.size()) fail(ErrorCode::Param, "one operator per modality expected");
  for (const auto& table : op_) {
    if (table.size() != atoms_.size())
      fail(ErrorCode::Param, "operator table size mismatch");
    for (AlgElement e : table)
      if (e & ~one()) fail(ErrorCode::Param, "operator value outside the algebra");
  }
}

std::size_t FiniteBao::atom_index(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return i;
  fail(ErrorCode::Param, "unknown atom '" + name + "'");
}

AlgElement FiniteBao::apply(std::size_t mi, AlgElement a) const {
  AlgElement out = 0;
  const auto& table = op_.at(mi);
  while (a) {
    unsigned bit = static_cast<unsigned>(__builtin_ctzll(a));
    a &= a - 1;
    out |= table[bit];
  }
  return out;
}

Term formula_to_term(const Formula& f) {
  switch (f.kind()) {
    case FKind::Top: return Term::one();
    case FKind::Atom: return Term::var(f.atom_index());
    case FKind::Not: return Term::minus(formula_to_term(f.child()));
    case FKind::Or:
      return Term::plus(formula_to_term(f.left()), formula_to_term(f.right()));
    case FKind::Dia: return Term::op_dia(f.modality(), formula_to_term(f.child()));
  }
  return Term::one();
}

Formula term_to_formula(const Term& t) {
  switch (t.kind()) {
    case TKind::One: return top();
    case TKind::Zero: return bot();
    case TKind::Var: return atom(t.var_index());
    case TKind::Minus: return neg(term_to_formula(t.child()));
    case TKind::Plus: return disj(term_to_formula(t.left()), term_to_formula(t.right()));
    case TKind::OpDia: return dia(t.modality(), term_to_formula(t.child()));
  }
  return top();
}

Formula equation_to_formula(const Term& lhs, const Term& rhs) {
  return iff(term_to_formula(lhs), term_to_formula(rhs));
}

FiniteBao complex_algebra(const Frame& f) {
  std::size_t n = f.world_count();
  if (n > 64) fail(ErrorCode::Param, "complex algebra capped at 64 worlds");
  std::vector<std::vector<AlgElement>> op(f.sig().size(),
                                          std::vector<AlgElement>(n, 0));
  for (std::size_t mi = 0; mi < f.sig().size(); ++mi)
    for (std::size_t y = 0; y < n; ++y) {
      AlgElement pred = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (f.edge(mi, x, y)) pred |= AlgElement(1) << x;
      op[mi][y] = pred;
    }
  return FiniteBao(f.sig(), f.worlds(), std::move(op));
}

Frame ultrafilter_frame(const FiniteBao& a) {
  std::size_t n = a.atom_count();
  std::vector<Relation> rels(a.sig().size(), Relation(n, WorldSet(n)));
  for (std::size_t mi = 0; mi < a.sig().size(); ++mi)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if ((a.op_on_atom(mi, q) >> p) & 1) rels[mi][p].set(q);
  return Frame(a.sig(), a.atoms(), std::move(rels));
}

FiniteBao canonical_extension(const FiniteBao& a) {
  return complex_algebra(ultrafilter_frame(a));
}

namespace {

int max_var(const Term& t) {
  switch (t.kind()) {
    case TKind::One:
    case TKind::Zero: return -1;
    case TKind::Var: return t.var_index();
    case TKind::Minus:
    case TKind::OpDia: return max_var(t.child());
    case TKind::Plus: return std::max(max_var(t.left()), max_var(t.right()));
  }
  return -1;
}

AlgElement eval_term(const FiniteBao& a, const Term& t,
                     const std::vector<AlgElement>& assign) {
  switch (t.kind()) {
    case TKind::One: return a.one();
    case TKind::Zero: return 0;
    case TKind::Var: return assign[t.var_index()];
    case TKind::Minus: return a.one() & ~eval_term(a, t.child(), assign);
    case TKind::Plus:
      return eval_term(a, t.left(), assign) | eval_term(a, t.right(), assign);
    case TKind::OpDia:
      return a.apply(a.sig().index(t.modality()), eval_term(a, t.child(), assign));
  }
  return 0;
}

}  // namespace

EquationVerdict validates_equation(const FiniteBao& a, const Term& lhs, const Term& rhs,
                                   std::uint64_t budget) {
  std::size_t vars = static_cast<std::size_t>(std::max(max_var(lhs), max_var(rhs)) + 1);
  std::size_t bits = vars * a.atom_count();
  if (bits >= 63 || (std::uint64_t(1) << bits) > budget)
    fail(ErrorCode::Budget, "equation check needs 2^" + std::to_string(bits) +
                                " assignments, over the budget of " + std::to_string(budget));
  std::uint64_t total = std::uint64_t(1) << bits;
  std::vector<AlgElement> assign(vars, 0);
  for (std::uint64_t v = 0; v < total; ++v) {
    for (std::size_t i = 0; i < vars; ++i)
      assign[i] = (v >> (i * a.atom_count())) & a.one();
    if (eval_term(a, lhs, assign) != eval_term(a, rhs, assign))
      return {false, assign};
  }
  return {true, std::nullopt};
}

bool isomorphic(const FiniteBao& a, const FiniteBao& b) {
  if (!(a.sig() == b.sig())) return false;
  std::size_t n = a.atom_count();
  if (n != b.atom_count()) return false;
  if (n > 8) fail(ErrorCode::Param, "isomorphism search capped at 8 atoms");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto map_elem = [&](AlgElement e) {
    AlgElement out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((e >> i) & 1) out |= AlgElement(1) << perm[i];
    return out;
  };
  do {
    bool ok = true;
    for (std::size_t mi = 0; ok && mi < a.sig().size(); ++mi)
      for (std::size_t at = 0; at < n; ++at)
        if (map_elem(a.op_on_atom(mi, at)) != b.op_on_atom(mi, perm[at])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace achron
