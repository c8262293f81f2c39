#include "achron/formula.hpp"

namespace achron {

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case FKind::Top: return true;
    case FKind::Atom: return x->atom == y->atom;
    case FKind::Not: return Formula(x->a) == Formula(y->a);
    case FKind::Or:
      return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
    case FKind::Dia:
      return x->mod == y->mod && Formula(x->a) == Formula(y->a);
  }
  return false;
}

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{FKind::Top, -1, {}, nullptr, nullptr});
  return Formula(n);
}

Formula Formula::atom(int index) {
  if (index < 0) fail(ErrorCode::Param, "negative atom index");
  return Formula(std::make_shared<const Node>(Node{FKind::Atom, index, {}, nullptr, nullptr}));
}

Formula Formula::neg(Formula a) {
  return Formula(std::make_shared<const Node>(Node{FKind::Not, -1, {}, std::move(a.node_), nullptr}));
}

Formula Formula::dia(std::string m, Formula a) {
  if (m.empty()) fail(ErrorCode::Param, "empty modality name");
  return Formula(std::make_shared<const Node>(Node{FKind::Dia, -1, std::move(m), std::move(a.node_), nullptr}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{FKind::Or, -1, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::bot() { return neg(top()); }

Formula Formula::box(std::string m, Formula a) {
  return neg(dia(std::move(m), neg(std::move(a))));
}

Formula Formula::conj(Formula a, Formula b) {
  return neg(disj(neg(std::move(a)), neg(std::move(b))));
}

Formula Formula::implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}

Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

bool is_bot(const Formula& f) {
  return f.kind() == FKind::Not && f.child().kind() == FKind::Top;
}

std::optional<std::pair<Formula, Formula>> as_conj(const Formula& f) {
  if (f.kind() != FKind::Not) return std::nullopt;
  Formula c = f.child();
  if (c.kind() != FKind::Or) return std::nullopt;
  Formula l = c.left(), r = c.right();
  if (l.kind() != FKind::Not || r.kind() != FKind::Not) return std::nullopt;
  return std::make_pair(l.child(), r.child());
}

std::optional<std::pair<Formula, Formula>> as_implies(const Formula& f) {
  if (f.kind() != FKind::Or) return std::nullopt;
  Formula l = f.left();
  if (l.kind() != FKind::Not) return std::nullopt;
  return std::make_pair(l.child(), f.right());
}

std::optional<std::pair<Formula, Formula>> as_iff(const Formula& f) {
  auto cj = as_conj(f);
  if (!cj) return std::nullopt;
  auto fwd = as_implies(cj->first);
  auto bwd = as_implies(cj->second);
  if (!fwd || !bwd) return std::nullopt;
  if (fwd->first == bwd->second && fwd->second == bwd->first) return fwd;
  return std::nullopt;
}

std::optional<std::pair<std::string, Formula>> as_box(const Formula& f) {
  if (f.kind() != FKind::Not) return std::nullopt;
  Formula c = f.child();
  if (c.kind() != FKind::Dia) return std::nullopt;
  Formula inner = c.child();
  if (inner.kind() != FKind::Not) return std::nullopt;
  return std::make_pair(c.modality(), inner.child());
}

static void collect_atoms(const Formula& f, std::set<int>& out) {
  switch (f.kind()) {
    case FKind::Top: return;
    case FKind::Atom: out.insert(f.atom_index()); return;
    case FKind::Not:
    case FKind::Dia: collect_atoms(f.child(), out); return;
    case FKind::Or:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

std::set<int> atoms_of(const Formula& f) {
  std::set<int> out;
  collect_atoms(f, out);
  return out;
}

static void collect_modalities(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FKind::Top:
    case FKind::Atom: return;
    case FKind::Not: collect_modalities(f.child(), out); return;
    case FKind::Dia:
      out.insert(f.modality());
      collect_modalities(f.child(), out);
      return;
    case FKind::Or:
      collect_modalities(f.left(), out);
      collect_modalities(f.right(), out);
      return;
  }
}

std::set<std::string> modalities_of(const Formula& f) {
  std::set<std::string> out;
  collect_modalities(f, out);
  return out;
}

int modal_depth(const Formula& f) {
  switch (f.kind()) {
    case FKind::Top:
    case FKind::Atom: return 0;
    case FKind::Not: return modal_depth(f.child());
    case FKind::Dia: return 1 + modal_depth(f.child());
    case FKind::Or: return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
  return 0;
}

Formula substitute(const Formula& f, const AtomSubst& sigma) {
  switch (f.kind()) {
    case FKind::Top: return f;
    case FKind::Atom: {
      auto it = sigma.find(f.atom_index());
      return it == sigma.end() ? f : it->second;
    }
    case FKind::Not: return Formula::neg(substitute(f.child(), sigma));
    case FKind::Dia: return Formula::dia(f.modality(), substitute(f.child(), sigma));
    case FKind::Or:
      return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
  }
  return f;
}

Formula circ_translate(const Formula& f) {
  switch (f.kind()) {
    case FKind::Top:
    case FKind::Atom: return f;
    case FKind::Not: return Formula::neg(circ_translate(f.child()));
    case FKind::Or:
      return Formula::disj(circ_translate(f.left()), circ_translate(f.right()));
    case FKind::Dia: {
      Formula inner = circ_translate(f.child());
      return Formula::disj(inner, Formula::dia(f.modality(), inner));
    }
  }
  return f;
}

}  // namespace achron
