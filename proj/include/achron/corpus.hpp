#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "achron/formula.hpp"
#include "achron/frame.hpp"
#include "achron/semantics.hpp"

namespace achron {

// Built-in frame families, all single-modality over "d".
//
//   Dj       j >= 0.  Worlds j+1, j', j'' and a descending chain j-1 .. 0;
//            j+1 sees both primed points, both see j-1, the chain steps down.
//   GjN      j >= 1, N >= 1.  A chain 1 .. j (k sees every larger m), N
//            points a0 .. a(N-1) between 0 and the chain: 0 sees every al
//            and each al sees 1 .. j.
//   Ejn      j >= 1, n >= 1.  Like Dj with the edge from j+1 split through
//            n+1 reflexive points r0 .. rn; transitively closed.
//   LawnRake N >= 1.  A handle a seeing N reflexive teeth x0 .. x(N-1).
//   FineN    N >= 1.  Two interleaved columns b, c of height N+1 with side
//            points a0 .. a(N-1) and a tail d0 .. d(N-1); the finite cut of
//            the classical frame, keeping futures of surviving points.
//   XuChainN N >= 1.  A root a over rows u, v: ui and vi see v0 .. vi.
//   SternbergN    N >= 1.  Root a sees u0 .. u(N-1); ui sees v0 .. vi; each vi
//            is reflexive.
enum class Family { Dj, GjN, Ejn, LawnRake, FineN, XuChainN, SternbergN };

struct FamilySpec {
  Family family;
  int j = 0;
  int n = 0;
  int N = 0;
};

Frame gen_frame(const FamilySpec& spec);

// The FineN frame together with its standard valuation: p0 on even d
// points, p1 on odd d points, both false elsewhere.
Model fine_model(int N);

// Named formulas.  Atom conventions: a family's q0 .. qn become p0 .. pn
// and an extra fresh atom becomes the next unused index.  dia/bdia select
// the modality names (both default "d").
//
//   alpha i        <d>^i true & ~<d>^(i+1) true, kept unsimplified at i = 0
//   phi i          [d](alpha_i -> p0) | [d](alpha_i -> ~p0)
//   psi i, n       In | [d](alpha_i -> p) | [d](alpha_i -> ~p)
//   xi i           5_2 | [d](alpha_i -> p) | [d](alpha_i -> ~p)
//   zeta i, n      Un | [d](alpha_i -> p) | [d](alpha_i -> ~p)
//   five n         <d>^n p0 -> [d]<d>p0
//   u n            the disjunction-of-boxes width axiom
//   u_alt n        the diamond-conjunction form of the same axiom
//   i_axiom n      the antichain width axiom
//   t, four, m_ax, q_ax, grz   the classical axioms over p0
//   h              the incompleteness formula over s = p0, t = p1
//   h_circ         its reflexive-closure translation
Formula alpha(int i, const std::string& dia = "d");
Formula phi(int i, const std::string& dia = "d");
Formula psi(int i, int n, const std::string& dia = "d");
Formula xi(int i, const std::string& dia = "d");
Formula zeta(int i, int n, const std::string& dia = "d", const std::string& bdia = "d");
Formula five(int n, const std::string& dia = "d");
Formula u_axiom(int n, const std::string& dia = "d", const std::string& bdia = "d");
Formula u_axiom_alt(int n, const std::string& dia = "d", const std::string& bdia = "d");
Formula i_axiom(int n, const std::string& dia = "d");
Formula t_axiom(const std::string& dia = "d");
Formula four_axiom(const std::string& dia = "d");
Formula m_axiom(const std::string& dia = "d");
Formula q_axiom(const std::string& dia = "d");
Formula grz_axiom(const std::string& dia = "d");
Formula h_formula(const std::string& dia = "d");
Formula h_circ(const std::string& dia = "d");

// Claim catalog: a fixed list of finite facts about the families above,
// re-verified on demand.  Rows are sorted by id; a row passes when the
// recomputed value matches the recorded one.
struct ClaimRow {
  std::string id;
  std::string source;
  std::string expected;
  std::string computed;
  bool pass;
};

struct Ledger {
  std::vector<ClaimRow> rows;
  bool all_pass() const;
  const ClaimRow* find(const std::string& id) const;
};

Ledger reproduce_claims(std::uint64_t budget = kDefaultBudget);

std::string ledger_tsv(const Ledger& ledger);
std::string ledger_json(const Ledger& ledger);

}  // namespace achron
